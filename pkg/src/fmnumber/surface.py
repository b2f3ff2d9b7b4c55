"""Rational elliptic surface configurations.

A configuration lists the singular fibers of the Jacobian surface ``B`` by
base point and Kodaira type, plus the multiple-fiber data ``(s, m, xi)``
that produces ``S`` from ``B`` by a logarithmic transformation at ``s``.
Because the Tate-Shafarevich group of a rational ``B`` vanishes, the
single local invariant ``xi`` at ``s`` determines ``S``.

JSON schema (field names are normative)::

    {"fibers": [{"at": "0", "type": "II*"}, {"at": "inf", "type": "I1"}],
     "marked": {"s": "2", "kind": "smooth", "m": 7,
                "xi": {"m": 7, "coords": [1, 4]}},
     "aut_order": 6,
     "n1": 1}

``marked`` may be omitted for a surface without multiple fibers; ``n1``
is optional.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, replace

from .errors import InvalidConfig, ParseError
from .fm_count import FMReport, fm_number
from .moebius import P1Point, n1_upper_bound
from .torsion import TorsionPoint, WCFiberKind, order
from .wc_action import ALLOWED_ORDERS, AutAction

__all__ = [
    "KodairaFiber",
    "MarkedFiber",
    "SurfaceConfig",
    "ValidationReport",
    "fm_report_for",
    "local_invariant_at",
    "local_invariants",
    "validate",
]

_EXCEPTIONAL_EULER = {"II": 2, "III": 3, "IV": 4, "IV*": 8, "III*": 9, "II*": 10}
_IN = re.compile(r"^I_?(\d+)$")
_IN_STAR = re.compile(r"^I_?\*_?(\d+)$|^I_?(\d+)\*$")


@dataclass(frozen=True)
class KodairaFiber:
    """Kodaira fiber type.  ``symbol`` is canonical: ``I3``, ``I0*``, ``II*``..."""

    symbol: str

    def __post_init__(self):
        object.__setattr__(self, "symbol", _canonical_symbol(self.symbol))

    @property
    def euler(self) -> int:
        sym = self.symbol
        if sym in _EXCEPTIONAL_EULER:
            return _EXCEPTIONAL_EULER[sym]
        if sym.endswith("*"):
            return int(sym[1:-1]) + 6
        return int(sym[1:])

    @property
    def is_multiplicative(self) -> bool:
        """True for I_n with n > 0."""
        return bool(_IN.match(self.symbol)) and self.euler > 0

    @property
    def components(self) -> int | None:
        return self.euler if self.is_multiplicative else None

    def __str__(self):
        return self.symbol


def _canonical_symbol(text) -> str:
    t = str(text).strip().replace(" ", "")
    if t in _EXCEPTIONAL_EULER:
        return t
    hit = _IN.match(t)
    if hit:
        return f"I{int(hit.group(1))}"
    hit = _IN_STAR.match(t)
    if hit:
        n = hit.group(1) if hit.group(1) is not None else hit.group(2)
        return f"I{int(n)}*"
    raise ParseError(f"unknown Kodaira fiber type {text!r}")


@dataclass(frozen=True)
class MarkedFiber:
    """Multiple-fiber data: base point, local group kind, multiplicity, invariant."""

    s: P1Point
    kind: WCFiberKind
    m: int
    xi: TorsionPoint


@dataclass(frozen=True)
class SurfaceConfig:
    fibers: tuple  # of (P1Point, KodairaFiber)
    marked: MarkedFiber | None = None
    aut_order: int = 2
    n1: int | None = None

    @property
    def m(self) -> int:
        return 1 if self.marked is None else self.marked.m

    @property
    def discriminant(self) -> list[P1Point]:
        return [t for t, f in self.fibers if f.euler > 0]

    def fiber_at(self, t: P1Point) -> KodairaFiber | None:
        for u, f in self.fibers:
            if u == t:
                return f
        return None

    def action(self) -> AutAction:
        kind = WCFiberKind.trivial() if self.marked is None else self.marked.kind
        if kind.tag == "In":
            kind = WCFiberKind("In")
        return AutAction(self.aut_order, kind)

    def xi(self) -> TorsionPoint:
        if self.marked is None:
            return TorsionPoint(1, (0,))
        return self.marked.xi

    def with_xi(self, xi: TorsionPoint) -> "SurfaceConfig":
        """The same configuration with the local invariant at ``s`` replaced."""
        if self.marked is None:
            raise InvalidConfig("configuration has no marked fiber")
        return replace(self, marked=replace(self.marked, xi=xi, m=order(xi)))

    def rename(self, mapping) -> "SurfaceConfig":
        """Move every base point through ``mapping`` (a callable on P1Point)."""
        fibers = tuple((mapping(t), f) for t, f in self.fibers)
        marked = self.marked and replace(self.marked, s=mapping(self.marked.s))
        return replace(self, fibers=fibers, marked=marked)

    # --- JSON -------------------------------------------------------------

    @classmethod
    def from_dict(cls, data) -> "SurfaceConfig":
        if not isinstance(data, dict):
            raise ParseError("config must be a JSON object")
        try:
            fibers = tuple(
                (P1Point.parse(item["at"]), KodairaFiber(item["type"])) for item in data["fibers"]
            )
            marked = None
            if data.get("marked") is not None:
                mk = data["marked"]
                s = P1Point.parse(mk["s"])
                m = int(mk["m"])
                kind = WCFiberKind.parse(mk["kind"])
                if kind.tag == "In" and kind.n is None:
                    f = dict(fibers).get(s)
                    if f is not None and f.is_multiplicative:
                        kind = WCFiberKind("In", f.components)
                if "xi" in mk and mk["xi"] is not None:
                    xi = TorsionPoint.from_json(mk["xi"])
                else:
                    xi = TorsionPoint(m, (0,) * max(kind.rank, 1))
                marked = MarkedFiber(s, kind, m, xi)
            aut_order = int(data.get("aut_order", 2))
            n1 = data.get("n1")
            n1 = None if n1 is None else int(n1)
        except ParseError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed config: {exc!r}") from exc
        return cls(fibers, marked, aut_order, n1)

    @classmethod
    def from_json(cls, text: str) -> "SurfaceConfig":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(data)

    @classmethod
    def load(cls, path) -> "SurfaceConfig":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(fh.read())

    def to_dict(self) -> dict:
        out = {
            "fibers": [{"at": str(t), "type": f.symbol} for t, f in self.fibers],
            "aut_order": self.aut_order,
        }
        if self.marked is not None:
            mk = self.marked
            out["marked"] = {"s": str(mk.s), "kind": str(mk.kind), "m": mk.m, "xi": mk.xi.to_json()}
        if self.n1 is not None:
            out["n1"] = self.n1
        return out


@dataclass
class ValidationReport:
    checks: list = field(default_factory=list)  # (rule, passed, message)
    warnings: list = field(default_factory=list)
    euler_sum: int = 0
    lambda_: int = 1

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.checks)

    def failures(self) -> list:
        return [(rule, msg) for rule, passed, msg in self.checks if not passed]

    def to_json(self) -> dict:
        return {
            "valid": self.ok,
            "euler_sum": self.euler_sum,
            "lambda": self.lambda_,
            "checks": [{"rule": r, "passed": p, "message": msg} for r, p, msg in self.checks],
            "warnings": list(self.warnings),
        }


def validate(cfg: SurfaceConfig) -> ValidationReport:
    """Check every structural rule of a rational elliptic surface config."""
    rep = ValidationReport()

    def check(rule, passed, message=""):
        rep.checks.append((rule, bool(passed), "" if passed else message))

    points = [t for t, _ in cfg.fibers]
    dupes = sorted({str(t) for t in points if points.count(t) > 1})
    check("distinct_base_points", not dupes, f"repeated base points: {', '.join(dupes)}")

    rep.euler_sum = sum(f.euler for _, f in cfg.fibers)
    check("euler_sum_12", rep.euler_sum == 12, f"singular fibers have Euler sum {rep.euler_sum}, not 12")

    check(
        "aut_order",
        cfg.aut_order in (1, 2, 4, 6),
        f"aut_order {cfg.aut_order} not in {{1, 2, 4, 6}}",
    )
    if cfg.n1 is not None:
        check("n1_positive", cfg.n1 >= 1, f"n1 must be positive, got {cfg.n1}")

    mk = cfg.marked
    if mk is None:
        rep.lambda_ = 1
        return rep

    rep.lambda_ = mk.m
    at_s = cfg.fiber_at(mk.s)
    kind = mk.kind
    check("multiplicity_positive", mk.m >= 1, f"m must be >= 1, got {mk.m}")
    if kind.tag == "smooth":
        check(
            "s_smooth_fiber",
            at_s is None or at_s.euler == 0,
            f"kind 'smooth' but the fiber at s={mk.s} is {at_s}",
        )
    elif kind.tag == "In":
        ok = at_s is not None and at_s.is_multiplicative and kind.n in (None, at_s.components)
        check("s_multiplicative_fiber", ok, f"kind {kind} but the fiber at s={mk.s} is {at_s}")
    else:
        check("trivial_kind_no_multiple_fiber", mk.m == 1, f"kind 'trivial' forces m = 1, got m = {mk.m}")

    rank_ok = kind.admits(mk.xi)
    check("xi_rank", rank_ok, f"xi {mk.xi} does not fit a {kind.tag!r} fiber")
    check(
        "xi_level",
        mk.xi.modulus == mk.m,
        f"xi is declared at level {mk.xi.modulus}, multiplicity is {mk.m}",
    )
    check("xi_order", order(mk.xi) == mk.m, f"xi has order {order(mk.xi)}, multiplicity is {mk.m}")

    allowed = ALLOWED_ORDERS[kind.tag]
    check(
        "aut_order_for_kind",
        cfg.aut_order in allowed,
        f"aut_order {cfg.aut_order} impossible at a {kind.tag!r} fiber",
    )
    if cfg.aut_order in (4, 6):
        j = 1728 if cfg.aut_order == 4 else 0
        rep.warnings.append(f"aut_order {cfg.aut_order} assumes a constant J-map with j = {j} (not verified)")

    others = [t for t in cfg.discriminant if t != mk.s]
    if len(others) < 2:
        rep.warnings.append(
            f"only {len(others)} singular fiber(s) away from s; the base stabilizer may be infinite"
        )
    return rep


def _require_valid(cfg: SurfaceConfig) -> ValidationReport:
    rep = validate(cfg)
    if not rep.ok:
        msg = "; ".join(f"{rule}: {why}" for rule, why in rep.failures())
        raise InvalidConfig(msg, rep)
    return rep


def local_invariants(cfg: SurfaceConfig) -> dict:
    """Support of the family of local invariants: ``{s: xi}``, or ``{}`` if m = 1.

    Points absent from the result carry the zero invariant.
    """
    _require_valid(cfg)
    if cfg.marked is None or cfg.marked.m == 1:
        return {}
    return {cfg.marked.s: cfg.marked.xi}


def local_invariant_at(cfg: SurfaceConfig, t) -> TorsionPoint:
    t = P1Point.parse(t)
    support = local_invariants(cfg)
    if t in support:
        return support[t]
    return TorsionPoint(1, (0,) * max(cfg.action().fiber_kind.rank, 1))


def resolve_n1(cfg: SurfaceConfig) -> int:
    if cfg.n1 is not None:
        return cfg.n1
    bound = n1_upper_bound(cfg)
    if bound.certified:
        return bound.value
    if cfg.m <= 2:
        # the count is 1 whatever n1 is
        return 1
    raise InvalidConfig(f"n1 not given and not certified by the base stabilizer ({bound.reason})")


def fm_report_for(cfg: SurfaceConfig) -> FMReport:
    """Fourier-Mukai report for the surface described by ``cfg``."""
    _require_valid(cfg)
    return fm_number(cfg.action(), cfg.xi(), resolve_n1(cfg))
