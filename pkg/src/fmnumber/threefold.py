"""Fiber products X = S x_{P^1} S' of two rational elliptic surfaces.

When the discriminants of the two fibrations are disjoint, X is a smooth
3-fold.  Every fiber of X -> P^1 is a product of two curves at least one of
which is smooth elliptic, so e(X) = 0.  The Picard group of X is
``(Pic S x Pic S') / Pic P^1``, so rho(X) = 10 + 10 - 1 = 19, and the
remaining Hodge numbers follow from h^1(O) = h^2(O) = 0, h^3(O) = 1 and
e = 2 (h^{1,1} - h^{1,2}).  If one factor has a multiple fiber, the
canonical class is a positive multiple of a fiber and kappa(X) = 1;
with no multiple fibers X is Schoen's Calabi-Yau 3-fold (kappa = 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable

from .errors import InsufficientPartners, NotSmooth
from .fm_count import fm_number, minimal_m, partner_classes
from .surface import SurfaceConfig, _require_valid, resolve_n1
from .torsion import scalar_mul
from .wc_action import AutAction, orbit

__all__ = [
    "FamilyCertificate",
    "HodgeDiamond",
    "RATIONAL_ELLIPTIC_PICARD",
    "SchoenFamily",
    "ThreefoldReport",
    "fiber_product_invariants",
    "schoen_family",
]

RATIONAL_ELLIPTIC_PICARD = 10


@dataclass(frozen=True)
class HodgeDiamond:
    """Hodge numbers of a 3-fold, ``h[p][q]`` for 0 <= p, q <= 3."""

    h: tuple

    def __getitem__(self, pq):
        p, q = pq
        return self.h[p][q]

    def is_symmetric(self) -> bool:
        h = self.h
        return all(h[p][q] == h[q][p] == h[3 - p][3 - q] for p in range(4) for q in range(4))

    def euler(self) -> int:
        return sum((-1) ** (p + q) * self.h[p][q] for p in range(4) for q in range(4))

    def rows(self) -> list[list[int]]:
        """Rows of the printed diamond, top (h^{0,0}) to bottom (h^{3,3})."""
        out = []
        for k in range(7):
            out.append([self.h[p][k - p] for p in range(3, -1, -1) if 0 <= k - p <= 3])
        return out

    def pretty(self) -> str:
        rows = self.rows()
        width = max(len(str(x)) for r in rows for x in r) + 2
        lines = []
        for r in rows:
            pad = (4 - len(r)) * width // 2
            lines.append(" " * pad + "".join(str(x).center(width) for x in r))
        return "\n".join(lines)

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.h]


@dataclass(frozen=True)
class ThreefoldReport:
    diamond: HodgeDiamond
    euler: int
    kodaira_dim: int
    picard: int
    rel_picard: int
    smooth: bool
    multiplicities: tuple
    derived_equivalent_family: bool = False
    non_birational_certificate: tuple = ()
    notes: tuple = ()

    def to_json(self) -> dict:
        return {
            "diamond": self.diamond.to_json(),
            "euler": self.euler,
            "kodaira_dim": self.kodaira_dim,
            "picard": self.picard,
            "rel_picard": self.rel_picard,
            "smooth": self.smooth,
            "multiplicities": list(self.multiplicities),
            "derived_equivalent_family": self.derived_equivalent_family,
            "non_birational_certificate": list(self.non_birational_certificate),
            "notes": list(self.notes),
        }


def _fiber_euler_map(cfg: SurfaceConfig) -> dict:
    return {t: f.euler for t, f in cfg.fibers if f.euler > 0}


def fiber_product_invariants(a: SurfaceConfig, b: SurfaceConfig) -> ThreefoldReport:
    """Invariants of the fiber product of two valid configurations.

    Raises NotSmooth when the discriminants meet.
    """
    _require_valid(a)
    _require_valid(b)
    ea, eb = _fiber_euler_map(a), _fiber_euler_map(b)
    overlap = sorted(set(ea) & set(eb), key=lambda t: t.sort_key())
    if overlap:
        raise NotSmooth("discriminants meet at " + ", ".join(map(str, overlap)))

    # e(X) = sum over t of e(S_t) e(S'_t); smooth fibers contribute 0
    euler = sum(ea[t] * eb.get(t, 0) for t in ea)
    picard = 2 * RATIONAL_ELLIPTIC_PICARD - 1
    h12 = picard - euler // 2
    h = (
        (1, 0, 0, 1),
        (0, picard, h12, 0),
        (0, h12, picard, 0),
        (1, 0, 0, 1),
    )
    diamond = HodgeDiamond(h)
    assert diamond.euler() == euler and diamond.is_symmetric()

    multiple = a.m > 1 or b.m > 1
    notes = []
    if not multiple:
        notes.append("no multiple fiber: Schoen Calabi-Yau 3-fold, outside the kappa = 1 family")
    return ThreefoldReport(
        diamond=diamond,
        euler=euler,
        kodaira_dim=1 if multiple else 0,
        picard=picard,
        rel_picard=2,
        smooth=True,
        multiplicities=(a.m, b.m),
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class FamilyCertificate:
    """Structural claims about a Schoen family, with what backs each one.

    ``distinct_partner_classes`` is computed; the remaining flags rest on
    the fixed structural argument recorded in ``reasons``.
    ``generic_fibers_non_isogenous`` is an assumption the tool cannot check.
    """

    reps: tuple
    distinct_partner_classes: bool
    non_birational: bool
    derived_equivalent: bool
    deformation_equivalent: bool
    hodge_isometric: bool
    generic_fibers_non_isogenous: str = "assumed (not verifiable)"
    reasons: tuple = ()

    def to_json(self) -> dict:
        return {
            "reps": list(self.reps),
            "distinct_partner_classes": self.distinct_partner_classes,
            "non_birational": self.non_birational,
            "derived_equivalent": self.derived_equivalent,
            "deformation_equivalent": self.deformation_equivalent,
            "hodge_isometric": self.hodge_isometric,
            "generic_fibers_non_isogenous": self.generic_fibers_non_isogenous,
            "reasons": list(self.reasons),
        }


@dataclass
class SchoenFamily:
    m: int
    members: list = field(default_factory=list)  # (rep, SurfaceConfig, ThreefoldReport)
    certificate: FamilyCertificate | None = None

    @property
    def reports(self) -> list[ThreefoldReport]:
        return [r for _, _, r in self.members]

    def __len__(self):
        return len(self.members)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "members": [
                {"rep": i, "surface": cfg.to_dict(), "threefold": rep.to_json()}
                for i, cfg, rep in self.members
            ],
            "certificate": self.certificate.to_json() if self.certificate else None,
        }


def twist(base: SurfaceConfig, i: int) -> SurfaceConfig:
    """The twist J^i(S): same Jacobian and marked point, invariant ``i * xi``."""
    return base.with_xi(scalar_mul(i, base.xi()))


def _pairwise_distinct(act: AutAction, xi, reps) -> bool:
    # J^i(S) = J^j(S) iff j xi lies in the orbit of i xi
    orbits = [set(orbit(act, scalar_mul(i, xi))) for i in reps]
    return all(
        scalar_mul(j, xi) not in orbits[a]
        for a in range(len(reps))
        for j in reps[a + 1 :]
    )


def schoen_family(
    base: SurfaceConfig,
    partner_cfg_rule: Callable[[SurfaceConfig, int], SurfaceConfig] | None = None,
    companion: SurfaceConfig | None = None,
    n: int = 1,
) -> SchoenFamily:
    """``n`` pairwise non-birational, derived-equivalent fiber products.

    The factors are ``n`` Fourier-Mukai partners of ``base`` (one per
    partner class, smallest representatives first), each crossed with
    ``companion`` over P^1.
    """
    if n < 1:
        raise ValueError(f"family size must be positive, got {n}")
    if companion is None:
        raise ValueError("a companion surface is required")
    rule = partner_cfg_rule or twist
    _require_valid(base)
    m = base.m
    if m % 2:
        raise ValueError(f"the base multiplicity must be even, got m = {m}")
    act = base.action()
    n1 = resolve_n1(base)
    report = fm_number(act, base.xi(), n1)
    count = report.fm_count_exact
    if count is None or count < n:
        try:
            suggestion = minimal_m(n, act, n1=n1, even=True)
        except ValueError:
            suggestion = None
        have = "unknown" if count is None else count
        raise InsufficientPartners(
            f"m = {m} gives {have} partner(s), need {n}; smallest even m with enough: {suggestion}",
            suggested_m=suggestion,
        )

    classes = partner_classes(act, base.xi())[:n]
    reps = tuple(c.members[0] for c in classes)
    fam = SchoenFamily(m)
    for i in reps:
        cfg = rule(base, i)
        rep = fiber_product_invariants(cfg, companion)
        fam.members.append((i, cfg, rep))

    distinct = _pairwise_distinct(act, base.xi(), reps)
    rel_two = all(r.rel_picard == 2 for r in fam.reports)
    reasons = (
        "factors S_i lie in distinct partner classes, so S_i and S_j are not isomorphic",
        "the projection to P^1 is the Iitaka fibration and rho(X/P^1) = 2, so it factors "
        "only through S_i or the companion; hence X_i, X_j are not isomorphic",
        "rho(X/P^1) = 2 rules out small contractions, so no flops connect X_i and X_j",
        "a rank-2 relative Fourier-Mukai kernel between partners lifts to the fiber products",
        "partners are deformation equivalent through elliptic surfaces",
        "derived-equivalent fiber products carry Hodge isometries on H^3 modulo torsion",
    )
    fam.certificate = FamilyCertificate(
        reps=reps,
        distinct_partner_classes=distinct,
        non_birational=distinct and rel_two,
        derived_equivalent=True,
        deformation_equivalent=True,
        hodge_isometric=True,
        reasons=reasons,
    )
    for idx, (i, cfg, rep) in enumerate(fam.members):
        rep = replace(
            rep,
            derived_equivalent_family=True,
            non_birational_certificate=reasons[:3] if fam.certificate.non_birational else (),
        )
        fam.members[idx] = (i, cfg, rep)
    return fam
