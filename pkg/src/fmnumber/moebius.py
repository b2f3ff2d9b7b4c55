"""Exact Moebius transformations of P^1 over Q and their stabilizers.

The base automorphisms induced by automorphisms of a rational elliptic
surface fix the marked point ``s`` and permute the remaining singular
fibers, preserving their Kodaira types.  With at least two such fibers this
group is finite; :func:`stabilizer` enumerates its rational part.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .errors import Degenerate, ParseError, PossiblyInfinite

__all__ = [
    "INF",
    "MoebiusMap",
    "N1Bound",
    "P1Point",
    "map_through_triple",
    "n1_upper_bound",
    "stabilizer",
]


@dataclass(frozen=True)
class P1Point:
    """A point of P^1(Q): a reduced rational, or infinity when ``value`` is None."""

    value: Fraction | None

    def __post_init__(self):
        if self.value is not None:
            object.__setattr__(self, "value", Fraction(self.value))

    @property
    def is_inf(self) -> bool:
        return self.value is None

    @classmethod
    def parse(cls, text) -> "P1Point":
        if isinstance(text, P1Point):
            return text
        if isinstance(text, (int, Fraction)) and not isinstance(text, bool):
            return cls(Fraction(text))
        t = str(text).strip().lower()
        if t in ("inf", "infinity", "oo", "∞"):
            return INF
        try:
            return cls(Fraction(t))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a point of P^1(Q): {text!r}") from exc

    def sort_key(self):
        # infinity sorts last
        return (1, 0) if self.value is None else (0, self.value)

    def __str__(self):
        if self.value is None:
            return "inf"
        v = self.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


INF = P1Point(None)


def _pt(x) -> P1Point:
    return x if isinstance(x, P1Point) else P1Point.parse(x)


@dataclass(frozen=True)
class MoebiusMap:
    """``z -> (a z + b) / (c z + d)``, scaled so the first nonzero entry is 1."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        entries = [Fraction(x) for x in (self.a, self.b, self.c, self.d)]
        if entries[0] * entries[3] - entries[1] * entries[2] == 0:
            raise Degenerate("singular matrix")
        lead = next(x for x in entries if x != 0)
        for name, x in zip("abcd", entries):
            object.__setattr__(self, name, x / lead)

    @classmethod
    def identity(cls) -> "MoebiusMap":
        return cls(1, 0, 0, 1)

    def __call__(self, z) -> P1Point:
        z = _pt(z)
        if z.is_inf:
            return INF if self.c == 0 else P1Point(self.a / self.c)
        den = self.c * z.value + self.d
        if den == 0:
            return INF
        return P1Point((self.a * z.value + self.b) / den)

    def compose(self, other: "MoebiusMap") -> "MoebiusMap":
        """``self o other``."""
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = other.a, other.b, other.c, other.d
        return MoebiusMap(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    __matmul__ = compose

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def is_identity(self) -> bool:
        return self == MoebiusMap.identity()

    def key(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def to_row(self) -> list[str]:
        return [_frac(x) for x in self.key()]

    def __str__(self):
        a, b, c, d = (_frac(x) for x in self.key())
        return f"z -> ({a}*z + {b}) / ({c}*z + {d})"


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _to_zero_one_inf(z1: P1Point, z2: P1Point, z3: P1Point) -> MoebiusMap:
    """The map sending ``z1, z2, z3`` to ``0, 1, inf``."""
    if z1.is_inf:
        return MoebiusMap(0, z2.value - z3.value, 1, -z3.value)
    if z2.is_inf:
        return MoebiusMap(1, -z1.value, 1, -z3.value)
    if z3.is_inf:
        return MoebiusMap(1, -z1.value, 0, z2.value - z1.value)
    p, q, r = z1.value, z2.value, z3.value
    return MoebiusMap(q - r, -p * (q - r), q - p, -r * (q - p))


def map_through_triple(src, dst) -> MoebiusMap:
    """The unique Moebius map with ``src[i] -> dst[i]`` for i = 0, 1, 2."""
    src = [_pt(z) for z in src]
    dst = [_pt(z) for z in dst]
    if len(src) != 3 or len(dst) != 3:
        raise Degenerate("need exactly three source and three target points")
    if len(set(src)) < 3 or len(set(dst)) < 3:
        raise Degenerate(f"points not distinct: {src} -> {dst}")
    return _to_zero_one_inf(*dst).inverse() @ _to_zero_one_inf(*src)


def _preserves(g: MoebiusMap, s: P1Point, labels: dict) -> bool:
    if g(s) != s:
        return False
    return all(labels.get(g(p)) == lab for p, lab in labels.items())


def stabilizer(s, labeled_points) -> list[MoebiusMap]:
    """Rational Moebius maps fixing ``s`` and permuting labeled points.

    ``labeled_points`` is a sequence of ``(point, label)``; labels are
    compared for equality only.  Candidates are maps through ordered
    label-compatible triples (using ``s`` as the third anchor when only two
    points are given).  Output is sorted by ``(a, b, c, d)``.
    """
    s = _pt(s)
    labels: dict = {}
    for p, lab in labeled_points:
        p = _pt(p)
        if p in labels or p == s:
            raise ValueError(f"repeated point {p}")
        labels[p] = lab
    pts = list(labels)
    if len(pts) < 2:
        raise PossiblyInfinite(f"only {len(pts)} point(s) besides s; stabilizer may be infinite")
    if len(pts) >= 3:
        src = pts[:3]
        free = 3
    else:
        src = [s] + pts
        free = 2
    found = {}
    for images in permutations(pts, free):
        if any(labels[a] != labels[b] for a, b in zip(src[-free:], images)):
            continue
        dst = list(images) if free == 3 else [s, *images]
        g = map_through_triple(src, dst)
        if _preserves(g, s, labels):
            found[g.key()] = g
    return [found[k] for k in sorted(found)]


@dataclass(frozen=True)
class N1Bound:
    """Result of :func:`n1_upper_bound`.

    ``value`` is None when unknown.  ``certified`` means every complex
    automorphism of the base in question must fix at least three points,
    so the true ``n1`` equals 1.
    """

    value: int | None
    certified: bool
    reason: str

    def to_json(self) -> dict:
        return {"value": self.value, "certified": self.certified, "reason": self.reason}


def n1_upper_bound(cfg) -> N1Bound:
    """Size of the rational stabilizer of ``s`` and the labeled discriminant.

    ``cfg`` is a :class:`fmnumber.surface.SurfaceConfig`.
    """
    if cfg.marked is None:
        return N1Bound(None, False, "no marked point s")
    s = cfg.marked.s
    labeled = [(t, f.symbol) for t, f in cfg.fibers if f.euler > 0 and t != s]
    try:
        group = stabilizer(s, labeled)
    except PossiblyInfinite as exc:
        return N1Bound(None, False, str(exc))
    counts: dict = {}
    for _, lab in labeled:
        counts[lab] = counts.get(lab, 0) + 1
    unique = sum(1 for c in counts.values() if c == 1)
    if unique >= 2:
        return N1Bound(1, True, "s and two uniquely-labeled fibers are fixed by every automorphism")
    return N1Bound(len(group), False, "stabilizer over Q only; the complex group may differ")
