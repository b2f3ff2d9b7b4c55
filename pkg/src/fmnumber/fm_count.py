"""Fourier-Mukai numbers of rational elliptic surfaces with a multiple fiber.

For a surface with a multiple fiber of multiplicity ``m`` and local
invariant ``xi``, its partners are the twists ``J^i(S)`` for units
``i mod m``.  Two twists coincide exactly when the indices differ by an
element of ``I'``, the units ``k`` with ``k xi`` in the orbit of ``xi``
under the fiber-preserving automorphisms (valid when ``n1 = 1``).  In
general only the lower bound ``phi(m) / n0`` with ``n0 = n1 * |Aut|``
is available.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import compress
from math import gcd
from typing import Callable, Iterable

from .errors import NotPrimitive
from .torsion import TorsionPoint, order
from .wc_action import AutAction, orbit_coords

__all__ = [
    "FMReport",
    "SweepTable",
    "UnitGroupSubset",
    "TSV_COLUMNS",
    "default_xi",
    "fm_number",
    "i_prime",
    "minimal_m",
    "partner_classes",
    "sweep",
    "totient",
    "units",
]

TSV_COLUMNS = ("m", "phi", "i_prime_size", "fm_exact", "lower_bound_num", "lower_bound_den", "reps")


def _prime_factors(m: int) -> list[int]:
    out, p = [], 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def totient(m: int) -> int:
    """Euler's phi by trial-division factorization."""
    if m < 1:
        raise ValueError(f"totient needs m >= 1, got {m}")
    for p in _prime_factors(m):
        m -= m // p
    return m


def units(m: int) -> list[int]:
    """Residues in ``[0, m)`` coprime to ``m``; ``[0]`` for ``m == 1``."""
    if m == 1:
        return [0]
    # sieve out multiples of each prime factor
    keep = bytearray(b"\x01") * m
    for p in _prime_factors(m):
        keep[::p] = bytes(len(range(0, m, p)))
    return list(compress(range(m), keep))


@dataclass(frozen=True)
class UnitGroupSubset:
    modulus: int
    members: tuple

    def __post_init__(self):
        members = tuple(sorted({k % self.modulus for k in self.members}))
        for k in members:
            if gcd(k, self.modulus) != 1:
                raise ValueError(f"{k} is not a unit mod {self.modulus}")
        object.__setattr__(self, "members", members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, k):
        return k % self.modulus in self.members

    def __iter__(self):
        return iter(self.members)

    def is_subgroup(self) -> bool:
        s = set(self.members)
        m = self.modulus
        return (1 % m) in s and all((a * b) % m in s for a in s for b in s)

    @classmethod
    def _trusted(cls, modulus: int, members: tuple) -> "UnitGroupSubset":
        # members are already reduced units in sorted order
        obj = object.__new__(cls)
        object.__setattr__(obj, "modulus", modulus)
        object.__setattr__(obj, "members", members)
        return obj

    def coset(self, i: int) -> "UnitGroupSubset":
        """``i * self``; ``i`` must be a unit."""
        m = self.modulus
        return UnitGroupSubset._trusted(m, tuple(sorted({(i * k) % m for k in self.members})))

    def to_json(self) -> dict:
        return {"m": self.modulus, "members": list(self.members)}


def _check_primitive(xi: TorsionPoint) -> int:
    m = xi.modulus
    if order(xi) != m:
        raise NotPrimitive(f"local invariant {xi} has order {order(xi)}, not its level {m}")
    return m


def _unit_combination(xi: TorsionPoint) -> tuple:
    """Integers ``u`` with ``sum(u_j * xi_j) == 1 (mod m)``; needs xi primitive."""
    m = xi.modulus
    if xi.rank == 1:
        return (pow(xi.coords[0], -1, m) if m > 1 else 0,)
    a, b = xi.coords
    # u1*a == g1 (mod m) with g1 = gcd(a, m); then gcd(g1, b) = 1 since g1 | m
    g1, u1, _ = _egcd(a, m)
    g2, x, y = _egcd(g1, b)
    assert g2 == 1
    return (x * u1, y)


def _egcd(a: int, b: int) -> tuple:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def i_prime(act: AutAction, xi: TorsionPoint) -> UnitGroupSubset:
    """Units ``k mod m`` with ``k * xi`` in the orbit of ``xi``.

    Each orbit point ``q`` lies in the cyclic group generated by ``xi`` for
    at most one ``k``, recovered as ``k = u . q`` where ``u . xi == 1``;
    only the orbit (length <= 6) is scanned, not all units.

    The action commutes with scaling, so ``I'`` is unchanged when ``xi`` is
    multiplied by a unit.  Every primitive rank-1 point is a unit multiple
    of ``(1,)`` and shares its cached answer.
    """
    m = xi.modulus
    x = xi.coords
    tag = act.fiber_kind.tag
    if len(x) == 1:
        if gcd(m, x[0]) != 1:
            raise NotPrimitive(f"local invariant {xi} has order {order(xi)}, not its level {m}")
        if tag != "In":
            act.check(xi)
        return _i_prime_cached(act.group_order, m, (1 % m,))
    if gcd(m, x[0], x[1]) != 1:
        raise NotPrimitive(f"local invariant {xi} has order {order(xi)}, not its level {m}")
    if tag != "smooth":
        act.check(xi)
    return _i_prime_cached(act.group_order, m, x)


@lru_cache(maxsize=4096)
def _i_prime_cached(group_order: int, m: int, x: tuple) -> UnitGroupSubset:
    u = _unit_combination(TorsionPoint(m, x))
    members = []
    for q in orbit_coords(group_order, x, m):
        k = sum(ui * qi for ui, qi in zip(u, q)) % m
        if gcd(k, m) == 1 and all((k * c - d) % m == 0 for c, d in zip(x, q)):
            members.append(k)
    return UnitGroupSubset(m, tuple(members))


def _coset_reps(sub: UnitGroupSubset) -> list[int]:
    """Least member of each coset of ``sub`` among the units, ascending."""
    m, members = sub.modulus, sub.members
    if m == 1:
        return [0]
    seen: set = set()
    reps = []
    for i in units(m):
        if i not in seen:
            reps.append(i)
            seen.update([(i * k) % m for k in members])
    return reps


def partner_classes(act: AutAction, xi: TorsionPoint) -> list[UnitGroupSubset]:
    """Cosets ``i * I'`` partitioning the units mod m, ordered by least member.

    Each coset is one isomorphism class of twists ``J^i(S)``.
    """
    sub = i_prime(act, xi)
    return [sub.coset(i) for i in _coset_reps(sub)]


@dataclass(frozen=True)
class FMReport:
    """Fourier-Mukai count (or bound) for one multiple fiber."""

    m: int
    phi_m: int
    i_prime: UnitGroupSubset
    fm_count_exact: int | None
    lower_bound: Fraction
    partner_reps: tuple
    n0: int
    n1: int
    aut_order: int
    fiber_kind: str

    @property
    def n2_bound(self) -> int:
        # n2 is a quotient of N1, so n2 <= n1
        return self.n1

    @property
    def lambda_(self) -> int:
        # every (-1)-curve is an m-section
        return self.m

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "phi_m": self.phi_m,
            "i_prime": list(self.i_prime.members),
            "i_prime_size": len(self.i_prime),
            "fm_count_exact": self.fm_count_exact,
            "lower_bound": _frac_str(self.lower_bound),
            "partner_reps": list(self.partner_reps),
            "n0": self.n0,
            "assumptions": {
                "n1": self.n1,
                "n2_at_most": self.n2_bound,
                "aut_order": self.aut_order,
                "fiber_kind": self.fiber_kind,
            },
        }

    def tsv_row(self) -> list[str]:
        return [
            str(self.m),
            str(self.phi_m),
            str(len(self.i_prime)),
            "NA" if self.fm_count_exact is None else str(self.fm_count_exact),
            str(self.lower_bound.numerator),
            str(self.lower_bound.denominator),
            ",".join(map(str, self.partner_reps)),
        ]


def _frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def fm_number(act: AutAction, xi: TorsionPoint, n1: int = 1) -> FMReport:
    """FM count of the surface with local invariant ``xi``.

    The exact count ``phi(m) / |I'|`` is reported only for ``m <= 2``
    (always 1) or ``n1 == 1``; the lower bound ``phi(m) / n0`` is always
    filled in.
    """
    if n1 < 1:
        raise ValueError(f"n1 must be positive, got {n1}")
    m = _check_primitive(xi)
    phi = totient(m)
    n0 = n1 * act.group_order
    sub = i_prime(act, xi)
    if m <= 2:
        exact, reps = 1, (units(m)[0],)
    elif n1 == 1:
        reps = tuple(_coset_reps(sub))
        exact = phi // len(sub)
    else:
        exact, reps = None, ()
    return FMReport(
        m=m,
        phi_m=phi,
        i_prime=sub,
        fm_count_exact=exact,
        lower_bound=Fraction(phi, n0),
        partner_reps=reps,
        n0=n0,
        n1=n1,
        aut_order=act.group_order,
        fiber_kind=act.fiber_kind.tag,
    )


def default_xi(act: AutAction, m: int) -> TorsionPoint:
    """``(1,)`` for rank-1 kinds, ``(1, 1)`` for smooth fibers, zero if trivial."""
    if act.fiber_kind.tag == "smooth":
        return TorsionPoint(m, (1, 1))
    if act.fiber_kind.tag == "In":
        return TorsionPoint(m, (1,))
    return TorsionPoint(m, (0,))


@dataclass
class SweepTable:
    rows: list = field(default_factory=list)
    skipped: list = field(default_factory=list)  # (m, reason)

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def to_tsv(self) -> str:
        lines = ["\t".join(TSV_COLUMNS)]
        lines += ["\t".join(r.tsv_row()) for r in self.rows]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "rows": [r.to_json() for r in self.rows],
            "skipped": [{"m": m, "reason": why} for m, why in self.skipped],
        }


def sweep(
    act: AutAction,
    xi_family: Callable[[int], TorsionPoint] | None = None,
    m_range: Iterable[int] = (),
    n1: int = 1,
) -> SweepTable:
    """One :class:`FMReport` per ``m``, in increasing order of ``m``.

    Values of ``m`` where ``xi_family`` produces a non-primitive invariant
    are skipped and recorded in ``table.skipped``.
    """
    rule = xi_family or (lambda m: default_xi(act, m))
    table = SweepTable()
    for m in sorted(set(m_range)):
        xi = rule(m)
        try:
            table.rows.append(fm_number(act, xi, n1))
        except NotPrimitive as exc:
            table.skipped.append((m, str(exc)))
    return table


def minimal_m(
    target: int,
    act: AutAction,
    n1: int = 1,
    even: bool = True,
    start: int = 2,
    limit: int = 10**6,
) -> int:
    """Smallest ``m >= start`` (even if requested) with ``phi(m) / n0 >= target``."""
    n0 = n1 * act.group_order
    m = start + (start % 2 if even else 0)
    step = 2 if even else 1
    while m <= limit:
        if totient(m) >= target * n0:
            return m
        m += step
    raise ValueError(f"no m <= {limit} reaches lower bound {target}")
