"""Action of the fiber-preserving automorphism group on local invariants.

The automorphisms of the Jacobian fixing the zero section and every fiber
form a cyclic group of order 1, 2, 4 or 6.  A generator acts on the local
Weil-Chatelet group at a smooth fiber by one fixed integer matrix per
order, and by negation at a fiber of type I_n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import KindMismatch, ParseError
from .torsion import TorsionPoint, WCFiberKind

__all__ = ["AutAction", "apply_generator", "orbit", "orbit_coords", "GENERATORS"]

# Generator matrices acting on (a, b) as column vectors.
GENERATORS = {
    1: ((1, 0), (0, 1)),
    2: ((-1, 0), (0, -1)),  # (a, b) -> (-a, -b)
    4: ((0, -1), (1, 0)),  # (a, b) -> (-b, a)
    6: ((0, -1), (1, 1)),  # (a, b) -> (-b, a + b)
}

ALLOWED_ORDERS = {
    "smooth": (1, 2, 4, 6),
    "In": (1, 2),
    "trivial": (1, 2, 4, 6),
}


@dataclass(frozen=True)
class AutAction:
    group_order: int
    fiber_kind: WCFiberKind

    def __post_init__(self):
        allowed = ALLOWED_ORDERS[self.fiber_kind.tag]
        if self.group_order not in allowed:
            raise ValueError(
                f"group order {self.group_order} impossible for kind "
                f"{self.fiber_kind.tag!r} (allowed: {allowed})"
            )

    @classmethod
    def smooth(cls, group_order: int) -> "AutAction":
        return cls(group_order, WCFiberKind.smooth())

    @classmethod
    def multiplicative(cls, group_order: int = 2, n: int | None = None) -> "AutAction":
        return cls(group_order, WCFiberKind.multiplicative(n))

    def check(self, p: TorsionPoint) -> None:
        if not self.fiber_kind.admits(p):
            raise KindMismatch(
                f"point {p} (rank {p.rank}) does not live in the local group "
                f"of a {self.fiber_kind.tag!r} fiber"
            )

    def to_json(self) -> dict:
        return {"order": self.group_order, "kind": self.fiber_kind.tag}

    @classmethod
    def from_json(cls, data) -> "AutAction":
        try:
            return cls(int(data["order"]), WCFiberKind(str(data["kind"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad action {data!r}: {exc}") from exc


def _apply_coords(group_order: int, coords: tuple, m: int) -> tuple:
    if len(coords) == 1:
        # only orders 1 and 2 reach rank 1
        return ((-coords[0]) % m,) if group_order == 2 else coords
    (r00, r01), (r10, r11) = GENERATORS[group_order]
    a, b = coords
    return ((r00 * a + r01 * b) % m, (r10 * a + r11 * b) % m)


def orbit_coords(group_order: int, coords: tuple, m: int) -> list[tuple]:
    """Orbit of reduced residues ``coords`` at level ``m``, as bare tuples."""
    out = [coords]
    q = _apply_coords(group_order, coords, m)
    while q != coords:
        out.append(q)
        q = _apply_coords(group_order, q, m)
    return out


def apply_generator(act: AutAction, p: TorsionPoint) -> TorsionPoint:
    act.check(p)
    return TorsionPoint(p.modulus, _apply_coords(act.group_order, p.coords, p.modulus))


def orbit(act: AutAction, p: TorsionPoint) -> list[TorsionPoint]:
    """``[p, g p, g^2 p, ...]`` up to the first repetition."""
    act.check(p)
    m = p.modulus
    return [TorsionPoint(m, q) for q in orbit_coords(act.group_order, p.coords, m)]
