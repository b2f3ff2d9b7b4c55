"""Torsion points of (Q/Z)^r, r in {1, 2}.

A point ``a/m`` is stored as the integer residue ``a`` at a declared level
``m`` rather than as a reduced fraction, so every point attached to one
surface lives at a single level and linear maps act on it like integer
matrices mod ``m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .errors import ParseError, RankMismatch

__all__ = [
    "TorsionPoint",
    "WCFiberKind",
    "add",
    "order",
    "scalar_mul",
    "zero",
]

_KIND_RANK = {"smooth": 2, "In": 1, "trivial": 0}
_set = object.__setattr__


class TorsionPoint:
    """Element ``coords / modulus`` of ``(Q/Z)^r``; immutable and hashable.

    Coordinates are reduced into ``[0, modulus)`` on construction.

    >>> TorsionPoint(7, (8, -3))
    TorsionPoint(modulus=7, coords=(1, 4))
    """

    # hand-rolled rather than a frozen dataclass: construction sits on the
    # hot path of exhaustive sweeps
    __slots__ = ("modulus", "coords")

    def __init__(self, modulus: int, coords):
        if type(modulus) is not int or modulus < 1:
            raise ValueError(f"modulus must be a positive integer, got {modulus!r}")
        if type(coords) is not tuple:
            coords = tuple(coords)
        n = len(coords)
        if n == 1:
            reduced = (coords[0] % modulus,)
        elif n == 2:
            reduced = (coords[0] % modulus, coords[1] % modulus)
        else:
            raise ValueError(f"rank must be 1 or 2, got {n}")
        _set(self, "modulus", modulus)
        _set(self, "coords", reduced)

    def __setattr__(self, name, value):
        raise AttributeError("TorsionPoint is immutable")

    def __eq__(self, other):
        if not isinstance(other, TorsionPoint):
            return NotImplemented
        return self.modulus == other.modulus and self.coords == other.coords

    def __hash__(self):
        return hash((self.modulus, self.coords))

    def __repr__(self):
        return f"TorsionPoint(modulus={self.modulus}, coords={self.coords})"

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def order(self) -> int:
        return order(self)

    def __add__(self, other):
        return add(self, other)

    def __neg__(self):
        return scalar_mul(-1, self)

    def __rmul__(self, k):
        return scalar_mul(k, self)

    def __str__(self):
        parts = ", ".join(f"{c}/{self.modulus}" for c in self.coords)
        return f"({parts})"

    def to_json(self) -> dict:
        return {"m": self.modulus, "coords": list(self.coords)}

    @classmethod
    def from_json(cls, data) -> "TorsionPoint":
        try:
            return cls(int(data["m"]), tuple(int(c) for c in data["coords"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad torsion point {data!r}: {exc}") from exc


def zero(modulus: int = 1, rank: int = 1) -> TorsionPoint:
    return TorsionPoint(modulus, (0,) * rank)


def order(p: TorsionPoint) -> int:
    """Least ``d >= 1`` with ``d * p == 0``.

    This is the lcm of the component orders ``m / gcd(m, c)``, which equals
    ``m / gcd(m, c_1, ..., c_r)``.
    """
    m = p.modulus
    return m // gcd(m, *p.coords)


def scalar_mul(k: int, p: TorsionPoint) -> TorsionPoint:
    m = p.modulus
    return TorsionPoint(m, tuple(k * c for c in p.coords))


def add(p: TorsionPoint, q: TorsionPoint) -> TorsionPoint:
    """Sum in ``(Q/Z)^r``; mismatched levels are lifted to their lcm."""
    if p.rank != q.rank:
        raise RankMismatch(f"cannot add rank {p.rank} and rank {q.rank} points")
    level = lcm(p.modulus, q.modulus)
    sp, sq = level // p.modulus, level // q.modulus
    return TorsionPoint(level, tuple(a * sp + b * sq for a, b in zip(p.coords, q.coords)))


@dataclass(frozen=True, slots=True)
class WCFiberKind:
    """Shape of the local Weil-Chatelet group at a point of the base.

    ``tag`` is ``"smooth"`` (rank-2 torsion), ``"In"`` (rank-1, with the
    number of components ``n``) or ``"trivial"`` (zero group).
    """

    tag: str
    n: int | None = None

    def __post_init__(self):
        if self.tag not in ("smooth", "In", "trivial"):
            raise ValueError(f"unknown fiber kind {self.tag!r}")
        if self.tag == "In":
            if self.n is not None and self.n < 1:
                raise ValueError("I_n kind requires n >= 1")
        elif self.n is not None:
            raise ValueError(f"kind {self.tag!r} takes no n")

    @classmethod
    def smooth(cls) -> "WCFiberKind":
        return cls("smooth")

    @classmethod
    def multiplicative(cls, n: int | None = None) -> "WCFiberKind":
        return cls("In", n)

    @classmethod
    def trivial(cls) -> "WCFiberKind":
        return cls("trivial")

    @property
    def rank(self) -> int:
        """Rank of the torsion; 0 for the trivial group."""
        return _KIND_RANK[self.tag]

    def admits(self, p: TorsionPoint) -> bool:
        if self.tag == "trivial":
            return p.is_zero()
        return len(p.coords) == _KIND_RANK[self.tag]

    def __str__(self):
        if self.tag == "In" and self.n is not None:
            return f"I{self.n}"
        return self.tag

    @classmethod
    def parse(cls, text: str) -> "WCFiberKind":
        """Parse ``smooth``, ``trivial``, ``In`` or ``I<n>`` (``I_<n>``)."""
        t = str(text).strip()
        if t in ("smooth", "trivial", "In"):
            return cls(t)
        if t.startswith("I"):
            digits = t[1:].lstrip("_")
            if digits.isdigit() and int(digits) > 0:
                return cls("In", int(digits))
        raise ParseError(f"unknown fiber kind {text!r}")
