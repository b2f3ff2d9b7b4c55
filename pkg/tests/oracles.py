"""Brute-force oracles, deliberately independent of the library internals.

Everything here works on bare ints / tuples / Fractions and re-derives the
generator matrices from their defining formulas.
"""

from fractions import Fraction
from itertools import permutations
from math import gcd

import sympy


def brute_order(m, coords):
    d = 1
    while any((d * c) % m for c in coords):
        d += 1
    return d


def brute_totient(m):
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


def brute_units(m):
    return [k for k in range(m) if gcd(k, m) == 1]


def gen(order_, point, m):
    """One generator step, written out case by case."""
    if len(point) == 1:
        (a,) = point
        return ((-a) % m,) if order_ == 2 else (a % m,)
    a, b = point
    if order_ == 1:
        return (a % m, b % m)
    if order_ == 2:
        return ((-a) % m, (-b) % m)
    if order_ == 4:
        return ((-b) % m, a % m)
    if order_ == 6:
        return ((-b) % m, (a + b) % m)
    raise ValueError(order_)


def group_images(order_, point, m):
    """gamma^j(point) for j = 0 .. order-1 (with repeats)."""
    out, q = [], tuple(c % m for c in point)
    for _ in range(order_):
        out.append(q)
        q = gen(order_, q, m)
    return out


def naive_i_prime(order_, point, m):
    """Double loop: every unit k against every group element."""
    members = []
    images = group_images(order_, point, m)
    for k in brute_units(m):
        kp = tuple((k * c) % m for c in point)
        for img in images:
            if kp == img:
                members.append(k)
                break
    return members


def naive_partition(order_, point, m):
    """Classes of units i ~ j iff j*xi is in the orbit of i*xi."""
    remaining = brute_units(m)
    classes = []
    while remaining:
        i = remaining[0]
        ip = tuple((i * c) % m for c in point)
        orb = set(group_images(order_, ip, m))
        cls = [j for j in remaining if tuple((j * c) % m for c in point) in orb]
        classes.append(cls)
        taken = set(cls)
        remaining = [j for j in remaining if j not in taken]
    return classes


def primitive_points(m, rank):
    if rank == 1:
        return [(a,) for a in range(m) if gcd(a, m) == 1]
    return [(a, b) for a in range(m) for b in range(m) if gcd(gcd(a, b), m) == 1]


# --- Moebius maps via an exact linear solve --------------------------------

INF = None


def _row(z, w):
    """Linear condition on (a, b, c, d) for z -> w; None means infinity."""
    if z is INF and w is INF:
        return [0, 0, 1, 0]  # c = 0
    if z is INF:
        return [1, 0, -w, 0]  # a - w c = 0
    if w is INF:
        return [0, 0, z, 1]  # c z + d = 0
    return [z, 1, -w * z, -w]  # a z + b - w (c z + d) = 0


def solve_map(src, dst):
    """(a, b, c, d) of the map src -> dst, first nonzero entry scaled to 1."""
    rows = [_row(z, w) for z, w in zip(src, dst)]
    ns = sympy.Matrix(rows).nullspace()
    assert len(ns) == 1
    vec = [Fraction(int(x.p), int(x.q)) for x in ns[0]]
    lead = next(x for x in vec if x != 0)
    return tuple(x / lead for x in vec)


def evaluate(abcd, z):
    a, b, c, d = abcd
    if z is INF:
        return INF if c == 0 else a / c
    den = c * z + d
    return INF if den == 0 else (a * z + b) / den


def brute_stabilizer(s, pts):
    """All maps through the permutations of three points fixing s."""
    assert len(pts) == 3
    found = set()
    for perm in permutations(pts):
        abcd = solve_map(pts, perm)
        if evaluate(abcd, s) == s:
            found.add(abcd)
    return sorted(found)
