"""
Symmetries of the base curve
============================

The automorphisms of P^1 fixing the marked point and permuting the
discriminant (respecting fiber types) bound the extra multiplicity n1.
"""

from pathlib import Path

from fmnumber import INF, SurfaceConfig, n1_upper_bound, stabilizer

###############################################################################
# With three interchangeable points only one nontrivial map survives the
# requirement of fixing s = 2.

for g in stabilizer(2, [(0, "x"), (1, "x"), (INF, "x")]):
    print(g.to_row())

###############################################################################
# Distinct labels pin every point down.

cfg = SurfaceConfig.load(Path(__file__).resolve().parent / "configs" / "example_i.json")
bound = n1_upper_bound(cfg)
print(bound.value, bound.certified, bound.reason)
