"""
A family of derived-equivalent threefolds
=========================================

Pair a surface carrying a multiple fiber with a second rational elliptic
surface whose singular fibers lie elsewhere.  Twisting the local invariant
by units from distinct classes yields non-birational partners.
"""

from pathlib import Path

from fmnumber import InsufficientPartners, SurfaceConfig, fiber_product_invariants, schoen_family

CONFIGS = Path(__file__).resolve().parent / "configs"
base = SurfaceConfig.load(CONFIGS / "family_base.json")
companion = SurfaceConfig.load(CONFIGS / "companion.json")

###############################################################################
# The fiber product has the familiar Hodge numbers.

report = fiber_product_invariants(base, companion)
print(report.diamond.pretty())
print("e =", report.euler, " kappa =", report.kodaira_dim)

###############################################################################
# Five members at level 22.

family = schoen_family(base, None, companion, 5)
print("twists:", family.certificate.reps)

###############################################################################
# Asking for more than the level supports points at a larger level.

try:
    schoen_family(base, None, companion, 6)
except InsufficientPartners as exc:
    print("need m =", exc.suggested_m)
