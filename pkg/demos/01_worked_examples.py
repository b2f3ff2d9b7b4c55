"""
Counting partners for small multiplicities
==========================================

Two configurations are worked through here: a smooth marked fiber with an
automorphism of order 6, and a multiplicative fiber where only the
sign flip acts.
"""

from pathlib import Path

from fmnumber import AutAction, SurfaceConfig, TorsionPoint, fm_number, fm_report_for, partner_classes, validate

HERE = Path(__file__).resolve().parent

###############################################################################
# Start from a raw torsion point.  With the order-4 action on (1/5, 3/5)
# every unit of Z/5 already moves the point inside its own orbit, so there is
# a single partner class.

xi = TorsionPoint(5, (1, 3))
report = fm_number(AutAction.smooth(4), xi)
print("order 4:", list(report.i_prime), "->", report.fm_count_exact)

###############################################################################
# The same question asked of a full surface description.  ``validate``
# collects every rule check before anything is computed.

cfg = SurfaceConfig.load(HERE / "configs" / "example_i.json")
print(validate(cfg).to_json()["checks"][0])
report = fm_report_for(cfg)
print("order 6 at level 7:", len(report.i_prime), "units fix the orbit; count =", report.fm_count_exact)

###############################################################################
# With an I1 fiber at the marked point the stabilizing units shrink to
# {1, -1}, and the count grows like phi(m)/2.

cfg = SurfaceConfig.load(HERE / "configs" / "example_ii.json")
report = fm_report_for(cfg)
print("level 5 multiplicative:", report.fm_count_exact)
for cls in partner_classes(cfg.action(), cfg.xi()):
    print("  class", list(cls))
