"""
How fast the count grows
========================

Sweep the multiplicity and watch the lower bound phi(m)/2 climb.
"""

from fmnumber import AutAction, sweep
from fmnumber.fm_count import minimal_m

act = AutAction.multiplicative(2)

###############################################################################
# A sweep returns a table that can be dumped as TSV for a spreadsheet.

table = sweep(act, None, range(3, 16))
print(table.to_tsv())

###############################################################################
# Smallest even level reaching a target number of partners.

for target in (1, 5, 10, 25, 50):
    print(f"N={target:>2}  m={minimal_m(target, act)}")
