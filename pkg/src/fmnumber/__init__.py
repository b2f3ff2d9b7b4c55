"""Fourier-Mukai numbers of rational elliptic surfaces and Schoen 3-folds.

All arithmetic is exact: torsion points are integer residues at a declared
level, base points and Moebius coefficients are :class:`fractions.Fraction`.
"""

from .errors import (
    Degenerate,
    FMError,
    InsufficientPartners,
    InvalidConfig,
    KindMismatch,
    NotPrimitive,
    NotSmooth,
    ParseError,
    PossiblyInfinite,
    RankMismatch,
)
from .fm_count import (
    FMReport,
    UnitGroupSubset,
    fm_number,
    i_prime,
    minimal_m,
    partner_classes,
    sweep,
    totient,
)
from .moebius import INF, MoebiusMap, P1Point, map_through_triple, n1_upper_bound, stabilizer
from .surface import (
    KodairaFiber,
    MarkedFiber,
    SurfaceConfig,
    fm_report_for,
    local_invariants,
    validate,
)
from .threefold import HodgeDiamond, ThreefoldReport, fiber_product_invariants, schoen_family
from .torsion import TorsionPoint, WCFiberKind, add, order, scalar_mul
from .wc_action import AutAction, apply_generator, orbit

__version__ = "0.1.0"
