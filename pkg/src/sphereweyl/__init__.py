"""Exact Laplace counting function and Weyl function of round spheres."""

__version__ = "0.1.0"

from .exact_numbers import (
    ConsistencyError,
    DomainError,
    PiPowerRational,
    PrecisionError,
    integer_pow,
    isqrt_floor,
    pi_enclosure,
    pi_mul,
)
from .sphere_spectrum import (
    SpectrumEntry,
    counting_at,
    counting_brute,
    counting_closed_form,
    counting_product_form,
    distinct_eigenvalue,
    multiplicity,
    spectrum,
)
from .euclidean_geometry import ball_volume, product_identity_check, sphere_volume
from .weyl_compare import (
    ComparisonSign,
    CrossingRecord,
    RegimeReport,
    compare_N_vs_w_next_node,
    compare_w_vs_N_at_node,
    crossing_count,
    crossing_in_interval,
    paper_bound,
    regime_report,
    two_term_coefficient,
    two_term_weyl,
    weyl_coefficient,
)
from .box_baseline import BoxDomain, BudgetExceeded, box_counting, box_polya_check
