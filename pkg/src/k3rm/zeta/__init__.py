"""Point counting on elliptic K3 surfaces over F_p(t) and the Frobenius polynomial on H^2."""
from ..exactmath.ffield import FiniteField, make_field
from .charpoly import (FrobData, InconsistentCounts, cyclotomic_part, derive_algebraic_factor,
                       power_sums, recover_charpoly, splits_in_biquadratic)
from .counting import CountingError, CountTable, count_fibre, lift_count, surface_counts

__all__ = [
    "CountTable", "CountingError", "FiniteField", "FrobData", "InconsistentCounts",
    "count_fibre", "cyclotomic_part", "derive_algebraic_factor", "lift_count", "make_field",
    "power_sums", "recover_charpoly", "splits_in_biquadratic", "surface_counts",
]
