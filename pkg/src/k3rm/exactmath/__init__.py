"""Exact arithmetic: rationals, polynomials, rational functions, number fields."""
from fractions import Fraction as BigRat

from .multipoly import MultiPoly
from .numberfield import NFElem, NumberField, nf_inverse, nf_trace
from .poly import UniPoly
from .ratfunc import RatFunc, ratfun_normalize
from .realroots import RealRootBox, sturm_isolate
from .rings import GF, QQ


def sign_at_real_root(g: UniPoly, field: NumberField, root: RealRootBox) -> int:
    """Exact sign of g(alpha_i) where alpha_i is the root of field.f inside ``root``."""
    from .realroots import sign_at_root
    return sign_at_root(g, field.f, root)


__all__ = [
    "BigRat", "GF", "MultiPoly", "NFElem", "NumberField", "QQ", "RatFunc",
    "RealRootBox", "UniPoly", "nf_inverse", "nf_trace", "ratfun_normalize",
    "sign_at_real_root", "sturm_isolate",
]
