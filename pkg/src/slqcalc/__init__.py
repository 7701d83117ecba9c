"""Exact noncommutative engine for left-covariant differential calculi on
the quantum groups SL_q(2), SL_q(3) and SL_q(N).

Everything is computed over the field Q(v) of rational functions with
q = v**L, so all identities are verified exactly: quantum-Lie relations in
U_q(sl_N), commutation tables, symmetric 2-tensor spans, the quadratic
involution with its 36/28 spectrum, Groebner bases of the exterior ideals
with their graded dimensions, Maurer-Cartan differentials, the d^2 = 0 and
Leibniz laws, two-form vanishing certificates, and classical limits.
"""

from . import exterior, ncgb, verify
from .coord import CoordAlgebra, RealForm, coord_algebra
from .exterior import (
    FormCalculus,
    FormElement,
    SigmaMatrix,
    SymSpace,
    closure,
    dims,
    exterior_system,
    lemma3_report,
    lemma4_report,
    maurer_cartan,
    sigma,
    sln_vanishing,
)
from .fodc import (
    Calculus,
    CalculusError,
    OneForm,
    TwoTensor,
    catalog,
    codim_check,
    right_ideal_generators,
    star_compatible,
)
from .freealg import (
    Alphabet,
    NCPoly,
    ParseError,
    RewriteSystem,
    TensorPoly,
    parse_expression,
    render,
)
from .functionals import (
    LWordFunctional,
    RMatrix,
    SumFunctional,
    UqFunctional,
    convolve,
    functional_mul,
    kappa_twist,
    l_functional,
    pair,
    rmatrix,
)
from .qea import UqAlgebra, uq_algebra
from .scalars import PoleError, PowerBasis, Scalar, ScalarError

__all__ = [
    "Alphabet",
    "Calculus",
    "CalculusError",
    "CoordAlgebra",
    "FormCalculus",
    "FormElement",
    "LWordFunctional",
    "NCPoly",
    "OneForm",
    "ParseError",
    "PoleError",
    "PowerBasis",
    "RMatrix",
    "RealForm",
    "RewriteSystem",
    "Scalar",
    "ScalarError",
    "SigmaMatrix",
    "SumFunctional",
    "SymSpace",
    "TensorPoly",
    "TwoTensor",
    "UqAlgebra",
    "UqFunctional",
    "catalog",
    "closure",
    "codim_check",
    "convolve",
    "coord_algebra",
    "dims",
    "exterior",
    "exterior_system",
    "functional_mul",
    "kappa_twist",
    "l_functional",
    "lemma3_report",
    "lemma4_report",
    "maurer_cartan",
    "ncgb",
    "pair",
    "parse_expression",
    "render",
    "right_ideal_generators",
    "rmatrix",
    "sigma",
    "sln_vanishing",
    "star_compatible",
    "uq_algebra",
    "verify",
]

__version__ = "1.0.0"
