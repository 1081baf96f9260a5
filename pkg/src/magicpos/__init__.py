"""Magic positivity of Ehrhart polynomials under dilation.

Exact-rational tools for expanding polynomials in the basis
``x^i (x+1)^(d-i)``, computing the smallest dilation that makes an
Ehrhart polynomial magic positive (the m-index), h*-vectors, Sturm-based
real-rootedness, and root-line (CL) bounds.
"""

from .cl import CLCertificate, cl_check, cl_mindex_bound, dimension_only_bound, quadratic_threshold
from .errors import (
    InvalidParametersError,
    MagicError,
    NegativeInputError,
    NonPositiveCoefficientsError,
    NotCLError,
    TooLargeError,
    UnsupportedGenericError,
    ZeroDilationError,
    ZeroPolynomialError,
)
from .families import (
    CompleteMultipartite,
    CrossPolytope,
    Generic,
    Hypersimplex,
    LatticePointCount,
    MinimalMatroid,
    SpikedSimplex,
    StandardReflexiveSimplex,
    StandardSimplex,
    conjecture_scan,
    counterexample_q,
    ehrhart,
    ehrhart_dilated,
    lattice_count,
)
from .hstar import (
    HStarVector,
    ehrhart_from_hstar,
    hstar_from_ehrhart,
    is_palindromic,
    is_real_rooted,
    numerator_from_magic,
    reflexive_magic_check,
)
from .magic import (
    MagicExpansion,
    MIndexResult,
    ThresholdPolynomials,
    from_magic,
    is_magic_positive,
    m_index,
    magic_threshold,
    search_bound,
    threshold_polys,
    to_magic,
)
from .parse import parse_polynomial
from .poly import ZERO_DEGREE, Polynomial, add, binomial_poly, derivative, evaluate, mul, scale_arg

__version__ = "0.1.0"
