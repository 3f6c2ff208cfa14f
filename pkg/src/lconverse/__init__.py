"""Archimedean local L-factors and constructive local converse theorems.

Exact symbolic L- and epsilon-factors of Langlands parameters for GL_n(R)
and GL_n(C), twisting and Rankin-Selberg products, and algorithms that
recover a parameter from its twisted L-factors.
"""

from .errors import (
    FieldMismatchError,
    InconsistentOracleError,
    LFactorError,
    NearPoleError,
    NonDivisibleError,
    ScopeError,
)
from .exact import (
    AffineForm,
    GaussianRational,
    Order,
    ScalarMultiset,
    compare,
    gr,
    minimal_elements,
    multiset_equal,
)
from .params import (
    ComplexCharacter,
    DiscreteSummand,
    Field,
    Parameter,
    RealCharacter,
    canonicalize,
    central_character,
    chi,
    conjugate_complex_char,
    lam,
    multiply_complex_chars,
    multiply_real_chars,
    params_equal,
    phi,
)
from .gamma_calculus import (
    FactorExpr,
    FourthRootOfUnity,
    GammaAtom,
    canonicalize_expr,
    divide_expr,
    epsilon_factor,
    eval_numeric,
    expr_equal,
    l_factor,
    maximal_pole_shifts,
    split_expr,
)
from .twisting import (
    FormalTwist,
    rankin_selberg_l,
    tensor,
    tensor_disc_disc,
    twist_complex,
    twist_real_by_char,
    twisted_l_factor,
)
from .converse import (
    EqualityCertificate,
    ParameterOracle,
    TranscriptOracle,
    TwistOracle,
    Witness,
    check_gl3_central_proposition,
    distinguish,
    reconstruct,
    reconstruct_complex,
    reconstruct_real,
    verify_gl2_counterexample,
    verify_gl4_counterexample,
)

__version__ = "0.1.0"
