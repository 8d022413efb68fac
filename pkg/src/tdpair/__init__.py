"""Exact rational toolkit for tridiagonal pairs of Krawtchouk type."""

__version__ = "0.1.0"

from .constructions import (
    ConstructionSpec,
    dual,
    leonard_krawtchouk,
    negate,
    onsager_tensor,
    parse_spec,
    swap,
    tensor_pair,
    transform,
)
from .core import (
    TDPair,
    VerificationReport,
    default_orderings,
    eigen_analyze,
    krawtchouk_type,
    parameter_array,
    shape,
    shape_factorization,
    split_decomposition,
    split_sequence,
    standard_orderings,
    verify_td_pair,
)
from .drinfeld import DrinfeldPoly, drinfeld_checks, drinfeld_poly
from .errors import *  # noqa: F401,F403
from .forms import (
    FormMatrix,
    Intertwiner,
    dagger_apply,
    dual_iso_check,
    express_in_pair_algebra,
    form_space,
    four_iso_report,
    invariant_form,
    iso_solver,
)
from .linalg import Matrix, Poly, char_poly, min_poly
