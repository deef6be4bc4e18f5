"""Exact Hecke-algebra realization of the level-K SU(N) fusion category.

The algebra H_n is taken at q = exp(2*pi*i/(N+K)), with all scalars in
the cyclotomic field Q(zeta_{2N(N+K)}).  The Markov trace at the
distinguished weight purifies H_n to a semisimple quotient whose
blocks are indexed by level-bounded Young diagrams; quantum
dimensions, twists, the S-matrix and modular-functor dimensions are
computed from braids, idempotents and Gram matrices, all exactly.
"""

from .scalar import Params, Scalar, conjugate, embed, invert, qfact, qint
from .diagrams import (
    YoungDiagram,
    branch,
    dagger,
    diagram_stats,
    gamma_n,
    labels,
    pad,
    path_count,
    weight,
)
from .hecke import (
    BraidWord,
    HeckeElement,
    YoungIdempotent,
    e_idempotent,
    from_braid,
    jones_wenzl,
    sigma_element,
    star,
    tensor_embed,
    young_idempotent,
)
from .trace import (
    GRAM_LIMIT,
    TRACE_LIMIT,
    GramData,
    closure_invariant,
    curl_scalar,
    eta,
    gram,
    loop_power,
    markov_trace,
    pairing,
    trace_parameter,
)
from .category import (
    BlockData,
    FusionTable,
    SMatrix,
    branching_multiplicity,
    central_idempotents,
    fusion,
    fusion_matrix,
    fusion_table,
    mf_dim,
    minimal_idempotent,
    purified_algebra,
    purified_dim,
    qdim,
    s_matrix,
    twist,
)
from .verify import VerifyReport, run_verify

__all__ = [
    "Params",
    "Scalar",
    "qint",
    "qfact",
    "conjugate",
    "invert",
    "embed",
    "YoungDiagram",
    "labels",
    "dagger",
    "gamma_n",
    "branch",
    "path_count",
    "pad",
    "weight",
    "diagram_stats",
    "BraidWord",
    "HeckeElement",
    "YoungIdempotent",
    "sigma_element",
    "from_braid",
    "e_idempotent",
    "jones_wenzl",
    "young_idempotent",
    "tensor_embed",
    "star",
    "GRAM_LIMIT",
    "TRACE_LIMIT",
    "GramData",
    "markov_trace",
    "pairing",
    "gram",
    "eta",
    "trace_parameter",
    "closure_invariant",
    "curl_scalar",
    "loop_power",
    "BlockData",
    "FusionTable",
    "SMatrix",
    "purified_dim",
    "minimal_idempotent",
    "central_idempotents",
    "branching_multiplicity",
    "purified_algebra",
    "fusion",
    "fusion_matrix",
    "fusion_table",
    "qdim",
    "twist",
    "s_matrix",
    "mf_dim",
    "VerifyReport",
    "run_verify",
]

__version__ = "0.1.0"
