"""Vertex connectivity of power graphs of cyclic groups.

Closed-form case dispatch, explicit cut-set constructions (with their size
formulas alpha_j, beta_j, gamma_ab), and two independent exact solvers
(weighted min cut on the divisor quotient; textbook vertex connectivity on
the explicit graph), all reconciled by a sweep self-test. Served over
FastAPI and a thin CLI.
"""

from .connectivity import (
    KappaResult,
    NoClosedFormError,
    kappa,
    kappa_closed_form,
    kappa_naive,
    kappa_quotient_exact,
)
from .cutsets import (
    ClassSet,
    Separation,
    alpha_j,
    beta_j,
    build_X,
    build_Y,
    build_Z,
    gamma_ab,
    separation_of,
    union_subgroups_size,
    verify_cutset,
)
from .graphcore import (
    CapExceeded,
    DivisorGraph,
    ExplicitGraph,
    build_divisor_graph,
    expand_explicit,
    is_disconnected_after_removal,
)
from .numtheory import (
    Factorization,
    TotientDoublingEquality,
    divisors,
    factorize,
    phi,
    radical,
    totient_doubling_test,
)
from .sweep import SweepRow, compute_row, sweep_range

__version__ = "0.1.0"

__all__ = [
    "Factorization",
    "factorize",
    "phi",
    "divisors",
    "radical",
    "totient_doubling_test",
    "TotientDoublingEquality",
    "DivisorGraph",
    "ExplicitGraph",
    "CapExceeded",
    "build_divisor_graph",
    "expand_explicit",
    "is_disconnected_after_removal",
    "ClassSet",
    "Separation",
    "alpha_j",
    "beta_j",
    "gamma_ab",
    "build_Y",
    "build_Z",
    "build_X",
    "separation_of",
    "union_subgroups_size",
    "verify_cutset",
    "KappaResult",
    "NoClosedFormError",
    "kappa",
    "kappa_closed_form",
    "kappa_quotient_exact",
    "kappa_naive",
    "SweepRow",
    "compute_row",
    "sweep_range",
]
