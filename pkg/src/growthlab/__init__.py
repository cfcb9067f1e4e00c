"""Growth of sequences of genus-zero entire functions, numerically.

Submodules
----------
genus_zero   factored genus-zero functions: d*, Jensen means, sup norms, zero counts
families     built-in sequences (P_n, k_n) and window surrogates of C_0, C_0*, eta(R)
potential    capacity, equilibrium measure, Green function with pole at infinity
harness      finite-scale checks of the growth lemmas and theorems
scenario     JSON scenario documents driving the ``growthlab`` command
"""

__version__ = "0.1.0"

from .genus_zero import (  # noqa: E402
    NEG_INF,
    GenusZeroFunction,
    TailModel,
    d_star,
    jensen_mean_closed,
    jensen_mean_quadrature,
    log_abs_eval,
    order_estimate,
    split_at,
    sup_norm,
    tail_reciprocal_sum,
    zero_count,
)
from .families import (  # noqa: E402
    FunctionSequence,
    estimate_C0,
    estimate_C0_star,
    estimate_eta_R,
    growth_profile,
    make_family,
)
from .potential import (  # noqa: E402
    PlanarSet,
    capacity_estimate,
    equilibrium_measure,
    green_eval,
)
