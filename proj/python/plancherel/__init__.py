"""Markov dynamics of the poissonized Plancherel measure.

Thin Python veneer over the C++ core: exact partition combinatorics,
jump-chain and Poisson-field simulation, determinantal correlation kernels,
and their bulk/edge scaling limits.
"""

from ._core import (  # noqa: F401
    __version__,
    airy_ai,
    airy_ai_prime,
    airy_kernel,
    bessel_j,
    bulk_check,
    contains_point,
    diagram_of,
    dim,
    discrete_bessel,
    edge_check,
    enumerate_diagrams,
    extended_airy_kernel,
    extended_kernel,
    extended_sine_kernel,
    lambda_at,
    lis_length,
    p_down,
    p_up,
    plancherel_weight,
    point_config,
    poissonized_weight,
    rho_det,
    rs_shape,
    sample_m_theta,
    shape_process,
    simulate,
    sine_kernel,
    theta_at,
    verify,
)
