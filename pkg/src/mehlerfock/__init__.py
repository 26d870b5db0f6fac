"""Associated Legendre functions of complex degree and order, generalized
order-integral (Mehler-Fock type) transform identities, and the Green's
function / heat kernel of hyperbolic wedges."""

from .scalars import (
    ConvergenceError,
    DomainError,
    PoleError,
    gamma,
    gamma_ratio_asymptotic,
    hyp2f1_regularized,
    loggamma,
    pochhammer,
    principal_log,
    principal_pow,
    rgamma,
)
from .quadrature import (
    QuadratureConfig,
    integrate_endpoint_singular,
    integrate_finite,
    integrate_oscillatory_tail,
    integrate_semi_infinite_decaying,
    integrate_tanh_sinh,
    iterated_average,
    wynn_epsilon,
)
from .laplace import LaplaceInversionConfig, invert_laplace, talbot_nodes
from .legendre import (
    asymp_p_imag_degree,
    asymp_p_large_nu,
    asymp_q_large_nu,
    bound_pq_product,
    bound_pq_product_mu_zero,
    bound_qq_product,
    identity_residuals,
    legendre_p,
    legendre_p_neg_order_via_integral,
    legendre_q,
    legendre_q_via_integral,
    pq_ladder_tail_bound,
    pq_product_term,
    product_asymp_mu,
    product_asymp_rho,
    q_product_scaled,
    tilde_argument,
    tilde_pair,
    whipple_residuals,
)
from .kernels import (
    MeromorphicKernel,
    TransformRequest,
    TransformVerification,
    addition_formula_rhs,
    cosine_kernel,
    double_pole_kernel,
    kernel_catalog,
    rational_kernel_over_s,
    rational_kernel_times_s,
    reciprocal_kernel,
    transform_lhs,
    transform_rhs,
    verify_transform,
    wedge_difference_kernel,
)
from .wedge import (
    PolarPoint,
    WedgeSpec,
    green_plane,
    green_plane_polar,
    green_plane_resolvent,
    green_wedge,
    h_quarter,
    h_quarter_series,
    heat_plane,
    heat_plane_mckean,
    heat_plane_shifted,
    heat_plane_spectral,
    heat_wedge,
    hyperbolic_distance,
    pde_residual,
    spectral_degree,
    spectral_shift,
    wedge_primary_kernel,
)
from .suites import run_suite, suite_names

__version__ = "0.1.0"
