"""Green's function and heat kernel of the hyperbolic plane and of a
hyperbolic wedge, in geodesic polar coordinates.

Everything is phrased through the spectrally shifted objects: the shifted
Green's function at parameter ``s`` is the plain resolvent at ``s - 1/4``,
and the shifted heat kernel carries a factor ``exp(t/4)``.  The shift puts
the degree of every Legendre evaluation at ``sqrt(s) - 1/2``, which maps
the cut plane into the half plane where the product machinery is valid.

The wedge's Dirichlet Green's function is the plane's minus a boundary
correction term, which is computed either as one fused order integral or as
the difference of two residue series; the wedge heat kernel then comes from
the correction term through numerical Laplace inversion on the cotangent
contour.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace

import numpy as np

from .kernels import (
    MeromorphicKernel,
    TransformRequest,
    transform_axis_integral,
    transform_rhs,
    wedge_difference_kernel,
)
from .laplace import DEFAULT_INVERSION, LaplaceInversionConfig, invert_laplace
from .legendre import legendre_q, _p_half_imag_batch
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, integrate_finite
from .scalars import DomainError

__all__ = [
    "PolarPoint",
    "WedgeSpec",
    "hyperbolic_distance",
    "spectral_degree",
    "spectral_shift",
    "green_plane",
    "green_plane_resolvent",
    "green_plane_polar",
    "heat_plane",
    "heat_plane_mckean",
    "heat_plane_spectral",
    "heat_plane_shifted",
    "h_quarter",
    "h_quarter_series",
    "green_wedge",
    "heat_wedge",
    "pde_residual",
    "wedge_primary_kernel",
]


@dataclass(frozen=True)
class PolarPoint:
    """Geodesic polar coordinates: radius ``a >= 0`` and angle ``alpha``.

    ``a = 0`` is the base point regardless of the angle.
    """

    a: float
    alpha: float

    def __post_init__(self):
        if self.a < 0:
            raise DomainError(f"geodesic radius must be non-negative, got {self.a}")


@dataclass(frozen=True)
class WedgeSpec:
    """A wedge of opening angle ``gamma`` in ``(0, 2 pi]`` with its vertex at
    the polar base point and sides along the rays at angles 0 and gamma."""

    gamma: float

    def __post_init__(self):
        if not (0.0 < self.gamma <= 2.0 * math.pi):
            raise DomainError(f"wedge angle must lie in (0, 2 pi], got {self.gamma}")

    def contains(self, p: PolarPoint) -> bool:
        return p.a > 0.0 and 0.0 < p.alpha < self.gamma

    def on_closure(self, p: PolarPoint) -> bool:
        return p.a > 0.0 and 0.0 <= p.alpha <= self.gamma


def hyperbolic_distance(x: PolarPoint, y: PolarPoint) -> float:
    """Geodesic distance between two points in polar coordinates."""
    ch = (math.cosh(x.a) * math.cosh(y.a)
          - math.sinh(x.a) * math.sinh(y.a) * math.cos(x.alpha - y.alpha))
    return math.acosh(max(ch, 1.0))


def spectral_degree(s) -> complex:
    """Degree ``sqrt(s) - 1/2`` of every Legendre evaluation at parameter ``s``.

    Principal square root; maps the cut plane into ``Re > -1/2``.
    """
    s = complex(s)
    if s == 0 or (s.imag == 0.0 and s.real < 0.0):
        raise DomainError(f"spectral parameter {s} lies on the cut (-inf, 0]")
    return cmath.sqrt(s) - 0.5


def spectral_shift(s) -> complex:
    """Map a shifted spectral parameter to the plain resolvent one."""
    return complex(s) - 0.25


def green_plane(d: float, s) -> complex:
    """Shifted Green's function of the plane at distance ``d > 0``."""
    d = float(d)
    if d <= 0.0:
        raise DomainError(
            f"distance must be positive (logarithmic singularity at 0), got {d}"
        )
    nu = spectral_degree(s)
    return legendre_q(nu, 0.0, math.cosh(d)) / (2.0 * math.pi)


def green_plane_resolvent(d: float, s) -> complex:
    """Plain (unshifted) resolvent kernel of the plane: the shifted one at
    ``s + 1/4``."""
    return green_plane(d, complex(s) + 0.25)


def _plane_weight(d_angle: float):
    """Scaled angular weight ``cosh(rho (pi - D)) exp(-pi rho)``."""
    e1 = d_angle
    e2 = 2.0 * math.pi - d_angle

    def weight(rho):
        rho = np.asarray(rho, dtype=float)
        return 0.5 * (np.exp(-e1 * rho) + np.exp(-e2 * rho)) + 0.0j

    return weight


def green_plane_polar(x: PolarPoint, y: PolarPoint, s,
                      cfg: QuadratureConfig = DEFAULT_CONFIG) -> complex:
    """Shifted Green's function of the plane as an order integral in polar
    coordinates; equals ``green_plane`` of the distance."""
    if x.a <= 0.0 or y.a <= 0.0:
        raise DomainError("both points must be away from the polar base point")
    d_angle = abs(x.alpha - y.alpha)
    if d_angle == 0.0 and x.a == y.a:
        raise DomainError("coincident points: the order integral diverges")
    nu = spectral_degree(s)
    decay = min(d_angle, 2.0 * math.pi - d_angle)
    val, _ = transform_axis_integral(
        nu, math.cosh(x.a), math.cosh(y.a), _plane_weight(d_angle), cfg,
        exp_decay_rate=decay)
    return val / math.pi ** 2


# ----------------------------------------------------------------------------
# heat kernels of the plane
# ----------------------------------------------------------------------------


def heat_plane_mckean(d: float, t: float, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Heat kernel of the plane through the radial cosh-difference integral."""
    d = float(d)
    t = float(t)
    if t <= 0:
        raise DomainError(f"time must be positive, got {t}")
    if d < 0:
        raise DomainError(f"distance must be non-negative, got {d}")
    u_max = math.sqrt(math.sqrt(4.0 * t * 46.0 + d * d) - d + 1e-12)

    def integrand(u):
        u2 = u * u
        rho = d + u2
        # cosh(rho) - cosh(d) = 2 sinh(d + u^2/2) sinh(u^2/2); writing
        # sinh(u^2/2) = (u^2/2) sinhc cancels the substitution jacobian
        # exactly, so the quotient is finite down to u = 0
        half = 0.5 * u2
        sinhc = np.where(half > 0, np.sinh(np.where(half > 0, half, 1.0)) /
                         np.where(half > 0, half, 1.0), 1.0)
        root = np.sqrt(np.sinh(d + half) * sinhc)
        return np.where(
            root > 0,
            2.0 * rho * np.exp(-rho * rho / (4.0 * t)) / np.where(root > 0, root, 1.0),
            0.0,
        )

    val, _ = integrate_finite(integrand, 0.0, u_max, cfg, seed_panels=8)
    pref = math.sqrt(2.0) / (4.0 * math.pi * t) ** 1.5 * math.exp(-0.25 * t)
    return float(val.real) * pref


def heat_plane_spectral(d: float, t: float,
                        cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Heat kernel of the plane through its spectral order integral."""
    d = float(d)
    t = float(t)
    if t <= 0:
        raise DomainError(f"time must be positive, got {t}")
    if d < 0:
        raise DomainError(f"distance must be non-negative, got {d}")
    rho_max = math.sqrt(47.0 / t)

    if d == 0.0:
        def integrand(rho):
            return rho * np.tanh(math.pi * rho) * np.exp(-rho * rho * t)
    else:
        def integrand(rho):
            leg = _p_half_imag_batch(complex(-0.5), d, np.asarray(rho, float))
            return rho * np.tanh(math.pi * rho) * np.exp(-rho * rho * t) * leg.real

    seeds = max(8, int(math.ceil(d * rho_max / math.pi)) + 4)
    val, _ = integrate_finite(integrand, 0.0, rho_max, cfg, seed_panels=seeds)
    return float(np.real(val)) * math.exp(-0.25 * t) / (2.0 * math.pi)


#: default evaluation route for the plane's heat kernel
heat_plane = heat_plane_mckean


def heat_plane_shifted(d: float, t: float,
                       cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Shifted heat kernel ``exp(t/4) K`` of the plane."""
    return math.exp(0.25 * float(t)) * heat_plane(d, t, cfg)


# ----------------------------------------------------------------------------
# wedge boundary correction
# ----------------------------------------------------------------------------


def _validate_wedge_pair(x: PolarPoint, y: PolarPoint, w: WedgeSpec,
                         allow_boundary_x: bool):
    if not w.contains(y):
        raise DomainError(f"source point {y} must lie inside the wedge")
    if allow_boundary_x:
        if not w.on_closure(x):
            raise DomainError(f"point {x} must lie in the closed wedge off the vertex")
    else:
        if not w.contains(x):
            raise DomainError(f"point {x} must lie inside the wedge")


def _correction_weight(gamma: float, alpha: float, beta: float):
    """Scaled angular weight of the boundary-correction integrand.

    ``[sinh(pi rho) cosh(rho (gamma-alpha-beta))
       - sinh((pi-gamma) rho) cosh((alpha-beta) rho)] / sinh(gamma rho)``
    times ``exp(-pi rho)``, assembled from falling exponentials only.  Below
    ``rho = 1e-4`` the two sinh ratios are replaced by their limits
    ``pi/gamma`` and ``(pi-gamma)/gamma``.
    """
    asum = abs(gamma - alpha - beta)
    d = abs(alpha - beta)
    gap = abs(math.pi - gamma)
    sgn = 1.0 if gamma <= math.pi else -1.0

    def weight(rho):
        rho = np.asarray(rho, dtype=float)
        out = np.empty(rho.shape, dtype=complex)
        small = rho < 1e-4
        if np.any(small):
            r = rho[small]
            damp = np.exp(-math.pi * r)
            out[small] = damp * (
                (math.pi / gamma) * np.cosh(r * (gamma - alpha - beta))
                - ((math.pi - gamma) / gamma) * np.cosh(r * (alpha - beta))
            )
        big = ~small
        if np.any(big):
            r = rho[big]
            den = -np.expm1(-2.0 * gamma * r)
            t1 = -np.expm1(-2.0 * math.pi * r) / den * 0.5 * (
                np.exp((asum - gamma) * r) + np.exp(-(asum + gamma) * r)
            )
            t2 = sgn * (-np.expm1(-2.0 * gap * r)) / den * 0.5 * (
                np.exp((gap + d - math.pi - gamma) * r)
                + np.exp((gap - d - math.pi - gamma) * r)
            )
            out[big] = t1 - t2
        return out

    decay = gamma - asum  # = min(alpha+beta, 2 gamma - alpha - beta)
    return weight, decay


def h_quarter(x: PolarPoint, y: PolarPoint, s, w: WedgeSpec,
              cfg: QuadratureConfig = DEFAULT_CONFIG) -> complex:
    """Boundary-correction term of the wedge: the bounded solution of the
    shifted resolvent equation matching the plane's Green's function on the
    wedge sides.  ``x`` may lie on the closed wedge (off the vertex)."""
    _validate_wedge_pair(x, y, w, allow_boundary_x=True)
    nu = spectral_degree(s)
    weight, decay = _correction_weight(w.gamma, x.alpha, y.alpha)
    val, _ = transform_axis_integral(
        nu, math.cosh(x.a), math.cosh(y.a), weight, cfg, exp_decay_rate=decay)
    return val / math.pi ** 2


def wedge_primary_kernel(gamma: float, alpha: float, beta: float) -> MeromorphicKernel:
    """The single-ladder kernel ``cos(s (gamma-alpha-beta)) / sin(gamma s)``
    behind the first residue series of the boundary correction."""
    gamma, alpha, beta = float(gamma), float(alpha), float(beta)
    asum = gamma - alpha - beta
    step = math.pi / gamma
    if abs(asum) >= gamma:
        raise DomainError("angles must satisfy 0 < alpha + beta < 2 gamma")

    def g(u):
        return cmath.cos(u * asum) / cmath.sin(gamma * u)

    def residue(p):
        p = float(p.real if isinstance(p, complex) else p)
        k = round(p / step)
        return (-1.0) ** k * math.cos(p * asum) / gamma

    def weight(rho):
        rho = np.asarray(rho, dtype=float)
        out = np.full(rho.shape, complex(1.0 / gamma), dtype=complex)
        nz = rho > 1e-4
        r = rho[nz]
        out[nz] = (-np.expm1(-2.0 * math.pi * r)) / (-np.expm1(-2.0 * gamma * r)) \
            * 0.5 * (np.exp((abs(asum) - gamma) * r) + np.exp(-(abs(asum) + gamma) * r)) \
            / math.pi
        small = ~nz
        if np.any(small):
            rs = rho[small]
            out[small] = np.exp(-math.pi * rs) * np.cosh(rs * asum) / gamma
        return out

    return MeromorphicKernel(
        name=f"wedge-primary(gamma={gamma:g})",
        eval_fn=g,
        poles_in=lambda radius: [step * k for k in
                                 range(1, int(math.floor(radius / step)) + 1)],
        residue=residue,
        residue_at_zero=1.0 / gamma,
        decay_class="I",
        axis_weight_scaled=weight,
        exp_decay_rate=gamma - abs(asum),
        residue_bound=1.0 / gamma,
        ladder_gap=step,
    )


def h_quarter_series(x: PolarPoint, y: PolarPoint, s, w: WedgeSpec,
                     pole_radius: float | None = None) -> complex:
    """Boundary-correction term as the difference of two residue series.

    Valid in the proven regime ``x.a < y.a``.  The second series is empty at
    a straight wedge angle; pole-ladder collisions (wedge angle a low-order
    rational multiple of pi) are rejected by the kernel constructor.
    """
    _validate_wedge_pair(x, y, w, allow_boundary_x=True)
    if not (x.a < y.a):
        raise DomainError(
            f"residue series proven for x.a < y.a, got {x.a} >= {y.a}"
        )
    nu = spectral_degree(s)
    z = math.cosh(y.a)
    om = math.cosh(x.a)
    k1 = wedge_primary_kernel(w.gamma, x.alpha, y.alpha)
    v1, _ = transform_rhs(TransformRequest(k1, nu, z, om), pole_radius)
    k2 = wedge_difference_kernel(w.gamma, x.alpha, y.alpha)
    v2, _ = transform_rhs(TransformRequest(k2, nu, z, om), pole_radius)
    return 0.5 * (v1 - v2)


def green_wedge(x: PolarPoint, y: PolarPoint, s, w: WedgeSpec,
                cfg: QuadratureConfig = DEFAULT_CONFIG,
                method: str = "fused") -> complex:
    """Shifted Dirichlet Green's function of the wedge.

    The primary route fuses the plane term and the boundary correction into
    a single order integral whose angular weight vanishes at order zero,
    cancelling the growth that makes the two pieces individually delicate;
    ``method='subtract'`` evaluates them separately as a cross-check oracle.
    """
    _validate_wedge_pair(x, y, w, allow_boundary_x=True)
    if x.a == y.a and x.alpha == y.alpha:
        raise DomainError("coincident points: the Green's function diverges")
    if method == "subtract":
        return green_plane(hyperbolic_distance(x, y), s) - h_quarter(x, y, s, w, cfg)
    if method != "fused":
        raise DomainError(f"unknown method {method!r}")
    nu = spectral_degree(s)
    d_angle = abs(x.alpha - y.alpha)
    w_plane = _plane_weight(d_angle)
    w_corr, decay_corr = _correction_weight(w.gamma, x.alpha, y.alpha)

    def weight(rho):
        return w_plane(rho) - w_corr(rho)

    decay = min(d_angle, 2.0 * math.pi - d_angle, decay_corr)
    val, _ = transform_axis_integral(
        nu, math.cosh(x.a), math.cosh(y.a), weight, cfg,
        exp_decay_rate=decay if decay >= 0.05 else 0.0)
    return val / math.pi ** 2


def heat_wedge(x: PolarPoint, y: PolarPoint, t: float, w: WedgeSpec,
               inv_cfg: LaplaceInversionConfig = DEFAULT_INVERSION,
               cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Dirichlet heat kernel of the wedge at time ``t``.

    The plane's kernel minus the inverse Laplace transform of the boundary
    correction; the correction is analytic off ``(-inf, 0]``, so the
    cotangent contour applies.  Coincident points are allowed.  The node
    count is validated by re-running at half resolution and doubling once
    on disagreement.
    """
    _validate_wedge_pair(x, y, w, allow_boundary_x=False)
    t = float(t)
    if t <= 0:
        raise DomainError(f"time must be positive, got {t}")
    # the contour sum amplifies transform noise by exp(0.3 * node_count);
    # the inner quadrature tolerance only needs to stay below that margin
    floor = 1e-11 if inv_cfg.node_count >= 32 else 1e-9
    quad_cfg = replace(cfg, rel_tol=min(cfg.rel_tol, floor))

    def transform(s):
        return h_quarter(x, y, s, w, quad_cfg)

    full = invert_laplace(transform, t, inv_cfg)
    half_cfg = LaplaceInversionConfig(
        node_count=max(8, (inv_cfg.node_count // 4) * 2),
        contour_scale=inv_cfg.contour_scale)
    half = invert_laplace(transform, t, half_cfg)
    if abs(full - half) > 1e-6:
        dbl_cfg = LaplaceInversionConfig(node_count=2 * inv_cfg.node_count,
                                         contour_scale=inv_cfg.contour_scale)
        full = invert_laplace(transform, t, dbl_cfg)
    d = hyperbolic_distance(x, y)
    return heat_plane(d, t, cfg) - math.exp(-0.25 * t) * full


def pde_residual(field, x0: PolarPoint, s, step: float = 1e-3) -> float:
    """Central-difference residual of the shifted resolvent operator.

    Applies ``(s - 1/4) - [radial + angular Laplace-Beltrami part]`` to
    ``field`` at ``x0``; fields annihilated by the shifted operator give
    residuals at the level of the step error plus quadrature noise.  The
    constant field returns exactly ``|s - 1/4|``.
    """
    h = float(step)
    if h <= 0 or x0.a - h <= 0:
        raise DomainError("step must be positive and smaller than the radius")
    s = complex(s)
    u0 = complex(field(x0))
    up = complex(field(PolarPoint(x0.a + h, x0.alpha)))
    um = complex(field(PolarPoint(x0.a - h, x0.alpha)))
    vp = complex(field(PolarPoint(x0.a, x0.alpha + h)))
    vm = complex(field(PolarPoint(x0.a, x0.alpha - h)))
    u_a = (up - um) / (2.0 * h)
    u_aa = (up - 2.0 * u0 + um) / (h * h)
    u_bb = (vp - 2.0 * u0 + vm) / (h * h)
    lap = u_aa + u_a / math.tanh(x0.a) + u_bb / math.sinh(x0.a) ** 2
    return abs((s - 0.25) * u0 - lap)
