"""Numerical inverse Laplace transform on the fixed Talbot contour.

Applicable to transforms analytic on the complex plane cut along
``(-inf, 0]`` and real valued on the positive reals, which is exactly the
situation of the wedge boundary-correction term.  The contour is the
classic cotangent spiral; with ``M`` nodes the method delivers roughly
``0.6 M`` significant digits in exact arithmetic, degraded by ``exp(r t)``
times the noise level of the transform values.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .scalars import DomainError

__all__ = ["LaplaceInversionConfig", "invert_laplace", "talbot_nodes"]


@dataclass(frozen=True)
class LaplaceInversionConfig:
    node_count: int = 48
    #: dimensionless product r*t of the contour base point with time;
    #: None selects 0.3*M, trading a little of the textbook truncation
    #: rate for a much smaller exp(r t) roundoff amplification
    contour_scale: float | None = None

    def __post_init__(self):
        if self.node_count < 8 or self.node_count % 2:
            raise DomainError("node_count must be even and at least 8")
        if self.contour_scale is not None and self.contour_scale <= 0:
            raise DomainError("contour_scale must be positive")


DEFAULT_INVERSION = LaplaceInversionConfig()


def talbot_nodes(t: float, cfg: LaplaceInversionConfig = DEFAULT_INVERSION):
    """Contour points ``s_k`` where the transform will be evaluated."""
    m = cfg.node_count
    r = (cfg.contour_scale if cfg.contour_scale is not None else 0.3 * m) / t
    nodes = [complex(r, 0.0)]
    for k in range(1, m):
        theta = k * math.pi / m
        cot = 1.0 / math.tan(theta)
        nodes.append(r * theta * complex(cot, 1.0))
    return nodes


def invert_laplace(transform, t: float,
                   cfg: LaplaceInversionConfig = DEFAULT_INVERSION) -> float:
    """Evaluate the inverse Laplace transform of ``transform`` at time ``t``.

    ``transform`` maps complex ``s`` (off ``(-inf, 0]``) to complex values
    and must be real on the positive real axis so the inverse is real.
    Non-finite transform values at deep contour nodes (which carry
    exponentially small weight) are treated as zero.
    """
    if t <= 0:
        raise DomainError(f"inversion time must be positive, got {t}")
    m = cfg.node_count
    r = (cfg.contour_scale if cfg.contour_scale is not None else 0.3 * m) / t

    def safe_eval(s):
        try:
            v = complex(transform(s))
        except (ValueError, ArithmeticError, RuntimeError):
            return 0.0 + 0.0j
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            return 0.0 + 0.0j
        return v

    acc = 0.5 * math.exp(r * t) * safe_eval(complex(r, 0.0))
    total = acc.real
    for k in range(1, m):
        theta = k * math.pi / m
        cot = 1.0 / math.tan(theta)
        s = r * theta * complex(cot, 1.0)
        if t * s.real < -55.0:
            # the node weight exp(t s) is far below double precision of the
            # final sum; skip the transform evaluation entirely
            continue
        sigma = theta + (theta * cot - 1.0) * cot
        term = cmath.exp(t * s) * safe_eval(s) * complex(1.0, sigma)
        total += term.real
    return (r / m) * total
