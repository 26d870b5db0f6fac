"""Principal-branch complex arithmetic, gamma-family helpers and the
regularized Gauss hypergeometric function.

Everything is double precision.  The branch convention throughout the
package is the standard one: ``arg(z)`` in ``(-pi, pi]`` and the cut of
``log`` and of non-integer powers along ``(-inf, 0]``.  The regularized
hypergeometric function ``F(a, b; c; z) / Gamma(c)`` is entire in all three
parameters, which is what keeps the Legendre functions of the second kind
usable when parameter combinations drift through integer values.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
import scipy.special as sc

__all__ = [
    "DomainError",
    "PoleError",
    "ConvergenceError",
    "principal_log",
    "principal_pow",
    "gamma",
    "loggamma",
    "rgamma",
    "pochhammer",
    "gamma_ratio_asymptotic",
    "hyp2f1_regularized",
]


class DomainError(ValueError):
    """Argument lies on a branch cut or outside a function's domain."""


class PoleError(ValueError):
    """Evaluation requested at (or indistinguishably close to) a pole."""


class ConvergenceError(RuntimeError):
    """An iterative scheme failed to reach the requested tolerance."""


#: terms this small relative to the partial sum count as dead
SERIES_TERM_EPS = 1e-17
#: dead terms in a row required before a series sum is accepted; guards
#: against stopping at an isolated zero term produced by a Pochhammer factor
SERIES_DEAD_RUN = 3
SERIES_MAX_TERMS = 10_000

_INT_TOL = 1e-12


def _is_nonpositive_integer(z: complex, tol: float = _INT_TOL) -> bool:
    z = complex(z)
    if abs(z.imag) > tol:
        return False
    r = round(z.real)
    return r <= 0 and abs(z.real - r) <= tol


def principal_log(z) -> complex:
    """Principal branch of log, defined off the cut ``(-inf, 0]``."""
    z = complex(z)
    if z == 0 or (z.imag == 0 and z.real < 0):
        raise DomainError(f"log argument {z} lies on the cut (-inf, 0]")
    return cmath.log(z)


def principal_pow(z, mu) -> complex:
    """Principal power ``z**mu = exp(mu * log z)``, cut along ``(-inf, 0]``."""
    mu = complex(mu)
    z = complex(z)
    if z == 0 or (z.imag == 0 and z.real < 0):
        raise DomainError(f"power base {z} lies on the cut (-inf, 0]")
    if mu == 0:
        return 1.0 + 0.0j
    return cmath.exp(mu * cmath.log(z))


def gamma(z) -> complex:
    """Gamma function for complex argument; raises at the poles."""
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"gamma pole at {z}")
    return complex(sc.gamma(z))


def loggamma(z) -> complex:
    """Principal branch of log-gamma; raises at the poles."""
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"gamma pole at {z}")
    return complex(sc.loggamma(z))


def rgamma(z) -> complex:
    """Entire reciprocal gamma ``1/Gamma``; zero at non-positive integers."""
    return complex(sc.rgamma(complex(z)))


def pochhammer(z, k: int) -> complex:
    """Rising factorial ``(z)_k = z (z+1) ... (z+k-1)`` with ``(z)_0 = 1``."""
    if k != int(k) or k < 0:
        raise DomainError(f"pochhammer index must be a non-negative integer, got {k}")
    z = complex(z)
    out = 1.0 + 0.0j
    for j in range(int(k)):
        out *= z + j
    return out


def gamma_ratio_asymptotic(z, alpha, beta) -> complex:
    """Leading large-``z`` behaviour ``z**(alpha-beta)`` of Gamma(z+alpha)/Gamma(z+beta).

    Valid away from the negative real axis (``|arg z| <= pi - eps``).
    """
    z = complex(z)
    if z == 0:
        raise DomainError("gamma ratio asymptotic undefined at z = 0")
    if abs(math.pi - abs(cmath.phase(z))) < 1e-6:
        raise DomainError(f"argument {z} too close to the negative real axis")
    return principal_pow(z, complex(alpha) - complex(beta))


# ----------------------------------------------------------------------------
# regularized 2F1
# ----------------------------------------------------------------------------


def _reg_series(a, b, c: complex, x: complex, max_terms: int = SERIES_MAX_TERMS,
                regularized: bool = True):
    """Direct regularized series  sum_k (a)_k (b)_k x^k / (Gamma(c+k) k!).

    Vectorized over ``a`` and ``b`` (broadcast against each other); ``c`` and
    ``x`` are scalars.  ``c`` may be any complex number including
    non-positive integers: the leading terms killed by 1/Gamma are skipped
    exactly, so the sum stays the entire continuation in ``c``.

    With ``regularized=False`` the plain series (1/Gamma(c) pulled out) is
    summed instead, for callers that fold Gamma(c) into a log prefactor
    because it would overflow on its own; ``c`` must then stay away from the
    non-positive integers.
    """
    a = np.atleast_1d(np.asarray(a, dtype=complex))
    b = np.atleast_1d(np.asarray(b, dtype=complex))
    a, b = np.broadcast_arrays(a, b)
    c = complex(c)
    x = complex(x)

    k0 = 0
    if _is_nonpositive_integer(c, tol=0.0):
        if not regularized:
            raise PoleError(f"plain hypergeometric series undefined at c = {c}")
        k0 = int(1 - round(c.real))

    if k0:
        # first surviving term, built factor by factor to stay in range
        t = np.ones(a.shape, dtype=complex)
        for j in range(k0):
            t = t * (a + j) * (b + j) * x / (j + 1)
        # Gamma(c + k0) = Gamma(1) = 1
    elif regularized:
        t = np.full(a.shape, complex(sc.rgamma(c)), dtype=complex)
    else:
        t = np.ones(a.shape, dtype=complex)

    s = t.copy()
    k = k0
    # terms come in chunks of four with one vectorized check per chunk: a
    # fully dead chunk certifies more than the required run of dead terms,
    # so an isolated zero term from a Pochhammer factor cannot stop the sum
    while k < max_terms:
        chunk_dead = True
        for _ in range(4):
            t = t * (a + k) * (b + k) * x / ((k + 1) * (c + k))
            k += 1
            s = s + t
            if chunk_dead:
                tm = np.abs(t)
                chunk_dead = bool(
                    np.all(tm <= SERIES_TERM_EPS * np.maximum(np.abs(s), 1e-300))
                )
        if chunk_dead:
            if not np.all(np.isfinite(s)):
                raise ConvergenceError("hypergeometric series overflowed")
            return s
        if k % 64 == 0 and not np.all(np.isfinite(np.abs(t))):
            raise ConvergenceError("hypergeometric series overflowed")
    raise ConvergenceError(
        f"hypergeometric series did not converge within {max_terms} terms (|x|={abs(x):.3g})"
    )


def _pfaff(a, b, c: complex, x: complex, max_terms: int, on_first: bool):
    """Single-term continuation z -> z/(z-1); no new parameter degeneracies."""
    u = x / (x - 1.0)
    w = 1.0 - x  # off (-inf, 0] whenever x is off [1, inf)
    if on_first:
        fac = np.exp(-np.asarray(a, dtype=complex) * cmath.log(w))
        return fac * _reg_series(a, c - np.asarray(b, complex), c, u, max_terms)
    fac = np.exp(-np.asarray(b, dtype=complex) * cmath.log(w))
    return fac * _reg_series(c - np.asarray(a, complex), b, c, u, max_terms)


def _sym_limit(f, eps: float = 1e-3):
    """Even-in-eps Richardson limit of f at 0 for f with a simple pole part.

    ``(f(e)+f(-e))/2`` cancels the pole and odd orders; one Richardson step
    removes the remaining O(e^2).
    """
    g1 = 0.5 * (f(eps) + f(-eps))
    g2 = 0.5 * (f(2 * eps) + f(-2 * eps))
    return (4.0 * g1 - g2) / 3.0


def _one_minus_arm(a: complex, b: complex, c: complex, x: complex, max_terms: int):
    """Two-term connection in 1-x; entire except for c-a-b at integers."""
    y = 1.0 - x

    def expr(eps: float):
        cc = c + eps
        w = cc - a - b
        left = complex(sc.rgamma(cc - a)) * complex(sc.rgamma(cc - b)) * complex(
            _reg_series(a, b, 1.0 - w, y, max_terms)[()]
        )
        right = (
            complex(sc.rgamma(a))
            * complex(sc.rgamma(b))
            * cmath.exp(w * cmath.log(y))
            * complex(_reg_series(cc - a, cc - b, 1.0 + w, y, max_terms)[()])
        )
        return math.pi / cmath.sin(math.pi * w) * (left - right)

    w0 = c - a - b
    if abs(w0 - round(w0.real)) > 1e-5 or abs(w0.imag) > 1e-5:
        return expr(0.0)
    return _sym_limit(expr)


def _inv_one_minus_arm(a: complex, b: complex, c: complex, x: complex, max_terms: int):
    """Two-term connection in 1/(1-x); entire except for b-a at integers."""
    y = 1.0 - x
    u = 1.0 / y

    def expr(eps: float):
        aa = a + eps
        d = b - aa
        left = (
            cmath.exp(-aa * cmath.log(y))
            * complex(sc.rgamma(b))
            * complex(sc.rgamma(c - aa))
            * complex(_reg_series(aa, c - b, 1.0 - d, u, max_terms)[()])
        )
        right = (
            cmath.exp(-b * cmath.log(y))
            * complex(sc.rgamma(aa))
            * complex(sc.rgamma(c - b))
            * complex(_reg_series(b, c - aa, 1.0 + d, u, max_terms)[()])
        )
        return math.pi / cmath.sin(math.pi * d) * (left - right)

    d0 = b - a
    if abs(d0 - round(d0.real)) > 1e-5 or abs(d0.imag) > 1e-5:
        return expr(0.0)
    return _sym_limit(expr)


def hyp2f1_regularized(a, b, c, z, *, max_terms: int = SERIES_MAX_TERMS):
    """Regularized Gauss hypergeometric function ``F(a, b; c; z) / Gamma(c)``.

    ``a`` and ``b`` may be numpy arrays (broadcast together) as long as the
    chosen continuation is single-term (direct series or a Pfaff map); with
    scalar parameters the full set of continuations is available.  ``z``
    must avoid the cut ``[1, inf)``.  Entire in ``c``; in particular finite
    for ``c`` at non-positive integers.
    """
    zc = complex(z)
    if zc.imag == 0.0 and zc.real >= 1.0:
        raise DomainError(f"hypergeometric argument {zc} lies on the cut [1, inf)")
    c = complex(c)

    vector = isinstance(a, np.ndarray) or isinstance(b, np.ndarray)
    m_direct = abs(zc)
    u = zc / (zc - 1.0)
    m_pfaff = abs(u)

    if vector:
        if m_direct <= 0.6 or (zc.imag == 0.0 and 0.0 < zc.real <= 0.95):
            return _reg_series(a, b, c, zc, max_terms)
        if m_pfaff <= 0.97:
            aa = np.max(np.abs(np.atleast_1d(np.asarray(a, complex))))
            bb = np.max(np.abs(np.atleast_1d(np.asarray(b, complex))))
            return _pfaff(a, b, c, zc, max_terms, on_first=aa <= bb)
        raise ConvergenceError(
            f"no vectorized continuation reaches argument {zc}"
        )

    a = complex(a)
    b = complex(b)
    # single-term continuations first: no connection coefficients, hence no
    # parameter degeneracies to take limits through
    if m_direct <= 0.6:
        return complex(_reg_series(a, b, c, zc, max_terms)[()])
    if m_pfaff <= 0.7:
        return complex(_pfaff(a, b, c, zc, max_terms, on_first=abs(a) <= abs(b))[()])
    if zc.imag == 0.0 and 0.0 < zc.real <= 0.95:
        return complex(_reg_series(a, b, c, zc, max_terms)[()])
    if m_pfaff <= 0.95:
        return complex(_pfaff(a, b, c, zc, max_terms, on_first=abs(a) <= abs(b))[()])
    if m_direct <= 0.95:
        return complex(_reg_series(a, b, c, zc, max_terms)[()])

    m_one = abs(1.0 - zc)
    m_inv = 1.0 / m_one if m_one > 0 else math.inf
    arms = [(m_one, "one_minus"), (m_inv, "inv_one_minus"),
            (m_pfaff, "pfaff"), (m_direct, "direct")]
    arms.sort()
    for mag, kind in arms:
        if mag > 0.97:
            continue
        if kind == "direct":
            return complex(_reg_series(a, b, c, zc, max_terms)[()])
        if kind == "pfaff":
            return complex(_pfaff(a, b, c, zc, max_terms, on_first=abs(a) <= abs(b))[()])
        if kind == "one_minus":
            return _one_minus_arm(a, b, c, zc, max_terms)
        return _inv_one_minus_arm(a, b, c, zc, max_terms)
    raise ConvergenceError(f"no continuation path reaches argument {zc}")
