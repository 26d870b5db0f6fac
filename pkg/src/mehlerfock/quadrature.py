"""Numeric integration engine.

Adaptive panel integration with a nested Clenshaw-Curtis rule (vectorized
integrands, complex values), a tanh-sinh rule for integrands with algebraic
endpoint behaviour, truncated integration of exponentially decaying
semi-infinite integrals, and cycle-summed evaluation of conditionally
convergent oscillatory tails with nonlinear sequence acceleration.

Integrands are callables ``f(x: ndarray) -> ndarray`` (complex allowed) and
must be reentrant; panel evaluation order is deterministic.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, replace

import numpy as np

from .scalars import ConvergenceError, DomainError

__all__ = [
    "QuadratureConfig",
    "integrate_finite",
    "integrate_tanh_sinh",
    "integrate_endpoint_singular",
    "integrate_semi_infinite_decaying",
    "integrate_oscillatory_tail",
    "wynn_epsilon",
    "iterated_average",
]


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_subdivisions: int = 2000
    #: analytic decay constant for semi-infinite tails, per call
    tail_decay_rate: float | None = None

    def __post_init__(self):
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise DomainError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be at least 1")


DEFAULT_CONFIG = QuadratureConfig()


def _clenshaw_curtis(n: int):
    """Nodes and weights of the (n+1)-point Clenshaw-Curtis rule on [-1, 1]."""
    theta = np.arange(n + 1) * math.pi / n
    x = np.cos(theta)
    w = np.zeros(n + 1)
    v = np.ones(n - 1)
    for k in range(1, n // 2):
        v -= 2.0 * np.cos(2.0 * k * theta[1:-1]) / (4.0 * k * k - 1.0)
    v -= np.cos(n * theta[1:-1]) / (n * n - 1.0)
    w[1:-1] = 2.0 * v / n
    w[0] = w[-1] = 1.0 / (n * n - 1.0)
    return x, w


_CC_N = 32
_CC_X, _CC_W_FINE = _clenshaw_curtis(_CC_N)
_CC_W_COARSE = _clenshaw_curtis(_CC_N // 2)[1]  # lives on the even-index subset


def _panel_estimates(f, a: float, b: float):
    """Fine and embedded coarse estimates over one panel, one f call."""
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    x = mid + half * _CC_X
    y = np.asarray(f(x))
    fine = half * np.sum(_CC_W_FINE * y)
    coarse = half * np.sum(_CC_W_COARSE * y[::2])
    return fine, abs(fine - coarse)


def integrate_finite(f, a: float, b: float, cfg: QuadratureConfig = DEFAULT_CONFIG,
                     seed_panels: int = 1):
    """Adaptive integral of ``f`` over ``[a, b]``.

    Returns ``(value, err_est)``.  Panels with the largest error estimate are
    bisected first; raises ConvergenceError if the subdivision budget runs
    out before ``max(rel_tol*|I|, abs_tol)`` is met, carrying the best
    estimate in the exception args.
    """
    if not (a < b):
        raise DomainError(f"integration bounds must satisfy a < b, got [{a}, {b}]")
    edges = np.linspace(a, b, seed_panels + 1)
    heap = []
    total = 0.0 + 0.0j
    total_err = 0.0
    for i, (lo, hi) in enumerate(zip(edges[:-1], edges[1:])):
        val, err = _panel_estimates(f, lo, hi)
        total += val
        total_err += err
        heapq.heappush(heap, (-err, i, lo, hi, val, err))
    count = seed_panels
    serial = seed_panels
    while total_err > max(cfg.abs_tol, cfg.rel_tol * abs(total)):
        if count >= cfg.max_subdivisions:
            raise ConvergenceError(
                f"subdivision limit {cfg.max_subdivisions} reached; "
                f"best estimate {total} with error {total_err:.3g}",
                total,
                total_err,
            )
        _, _, lo, hi, val, err = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        v1, e1 = _panel_estimates(f, lo, mid)
        v2, e2 = _panel_estimates(f, mid, hi)
        total += v1 + v2 - val
        total_err += e1 + e2 - err
        total_err = max(total_err, 0.0)
        serial += 1
        heapq.heappush(heap, (-e1, serial, lo, mid, v1, e1))
        serial += 1
        heapq.heappush(heap, (-e2, serial, mid, hi, v2, e2))
        count += 1
    return total, total_err


def integrate_tanh_sinh(f, a: float, b: float, cfg: QuadratureConfig = DEFAULT_CONFIG,
                        max_level: int = 10):
    """Tanh-sinh (double-exponential) integral of ``f`` over ``(a, b)``.

    Converges at machine precision for integrands analytic inside the
    interval, including algebraic endpoint singularities ``(x-a)^s`` with
    ``s > -1``.  Nodes never touch the endpoints.
    """
    if not (a < b):
        raise DomainError(f"integration bounds must satisfy a < b, got [{a}, {b}]")
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    u_max = 4.0

    def weighted_sum(u):
        t = 0.5 * math.pi * np.sinh(u)
        sech = 1.0 / np.cosh(t)
        x = mid + half * np.tanh(t)
        w = half * 0.5 * math.pi * np.cosh(u) * sech * sech
        keep = (x > a) & (x < b) & (w > 1e-300)
        if not np.any(keep):
            return 0.0 + 0.0j
        return complex(np.sum(w[keep] * np.asarray(f(x[keep]))))

    h = 1.0
    kmax = math.ceil(u_max)
    val = h * weighted_sum(np.arange(-kmax, kmax + 1) * h)
    for _ in range(max_level):
        h *= 0.5
        kmax = math.ceil(u_max / h)
        ks = np.arange(-kmax, kmax + 1)
        odd = ks[ks % 2 != 0]
        new = 0.5 * val + h * weighted_sum(odd * h)
        err = abs(new - val)
        val = new
        if err <= max(cfg.abs_tol, cfg.rel_tol * abs(val)):
            return val, err
    raise ConvergenceError(f"tanh-sinh rule stalled at error {err:.3g}", val, err)


def integrate_endpoint_singular(f, a: float, b: float, exponent: float,
                                which_end: str = "a",
                                cfg: QuadratureConfig = DEFAULT_CONFIG):
    """Integral of ``f`` behaving like ``(x-end)^exponent`` at one endpoint.

    The power substitution ``x = end -/+ u**2`` removes a square-root-type
    blowup exactly; the transformed integral is finished with the tanh-sinh
    rule so any leftover fractional power is still handled.  ``exponent``
    must exceed -1.
    """
    if exponent <= -1.0:
        raise DomainError(f"endpoint exponent must exceed -1, got {exponent}")
    if which_end not in ("a", "b"):
        raise DomainError("which_end must be 'a' or 'b'")
    if b - a <= 0:
        raise DomainError(f"integration bounds must satisfy a < b, got [{a}, {b}]")
    root = math.sqrt(b - a)
    end = a if which_end == "a" else b
    sign = 1.0 if which_end == "a" else -1.0
    g = lambda u: 2.0 * u * np.asarray(f(end + sign * u * u))
    # close to a nonzero endpoint, `end + sign*u*u` collapses onto the
    # endpoint in floating point; stay above the collapse scale and add the
    # remaining strip back from a two-point local power-law fit
    u_min = min((np.finfo(float).eps * max(1.0, abs(end))) ** 0.25, 0.05 * root)
    val, err = integrate_tanh_sinh(g, u_min, root, cfg)
    d1 = u_min ** 2
    d2 = 4.0 * d1
    f1, f2 = np.asarray(f(np.array([end + sign * d1, end + sign * d2])))
    a1 = complex(f1) * d1 ** (-exponent)
    a2 = complex(f2) * d2 ** (-exponent)
    coeff = (4.0 * a1 - a2) / 3.0
    slope = (a2 - a1) / (d2 - d1)
    strip = (coeff * u_min ** (2.0 * exponent + 2.0) / (exponent + 1.0)
             + slope * u_min ** (2.0 * exponent + 4.0) / (exponent + 2.0))
    return val + strip, err + abs(strip) * 1e-6


def integrate_semi_infinite_decaying(f, decay_rate: float,
                                     cfg: QuadratureConfig = DEFAULT_CONFIG,
                                     start: float = 0.0):
    """Integral of ``f`` over ``[start, inf)`` for an eventually exponentially
    decaying integrand ``|f(x)| <= M exp(-decay_rate * (x - start))``.

    ``M`` is estimated by probing the integrand, the tail is truncated where
    the analytic bound ``M exp(-decay_rate R)/decay_rate`` falls below
    ``abs_tol``, and the remainder is integrated adaptively.
    """
    if decay_rate <= 0:
        raise DomainError(f"decay rate must be positive, got {decay_rate}")
    unit = 1.0 / decay_rate
    probes = start + unit * np.array([0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 24.0, 32.0])
    mags = np.abs(np.asarray(f(probes)))
    m_est = float(np.max(mags * np.exp(decay_rate * (probes - start))))
    if m_est == 0.0:
        m_est = 1.0
    # extend the frontier while the sampled envelope keeps growing (humps)
    frontier = float(probes[-1])
    for _ in range(10):
        nxt = frontier + 8.0 * unit
        mag = float(np.abs(np.asarray(f(np.array([nxt]))))[0])
        grown = mag * math.exp(decay_rate * (nxt - start))
        if grown <= m_est:
            break
        m_est = grown
        frontier = nxt
    target = max(cfg.abs_tol, 1e-16)
    r_end = start + max(
        (math.log(max(m_est, 1e-300) / (target * decay_rate))) / decay_rate,
        4.0 * unit,
    )
    r_end = max(r_end, frontier + 4.0 * unit)
    seed = max(4, min(160, int(math.ceil((r_end - start) * decay_rate / 2.0))))
    val, err = integrate_finite(f, start, r_end, cfg, seed_panels=seed)
    tail_bound = m_est * math.exp(-decay_rate * (r_end - start)) / decay_rate
    return val, err + tail_bound


def wynn_epsilon(partial_sums):
    """Wynn epsilon acceleration of a sequence of partial sums.

    Returns ``(limit, err_est)``.  The table is scanned along its even
    columns and the entry whose column-to-column change is smallest wins,
    which keeps deep-column roundoff blowup from being mistaken for
    convergence.  Exact for sums of finitely many geometric modes, which is
    what cycle-summed oscillatory tails look like.
    """
    s = [complex(v) for v in partial_sums]
    n = len(s)
    if n < 3:
        return s[-1], abs(s[-1] - s[0]) if n > 1 else math.inf
    eps_prev = [0.0 + 0.0j] * (n + 1)  # column -1
    eps_curr = list(s)                 # column 0
    best = s[-1]
    best_err = abs(s[-1] - s[-2])
    last_even = s[-1]
    col = 0
    while len(eps_curr) > 1:
        eps_next = []
        broke = False
        for j in range(len(eps_curr) - 1):
            diff = eps_curr[j + 1] - eps_curr[j]
            if diff == 0 or not np.isfinite(abs(diff)):
                broke = True
                break
            eps_next.append(eps_prev[j + 1] + 1.0 / diff)
        if broke or not eps_next:
            break
        eps_prev, eps_curr = eps_curr, eps_next
        col += 1
        if col % 2 == 0:
            change = abs(eps_curr[-1] - last_even)
            if change < best_err:
                best = eps_curr[-1]
                best_err = change
            last_even = eps_curr[-1]
    return best, best_err


def _integrate_finite_best(f, a: float, b: float, cfg: QuadratureConfig,
                           seed_panels: int = 1):
    """Like integrate_finite but returns the best estimate instead of
    raising when the subdivision budget runs out; for cycle integrals whose
    own tolerance is far below what the caller needs."""
    try:
        return integrate_finite(f, a, b, cfg, seed_panels)
    except ConvergenceError as exc:
        if len(exc.args) >= 3:
            return exc.args[1], exc.args[2]
        raise


def iterated_average(partial_sums, passes: int = 3):
    """Repeated pairwise averaging of partial sums (Euler-transform style)."""
    w = np.asarray(partial_sums, dtype=complex)
    for _ in range(passes):
        if w.size < 2:
            break
        w = 0.5 * (w[1:] + w[:-1])
    return complex(w[-1])


def _modal_tail(f, start: float, frequencies, cfg: QuadratureConfig,
                max_cycles: int, inverse_powers: int = 6):
    """Tail of a multi-frequency oscillatory integrand with known modes.

    Partial sums are collected at checkpoints spaced by the slowest
    half-period; the remainder is then modelled as
    ``sum_j exp(+-i k_j x) * (polynomial in 1/x)`` and the limit extracted
    by least squares.  The model is exact up to the asymptotic order kept,
    so slow beat modes that defeat plain sequence acceleration are captured.
    """
    ks = sorted(float(k) for k in frequencies)
    if ks[0] <= 0:
        raise DomainError(f"mode frequencies must be positive, got {frequencies}")
    if ks[0] < 0.02:
        raise ConvergenceError(
            f"slowest oscillation frequency {ks[0]:.3g} too small; "
            "the integral is too close to its divergent configuration"
        )
    h = math.pi / ks[0]
    # cycle integrals need only to sit below the final fit tolerance, and
    # integrand noise makes anything below ~1e-15 unreachable anyway; a
    # tight subdivision cap keeps a noisy cycle from burning the budget
    inner = replace(cfg, rel_tol=min(cfg.rel_tol, 1e-12),
                    abs_tol=max(cfg.abs_tol, 1e-15), max_subdivisions=48)
    n_min = max(26, 4 * inverse_powers + 2)
    # seed each cycle densely enough for the fastest mode so the adaptive
    # pass rarely needs to bisect
    seed = max(2, int(math.ceil(1.2 * ks[-1] / ks[0])) + 1)

    def fit(xs, sums, powers):
        cols = [np.ones(len(xs), dtype=complex)]
        for k in ks:
            for sgn in (1.0, -1.0):
                phase = np.exp(1j * sgn * k * xs)
                for m in range(1, powers + 1):
                    cols.append(phase * xs ** (-float(m)))
        mat = np.array(cols).T
        scale = np.abs(mat).max(axis=0)
        coef, *_ = np.linalg.lstsq(mat / scale, sums, rcond=None)
        return coef[0] / scale[0]

    xs, sums = [], []
    acc = 0.0 + 0.0j
    cycle_err = 0.0
    lo = start
    prev_fit = None
    for n in range(max(max_cycles, n_min + 8)):
        val, err = _integrate_finite_best(f, lo, lo + h, inner, seed_panels=seed)
        acc += val
        cycle_err += err
        lo += h
        xs.append(lo)
        sums.append(acc)
        if len(xs) >= n_min and (len(xs) - n_min) % 4 == 0:
            xa, sa = np.array(xs), np.array(sums)
            cur = fit(xa, sa, inverse_powers)
            if prev_fit is not None:
                drift = abs(cur - prev_fit)
                if drift <= max(cfg.abs_tol, cfg.rel_tol * abs(cur)):
                    order_gap = abs(cur - fit(xa, sa, inverse_powers - 2))
                    return cur, cycle_err + max(10.0 * drift, order_gap)
            prev_fit = cur
    raise ConvergenceError(
        "oscillatory tail model fit failed to stabilize", prev_fit, math.inf
    )


def integrate_oscillatory_tail(f, envelope_decay: float, period_hint: float,
                               cfg: QuadratureConfig = DEFAULT_CONFIG,
                               start: float = 0.0, max_cycles: int = 160,
                               secondary_period: float | None = None,
                               frequencies=None):
    """Integral of an oscillatory ``f`` over ``[start, inf)``.

    ``f`` must eventually look like ``(bounded oscillation) / x^p`` with
    ``p >= 1`` (conditional convergence), possibly with an extra exponential
    envelope.  The tail is summed cycle by cycle and the partial sums are
    accelerated with the epsilon algorithm until two window choices agree to
    tolerance.  ``period_hint`` should be the sign-flip length of the
    fastest oscillation (half its full period): sampling partial sums at
    full periods parks every checkpoint on the same oscillation phase and
    leaves nothing for the acceleration to work with.  When the integrand
    carries a second, slower oscillation (beat frequency of a cosine
    product), pass its full period as ``secondary_period`` so enough of the
    slow phase is covered before convergence is trusted.  When the exact
    mode frequencies are known analytically, pass them as ``frequencies``:
    the tail is then extrapolated through a least-squares mode fit, which is
    far more accurate than blind acceleration for slow beat modes.  Raises
    ConvergenceError when the cycle budget runs out, which is the signature
    of a genuinely divergent tail (equal oscillation frequencies).
    """
    if period_hint <= 0:
        raise DomainError(f"period hint must be positive, got {period_hint}")
    if envelope_decay < 0:
        raise DomainError("envelope decay must be non-negative")
    if frequencies is not None:
        return _modal_tail(f, start, frequencies, cfg, max_cycles)
    inner = replace(cfg, rel_tol=min(cfg.rel_tol, 1e-12),
                    abs_tol=max(cfg.abs_tol, 1e-15), max_subdivisions=64)
    sums = []
    acc = 0.0 + 0.0j
    cycle_err = 0.0
    min_cycles = 10
    if secondary_period is not None and secondary_period > 0:
        min_cycles = max(min_cycles,
                         int(math.ceil(3.0 * secondary_period / period_hint)))
        max_cycles = max(max_cycles, min_cycles + 60)
    lo = start
    for _ in range(max_cycles):
        hi = lo + period_hint
        val, err = _integrate_finite_best(f, lo, hi, inner, seed_panels=2)
        acc += val
        cycle_err += err
        sums.append(acc)
        lo = hi
        if envelope_decay > 0 and len(sums) >= min_cycles and \
                abs(val) < max(cfg.abs_tol, cfg.rel_tol * abs(acc)):
            return acc, cycle_err + 5.0 * abs(val)
        if len(sums) >= min_cycles:
            est, est_err = wynn_epsilon(sums[-min(len(sums), 42):])
            tol = max(cfg.abs_tol, cfg.rel_tol * abs(est))
            if est_err <= tol:
                est2, _ = wynn_epsilon(sums[-min(len(sums), 33):])
                if abs(est - est2) <= 20 * tol:
                    return est, est_err + cycle_err + abs(est - est2)
    raise ConvergenceError(
        "oscillatory tail failed to converge within the cycle budget "
        "(divergent integrals, e.g. equal oscillation frequencies, end up here)",
        acc,
        cycle_err,
    )
