"""Inverse-CDF generation of new families: G(y) = H(F(y)).

A *base* law F is reshaped by a *generator* T on (0, 1): the generated variable
is ``Y = F^{-1}(T)`` with CDF ``H(F(y))`` and density ``h(F(y)) f(y)``.  This
module holds the three containers and the generic numerics (quantiles by
bisection, moments by quadrature, sampling) that work for any composition.
"""

from __future__ import annotations

import math
import warnings
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate

from .errors import ConvergenceError, DomainError
from .specfun import RealInterval
from .streams import make_rng, open_uniforms

__all__ = [
    "GeneratorDistribution",
    "UnivariateDistribution",
    "GeneratedDistribution",
    "MixtureWeights",
    "compose",
    "mix_generators",
    "sample_inverse",
    "numeric_quantile",
    "numeric_moment",
    "numeric_expectation",
    "ks_statistic",
    "bisect_cdf",
]

ArrayFn = Callable[[np.ndarray], np.ndarray]

_T_LO = 1e-300
_T_HI = math.nextafter(1.0, 0.0)
_LOG_TAIL_MAX = 600.0
UNIT_INTERVAL = RealInterval(0.0, 1.0)
REAL_LINE = RealInterval(-math.inf, math.inf)


def _unwrap(out: np.ndarray):
    return out[()] if out.ndim == 0 else out


def bisect_cdf(cdf: ArrayFn, q, lo, hi, tol: float = 1e-12, maxiter: int = 2000):
    """Vectorised bisection for ``cdf(y) = q`` inside ``[lo, hi]``.

    Each element stops once ``|cdf(y) - q| <= tol`` or its bracket collapses to
    adjacent floating-point numbers.  ``cdf`` must be nondecreasing and the
    brackets must already straddle ``q``.
    """
    q = np.asarray(q, dtype=float)
    lo = np.broadcast_to(np.asarray(lo, dtype=float), q.shape).copy()
    hi = np.broadcast_to(np.asarray(hi, dtype=float), q.shape).copy()
    mid = 0.5 * (lo + hi)
    active = np.ones(q.shape, dtype=bool)
    for _ in range(maxiter):
        mid = np.where(active, lo + 0.5 * (hi - lo), mid)
        val = np.asarray(cdf(mid), dtype=float)
        done = np.abs(val - q) <= tol
        below = val < q
        lo = np.where(active & below & ~done, mid, lo)
        hi = np.where(active & ~below & ~done, mid, hi)
        collapsed = np.nextafter(lo, hi) >= hi
        active &= ~(done | collapsed)
        if not active.any():
            break
    else:
        raise ConvergenceError("bisection did not converge")
    # a collapsed bracket: keep whichever endpoint is closer in probability
    v_lo = np.asarray(cdf(lo), dtype=float)
    v_hi = np.asarray(cdf(hi), dtype=float)
    v_mid = np.asarray(cdf(mid), dtype=float)
    best = np.where(np.abs(v_lo - q) < np.abs(v_hi - q), lo, hi)
    best_err = np.minimum(np.abs(v_lo - q), np.abs(v_hi - q))
    return np.where(np.abs(v_mid - q) <= best_err, mid, best)


@dataclass(frozen=True)
class GeneratorDistribution:
    """A law on (0, 1): density ``pdf``, CDF ``cdf`` and quantile ``quantile``.

    When ``quantile`` is omitted it is obtained by bisection on ``cdf``.
    """

    pdf: ArrayFn
    cdf: ArrayFn
    quantile: ArrayFn | None = None
    name: str = "generator"

    def __post_init__(self):
        if self.quantile is None:
            cdf = self.cdf

            def quantile(u):
                u = np.asarray(u, dtype=float)
                out = bisect_cdf(cdf, u, 0.0, 1.0, tol=1e-14)
                out = np.where(u <= 0.0, 0.0, np.where(u >= 1.0, 1.0, out))
                return _unwrap(np.asarray(out))

            object.__setattr__(self, "quantile", quantile)


@dataclass(frozen=True)
class UnivariateDistribution:
    """A base law F with density, CDF, quantile and support."""

    pdf: ArrayFn
    cdf: ArrayFn
    quantile: ArrayFn
    support: RealInterval = REAL_LINE
    name: str = "base"


@dataclass(frozen=True)
class GeneratedDistribution:
    """The composition ``G = H o F``; density ``h(F(y)) f(y)``."""

    base: UnivariateDistribution
    generator: GeneratorDistribution
    name: str = field(default="")

    def __post_init__(self):
        if not self.name:
            object.__setattr__(self, "name", f"{self.generator.name}-{self.base.name}")

    @property
    def support(self) -> RealInterval:
        return self.base.support

    def pdf(self, y):
        y = np.asarray(y, dtype=float)
        f = np.asarray(self.base.pdf(y), dtype=float)
        t = np.clip(np.asarray(self.base.cdf(y), dtype=float), _T_LO, _T_HI)
        with np.errstate(invalid="ignore", over="ignore"):
            h = np.asarray(self.generator.pdf(t), dtype=float)
            out = np.where(f > 0.0, h * f, 0.0)
        return _unwrap(out)

    def cdf(self, y):
        y = np.asarray(y, dtype=float)
        t = np.asarray(self.base.cdf(y), dtype=float)
        return _unwrap(np.asarray(self.generator.cdf(t), dtype=float))

    def quantile(self, q):
        return numeric_quantile(self, q)

    def sample(self, n: int, seed: int) -> np.ndarray:
        return sample_inverse(self, n, seed)


def compose(base: UnivariateDistribution, gen: GeneratorDistribution) -> GeneratedDistribution:
    return GeneratedDistribution(base, gen)


@dataclass(frozen=True)
class MixtureWeights:
    weights: tuple[float, ...]

    def __post_init__(self):
        w = tuple(float(x) for x in self.weights)
        if not w:
            raise DomainError("mixture needs at least one weight")
        if any(not (x > 0.0) or not math.isfinite(x) for x in w):
            raise DomainError(f"mixture weights must be positive, got {w}")
        if abs(math.fsum(w) - 1.0) > 1e-12:
            raise DomainError(f"mixture weights must sum to 1, got {math.fsum(w)!r}")
        object.__setattr__(self, "weights", w)


def mix_generators(parts: Sequence[tuple[float, GeneratorDistribution]]) -> GeneratorDistribution:
    """Finite mixture of generators; density and CDF are the weighted sums."""
    weights = MixtureWeights(tuple(w for w, _ in parts)).weights
    gens = [g for _, g in parts]
    if len(gens) == 1:
        return gens[0]

    def pdf(t):
        t = np.asarray(t, dtype=float)
        return _unwrap(sum(w * np.asarray(g.pdf(t), dtype=float) for w, g in zip(weights, gens)))

    def cdf(t):
        t = np.asarray(t, dtype=float)
        return _unwrap(sum(w * np.asarray(g.cdf(t), dtype=float) for w, g in zip(weights, gens)))

    name = "+".join(f"{w:g}*{g.name}" for w, g in zip(weights, gens))
    return GeneratorDistribution(pdf, cdf, None, name)


def sample_inverse(dist: GeneratedDistribution, n: int, seed: int) -> np.ndarray:
    """Draw ``F^{-1}(T)`` with ``T = H^{-1}(U)`` and U uniform on (0, 1)."""
    if int(n) != n or n < 1:
        raise DomainError(f"sample size must be a positive integer, got {n}")
    u = open_uniforms(make_rng(seed), int(n))
    t = np.clip(np.asarray(dist.generator.quantile(u), dtype=float), _T_LO, _T_HI)
    return np.asarray(dist.base.quantile(t), dtype=float)


def _bracket(cdf, q: np.ndarray, support: RealInterval):
    lo_lim, hi_lim = support.lo, support.hi
    lo = np.full(q.shape, max(-50.0, lo_lim))
    hi = np.full(q.shape, min(50.0, hi_lim))
    if lo_lim >= 50.0:
        hi = np.full(q.shape, lo_lim + 50.0)
    for _ in range(1100):
        need_lo = (np.asarray(cdf(lo)) > q) & (lo > lo_lim)
        need_hi = (np.asarray(cdf(hi)) < q) & (hi < hi_lim)
        if not (need_lo.any() or need_hi.any()):
            return lo, hi
        span = hi - lo
        lo = np.where(need_lo, np.maximum(lo - span, lo_lim), lo)
        hi = np.where(need_hi, np.minimum(hi + span, hi_lim), hi)
    raise ConvergenceError("could not bracket quantile")


def numeric_quantile(dist, q, tol: float = 1e-12):
    """Quantile of any distribution exposing ``cdf`` and ``support``.

    Starts from [-50, 50] (clipped to the support) and doubles the bracket
    outward until it straddles ``q``, then bisects.
    """
    q_arr = np.asarray(q, dtype=float)
    if np.any(np.isnan(q_arr)) or np.any((q_arr <= 0.0) | (q_arr >= 1.0)):
        raise DomainError("quantile level must lie strictly inside (0, 1)")
    support = getattr(dist, "support", REAL_LINE)
    lo, hi = _bracket(dist.cdf, q_arr, support)
    return _unwrap(np.asarray(bisect_cdf(dist.cdf, q_arr, lo, hi, tol=tol)))


def _tail_exponent(dist, k: int, side: int) -> float | None:
    # Local log-log slope of |y|^k g(y) far in one tail; None when the tail is
    # too short for a power-law reading to mean anything.
    levels = (1e-6, 1e-12)
    pts = []
    for eps in levels:
        q = eps if side < 0 else 1.0 - eps
        pts.append(float(numeric_quantile(dist, q)))
    y1, y2 = pts
    if y1 * y2 <= 0 or abs(y2) <= abs(y1) * 1.5 or abs(y1) < 1.0:
        return None
    g1 = float(dist.pdf(y1)) * abs(y1) ** k
    g2 = float(dist.pdf(y2)) * abs(y2) ** k
    if g2 <= 0.0 or g1 <= 0.0:
        return None
    return math.log(g2 / g1) / math.log(abs(y2) / abs(y1))


def numeric_expectation(dist, func: Callable[[float], float], breakpoints: Sequence[float] | None = None,
                        tol: float = 1e-12) -> float:
    """``E[func(Y)]`` by adaptive quadrature (QUADPACK).

    The support is cut at ``breakpoints`` (default: a ladder of quantiles);
    infinite end pieces are handled by QUADPACK's tail transformation.
    """
    support = getattr(dist, "support", REAL_LINE)
    if breakpoints is None:
        levels = (1e-8, 1e-4, 0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99, 1 - 1e-4, 1 - 1e-8)
        breakpoints = [float(v) for v in np.atleast_1d(numeric_quantile(dist, np.array(levels)))]
    cuts = sorted({b for b in breakpoints if support.lo < b < support.hi})
    edges = [support.lo, *cuts, support.hi]

    def integrand(y):
        with np.errstate(all="ignore"):
            g = float(dist.pdf(y))
        return 0.0 if g == 0.0 else func(y) * g

    def tail(s, start, sign):
        # y = start + sign * expm1(s): power-law tails decay exponentially in s
        if s > _LOG_TAIL_MAX:
            return 0.0
        return integrand(start + sign * math.expm1(s)) * math.exp(s)

    def pieces():
        for a, b in zip(edges[:-1], edges[1:]):
            if math.isinf(b) and math.isfinite(a):
                yield (lambda s, a=a: tail(s, a, 1.0)), 0.0, math.inf
            elif math.isinf(a) and math.isfinite(b):
                yield (lambda s, b=b: tail(s, b, -1.0)), 0.0, math.inf
            else:
                yield integrand, a, b

    def quad(fn, a, b):
        # QUADPACK flags roundoff when tol is below what the piece allows;
        # one retry at a looser tolerance before giving up
        for t in (tol, max(tol, 1e-10)):
            try:
                return integrate.quad(fn, a, b, epsabs=t, epsrel=t, limit=400)
            except integrate.IntegrationWarning as exc:
                last = exc
        raise ConvergenceError(f"quadrature failed on [{a}, {b}]: {last}") from last

    total = []
    err = 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        for fn, a, b in pieces():
            if a == b:
                continue
            val, e = quad(fn, a, b)
            total.append(val)
            err += e
    if err > 1e-8 or not all(math.isfinite(v) for v in total):
        raise ConvergenceError(f"quadrature error estimate {err:.3g} exceeds 1e-8")
    return math.fsum(total)


def numeric_moment(dist, k: int) -> float:
    """Raw moment ``E[Y^k]`` by quadrature, after a tail probe.

    Each infinite tail is probed for a power-law decay of ``|y|^k g(y)``; an
    exponent of -1.05 or flatter means the moment does not exist (the moment
    order exceeds what the tail allows) and :class:`ConvergenceError` is raised.
    """
    if int(k) != k or k < 1:
        raise DomainError(f"moment order must be a positive integer, got {k}")
    k = int(k)
    support = getattr(dist, "support", REAL_LINE)
    for side, infinite in ((-1, not support.bounded_below), (1, not support.bounded_above)):
        if not infinite:
            continue
        slope = _tail_exponent(dist, k, side)
        if slope is not None and slope > -1.05:
            raise ConvergenceError(f"moment of order {k} appears not to exist (tail exponent {slope:.3f})")
    return numeric_expectation(dist, lambda y: y**k)


def ks_statistic(sample, cdf: ArrayFn) -> float:
    """Two-sided Kolmogorov-Smirnov distance between a sample and a CDF."""
    x = np.sort(np.asarray(sample, dtype=float))
    n = x.size
    if n == 0:
        raise DomainError("empty sample")
    f = np.asarray(cdf(x), dtype=float)
    i = np.arange(1, n + 1)
    return float(max(np.max(i / n - f), np.max(f - (i - 1) / n)))
