"""The beta-mixture Laplace distribution BML(alpha, beta, p, mu, sigma).

A Laplace base composed with the generator ``p Beta(alpha, 1) + (1-p) Beta(1, beta)``.
With ``z = (x - mu)/sigma`` and ``e = exp(-|z|)/2`` (so that ``F(z) = e`` for
z < 0 and ``1 - e`` for z >= 0) the standardized density is

    z <  0:  p alpha e^alpha           + (1-p) beta (1-e)^(beta-1) e
    z >= 0:  p alpha (1-e)^(alpha-1) e + (1-p) beta e^beta

and the CDF is

    z <  0:  p e^alpha       + (1-p) [1 - (1-e)^beta]
    z >= 0:  p (1-e)^alpha   + (1-p) [1 - e^beta].

Everything here works on ``e`` directly, which never exceeds 1/2, so no branch
raises a small number to a negative power.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .basedist import LaplaceParams, laplace
from .errors import DomainError, RangeError
from .framework import GeneratedDistribution, REAL_LINE, bisect_cdf, compose
from .generators import BmGenParams, bm_gen
from .specfun import RealInterval, beta_fn, gen_binom, reg_inc_beta
from .streams import make_rng, open_uniforms

__all__ = [
    "BmlParams",
    "MgfDomain",
    "BmlDistribution",
    "bml_pdf",
    "bml_cdf",
    "bml_survival",
    "bml_hazard",
    "bml_hazard_limit",
    "bml_hazard_at_mu",
    "bml_quantile",
    "mgf_domain",
    "bml_mgf",
    "bml_mgf_integer",
    "bml_moment_integer",
    "bml_series_pdf",
    "bml_sample",
    "as_distribution",
    "composed",
]

_ENDPOINT_GAP = 1e-9
_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class BmlParams:
    alpha: float
    beta: float
    p: float
    mu: float = 0.0
    sigma: float = 1.0

    def __post_init__(self):
        for name in ("alpha", "beta", "sigma"):
            v = float(getattr(self, name))
            if not (v > 0.0) or not math.isfinite(v):
                raise DomainError(f"{name} must be positive and finite, got {v}")
            object.__setattr__(self, name, v)
        p = float(self.p)
        if not 0.0 <= p <= 1.0:
            raise DomainError(f"p must lie in [0, 1], got {p}")
        mu = float(self.mu)
        if not math.isfinite(mu):
            raise DomainError(f"mu must be finite, got {mu}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "mu", mu)

    @property
    def standard(self) -> bool:
        return self.mu == 0.0 and self.sigma == 1.0


@dataclass(frozen=True)
class MgfDomain:
    """Open interval ``(-min(1, alpha), min(1, beta))`` of the standardized MGF."""

    lo: float
    hi: float

    def __contains__(self, t: float) -> bool:
        return self.lo < t < self.hi


def _a(x):
    return np.asarray(x, dtype=float)


def _o(v):
    v = np.asarray(v, dtype=float)
    return v[()] if v.ndim == 0 else v


def _std(params: BmlParams, x):
    z = (_a(x) - params.mu) / params.sigma
    return z, 0.5 * np.exp(-np.abs(z))


def _pdf_std(params: BmlParams, z, e):
    a, b, p = params.alpha, params.beta, params.p
    with np.errstate(divide="ignore"):
        le = np.log(e)
    l1e = np.log1p(-e)
    with np.errstate(over="ignore", invalid="ignore"):
        left = p * a * np.exp(a * le) + (1.0 - p) * b * np.exp((b - 1.0) * l1e) * e
        right = p * a * np.exp((a - 1.0) * l1e) * e + (1.0 - p) * b * np.exp(b * le)
    return np.where(z < 0.0, left, right)


def bml_pdf(params: BmlParams, x):
    z, e = _std(params, x)
    return _o(_pdf_std(params, z, e) / params.sigma)


def _cdf_sf(params: BmlParams, z, e):
    a, b, p = params.alpha, params.beta, params.p
    with np.errstate(divide="ignore"):
        le = np.log(e)
    l1e = np.log1p(-e)
    ea, eb = np.exp(a * le), np.exp(b * le)
    # (1-e)^a, 1-(1-e)^a and the same for b, each without cancellation
    ca, cb = np.exp(a * l1e), np.exp(b * l1e)
    da, db = -np.expm1(a * l1e), -np.expm1(b * l1e)
    cdf = np.where(z < 0.0, p * ea + (1.0 - p) * db, p * ca + (1.0 - p) * (-np.expm1(b * le)))
    sf = np.where(z < 0.0, p * (-np.expm1(a * le)) + (1.0 - p) * cb, p * da + (1.0 - p) * eb)
    return cdf, sf


def bml_cdf(params: BmlParams, x):
    z, e = _std(params, x)
    return _o(np.clip(_cdf_sf(params, z, e)[0], 0.0, 1.0))


def bml_survival(params: BmlParams, x):
    z, e = _std(params, x)
    return _o(np.clip(_cdf_sf(params, z, e)[1], 0.0, 1.0))


def bml_hazard(params: BmlParams, x):
    """``g / (1 - G)``; raises :class:`RangeError` where the survival is 0."""
    z, e = _std(params, x)
    g = _pdf_std(params, z, e) / params.sigma
    r = _cdf_sf(params, z, e)[1]
    if np.any(r <= 0.0):
        bad = _a(x)[r <= 0.0] if np.ndim(x) else x
        raise RangeError(f"survival function is 0 at x={np.ravel(bad)[0]}; hazard undefined")
    return _o(g / r)


def bml_hazard_limit(params: BmlParams, side: int = 1) -> float:
    """Limit of the hazard as x -> +inf (``side=1``) or -inf (``side=-1``).

    On the right the survival is ``p alpha e + (1-p) e^beta`` to leading order and
    the density has the same two leading terms, so the hazard tends to 1 when
    the Beta(alpha, 1) part dominates and to beta when the Beta(1, beta) part
    does.  On the left the survival tends to 1 and the density to 0.
    """
    if side < 0:
        return 0.0
    if params.p == 1.0:
        rate = 1.0
    elif params.p == 0.0:
        rate = params.beta
    else:
        rate = min(1.0, params.beta)
    return rate / params.sigma


def bml_hazard_at_mu(params: BmlParams) -> float:
    """Right limit of the hazard at x = mu.

    ``[p alpha 2^-alpha + (1-p) beta 2^-beta] / [p (1 - 2^-alpha) + (1-p) 2^-beta]``;
    the denominator is ``1 - G(mu)``.
    """
    a, b, p = params.alpha, params.beta, params.p
    num = p * a * 2.0**-a + (1.0 - p) * b * 2.0**-b
    den = p * -math.expm1(-a * math.log(2.0)) + (1.0 - p) * 2.0**-b
    return num / den / params.sigma


def bml_quantile(params: BmlParams, q, tol: float = 1e-12):
    """Numeric inverse of the CDF by bisection, starting from mu +- 60 sigma."""
    q = _a(q)
    if np.any(np.isnan(q)) or np.any((q <= 0.0) | (q >= 1.0)):
        raise DomainError("quantile level must lie strictly inside (0, 1)")
    mu, s = params.mu, params.sigma
    lo = np.full(q.shape, mu - 60.0 * s)
    hi = np.full(q.shape, mu + 60.0 * s)

    def cdf(x):
        return bml_cdf(params, x)

    for _ in range(64):
        need_lo = _a(cdf(lo)) > q
        need_hi = _a(cdf(hi)) < q
        if not (need_lo.any() or need_hi.any()):
            break
        span = hi - lo
        lo = np.where(need_lo, lo - span, lo)
        hi = np.where(need_hi, hi + span, hi)
    return _o(bisect_cdf(cdf, q, lo, hi, tol=tol))


def mgf_domain(params: BmlParams) -> MgfDomain:
    """Where ``E exp(tX)`` is finite: ``(-min(1, alpha), min(1, beta)) / sigma``."""
    s = params.sigma
    return MgfDomain(-min(1.0, params.alpha) / s, min(1.0, params.beta) / s)


def _check_t(t: float, lo: float, hi: float) -> float:
    t = float(t)
    if math.isnan(t) or not lo < t < hi:
        if math.isfinite(t) and (abs(t - lo) <= _ENDPOINT_GAP or abs(t - hi) <= _ENDPOINT_GAP):
            raise RangeError(f"MGF is unbounded at the domain endpoint; t={t}")
        raise DomainError(f"t={t} lies outside the MGF domain ({lo}, {hi})")
    if t - lo <= _ENDPOINT_GAP or hi - t <= _ENDPOINT_GAP:
        raise RangeError(f"t={t} is within {_ENDPOINT_GAP:g} of the MGF domain endpoint")
    return t


def _m1(a: float, t: float) -> float:
    # E e^{tZ} under Laplace o Beta(a, 1); valid for -a < t < 1
    left = a / (2.0**a * (t + a))
    right = a * beta_fn(a, 1.0 - t) * 2.0**-t * reg_inc_beta(0.5, 1.0 - t, a)
    return left + right


def _m2(b: float, t: float) -> float:
    # E e^{tZ} under Laplace o Beta(1, b); valid for -1 < t < b
    right = b / (2.0**b * (b - t))
    left = b * beta_fn(b, 1.0 + t) * 2.0**t * reg_inc_beta(0.5, 1.0 + t, b)
    return left + right


def _mgf_std(a: float, b: float, p: float, t: float) -> float:
    out = 0.0
    if p > 0.0:
        out += p * _m1(a, t)
    if p < 1.0:
        out += (1.0 - p) * _m2(b, t)
    return out


def bml_mgf(params: BmlParams, t: float) -> float:
    """``E exp(tX)``.

    For the standard law this is ``p M1(t) + (1-p) M2(t)`` with incomplete-beta
    components.  With location and scale it is ``exp(t mu) M(sigma t)``, where
    ``sigma t`` must lie in ``(-min(1, alpha), min(1, beta))``.
    """
    lo, hi = -min(1.0, params.alpha), min(1.0, params.beta)
    ts = _check_t(float(t) * params.sigma, lo, hi)
    return math.exp(float(t) * params.mu) * _mgf_std(params.alpha, params.beta, params.p, ts)


def _positive_int(name: str, v) -> int:
    if isinstance(v, bool) or int(v) != v or v < 1:
        raise DomainError(f"{name} must be a positive integer, got {v!r}")
    return int(v)


def _m1_int(m: int, t: float) -> float:
    s = math.fsum(math.comb(m - 1, j) * (-1) ** j * 2.0**-j / (1.0 + j - t) for j in range(m))
    return m / (2.0**m * (m + t)) + 0.5 * m * s


def _m2_int(n: int, t: float) -> float:
    s = math.fsum(math.comb(n - 1, j) * (-1) ** j * 2.0**-j / (1.0 + j + t) for j in range(n))
    return n / (2.0**n * (n - t)) + 0.5 * n * s


def bml_mgf_integer(m: int, n: int, p: float, t: float) -> float:
    """Standardized MGF for integer shapes as finite binomial sums (domain -1 < t < 1)."""
    m, n = _positive_int("m", m), _positive_int("n", n)
    BmlParams(m, n, p)
    t = _check_t(t, -1.0, 1.0)
    out = 0.0
    if p > 0.0:
        out += p * _m1_int(m, t)
    if p < 1.0:
        out += (1.0 - p) * _m2_int(n, t)
    return out


def bml_moment_integer(m: int, n: int, p: float, k: int) -> float:
    """``E X^k`` of the standard law for integer shapes (m, n), closed form."""
    m, n, k = _positive_int("m", m), _positive_int("n", n), _positive_int("k", k)
    BmlParams(m, n, p)
    sign = (-1) ** k
    head = p * sign / (2.0**m * m**k) + (1.0 - p) / (2.0**n * n**k)
    s1 = math.fsum(math.comb(m - 1, j) * (-1) ** j / (2.0**j * (j + 1) ** (k + 1)) for j in range(m))
    s2 = math.fsum(math.comb(n - 1, j) * (-1) ** j / (2.0**j * (j + 1) ** (k + 1)) for j in range(n))
    tail = 0.5 * p * m * s1 + 0.5 * (1.0 - p) * n * sign * s2
    return math.factorial(k) * (head + tail)


def _series_coeffs(a: float, b: float, p: float, terms: int):
    # c[k] multiplies F^k in  sum_j sum_{k<=j} w_jk F^k + sum_i w_i F^i,
    # w_jk = (-1)^{j+k} p a C(a-1, j) C(j, k),  w_i = (-1)^i (1-p) b C(b-1, i)
    ga = [gen_binom(a - 1.0, j) for j in range(terms)]
    gb = [gen_binom(b - 1.0, i) for i in range(terms)]
    c = []
    for k in range(terms):
        inner = [(-1) ** (j + k) * ga[j] * math.comb(j, k) for j in range(k, terms)]
        c.append((p * a * math.fsum(inner), p * a * math.fsum(abs(v) for v in inner)))
    w = [(-1) ** i * (1.0 - p) * b * gb[i] for i in range(terms)]
    return c, w, ga, gb


def bml_series_pdf(params: BmlParams, x, terms: int = 60):
    """Truncated binomial-series density and an estimate of the truncation error.

    Returns ``(value, error_estimate)``.  The estimate is a geometric bound on
    the omitted tail of each series plus a rounding bound for the expanded
    double sum, which cancels heavily as F(x) approaches 1 for non-integer alpha.
    For integer alpha and beta both series terminate and the value is exact up
    to rounding.
    """
    terms = _positive_int("terms", terms)
    a, b, p, s = params.alpha, params.beta, params.p, params.sigma
    c, w, ga, gb = _series_coeffs(a, b, p, terms)
    na, nb = gen_binom(a - 1.0, terms), gen_binom(b - 1.0, terms)
    z, e = _std(params, x)
    F = np.where(z < 0.0, e, 1.0 - e)
    f = e / s
    vals, errs = [], []
    for Fi, fi in zip(np.ravel(F), np.ravel(f)):
        Fi, fi = float(Fi), float(fi)
        powers = [Fi**k for k in range(terms)]
        parts = [ck * pk for (ck, _), pk in zip(c, powers)] + [wi * pk for wi, pk in zip(w, powers)]
        absum = math.fsum(abs(ck) * pk for (_, ck), pk in zip(c, powers)) + math.fsum(
            abs(v) for v in parts[terms:]
        )
        # first omitted term of each series; past the shape the coefficient magnitudes
        # decrease, so the remaining tail is bounded by a geometric series
        lc = abs(p * a * na) * (1.0 - Fi) ** terms
        lw = abs((1.0 - p) * b * nb) * Fi**terms
        last = (lc / Fi if lc else 0.0) + (lw / (1.0 - Fi) if lw else 0.0)
        vals.append(fi * math.fsum(parts))
        errs.append(fi * (last + 4.0 * terms * _EPS * absum))
    shape = np.shape(z)
    return _o(np.reshape(vals, shape)), _o(np.reshape(errs, shape))


def _laplace_quantile_pair(t: np.ndarray, s: np.ndarray) -> np.ndarray:
    # t = F(z), s = 1 - t both known accurately; invert whichever is below 1/2
    with np.errstate(divide="ignore"):
        return np.where(t < 0.5, np.log(2.0 * t), -np.log(2.0 * s))


def bml_sample(params: BmlParams, n: int, seed: int) -> np.ndarray:
    """Draw ``n`` variates.

    A first uniform U picks the component (Beta(alpha, 1) when U < p), a second
    independent uniform V is pushed through that component's closed-form
    quantile, and the result is mapped through the Laplace quantile.
    """
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise DomainError(f"sample size must be a positive integer, got {n}")
    n = int(n)
    rng = make_rng(seed)
    u = open_uniforms(rng, n)
    v = open_uniforms(rng, n)
    a, b = params.alpha, params.beta
    first = u < params.p
    lv, l1v = np.log(v), np.log1p(-v)
    # Beta(a, 1): t = v^(1/a);   Beta(1, b): 1 - t = (1 - v)^(1/b)
    t = np.where(first, np.exp(lv / a), -np.expm1(l1v / b))
    s = np.where(first, -np.expm1(lv / a), np.exp(l1v / b))
    y = _laplace_quantile_pair(t, s)
    return params.mu + params.sigma * y


class BmlDistribution:
    """Closed-form BML law exposing the interface the framework numerics expect."""

    support: RealInterval = REAL_LINE

    def __init__(self, params: BmlParams):
        self.params = params
        self.name = f"bml({params.alpha:g},{params.beta:g},{params.p:g})"

    def pdf(self, x):
        return bml_pdf(self.params, x)

    def cdf(self, x):
        return bml_cdf(self.params, x)

    def survival(self, x):
        return bml_survival(self.params, x)

    def hazard(self, x):
        return bml_hazard(self.params, x)

    def quantile(self, q):
        return bml_quantile(self.params, q)

    def sample(self, n: int, seed: int) -> np.ndarray:
        return bml_sample(self.params, n, seed)


def as_distribution(params: BmlParams) -> BmlDistribution:
    return BmlDistribution(params)


def composed(params: BmlParams) -> GeneratedDistribution:
    """The same law built generically as ``compose(laplace, bm_gen)``."""
    base = laplace(LaplaceParams(params.mu, params.sigma))
    return compose(base, bm_gen(BmGenParams(params.alpha, params.beta, params.p)))
