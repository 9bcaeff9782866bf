"""Closed-form base laws F.

Every constructor returns a :class:`~genlap.framework.UnivariateDistribution`
whose ``pdf``/``cdf``/``quantile`` accept scalars or arrays.  Outside the
support the density is 0 and the CDF is clamped to 0 or 1, so grid sweeps
never raise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from statistics import NormalDist

import numpy as np
from scipy.special import lambertw

from .errors import DomainError
from .framework import REAL_LINE, UnivariateDistribution
from .specfun import RealInterval

__all__ = [
    "LaplaceParams",
    "ExponentialParams",
    "WeibullParams",
    "GumbelParams",
    "ParetoParams",
    "RayleighParams",
    "LindleyParams",
    "LogLogisticParams",
    "HalfCauchyParams",
    "NormalParams",
    "CauchyParams",
    "laplace",
    "make_family",
    "FAMILIES",
]

_HALF_LINE = RealInterval(0.0, math.inf)
_LN2 = math.log(2.0)


def _validate(obj, positive: tuple[str, ...]):
    for f in fields(obj):
        v = float(getattr(obj, f.name))
        if not math.isfinite(v):
            raise DomainError(f"{f.name} must be finite, got {v}")
        if f.name in positive and not v > 0.0:
            raise DomainError(f"{f.name} must be positive, got {v}")
        object.__setattr__(obj, f.name, v)


@dataclass(frozen=True)
class LaplaceParams:
    mu: float = 0.0
    sigma: float = 1.0

    def __post_init__(self):
        _validate(self, ("sigma",))


@dataclass(frozen=True)
class ExponentialParams:
    lam: float = 1.0

    def __post_init__(self):
        _validate(self, ("lam",))


@dataclass(frozen=True)
class WeibullParams:
    c: float = 1.0
    lam: float = 1.0

    def __post_init__(self):
        _validate(self, ("c", "lam"))


@dataclass(frozen=True)
class GumbelParams:
    mu: float = 0.0
    sigma: float = 1.0

    def __post_init__(self):
        _validate(self, ("sigma",))


@dataclass(frozen=True)
class ParetoParams:
    theta: float = 1.0
    k: float = 1.0

    def __post_init__(self):
        _validate(self, ("theta", "k"))


@dataclass(frozen=True)
class RayleighParams:
    sigma: float = 1.0

    def __post_init__(self):
        _validate(self, ("sigma",))


@dataclass(frozen=True)
class LindleyParams:
    theta: float = 1.0

    def __post_init__(self):
        _validate(self, ("theta",))


@dataclass(frozen=True)
class LogLogisticParams:
    alpha: float = 1.0
    gamma: float = 1.0

    def __post_init__(self):
        _validate(self, ("alpha", "gamma"))


@dataclass(frozen=True)
class HalfCauchyParams:
    phi: float = 1.0

    def __post_init__(self):
        _validate(self, ("phi",))


@dataclass(frozen=True)
class NormalParams:
    mu: float = 0.0
    sigma: float = 1.0

    def __post_init__(self):
        _validate(self, ("sigma",))


@dataclass(frozen=True)
class CauchyParams:
    theta: float = 0.0
    lam: float = 1.0

    def __post_init__(self):
        _validate(self, ("lam",))


def _a(x):
    return np.asarray(x, dtype=float)


def _o(a):
    a = np.asarray(a, dtype=float)
    return a[()] if a.ndim == 0 else a


def _quantile_guard(fn, lo: float, hi: float):
    def quantile(q):
        q = _a(q)
        if np.any(np.isnan(q)) or np.any((q < 0.0) | (q > 1.0)):
            raise DomainError("quantile level must lie in [0, 1]")
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            out = fn(np.clip(q, 1e-300, math.nextafter(1.0, 0.0)))
        out = np.where(q == 0.0, lo, np.where(q == 1.0, hi, out))
        return _o(out)

    return quantile


def laplace(params: LaplaceParams = LaplaceParams()) -> UnivariateDistribution:
    mu, s = params.mu, params.sigma

    def pdf(x):
        z = (_a(x) - mu) / s
        return _o(0.5 * np.exp(-np.abs(z)) / s)

    def cdf(x):
        z = (_a(x) - mu) / s
        e = 0.5 * np.exp(-np.abs(z))
        return _o(np.where(z < 0.0, e, 1.0 - e))

    def q(u):
        return mu + s * np.where(u < 0.5, np.log(2.0 * u), -np.log(2.0 * (1.0 - u)))

    return UnivariateDistribution(pdf, cdf, _quantile_guard(q, -math.inf, math.inf), REAL_LINE, "laplace")


def _exponential(p: ExponentialParams):
    lam = p.lam

    def pdf(x):
        x = _a(x)
        return _o(np.where(x >= 0.0, lam * np.exp(-lam * np.maximum(x, 0.0)), 0.0))

    def cdf(x):
        return _o(-np.expm1(-lam * np.maximum(_a(x), 0.0)))

    q = _quantile_guard(lambda u: -np.log1p(-u) / lam, 0.0, math.inf)
    return UnivariateDistribution(pdf, cdf, q, _HALF_LINE, "exponential")


def _weibull(p: WeibullParams):
    c, lam = p.c, p.lam

    def pdf(x):
        x = _a(x)
        xp = np.maximum(x, 0.0)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            v = c * lam**c * np.power(xp, c - 1.0) * np.exp(-np.power(lam * xp, c))
        return _o(np.where(x > 0.0, v, 0.0))

    def cdf(x):
        return _o(-np.expm1(-np.power(lam * np.maximum(_a(x), 0.0), c)))

    q = _quantile_guard(lambda u: np.power(-np.log1p(-u), 1.0 / c) / lam, 0.0, math.inf)
    return UnivariateDistribution(pdf, cdf, q, _HALF_LINE, "weibull")


def _gumbel(p: GumbelParams):
    mu, s = p.mu, p.sigma

    def pdf(x):
        z = (_a(x) - mu) / s
        with np.errstate(over="ignore"):
            u = np.exp(-z)
            return _o(np.where(np.isinf(u), 0.0, u * np.exp(-u) / s))

    def cdf(x):
        z = (_a(x) - mu) / s
        with np.errstate(over="ignore"):
            return _o(np.exp(-np.exp(-z)))

    q = _quantile_guard(lambda u: mu - s * np.log(-np.log(u)), -math.inf, math.inf)
    return UnivariateDistribution(pdf, cdf, q, REAL_LINE, "gumbel")


def _pareto(p: ParetoParams):
    theta, k = p.theta, p.k

    def pdf(x):
        x = _a(x)
        r = np.maximum(x, theta) / theta
        return _o(np.where(x >= theta, k / theta * np.power(r, -k - 1.0), 0.0))

    def cdf(x):
        r = np.maximum(_a(x), theta) / theta
        return _o(-np.expm1(-k * np.log(r)))

    q = _quantile_guard(lambda u: theta * np.exp(-np.log1p(-u) / k), theta, math.inf)
    return UnivariateDistribution(pdf, cdf, q, RealInterval(theta, math.inf), "pareto")


def _rayleigh(p: RayleighParams):
    s = p.sigma

    def pdf(x):
        x = _a(x)
        return _o(np.where(x >= 0.0, x / s**2 * np.exp(-0.5 * (x / s) ** 2), 0.0))

    def cdf(x):
        x = np.maximum(_a(x), 0.0)
        return _o(-np.expm1(-0.5 * (x / s) ** 2))

    q = _quantile_guard(lambda u: s * np.sqrt(-2.0 * np.log1p(-u)), 0.0, math.inf)
    return UnivariateDistribution(pdf, cdf, q, _HALF_LINE, "rayleigh")


def _lindley(p: LindleyParams):
    th = p.theta

    def pdf(x):
        x = _a(x)
        xp = np.maximum(x, 0.0)
        return _o(np.where(x >= 0.0, th**2 / (th + 1.0) * (1.0 + xp) * np.exp(-th * xp), 0.0))

    def cdf(x):
        x = np.maximum(_a(x), 0.0)
        return _o(1.0 - (th + 1.0 + th * x) / (th + 1.0) * np.exp(-th * x))

    def q(u):
        # (1 + th + th x) e^{-th x} = (1 + th)(1 - u)  solved on the W_{-1} branch
        arg = -(1.0 + th) * (1.0 - u) * math.exp(-(1.0 + th))
        w = np.real(lambertw(arg, k=-1))
        return np.maximum(-1.0 - 1.0 / th - w / th, 0.0)

    return UnivariateDistribution(pdf, cdf, _quantile_guard(q, 0.0, math.inf), _HALF_LINE, "lindley")


def _log_logistic(p: LogLogisticParams):
    al, g = p.alpha, p.gamma

    def pdf(x):
        x = _a(x)
        xp = np.maximum(x, 0.0)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            # (g/x) r/(1+r)^2 with r = (x/al)^g, in log space so huge x gives 0, not inf/inf
            lr = g * np.log(xp / al)
            v = g / xp * np.exp(lr - 2.0 * np.logaddexp(0.0, lr))
        return _o(np.where(x > 0.0, v, 0.0))

    def cdf(x):
        r = np.power(np.maximum(_a(x), 0.0) / al, g)
        with np.errstate(invalid="ignore"):
            return _o(np.where(np.isinf(r), 1.0, r / (1.0 + r)))

    q = _quantile_guard(lambda u: al * np.power(u / (1.0 - u), 1.0 / g), 0.0, math.inf)
    return UnivariateDistribution(pdf, cdf, q, _HALF_LINE, "log-logistic")


def _half_cauchy(p: HalfCauchyParams):
    phi = p.phi

    def pdf(x):
        x = _a(x)
        return _o(np.where(x >= 0.0, 2.0 / (math.pi * phi * (1.0 + (x / phi) ** 2)), 0.0))

    def cdf(x):
        return _o(2.0 / math.pi * np.arctan(np.maximum(_a(x), 0.0) / phi))

    q = _quantile_guard(lambda u: phi * np.tan(0.5 * math.pi * u), 0.0, math.inf)
    return UnivariateDistribution(pdf, cdf, q, _HALF_LINE, "half-cauchy")


_std_normal = NormalDist()
_norm_ppf = np.frompyfunc(_std_normal.inv_cdf, 1, 1)
_erf = np.frompyfunc(math.erf, 1, 1)
_erfc = np.frompyfunc(math.erfc, 1, 1)


def _normal(p: NormalParams):
    mu, s = p.mu, p.sigma

    def pdf(x):
        z = (_a(x) - mu) / s
        return _o(np.exp(-0.5 * z * z) / (s * math.sqrt(2.0 * math.pi)))

    def cdf(x):
        # Phi(z) = (1 + erf(z / sqrt 2)) / 2; the erfc form keeps the left tail accurate
        z = (_a(x) - mu) / s
        left = 0.5 * np.asarray(_erfc(-z / math.sqrt(2.0)), dtype=float)
        right = 0.5 * (1.0 + np.asarray(_erf(z / math.sqrt(2.0)), dtype=float))
        return _o(np.where(z < 0.0, left, right))

    q = _quantile_guard(lambda u: mu + s * np.asarray(_norm_ppf(u), dtype=float), -math.inf, math.inf)
    return UnivariateDistribution(pdf, cdf, q, REAL_LINE, "normal")


def _cauchy(p: CauchyParams):
    th, lam = p.theta, p.lam

    def pdf(x):
        z = (_a(x) - th) / lam
        return _o(1.0 / (math.pi * lam * (1.0 + z * z)))

    def cdf(x):
        z = (_a(x) - th) / lam
        return _o(0.5 + np.arctan(z) / math.pi)

    q = _quantile_guard(lambda u: th + lam * np.tan(math.pi * (u - 0.5)), -math.inf, math.inf)
    return UnivariateDistribution(pdf, cdf, q, REAL_LINE, "cauchy")


FAMILIES = {
    "laplace": (LaplaceParams, laplace),
    "exponential": (ExponentialParams, _exponential),
    "weibull": (WeibullParams, _weibull),
    "gumbel": (GumbelParams, _gumbel),
    "pareto": (ParetoParams, _pareto),
    "rayleigh": (RayleighParams, _rayleigh),
    "lindley": (LindleyParams, _lindley),
    "log-logistic": (LogLogisticParams, _log_logistic),
    "half-cauchy": (HalfCauchyParams, _half_cauchy),
    "normal": (NormalParams, _normal),
    "cauchy": (CauchyParams, _cauchy),
}


def make_family(name: str, **params: float) -> UnivariateDistribution:
    """Build a base law by family name, e.g. ``make_family("weibull", c=2, lam=1)``."""
    try:
        param_cls, ctor = FAMILIES[name]
    except KeyError:
        raise DomainError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}") from None
    try:
        p = param_cls(**params)
    except TypeError as exc:
        raise DomainError(f"bad parameters for {name}: {exc}") from None
    return ctor(p)
