"""Concrete generator laws on (0, 1).

Uniform, beta, Kumaraswamy, power (Beta(a, 1)), reflected power (Beta(1, b))
and the beta mixture ``p Beta(a, 1) + (1 - p) Beta(1, b)``.  Densities are
evaluated with ``log``/``log1p`` so that ``t`` close to 0 or 1 stays accurate;
at the exact endpoints a finite limit is returned and an infinite one raises
:class:`~genlap.errors.RangeError`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, RangeError
from .framework import GeneratorDistribution
from .specfun import inv_reg_inc_beta, log_beta, reg_inc_beta_array

__all__ = [
    "BetaGenParams",
    "KumGenParams",
    "BmGenParams",
    "uniform_gen",
    "beta_gen",
    "kumaraswamy_gen",
    "power_gen",
    "reflected_power_gen",
    "bm_gen",
]


def _shape(name: str, value: float) -> float:
    value = float(value)
    if not (value > 0.0) or not math.isfinite(value):
        raise DomainError(f"{name} must be a positive finite number, got {value}")
    return value


@dataclass(frozen=True)
class BetaGenParams:
    alpha: float
    beta: float

    def __post_init__(self):
        object.__setattr__(self, "alpha", _shape("alpha", self.alpha))
        object.__setattr__(self, "beta", _shape("beta", self.beta))


@dataclass(frozen=True)
class KumGenParams:
    a: float
    b: float

    def __post_init__(self):
        object.__setattr__(self, "a", _shape("a", self.a))
        object.__setattr__(self, "b", _shape("b", self.b))


@dataclass(frozen=True)
class BmGenParams:
    alpha: float
    beta: float
    p: float

    def __post_init__(self):
        object.__setattr__(self, "alpha", _shape("alpha", self.alpha))
        object.__setattr__(self, "beta", _shape("beta", self.beta))
        p = float(self.p)
        if not 0.0 <= p <= 1.0:
            raise DomainError(f"p must lie in [0, 1], got {p}")
        object.__setattr__(self, "p", p)


def _arr(t):
    return np.asarray(t, dtype=float)


def _out(a: np.ndarray):
    return a[()] if a.ndim == 0 else a


def _checked_density(t: np.ndarray, h: np.ndarray, name: str):
    if not np.all(np.isfinite(h)):
        raise RangeError(f"{name} density is unbounded at t={t[~np.isfinite(h)].ravel()[0]}")
    return _out(h)


def _clip_unit(t: np.ndarray) -> np.ndarray:
    return np.clip(t, 0.0, 1.0)


def uniform_gen() -> GeneratorDistribution:
    return GeneratorDistribution(
        pdf=lambda t: _out(np.ones_like(_arr(t))),
        cdf=lambda t: _out(_clip_unit(_arr(t))),
        quantile=lambda u: _out(_clip_unit(_arr(u)).copy()),
        name="uniform",
    )


def _pow(t: np.ndarray, e: float) -> np.ndarray:
    # t**e with the 0**0 = 1 convention and 0**negative = inf
    with np.errstate(divide="ignore", invalid="ignore"):
        if e == 0.0:
            return np.ones_like(t)
        return np.power(t, e)


def _power_pdf(t, alpha: float):
    t = _arr(t)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        h = alpha * _pow(t, alpha - 1.0)
    h = np.where((t < 0.0) | (t > 1.0), 0.0, h)
    return h


def _reflected_pdf(t, beta: float):
    t = _arr(t)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        h = beta * _pow(1.0 - t, beta - 1.0)
    h = np.where((t < 0.0) | (t > 1.0), 0.0, h)
    return h


def _power_cdf(t, alpha: float):
    return np.power(_clip_unit(_arr(t)), alpha)


def power_gen(alpha: float) -> GeneratorDistribution:
    """Beta(alpha, 1): H(t) = t^alpha, quantile u^(1/alpha)."""
    alpha = _shape("alpha", alpha)

    def cdf(t):
        t = _arr(t)
        return _out(_power_cdf(t, alpha))

    return GeneratorDistribution(
        pdf=lambda t: _checked_density(_arr(t), _power_pdf(t, alpha), "power"),
        cdf=cdf,
        quantile=lambda u: _out(np.power(_clip_unit(_arr(u)), 1.0 / alpha)),
        name=f"power({alpha:g})",
    )


def reflected_power_gen(beta: float) -> GeneratorDistribution:
    """Beta(1, beta): H(t) = 1 - (1-t)^beta, quantile 1 - (1-u)^(1/beta)."""
    beta = _shape("beta", beta)

    def cdf(t):
        t = _clip_unit(_arr(t))
        return _out(1.0 - np.power(1.0 - t, beta))

    def quantile(u):
        u = _clip_unit(_arr(u))
        return _out(-np.expm1(np.log1p(-u) / beta) if beta != 1.0 else u.copy())

    return GeneratorDistribution(
        pdf=lambda t: _checked_density(_arr(t), _reflected_pdf(t, beta), "reflected power"),
        cdf=cdf,
        quantile=quantile,
        name=f"reflected-power({beta:g})",
    )


def beta_gen(params: BetaGenParams) -> GeneratorDistribution:
    """Beta(alpha, beta) generator; CDF is the regularized incomplete beta ratio."""
    a, b = params.alpha, params.beta
    if a == 1.0 and b == 1.0:
        return uniform_gen()
    lbeta = log_beta(a, b)

    def pdf(t):
        t = _arr(t)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            inside = (t > 0.0) & (t < 1.0)
            tc = np.where(inside, t, 0.5)
            h = np.exp((a - 1.0) * np.log(tc) + (b - 1.0) * np.log1p(-tc) - lbeta)
            # endpoint limits
            h0 = np.inf if a < 1.0 else (1.0 / math.exp(lbeta) if a == 1.0 else 0.0)
            h1 = np.inf if b < 1.0 else (1.0 / math.exp(lbeta) if b == 1.0 else 0.0)
            h = np.where(inside, h, np.where(t == 0.0, h0, np.where(t == 1.0, h1, 0.0)))
        return _checked_density(t, h, "beta")

    def cdf(t):
        return reg_inc_beta_array(_clip_unit(_arr(t)), a, b)

    if b == 1.0:
        quantile = power_gen(a).quantile
    elif a == 1.0:
        quantile = reflected_power_gen(b).quantile
    else:
        _q = np.frompyfunc(lambda u: inv_reg_inc_beta(u, a, b), 1, 1)

        def quantile(u):
            return _out(np.asarray(_q(_clip_unit(_arr(u))), dtype=float))

    return GeneratorDistribution(pdf, cdf, quantile, name=f"beta({a:g},{b:g})")


def kumaraswamy_gen(params: KumGenParams) -> GeneratorDistribution:
    """Kumaraswamy(a, b): H(t) = 1 - (1 - t^a)^b, explicit quantile."""
    a, b = params.a, params.b

    def pdf(t):
        t = _arr(t)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            ta = np.power(t, a)
            h = a * b * _pow(t, a - 1.0) * _pow(1.0 - ta, b - 1.0)
        h = np.where((t < 0.0) | (t > 1.0), 0.0, h)
        return _checked_density(t, h, "Kumaraswamy")

    def cdf(t):
        t = _clip_unit(_arr(t))
        with np.errstate(divide="ignore"):
            return _out(-np.expm1(b * np.log1p(-np.power(t, a))))

    def quantile(u):
        u = _clip_unit(_arr(u))
        return _out(np.power(-np.expm1(np.log1p(-u) / b), 1.0 / a))

    return GeneratorDistribution(pdf, cdf, quantile, name=f"kumaraswamy({a:g},{b:g})")


def bm_gen(params: BmGenParams) -> GeneratorDistribution:
    """Beta mixture ``p Beta(alpha, 1) + (1 - p) Beta(1, beta)``.

    H(t) = p t^alpha + (1 - p) [1 - (1 - t)^beta].  Built in closed form so that
    the degenerate weights p = 0 and p = 1 are allowed.
    """
    a, b, p = params.alpha, params.beta, params.p
    if p == 1.0:
        return power_gen(a)
    if p == 0.0:
        return reflected_power_gen(b)
    g1, g2 = power_gen(a), reflected_power_gen(b)

    def pdf(t):
        t = _arr(t)
        with np.errstate(invalid="ignore"):
            h = p * _power_pdf(t, a) + (1.0 - p) * _reflected_pdf(t, b)
        return _checked_density(t, h, "beta mixture")

    def cdf(t):
        t = _arr(t)
        return _out(p * np.asarray(g1.cdf(t)) + (1.0 - p) * np.asarray(g2.cdf(t)))

    return GeneratorDistribution(pdf, cdf, None, name=f"bm({a:g},{b:g},{p:g})")
