"""Hand-coded beta-G and Kumaraswamy-G families.

Each entry writes its density, CDF and hazard directly in terms of the base
law's elementary functions, without going through :mod:`genlap.framework`.
That independence is the point: :func:`oracle_check` compares every entry
against the generic composition ``H(F(x))`` built from :mod:`genlap.basedist`
and :mod:`genlap.generators`.

Every density is the exact derivative of its CDF.  The forms most easily
written wrong are:

* beta-Laplace density: on x >= 0 the factor is ``(1 - e^{-x}/2)^{alpha-1}``
  with ``(e^{-x}/2)^beta`` in front (mirror image of the x < 0 branch).
* beta-Gumbel density: ``u = exp(-(x - mu)/sigma)``.
* beta-Pareto density: the last factor is ``(x/theta)^{-k beta - 1}``.
* Kum-Weibull and Kum-half-Cauchy densities: the last bracket is
  ``1 - F(x)^a`` raised to ``b - 1``.
* Kum-Laplace density on x >= mu: derivative of the CDF, see ``_kum_laplace``.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np

from .basedist import make_family
from .errors import DomainError
from .framework import GeneratedDistribution, compose
from .generators import BetaGenParams, KumGenParams, beta_gen, kumaraswamy_gen
from .specfun import RealInterval, log_beta, reg_inc_beta_array

__all__ = [
    "CatalogEntry",
    "FAMILY_IDS",
    "make_entry",
    "catalog_pdf",
    "catalog_cdf",
    "catalog_hazard",
    "catalog_survival",
    "composed",
    "oracle_check",
    "default_grid",
]

_HALF = RealInterval(0.0, math.inf)
_LINE = RealInterval(-math.inf, math.inf)


def _a(x):
    return np.asarray(x, dtype=float)


def _o(v):
    v = np.asarray(v, dtype=float)
    return v[()] if v.ndim == 0 else v


@dataclass(frozen=True)
class _Family:
    base: str
    generator: str  # "beta" or "kum"
    base_params: tuple[str, ...]
    defaults: dict[str, float]
    support: Callable[[dict], RealInterval]
    pdf: Callable
    cdf: Callable
    sf: Callable
    hazard: Callable | None = None


@dataclass(frozen=True)
class CatalogEntry:
    """A family id with its full parameter set (generator shapes + base params)."""

    family: str
    params: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise DomainError(f"unknown catalog family {self.family!r}; choose from {FAMILY_IDS}")
        spec = _FAMILIES[self.family]
        shape_names = ("alpha", "beta") if spec.generator == "beta" else ("a", "b")
        allowed = set(shape_names) | set(spec.base_params)
        extra = set(self.params) - allowed
        if extra:
            raise DomainError(f"unexpected parameters for {self.family}: {sorted(extra)}")
        full = {**spec.defaults, **{k: float(v) for k, v in self.params.items()}}
        missing = [n for n in shape_names if n not in full]
        if missing:
            raise DomainError(f"{self.family} needs parameters {missing}")
        for n in shape_names:
            if not (full[n] > 0.0) or not math.isfinite(full[n]):
                raise DomainError(f"{n} must be positive, got {full[n]}")
        # base params are validated by the base constructor
        make_family(spec.base, **{k: full[k] for k in spec.base_params})
        object.__setattr__(self, "params", full)

    @property
    def support(self) -> RealInterval:
        return _FAMILIES[self.family].support(self.params)


def make_entry(family: str, **params: float) -> CatalogEntry:
    return CatalogEntry(family, params)


# beta-G pieces: density = f F^{alpha-1} (1-F)^{beta-1} / B(alpha, beta)

def _beta_exponential_pdf(x, p):
    al, be, lam = p["alpha"], p["beta"], p["lam"]
    x = _a(x)
    xp = np.maximum(x, 0.0)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        v = lam / math.exp(log_beta(al, be)) * np.exp(-be * lam * xp) * np.power(-np.expm1(-lam * xp), al - 1.0)
    return np.where(x > 0.0, v, 0.0)


def _beta_exponential_cdf(x, p):
    return reg_inc_beta_array(-np.expm1(-p["lam"] * np.maximum(_a(x), 0.0)), p["alpha"], p["beta"])


def _beta_exponential_sf(x, p):
    return reg_inc_beta_array(np.exp(-p["lam"] * np.maximum(_a(x), 0.0)), p["beta"], p["alpha"])


def _beta_weibull_pdf(x, p):
    al, be, c, lam = p["alpha"], p["beta"], p["c"], p["lam"]
    x = _a(x)
    xp = np.maximum(x, 0.0)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        s = np.power(lam * xp, c)
        v = (c * lam**c / math.exp(log_beta(al, be)) * np.power(xp, c - 1.0)
             * np.exp(-be * s) * np.power(-np.expm1(-s), al - 1.0))
    return np.where(x > 0.0, v, 0.0)


def _beta_weibull_cdf(x, p):
    s = np.power(p["lam"] * np.maximum(_a(x), 0.0), p["c"])
    return reg_inc_beta_array(-np.expm1(-s), p["alpha"], p["beta"])


def _beta_weibull_sf(x, p):
    s = np.power(p["lam"] * np.maximum(_a(x), 0.0), p["c"])
    return reg_inc_beta_array(np.exp(-s), p["beta"], p["alpha"])


def _gumbel_u(x, p):
    with np.errstate(over="ignore"):
        return np.exp(-(_a(x) - p["mu"]) / p["sigma"])


def _beta_gumbel_pdf(x, p):
    al, be, s = p["alpha"], p["beta"], p["sigma"]
    u = _gumbel_u(x, p)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        v = u * np.exp(-al * u) * np.power(-np.expm1(-u), be - 1.0) / (s * math.exp(log_beta(al, be)))
    return np.where(np.isfinite(u) & (u > 0.0), v, 0.0)


def _beta_gumbel_cdf(x, p):
    return reg_inc_beta_array(np.exp(-_gumbel_u(x, p)), p["alpha"], p["beta"])


def _beta_gumbel_sf(x, p):
    return reg_inc_beta_array(-np.expm1(-_gumbel_u(x, p)), p["beta"], p["alpha"])


def _laplace_parts(x, p):
    z = (_a(x) - p["mu"]) / p["sigma"]
    return z, 0.5 * np.exp(-np.abs(z))


def _beta_laplace_pdf(x, p):
    al, be, s = p["alpha"], p["beta"], p["sigma"]
    z, e = _laplace_parts(x, p)
    c = 1.0 / (s * math.exp(log_beta(al, be)))
    left = c * np.power(e, al) * np.power(1.0 - e, be - 1.0)
    right = c * np.power(e, be) * np.power(1.0 - e, al - 1.0)
    return np.where(z < 0.0, left, right)


def _beta_laplace_cdf(x, p):
    al, be = p["alpha"], p["beta"]
    z, e = _laplace_parts(x, p)
    return np.where(z < 0.0, reg_inc_beta_array(e, al, be), 1.0 - reg_inc_beta_array(e, be, al))


def _beta_laplace_sf(x, p):
    al, be = p["alpha"], p["beta"]
    z, e = _laplace_parts(x, p)
    return np.where(z < 0.0, 1.0 - reg_inc_beta_array(e, al, be), reg_inc_beta_array(e, be, al))


def _beta_pareto_pdf(x, p):
    al, be, th, k = p["alpha"], p["beta"], p["theta"], p["k"]
    x = _a(x)
    r = np.maximum(x, th) / th
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        v = (k / (th * math.exp(log_beta(al, be))) * np.power(-np.expm1(-k * np.log(r)), al - 1.0)
             * np.power(r, -k * be - 1.0))
    return np.where(x > th, v, 0.0)


def _beta_pareto_cdf(x, p):
    r = np.maximum(_a(x), p["theta"]) / p["theta"]
    return reg_inc_beta_array(-np.expm1(-p["k"] * np.log(r)), p["alpha"], p["beta"])


def _beta_pareto_sf(x, p):
    r = np.maximum(_a(x), p["theta"]) / p["theta"]
    return reg_inc_beta_array(np.power(r, -p["k"]), p["beta"], p["alpha"])


def _beta_rayleigh_pdf(x, p):
    al, be, s = p["alpha"], p["beta"], p["sigma"]
    x = _a(x)
    xp = np.maximum(x, 0.0)
    w = 0.5 * (xp / s) ** 2
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        v = xp / (s**2 * math.exp(log_beta(al, be))) * np.exp(-w * be) * np.power(-np.expm1(-w), al - 1.0)
    return np.where(x > 0.0, v, 0.0)


def _beta_rayleigh_cdf(x, p):
    w = 0.5 * (np.maximum(_a(x), 0.0) / p["sigma"]) ** 2
    return reg_inc_beta_array(-np.expm1(-w), p["alpha"], p["beta"])


def _beta_rayleigh_sf(x, p):
    w = 0.5 * (np.maximum(_a(x), 0.0) / p["sigma"]) ** 2
    return reg_inc_beta_array(np.exp(-w), p["beta"], p["alpha"])


# Kum-G pieces: G = 1 - (1 - F^a)^b, density a b f F^{a-1} (1 - F^a)^{b-1},
# hazard a b f F^{a-1} / (1 - F^a)

def _kum(F, f, p):
    a, b = p["a"], p["b"]
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        Fa = np.power(F, a)
        pdf = a * b * f * np.power(F, a - 1.0) * np.power(1.0 - Fa, b - 1.0)
        cdf = -np.expm1(b * np.log1p(-Fa))
        sf = np.power(1.0 - Fa, b)
        hazard = a * b * f * np.power(F, a - 1.0) / (1.0 - Fa)
    return pdf, cdf, sf, hazard


def _kum_weibull(x, p):
    c, lam = p["c"], p["lam"]
    x = _a(x)
    xp = np.maximum(x, 0.0)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        s = np.power(lam * xp, c)
        f = np.where(x > 0.0, c * lam**c * np.power(xp, c - 1.0) * np.exp(-s), 0.0)
    F = -np.expm1(-s)
    return _kum(F, f, p)


def _kum_laplace(x, p):
    # x <  mu: F = e^z/2,      f = F / sigma
    # x >= mu: F = 1 - e^-z/2, f = e^-z / (2 sigma)
    # so g = a b F^a (1 - F^a)^{b-1} / sigma on the left and
    #    g = a b (e^-z/2) (1 - e^-z/2)^{a-1} [1 - (1 - e^-z/2)^a]^{b-1} / sigma on the right
    a, b, s = p["a"], p["b"], p["sigma"]
    z, e = _laplace_parts(x, p)
    F = np.where(z < 0.0, e, 1.0 - e)
    f = e / s
    return _kum(F, f, p)


def _kum_gumbel(x, p):
    a, b, s = p["a"], p["b"], p["sigma"]
    u = _gumbel_u(x, p)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        eau = np.exp(-a * u)
        pdf = a * b * u * eau * np.power(-np.expm1(-a * u), b - 1.0) / s
        cdf = -np.expm1(b * np.log1p(-eau))
        sf = np.power(-np.expm1(-a * u), b)
        hazard = a * b * u * eau / (s * -np.expm1(-a * u))
    ok = np.isfinite(u)
    return (np.where(ok, pdf, 0.0), np.where(ok, cdf, 0.0), np.where(ok, sf, 1.0), np.where(ok, hazard, 0.0))


def _kum_lindley(x, p):
    th = p["theta"]
    x = _a(x)
    xp = np.maximum(x, 0.0)
    f = np.where(x >= 0.0, th**2 / (th + 1.0) * (1.0 + xp) * np.exp(-th * xp), 0.0)
    F = 1.0 - (th + 1.0 + th * xp) / (th + 1.0) * np.exp(-th * xp)
    return _kum(F, f, p)


def _kum_half_cauchy(x, p):
    phi = p["phi"]
    x = _a(x)
    xp = np.maximum(x, 0.0)
    f = np.where(x >= 0.0, 2.0 / (math.pi * phi * (1.0 + (xp / phi) ** 2)), 0.0)
    F = 2.0 / math.pi * np.arctan(xp / phi)
    return _kum(F, f, p)


def _kum_family(fn):
    return (lambda x, p: fn(x, p)[0], lambda x, p: fn(x, p)[1],
            lambda x, p: fn(x, p)[2], lambda x, p: fn(x, p)[3])


def _beta_family(pdf, cdf, sf):
    return pdf, cdf, sf, None


_FAMILIES: dict[str, _Family] = {}


def _register(fid, base, gen, base_params, defaults, support, fns):
    pdf, cdf, sf, hazard = fns
    _FAMILIES[fid] = _Family(base, gen, base_params, defaults, support, pdf, cdf, sf, hazard)


_register("beta-exponential", "exponential", "beta", ("lam",), {"lam": 1.0}, lambda p: _HALF,
          _beta_family(_beta_exponential_pdf, _beta_exponential_cdf, _beta_exponential_sf))
_register("beta-weibull", "weibull", "beta", ("c", "lam"), {"c": 1.0, "lam": 1.0}, lambda p: _HALF,
          _beta_family(_beta_weibull_pdf, _beta_weibull_cdf, _beta_weibull_sf))
_register("beta-gumbel", "gumbel", "beta", ("mu", "sigma"), {"mu": 0.0, "sigma": 1.0}, lambda p: _LINE,
          _beta_family(_beta_gumbel_pdf, _beta_gumbel_cdf, _beta_gumbel_sf))
_register("beta-laplace", "laplace", "beta", ("mu", "sigma"), {"mu": 0.0, "sigma": 1.0}, lambda p: _LINE,
          _beta_family(_beta_laplace_pdf, _beta_laplace_cdf, _beta_laplace_sf))
_register("beta-pareto", "pareto", "beta", ("theta", "k"), {"theta": 1.0, "k": 1.0},
          lambda p: RealInterval(p["theta"], math.inf),
          _beta_family(_beta_pareto_pdf, _beta_pareto_cdf, _beta_pareto_sf))
_register("beta-rayleigh", "rayleigh", "beta", ("sigma",), {"sigma": 1.0}, lambda p: _HALF,
          _beta_family(_beta_rayleigh_pdf, _beta_rayleigh_cdf, _beta_rayleigh_sf))
_register("kum-weibull", "weibull", "kum", ("c", "lam"), {"c": 1.0, "lam": 1.0}, lambda p: _HALF,
          _kum_family(_kum_weibull))
_register("kum-laplace", "laplace", "kum", ("mu", "sigma"), {"mu": 0.0, "sigma": 1.0}, lambda p: _LINE,
          _kum_family(_kum_laplace))
_register("kum-gumbel", "gumbel", "kum", ("mu", "sigma"), {"mu": 0.0, "sigma": 1.0}, lambda p: _LINE,
          _kum_family(_kum_gumbel))
_register("kum-lindley", "lindley", "kum", ("theta",), {"theta": 1.0}, lambda p: _HALF,
          _kum_family(_kum_lindley))
_register("kum-half-cauchy", "half-cauchy", "kum", ("phi",), {"phi": 1.0}, lambda p: _HALF,
          _kum_family(_kum_half_cauchy))

FAMILY_IDS: tuple[str, ...] = tuple(_FAMILIES)


def catalog_pdf(entry: CatalogEntry, x):
    return _o(_FAMILIES[entry.family].pdf(x, entry.params))


def catalog_cdf(entry: CatalogEntry, x):
    return _o(np.clip(_FAMILIES[entry.family].cdf(x, entry.params), 0.0, 1.0))


def catalog_survival(entry: CatalogEntry, x):
    return _o(np.clip(_FAMILIES[entry.family].sf(x, entry.params), 0.0, 1.0))


def catalog_hazard(entry: CatalogEntry, x):
    """Hazard g / (1 - G); Kumaraswamy families use their simplified closed form."""
    fam = _FAMILIES[entry.family]
    if fam.hazard is not None:
        return _o(fam.hazard(x, entry.params))
    g = _a(fam.pdf(x, entry.params))
    r = _a(fam.sf(x, entry.params))
    with np.errstate(divide="ignore", invalid="ignore"):
        return _o(np.where(g == 0.0, 0.0, g / r))


def composed(entry: CatalogEntry) -> GeneratedDistribution:
    """The same family assembled generically as ``compose(base, generator)``."""
    fam = _FAMILIES[entry.family]
    p = entry.params
    base = make_family(fam.base, **{k: p[k] for k in fam.base_params})
    if fam.generator == "beta":
        gen = beta_gen(BetaGenParams(p["alpha"], p["beta"]))
    else:
        gen = kumaraswamy_gen(KumGenParams(p["a"], p["b"]))
    return compose(base, gen)


def default_grid(entry: CatalogEntry, n: int = 201) -> np.ndarray:
    """``n`` points spanning the bulk of the family, inside the open support."""
    fam = _FAMILIES[entry.family]
    p = entry.params
    base = make_family(fam.base, **{k: p[k] for k in fam.base_params})
    lo, hi = (float(v) for v in base.quantile(np.array([0.001, 0.995])))
    if fam.base == "pareto":
        lo = p["theta"] * 1.001
    return np.linspace(lo, hi, n)


def oracle_check(entry: CatalogEntry, grid) -> tuple[float, float]:
    """Max |hand-coded - composed| over ``grid`` for the density and the CDF."""
    grid = _a(grid)
    dist = composed(entry)
    dpdf = float(np.max(np.abs(_a(catalog_pdf(entry, grid)) - _a(dist.pdf(grid)))))
    dcdf = float(np.max(np.abs(_a(catalog_cdf(entry, grid)) - _a(dist.cdf(grid)))))
    return dpdf, dcdf
