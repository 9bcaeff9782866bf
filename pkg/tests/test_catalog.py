import math

import numpy as np
import pytest

from genlap.catalog import (
    FAMILY_IDS,
    CatalogEntry,
    catalog_cdf,
    catalog_hazard,
    catalog_pdf,
    catalog_survival,
    composed,
    default_grid,
    make_entry,
    oracle_check,
)
from genlap.errors import DomainError
from genlap.framework import numeric_moment
from genlap.specfun import log_gamma

from .cases import CATALOG_CASES, CATALOG_FLAT

IDS = [f"{f}-{i % 3}" for i, (f, _) in enumerate(CATALOG_FLAT)]


def test_family_ids_are_stable():
    assert FAMILY_IDS == (
        "beta-exponential", "beta-weibull", "beta-gumbel", "beta-laplace", "beta-pareto", "beta-rayleigh",
        "kum-weibull", "kum-laplace", "kum-gumbel", "kum-lindley", "kum-half-cauchy",
    )
    assert set(CATALOG_CASES) == set(FAMILY_IDS)


@pytest.mark.parametrize("family, params", CATALOG_FLAT, ids=IDS)
def test_oracle_agreement(family, params):
    e = make_entry(family, **params)
    dpdf, dcdf = oracle_check(e, default_grid(e))
    assert dpdf <= 1e-10
    assert dcdf <= 1e-10


@pytest.mark.parametrize("family, params", CATALOG_FLAT, ids=IDS)
def test_hazard_identity(family, params):
    e = make_entry(family, **params)
    x = default_grid(e)
    g = catalog_pdf(e, x)
    h = catalog_hazard(e, x)
    assert np.max(np.abs(h * (1 - catalog_cdf(e, x)) - g) / np.maximum(1.0, h)) <= 1e-12


@pytest.mark.parametrize("family, params", CATALOG_FLAT, ids=IDS)
def test_law_shape(family, params):
    e = make_entry(family, **params)
    x = default_grid(e, 401)
    assert np.all(catalog_pdf(e, x) >= 0.0)
    c = catalog_cdf(e, x)
    assert np.all(np.diff(c) >= 0.0)
    assert np.max(np.abs(c + catalog_survival(e, x) - 1.0)) <= 1e-14
    lo, hi = composed(e).quantile(np.array([1e-9, 1 - 1e-9]))
    assert catalog_cdf(e, lo) < 1e-8 and catalog_cdf(e, hi) > 1 - 1e-8


def test_beta_exponential_reduces_to_exponential():
    e = make_entry("beta-exponential", alpha=1, beta=1, lam=2)
    assert catalog_pdf(e, 1.0) == pytest.approx(2 * math.exp(-2), abs=1e-15)


def test_kum_laplace_median():
    assert catalog_cdf(make_entry("kum-laplace", a=1, b=1), 0.0) == pytest.approx(0.5, abs=1e-15)


def test_kum_weibull_unit_shapes_is_weibull():
    e = make_entry("kum-weibull", a=1, b=1, c=2, lam=1)
    x = np.linspace(0.01, 3, 50)
    assert np.allclose(catalog_cdf(e, x), 1 - np.exp(-x**2), atol=1e-15, rtol=0)


@pytest.mark.parametrize("alpha", [0.6, 1.0, 2.5])
def test_beta_laplace_matches_kum_laplace_when_b_is_one(alpha):
    b = make_entry("beta-laplace", alpha=alpha, beta=1.0)
    k = make_entry("kum-laplace", a=alpha, b=1.0)
    x = np.linspace(-10, 10, 201)
    assert np.max(np.abs(catalog_pdf(b, x) - catalog_pdf(k, x))) <= 1e-12
    assert np.max(np.abs(catalog_cdf(b, x) - catalog_cdf(k, x))) <= 1e-12


def test_beta_pareto_mean():
    a, b, theta, k = 2.0, 3.0, 1.0, 4.0
    e = make_entry("beta-pareto", alpha=a, beta=b, theta=theta, k=k)
    closed = theta * math.exp(log_gamma(a + b) + log_gamma(b - 1 / k) - log_gamma(b) - log_gamma(a + b - 1 / k))
    assert numeric_moment(composed(e), 1) == pytest.approx(closed, abs=1e-7)


def test_below_support():
    e = make_entry("beta-pareto", alpha=2, beta=3, theta=1, k=4)
    assert catalog_pdf(e, 0.5) == 0.0 and catalog_cdf(e, 0.5) == 0.0
    e = make_entry("kum-lindley", a=2, b=3, theta=1)
    assert catalog_pdf(e, -1.0) == 0.0 and catalog_cdf(e, -1.0) == 0.0


@pytest.mark.parametrize("family, params", [
    ("beta-weibull", {"alpha": -1, "beta": 1}),
    ("kum-weibull", {"a": 1, "b": 0}),
    ("kum-lindley", {"a": 1, "b": 1, "theta": -2}),
    ("beta-gumbel", {"alpha": 1}),
    ("beta-gumbel", {"alpha": 1, "beta": 1, "phi": 2}),
    ("no-such", {}),
])
def test_invalid_entries(family, params):
    with pytest.raises(DomainError):
        CatalogEntry(family, params)


def test_array_and_scalar_shapes():
    e = make_entry("kum-gumbel", a=2, b=3)
    assert isinstance(catalog_pdf(e, 0.3), float)
    assert catalog_cdf(e, np.zeros((2, 3))).shape == (2, 3)
