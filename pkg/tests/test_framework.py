import math

import numpy as np
import pytest

from genlap.basedist import LaplaceParams, laplace, make_family
from genlap.catalog import catalog_pdf, make_entry
from genlap.errors import ConvergenceError, DomainError
from genlap.framework import (
    MixtureWeights,
    compose,
    ks_statistic,
    mix_generators,
    numeric_moment,
    numeric_quantile,
    sample_inverse,
)
from genlap.generators import (
    BetaGenParams,
    KumGenParams,
    beta_gen,
    kumaraswamy_gen,
    power_gen,
    reflected_power_gen,
    uniform_gen,
)
from genlap.specfun import log_gamma

GRID = np.linspace(-8.0, 8.0, 201)

BASES = [
    laplace(),
    laplace(LaplaceParams(1.0, 2.0)),
    make_family("normal", mu=0.0, sigma=1.0),
    make_family("gumbel", mu=0.5, sigma=1.5),
    make_family("cauchy", theta=0.0, lam=1.0),
]


@pytest.mark.parametrize("base", BASES, ids=lambda b: b.name)
def test_uniform_generator_is_identity(base):
    g = compose(base, uniform_gen())
    assert np.max(np.abs(g.pdf(GRID) - base.pdf(GRID))) <= 1e-14
    assert np.max(np.abs(g.cdf(GRID) - base.cdf(GRID))) <= 1e-14


@pytest.mark.parametrize("alpha", [0.5, 2.0, 3.7])
def test_power_generator_cdf(alpha):
    base = laplace()
    g = compose(base, power_gen(alpha))
    assert np.max(np.abs(g.cdf(GRID) - base.cdf(GRID) ** alpha)) <= 1e-15


@pytest.mark.parametrize("y", [0.1, 1.0, 3.0])
def test_compose_matches_beta_exponential(y):
    g = compose(make_family("exponential", lam=1.5), beta_gen(BetaGenParams(2.0, 3.0)))
    e = make_entry("beta-exponential", alpha=2.0, beta=3.0, lam=1.5)
    assert g.pdf(y) == pytest.approx(catalog_pdf(e, y), abs=1e-14)


@pytest.mark.parametrize("base", BASES, ids=lambda b: b.name)
@pytest.mark.parametrize("p", [0.25, 0.5, 0.9])
def test_mixture_commutes_with_composition(base, p):
    h1, h2 = beta_gen(BetaGenParams(2.0, 0.6)), kumaraswamy_gen(KumGenParams(1.5, 3.0))
    mixed = compose(base, mix_generators([(p, h1), (1 - p, h2)]))
    g1, g2 = compose(base, h1), compose(base, h2)
    assert np.max(np.abs(mixed.pdf(GRID) - (p * g1.pdf(GRID) + (1 - p) * g2.pdf(GRID)))) <= 1e-12
    assert np.max(np.abs(mixed.cdf(GRID) - (p * g1.cdf(GRID) + (1 - p) * g2.cdf(GRID)))) <= 1e-12


def test_single_component_mixture_unchanged():
    g = power_gen(2.0)
    assert mix_generators([(1.0, g)]) is g


def test_mixture_example():
    m = mix_generators([(0.5, power_gen(2.0)), (0.5, reflected_power_gen(3.0))])
    assert m.cdf(0.5) == pytest.approx(0.5625, abs=1e-15)
    assert m.cdf(m.quantile(0.3)) == pytest.approx(0.3, abs=1e-12)


@pytest.mark.parametrize("weights", [(0.5, 0.6), (1.0, 0.0), (-0.2, 1.2), ()])
def test_bad_mixture_weights(weights):
    with pytest.raises(DomainError):
        MixtureWeights(weights)


@pytest.mark.parametrize("a", [0.5, 1.0, 2.5])
def test_symmetry(a):
    g = compose(laplace(), beta_gen(BetaGenParams(a, a)))
    x = np.linspace(0, 10, 201)
    assert np.max(np.abs(g.pdf(x) - g.pdf(-x))) <= 1e-12
    assert numeric_quantile(g, 0.5) == pytest.approx(0.0, abs=1e-9)


@pytest.mark.parametrize("a", [1.5, 3.0, 7.0])
def test_mode_preserved(a):
    g = compose(laplace(), beta_gen(BetaGenParams(a, a)))
    x = np.linspace(-5, 5, 1001)
    assert abs(x[np.argmax(g.pdf(x))]) <= x[1] - x[0]


def test_numeric_quantile():
    d = compose(laplace(), uniform_gen())
    assert numeric_quantile(d, 0.25) == pytest.approx(math.log(0.5), abs=1e-10)
    g = compose(make_family("gumbel", mu=0, sigma=1), beta_gen(BetaGenParams(2.0, 0.5)))
    q = np.random.default_rng(0).uniform(size=50)
    assert np.max(np.abs(g.cdf(numeric_quantile(g, q)) - q)) <= 1e-10
    with pytest.raises(DomainError):
        numeric_quantile(g, 0.0)
    with pytest.raises(DomainError):
        numeric_quantile(g, 1.0)


def test_numeric_quantile_half_line():
    g = compose(make_family("pareto", theta=2.0, k=1.0), kumaraswamy_gen(KumGenParams(2, 3)))
    assert g.cdf(numeric_quantile(g, 0.999)) == pytest.approx(0.999, abs=1e-10)
    assert numeric_quantile(g, 1e-9) >= 2.0


def test_sample_inverse():
    d = compose(laplace(), uniform_gen())
    s = sample_inverse(d, 100_000, 2024)
    assert ks_statistic(s, d.cdf) < 1.63 / math.sqrt(s.size)
    assert np.array_equal(s[:10], sample_inverse(d, 10, 2024)[:10])
    with pytest.raises(DomainError):
        sample_inverse(d, 0, 1)


def test_moments():
    assert numeric_moment(laplace(), 2) == pytest.approx(2.0, abs=1e-8)
    g = compose(laplace(), beta_gen(BetaGenParams(2.0, 2.0)))
    assert numeric_moment(g, 1) == pytest.approx(0.0, abs=1e-8)
    assert numeric_moment(g, 3) == pytest.approx(0.0, abs=1e-8)


def test_beta_pareto_mean():
    a, b, theta, k = 2.0, 3.0, 1.0, 4.0
    g = compose(make_family("pareto", theta=theta, k=k), beta_gen(BetaGenParams(a, b)))
    closed = theta * math.exp(log_gamma(a + b) + log_gamma(b - 1 / k) - log_gamma(b) - log_gamma(a + b - 1 / k))
    assert numeric_moment(g, 1) == pytest.approx(closed, abs=1e-7)


def test_moment_failure_is_signalled():
    with pytest.raises(ConvergenceError):
        numeric_moment(make_family("cauchy", theta=0.0, lam=1.0), 1)
    with pytest.raises(DomainError):
        numeric_moment(laplace(), 0)


def test_ks_statistic_empty():
    with pytest.raises(DomainError):
        ks_statistic([], laplace().cdf)
