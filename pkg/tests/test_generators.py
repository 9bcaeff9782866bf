import math

import numpy as np
import pytest
from scipy import integrate

from genlap.errors import DomainError, RangeError
from genlap.framework import mix_generators
from genlap.generators import (
    BetaGenParams,
    BmGenParams,
    KumGenParams,
    beta_gen,
    bm_gen,
    kumaraswamy_gen,
    power_gen,
    reflected_power_gen,
    uniform_gen,
)

T = np.linspace(0.001, 0.999, 499)

ALL_GENERATORS = [
    uniform_gen(),
    beta_gen(BetaGenParams(2.5, 0.7)),
    beta_gen(BetaGenParams(0.5, 0.5)),
    beta_gen(BetaGenParams(3.0, 4.0)),
    kumaraswamy_gen(KumGenParams(2.0, 3.0)),
    kumaraswamy_gen(KumGenParams(0.4, 1.7)),
    power_gen(0.6),
    reflected_power_gen(2.2),
    bm_gen(BmGenParams(2.0, 3.0, 0.5)),
    bm_gen(BmGenParams(0.8, 0.9, 0.3)),
]


@pytest.mark.parametrize("gen", ALL_GENERATORS, ids=lambda g: g.name)
def test_generator_laws(gen):
    assert gen.cdf(0.0) == 0.0
    assert gen.cdf(1.0) == pytest.approx(1.0, abs=1e-15)
    assert np.all(np.diff(gen.cdf(T)) >= 0.0)
    total, err = integrate.quad(lambda t: float(gen.pdf(t)), 0, 1, epsabs=1e-13, epsrel=1e-13, limit=200)
    assert total == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize("gen", ALL_GENERATORS, ids=lambda g: g.name)
def test_quantile_right_inverse(gen):
    u = np.linspace(0.01, 0.99, 99)
    assert np.max(np.abs(gen.cdf(gen.quantile(u)) - u)) <= 1e-10


def test_uniform():
    g = uniform_gen()
    assert g.cdf(0.3) == 0.3
    assert g.pdf(0.7) == 1.0
    assert g.quantile(0.42) == 0.42


def test_beta_gen_cases():
    u = uniform_gen()
    g = beta_gen(BetaGenParams(1, 1))
    assert np.array_equal(g.cdf(T), u.cdf(T))
    assert beta_gen(BetaGenParams(2, 3)).cdf(0.5) == pytest.approx(0.6875, abs=1e-15)


def test_kumaraswamy_examples():
    g = kumaraswamy_gen(KumGenParams(2, 3))
    assert g.cdf(0.5) == pytest.approx(1 - 0.75**3, abs=1e-15)
    assert g.quantile(g.cdf(0.37)) == pytest.approx(0.37, abs=1e-12)
    one = kumaraswamy_gen(KumGenParams(1, 1))
    assert np.allclose(one.cdf(T), T, atol=1e-15, rtol=0)
    assert np.allclose(one.pdf(T), 1.0, atol=1e-15, rtol=0)


def test_power_and_reflected():
    assert power_gen(2.0).cdf(0.5) == 0.25
    assert reflected_power_gen(3.0).cdf(0.5) == 0.875
    assert np.allclose(power_gen(1.0).cdf(T), T, atol=1e-15, rtol=0)
    assert np.allclose(reflected_power_gen(1.0).cdf(T), T, atol=1e-15, rtol=0)


@pytest.mark.parametrize("a", [0.3, 1.0, 2.0, 5.5])
def test_power_matches_beta_cases(a):
    assert np.max(np.abs(power_gen(a).pdf(T) - beta_gen(BetaGenParams(a, 1.0)).pdf(T))) <= 1e-14 * max(1, a) * 10
    assert np.max(np.abs(reflected_power_gen(a).pdf(T) - beta_gen(BetaGenParams(1.0, a)).pdf(T))) <= 1e-14 * max(1, a) * 10
    assert np.max(np.abs(power_gen(a).cdf(T) - beta_gen(BetaGenParams(a, 1.0)).cdf(T))) <= 1e-14


@pytest.mark.parametrize("a, b, p", [(2, 3, 0.5), (0.7, 1.4, 0.2), (3.5, 0.6, 0.9)])
def test_bm_equals_generic_mixture(a, b, p):
    bm = bm_gen(BmGenParams(a, b, p))
    mix = mix_generators([(p, power_gen(a)), (1 - p, reflected_power_gen(b))])
    assert np.max(np.abs(bm.pdf(T) - mix.pdf(T))) <= 1e-14
    assert np.max(np.abs(bm.cdf(T) - mix.cdf(T))) <= 1e-14


def test_bm_examples():
    assert bm_gen(BmGenParams(2, 3, 0.5)).cdf(0.5) == pytest.approx(0.5625, abs=1e-15)
    p1 = bm_gen(BmGenParams(2.0, 3.0, 1.0))
    assert np.array_equal(p1.cdf(T), power_gen(2.0).cdf(T))
    for p in (0.0, 0.3, 1.0):
        g = bm_gen(BmGenParams(1.0, 1.0, p))
        assert np.allclose(g.cdf(T), T, atol=1e-15, rtol=0)


def test_endpoint_limits():
    assert beta_gen(BetaGenParams(2.0, 3.0)).pdf(0.0) == 0.0
    assert beta_gen(BetaGenParams(1.0, 3.0)).pdf(0.0) == pytest.approx(3.0)
    with pytest.raises(RangeError):
        beta_gen(BetaGenParams(0.5, 3.0)).pdf(0.0)
    with pytest.raises(RangeError):
        power_gen(0.5).pdf(0.0)
    assert power_gen(2.0).pdf(1.0) == 2.0


@pytest.mark.parametrize("ctor, args", [
    (BetaGenParams, (0.0, 1.0)),
    (BetaGenParams, (1.0, -1.0)),
    (KumGenParams, (float("nan"), 1.0)),
    (BmGenParams, (1.0, 1.0, 1.5)),
    (BmGenParams, (1.0, 1.0, -0.1)),
])
def test_invalid_params(ctor, args):
    with pytest.raises(DomainError):
        ctor(*args)


def test_power_gen_rejects():
    with pytest.raises(DomainError):
        power_gen(-1.0)
    with pytest.raises(DomainError):
        reflected_power_gen(math.inf)
