import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import stats
from tailscore._private_tools.exceptions import ConstructionError, InputArgumentError, PreconditionError
from tailscore.distribution import (DiscreteDistribution, Level, QuantileInterval, make_discrete, cdf, var_minus,
                                    var_plus, quantile_interval, in_M_p, in_M_ge, expectation, tail_distribution,
                                    left_tail_distribution, body_distribution, mix_with_atom, mixture, discretize)


def pairs_of(F):
    return [(float(atom), float(mass)) for atom, mass in F.to_pairs()]


def test_make_discrete(U4):
    assert pairs_of(U4) == [(1.0, .25), (2.0, .25), (3.0, .25), (4.0, .25)]
    assert make_discrete([(2, 1)]).to_pairs() == [(2.0, 1.0)]
    assert make_discrete([(1, .5), (1, .5)]).to_pairs() == [(1.0, 1.0)]


def test_masses_are_normalized_and_sorted():
    F = make_discrete([(3, 2.0), (1, 1.0), (2, 1.0)])
    assert F.atoms.tolist() == [1.0, 2.0, 3.0]
    assert F.masses.sum() == pytest.approx(1.0, abs=1e-12)
    assert F.masses[-1] == pytest.approx(0.5)


@pytest.mark.parametrize('pairs', [[], [(1.0, -0.5), (2.0, 1.5)], [(np.inf, 1.0)], [(1.0, np.nan)], [(1.0, 0.0)]])
def test_construction_errors(pairs):
    with pytest.raises(ConstructionError):
        make_discrete(pairs)


def test_immutable(U4):
    with pytest.raises(AttributeError):
        U4.atoms = np.zeros(4)
    with pytest.raises(ValueError):
        U4.masses[0] = 1.0


def test_cdf(U4, delta2):
    assert cdf(U4, 2) == 0.5
    assert cdf(delta2, 1.9) == 0.0
    assert cdf(U4, 10) == 1.0
    assert U4.cdf_left(2) == 0.25
    assert np.allclose(U4.cdf([0.5, 1.0, 3.5]), [0.0, 0.25, 0.75])


def test_quantiles(U4, delta2):
    assert var_minus(U4, 0.5) == 2.0
    assert var_plus(U4, 0.5) == 3.0
    assert var_minus(U4, 0.6) == 3.0 == var_plus(U4, 0.6)
    for p in (0.1, 0.5, 0.99):
        assert var_minus(delta2, p) == 2.0
    assert quantile_interval(U4, 0.5) == QuantileInterval(2.0, 3.0)
    assert quantile_interval(U4, 0.6).is_singleton
    assert quantile_interval(delta2, 0.3) == QuantileInterval(2.0, 2.0)


@pytest.mark.parametrize('p', [0.0, 1.0, -0.1, 1.5, np.nan])
def test_levels_outside_the_open_interval(U4, p):
    with pytest.raises(InputArgumentError):
        var_minus(U4, p)
    with pytest.raises(InputArgumentError):
        Level(p)


def test_quantile_interval_contains(U4):
    interval = U4.quantile_interval(0.5)
    assert 2.5 in interval and 3.5 not in interval
    assert interval.width == 1.0
    with pytest.raises(InputArgumentError):
        QuantileInterval(3.0, 2.0)


def test_in_M_p(U4, delta2):
    assert in_M_p(U4, 0.5)
    assert not in_M_p(U4, 0.4)
    assert not in_M_p(delta2, 0.5)
    assert in_M_ge(U4, 1.0) and not in_M_ge(U4, 1.5)


def test_expectation(U4, delta2):
    assert expectation(U4, lambda y: y) == 2.5
    assert expectation(delta2, lambda y: y * y) == 4.0
    assert expectation(U4, lambda y: (y > 2).astype(float)) == 0.5
    with pytest.raises(InputArgumentError):
        expectation(U4, lambda y: 1.0 / (y - 1.0))


def test_tail_distribution(U4, delta2):
    assert tail_distribution(U4, 0.5).is_close(make_discrete([(3, .5), (4, .5)]))
    assert tail_distribution(delta2, 0.5).is_close(delta2)
    assert tail_distribution(U4, 0.375).is_close(make_discrete([(2, .2), (3, .4), (4, .4)]))


def test_left_tail_distribution(U4, delta2):
    assert left_tail_distribution(U4, 0.5).is_close(make_discrete([(1, .5), (2, .5)]))
    assert left_tail_distribution(U4, 1.0) is U4
    assert left_tail_distribution(delta2, 0.5).is_close(delta2)


def test_body_distribution(U4, delta2):
    assert body_distribution(U4, 0.25, 0.75).is_close(make_discrete([(2, .5), (3, .5)]))
    assert body_distribution(U4, 0.5, 0.75).is_close(make_discrete([(3, 1)]))
    assert body_distribution(delta2, 0.25, 0.75).is_close(delta2)
    with pytest.raises(InputArgumentError):
        body_distribution(U4, 0.75, 0.25)


def test_mix_with_atom():
    G = make_discrete([(3, .5), (4, .5)])
    F = mix_with_atom(G, 0.5, 2.0)
    assert F.is_close(make_discrete([(2, .5), (3, .25), (4, .25)]))
    assert tail_distribution(F, 0.5).is_close(G)
    assert mix_with_atom(make_discrete([(3, 1)]), 0.5, 3.0).to_pairs() == [(3.0, 1.0)]
    with pytest.raises(PreconditionError):
        mix_with_atom(G, 0.5, 3.5)


def test_mixture(U4):
    assert mixture(make_discrete([(1, 1)]), make_discrete([(3, 1)]), 0.5).is_close(make_discrete([(1, .5), (3, .5)]))
    assert mixture(U4, U4, 0.3).is_close(U4)
    assert np.allclose(mixture(make_discrete([(1, 1)]), make_discrete([(2, 1)]), 0.25).masses, [.75, .25])
    with pytest.raises(InputArgumentError):
        mixture(U4, U4, 1.0)


def test_shift_scale_reflect(U4):
    assert U4.shift(-1.0).var_minus(0.5) == 1.0
    assert U4.scale(2.0).atoms.tolist() == [2.0, 4.0, 6.0, 8.0]
    assert U4.reflect().atoms.tolist() == [-4.0, -3.0, -2.0, -1.0]
    with pytest.raises(InputArgumentError):
        U4.scale(-1.0)


def test_from_sample():
    F = DiscreteDistribution.from_sample([4, 1, 3, 2, 2])
    assert pairs_of(F) == [(1.0, .2), (2.0, .4), (3.0, .2), (4.0, .2)]
    with pytest.raises(ConstructionError):
        DiscreteDistribution.from_sample([])


def test_discretize_normal():
    F = discretize(stats.norm(), 10000)
    assert F.n_atoms == 10000
    assert F.mean() == pytest.approx(0.0, abs=1e-9)
    assert F.var_minus(0.975) == pytest.approx(stats.norm.ppf(0.975), abs=2e-3)


atoms = st.lists(st.integers(-20, 20), min_size=1, max_size=8)
levels = st.floats(0.01, 0.99)


@given(values=atoms, p=levels)
@settings(max_examples=200, deadline=None)
def test_tail_distribution_is_supported_on_the_right_quantile_and_above(values, p):
    F = DiscreteDistribution.from_sample(values)
    tail = tail_distribution(F, p)
    assert tail.min_atom >= F.var_minus(p)
    assert tail.masses.sum() == pytest.approx(1.0, abs=1e-12)


@given(values=atoms, p=levels, q=levels)
@settings(max_examples=200, deadline=None)
def test_body_distribution_lies_between_the_quantiles(values, p, q):
    p, q = sorted((p, q))
    if q - p < 1e-3:
        return
    F = DiscreteDistribution.from_sample(values)
    body = body_distribution(F, p, q)
    assert F.var_minus(p) <= body.min_atom <= body.max_atom <= F.var_plus(q)


@given(values=atoms, p=levels, p_inner=levels)
@settings(max_examples=200, deadline=None)
def test_tail_of_a_tail_is_a_tail(values, p, p_inner):
    F = DiscreteDistribution.from_sample(values)
    nested = tail_distribution(tail_distribution(F, p), p_inner)
    assert nested.is_close(tail_distribution(F, p + (1.0 - p) * p_inner))


@given(values=atoms, p=levels, q=levels)
@settings(max_examples=200, deadline=None)
def test_body_is_the_left_tail_of_the_tail(values, p, q):
    p, q = sorted((p, q))
    if q - p < 1e-3:
        return
    F = DiscreteDistribution.from_sample(values)
    nested = left_tail_distribution(tail_distribution(F, p), (q - p) / (1.0 - p))
    assert body_distribution(F, p, q).is_close(nested)


@given(values=atoms, p=levels, q=levels)
@settings(max_examples=200, deadline=None)
def test_quantiles_are_ordered_and_monotone_in_the_level(values, p, q):
    p, q = sorted((p, q))
    F = DiscreteDistribution.from_sample(values)
    assert F.var_minus(p) <= F.var_plus(p)
    assert F.var_minus(q) <= F.var_plus(q)
    assert F.var_minus(p) <= F.var_minus(q)
    assert F.var_plus(p) <= F.var_plus(q)
