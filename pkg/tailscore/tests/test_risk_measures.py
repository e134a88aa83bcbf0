import numpy as np
import pytest
from scipy import stats
from tailscore._private_tools.exceptions import BracketError, InputArgumentError
from tailscore.building_blocks import get_building_block, exp_minus_one
from tailscore.distribution import make_discrete, discretize
from tailscore.risk_measures import (integrate_var_plus, mean, variance, es, es_from_tail, rvar, lower_es, expectile,
                                     shortfall, ratio_of_expectations, GeneratorSpec, TailPairSpec, tail_risk,
                                     axiom_probe, are_comonotonic, law)
from tailscore.verification import random_family


def test_es(U4, delta2):
    assert es(U4, 0.5) == 3.5
    assert es(delta2, 0.9) == pytest.approx(2.0)
    assert es(U4, 0.75) == pytest.approx(4.0)


def test_es_equals_the_tail_mean():
    for F in random_family(20, seed=3):
        for p in (0.1, 0.5, 0.95):
            assert es(F, p) == pytest.approx(es_from_tail(F, p), abs=1e-12)


def test_rvar(U4, delta2):
    assert rvar(U4, 0.25, 0.75) == pytest.approx(2.5)
    assert rvar(delta2, 0.2, 0.8) == pytest.approx(2.0)
    assert rvar(U4, 0.5, 0.75) == pytest.approx(3.0)
    with pytest.raises(InputArgumentError):
        rvar(U4, 0.75, 0.25)


def test_lower_es_and_integral(U4):
    assert lower_es(U4, 0.5) == pytest.approx(1.5)
    assert integrate_var_plus(U4, 0.0, 1.0) == pytest.approx(2.5)
    assert mean(U4) == 2.5
    assert variance(U4) == pytest.approx(1.25)


def test_expectile(U4, delta2, two_point):
    assert expectile(U4, 0.5) == pytest.approx(2.5, abs=1e-9)
    assert expectile(two_point, 0.8) == pytest.approx(0.8, abs=1e-9)
    assert expectile(delta2, 0.3) == 2.0


def test_shortfall(U4, delta2, two_point):
    assert shortfall(U4, get_building_block('ell.identity')) == pytest.approx(2.5, abs=1e-9)
    assert shortfall(delta2, exp_minus_one()) == pytest.approx(2.0, abs=1e-9)
    assert shortfall(two_point, exp_minus_one()) == pytest.approx(np.log((1.0 + np.e) / 2.0), abs=1e-9)


def test_shortfall_takes_the_left_end_of_a_flat_zero_stretch(U4):
    def positive_part(x):
        return np.clip(x, 0.0, None)

    m = shortfall(U4, positive_part)
    assert 4.0 <= m <= 4.0 + 1e-9
    assert np.dot(positive_part(U4.atoms - m), U4.masses) <= 0.0


def test_shortfall_outside_the_admissible_class(U4):
    with pytest.raises(BracketError):
        shortfall(U4, lambda x: np.ones_like(x))


def test_ratio_of_expectations(U4, delta2, two_point):
    u, t = get_building_block('u.identity'), get_building_block('t.one')
    assert ratio_of_expectations(U4, u, t) == pytest.approx(2.5)
    assert ratio_of_expectations(two_point, get_building_block('u.square'), get_building_block('t.one')) == 0.5
    assert ratio_of_expectations(delta2, get_building_block('u.one'), get_building_block('t.square')) == 0.25
    with pytest.raises(InputArgumentError):
        ratio_of_expectations(two_point, get_building_block('u.one'), lambda y: y - 0.5)


def test_tail_risk(U4):
    assert tail_risk(TailPairSpec(GeneratorSpec('mean'), 0.5), U4) == 3.5
    body = TailPairSpec(GeneratorSpec('mean'), 0.25, variant='body', q=0.75)
    assert tail_risk(body, U4) == pytest.approx(2.5)
    left = TailPairSpec(GeneratorSpec('mean'), variant='left_tail', q=0.5)
    assert tail_risk(left, U4) == pytest.approx(1.5)


def test_tail_quantile_is_a_higher_quantile():
    p, alpha = 0.5, 0.9
    generator = GeneratorSpec('var_minus', alpha=(alpha - p) / (1.0 - p))
    for F in random_family(30, seed=11):
        assert tail_risk(TailPairSpec(generator, p), F) == F.var_minus(alpha)


def test_tail_expectile_at_one_half_is_es():
    spec = TailPairSpec(GeneratorSpec('expectile', tau=0.5), 0.5)
    for F in random_family(20, seed=5):
        assert tail_risk(spec, F) == pytest.approx(es(F, 0.5), abs=1e-9)


def test_generator_spec_errors():
    with pytest.raises(InputArgumentError):
        GeneratorSpec('median')
    with pytest.raises(InputArgumentError):
        GeneratorSpec('shortfall')
    with pytest.raises(InputArgumentError):
        TailPairSpec(GeneratorSpec('mean'), 0.5, variant='middle')


def test_rvar_limits():
    F = discretize(stats.norm(), 2000)
    p = 0.3123
    assert rvar(F, p, 1.0 - 1e-6) == pytest.approx(es(F, p), abs=1e-3)
    assert rvar(F, p, p + 1e-6) == pytest.approx(F.var_plus(p), abs=1e-3)


def test_axioms_of_es(U4):
    assert es(U4.scale(2.0), 0.5) == 7.0
    X = np.array([1.0, 2.0, 3.0, 4.0])
    Y = np.array([4.0, 1.0, 3.0, 2.0])
    measure = lambda F: es(F, 0.5)  # noqa: E731
    assert axiom_probe(measure, 'A1', [(X, X + 1.0)]).passed
    assert axiom_probe(measure, 'A2', [(X, -1.0), (Y, 2.5)]).passed
    assert axiom_probe(measure, 'A3', [(X, Y, 0.3)]).passed
    assert axiom_probe(measure, 'A4', [(X, 2.0)]).passed
    assert axiom_probe(measure, 'A5', [(X, Y)]).passed
    assert axiom_probe(measure, 'A6', [(X, 2.0 * X)]).passed


def test_var_is_translation_equivariant_but_not_subadditive(U4):
    assert U4.shift(-1.0).var_minus(0.5) == 1.0
    measure = lambda F: F.var_minus(0.6)  # noqa: E731
    X = np.array([0.0, 0.0, 0.0, 1.0])
    Y = np.array([0.0, 0.0, 1.0, 0.0])
    report = axiom_probe(measure, 'A5', [(X, Y)])
    assert not report.passed
    assert report.violation == 1.0
    assert report.n_instances == 1


def test_expectile_monotonicity():
    X = np.array([1.0, 2.0, 3.0, 4.0])
    assert axiom_probe(lambda F: expectile(F, 0.8), 'A1', [(X, X + 1.0)]).passed


def test_axiom_probe_input_errors():
    X = np.array([1.0, 2.0])
    with pytest.raises(InputArgumentError):
        axiom_probe(mean, 'A7', [(X, X)])
    with pytest.raises(InputArgumentError):
        axiom_probe(mean, 'A1', [(X + 1.0, X)])
    with pytest.raises(InputArgumentError):
        axiom_probe(mean, 'A6', [(X, -X)])


def test_comonotonic_and_law():
    assert are_comonotonic([1, 2, 3], [0, 5, 9])
    assert not are_comonotonic([1, 2, 3], [3, 2, 1])
    assert law([2.0, 2.0]).to_pairs() == [(2.0, 1.0)]
