import numpy as np
import pytest
from tailscore._private_tools.exceptions import InputArgumentError, MonotonicityError
from tailscore.building_blocks import square, get_building_block
from tailscore.distribution import make_discrete
from tailscore.risk_measures import GeneratorSpec
from tailscore.scoring import (ScoreSpec, expected_score, min_slope_in_y, is_strictly_increasing_in_y,
                               bregman_score, quantile_score, pinball_score, fz_score, rvar_score, expectile_score,
                               ratio_score, shortfall_score, squared_error, monotone_repair, scaled, lift_score,
                               conditional_score, restrict_score, restrict_score_pair, left_tail_score, body_score,
                               tail_mean_score, tail_expectile_score, tail_shortfall_score, tail_ratio_score,
                               left_tail_mean_score, body_mean_score, FamilySpec, family_names)
from tailscore.verification import (Grid, certify_consistency, es_pair_value, pair_value, left_pair_value,
                                    triplet_value)

X_GRID = np.round(np.arange(0.0, 5.0 + 1e-9, 0.01), 12)


def argmin_set(S, F, grid=X_GRID):
    values = expected_score(S, (grid,), F)
    return grid[values <= values.min() + 1e-12 * (1.0 + abs(values.min()))]


def test_bregman_score(U4):
    S = bregman_score(square(), 'g.square')
    assert S(2.0, 5.0) == 9.0
    assert argmin_set(bregman_score(), U4).tolist() == [2.5]
    y = 1.7
    assert argmin_set(bregman_score(), make_discrete([(y, 1)])).tolist() == [y]


def test_pinball_score(U4):
    S = pinball_score(0.5)
    assert S(2.0, 5.0) == 1.5
    assert S(3.0, 3.0) == 0.0
    minimizers = argmin_set(S, U4)
    assert (minimizers.min(), minimizers.max()) == (2.0, 3.0)


def test_quantile_score_needs_increasing_g():
    with pytest.raises(InputArgumentError):
        quantile_score(0.5, lambda y: -y)
    with pytest.raises(InputArgumentError):
        quantile_score(1.5)


def test_fz_score(U4):
    S = fz_score(0.5)
    assert np.isfinite(S((2.0, 3.5), 3.5))
    report = certify_consistency(S, es_pair_value(0.5), [U4], Grid.uniform(0.0, 5.0, 0.25, 2))
    assert report.passed
    assert report.cases[0]['found'] == [(2.0, 3.0), (3.5, 3.5)]


def test_fz_score_is_the_lifted_mean_score():
    p = 0.5
    Sstar = monotone_repair(scaled(bregman_score(), 1.0 / (1.0 - p)), -1.0 / (1.0 - p))
    lifted = lift_score(Sstar, p)
    rng = np.random.default_rng(0)
    v, x, y = rng.uniform(-4.0, 9.0, (3, 2000))
    assert np.allclose(fz_score(p)((v, x), y), lifted((v, x), y), atol=1e-9)
    assert np.allclose(tail_mean_score(p)((v, x), y), fz_score(p)((v, x), y), atol=1e-9)


def test_fz_score_monotonicity_check():
    with pytest.raises(MonotonicityError) as error:
        fz_score(0.5, g='g.zero')
    assert error.value.witness is not None


def test_rvar_score(U4):
    S = rvar_score(0.25, 0.75)
    value = triplet_value(0.25, 0.75, GeneratorSpec('mean'))
    report = certify_consistency(S, value, [U4], Grid.uniform(0.0, 5.0, 0.5, 3))
    assert report.passed
    assert report.cases[0]['found'] == [(1.0, 2.0), (3.0, 4.0), (2.5, 2.5)]
    assert S.admissible(np.array([1.0, 3.0]), np.array([2.0, 2.0]), 0.0).tolist() == [True, False]


def test_body_score_reproduces_rvar_score():
    p, q = 0.25, 0.75
    body = body_score(scaled(bregman_score(), 1.0 / (q - p)), p, q)
    rng = np.random.default_rng(2)
    v1, v2, x, y = rng.uniform(-4.0, 9.0, (4, 10000))
    v1, v2 = np.minimum(v1, v2), np.maximum(v1, v2)
    assert np.allclose(body((v1, v2, x), y), rvar_score(p, q)((v1, v2, x), y), atol=1e-9)
    assert np.allclose(body_mean_score(p, q)((v1, v2, x), y), body((v1, v2, x), y), atol=1e-12)


def test_body_score_degenerate():
    delta = make_discrete([(2, 1)])
    report = certify_consistency(body_mean_score(0.25, 0.75), triplet_value(0.25, 0.75, GeneratorSpec('mean')),
                                 [delta], Grid.uniform(0.0, 4.0, 0.5, 3))
    assert report.passed


def test_expectile_score(two_point):
    S = expectile_score(0.5, square())
    assert S(1.0, 3.0) == pytest.approx(2.0)
    assert S(2.0, 2.0) == 0.0
    assert argmin_set(expectile_score(0.8), two_point).tolist() == [0.8]


def test_ratio_score():
    one, identity, sq = (get_building_block(name) for name in ('t.one', 'u.identity', 'u.square'))
    reduced = ratio_score(identity, one, square())
    assert reduced(2.0, 5.0) == pytest.approx(bregman_score(square())(2.0, 5.0))
    assert argmin_set(ratio_score(sq, one), make_discrete([(0, .5), (1, .5)])).tolist() == [0.5]
    grid = np.linspace(0.0, 2.0, 3001)
    best = argmin_set(ratio_score(get_building_block('u.one'), get_building_block('t.identity')),
                      make_discrete([(1, .5), (2, .5)]), grid)
    assert best.tolist() == pytest.approx([2.0 / 3.0], abs=1e-3)


def test_shortfall_score(U4):
    S = shortfall_score('ell.identity', lambda y: 0.5 * y * y)
    x, y = np.meshgrid(np.linspace(-3.0, 3.0, 7), np.linspace(-3.0, 3.0, 7))
    assert np.allclose(S((x,), y), 0.5 * (x - y)**2, atol=1e-12)
    assert argmin_set(shortfall_score('ell.identity'), U4).tolist() == [2.5]


def test_shortfall_score_by_quadrature():
    closed = shortfall_score('ell.clipped_linear')
    numeric = shortfall_score(lambda s: np.maximum(s, -1.0))
    for x, y in ((0.5, 2.0), (-1.5, 0.3), (3.0, -2.0)):
        assert numeric(x, y) == pytest.approx(closed(x, y), abs=1e-8)


def test_monotone_repair():
    repaired = monotone_repair(bregman_score(), -1.0)
    assert repaired.construction == 'repaired bregman'
    assert is_strictly_increasing_in_y(repaired)
    assert not is_strictly_increasing_in_y(bregman_score())
    assert min_slope_in_y(monotone_repair(expectile_score(0.8), -2.0))[0] > 0.0


def test_squared_error_cannot_be_repaired():
    from tailscore._private_tools.exceptions import RepairFailureError
    with pytest.raises(RepairFailureError) as error:
        monotone_repair(squared_error(), -10.0)
    assert len(error.value.witness) == 2


def test_repair_with_a_callable_bound():
    closed = monotone_repair(bregman_score(), -1.0)
    numeric = monotone_repair(bregman_score(), lambda y: -np.ones_like(y))
    y = np.linspace(-4.0, 14.0, 37)
    assert np.allclose(closed((1.0,), y), numeric((1.0,), y), atol=1e-9)


def test_scaled():
    S = scaled(pinball_score(0.5), 2.0)
    assert S(2.0, 5.0) == 3.0
    with pytest.raises(InputArgumentError):
        scaled(S, 0.0)


def test_lift_score_needs_an_increasing_score():
    with pytest.raises(MonotonicityError):
        lift_score(bregman_score(), 0.5)
    with pytest.raises(InputArgumentError):
        lift_score(fz_score(0.5), 0.5)


def test_tail_expectile_score(U4):
    value = pair_value(0.5, GeneratorSpec('expectile', tau=0.8))
    assert value(U4)[1][0] == pytest.approx(3.8, abs=1e-9)
    report = certify_consistency(tail_expectile_score(0.5, 0.8), value, [U4], Grid.uniform(0.0, 5.0, 0.1, 2))
    assert report.passed


def test_tail_scores_for_other_generators(U4):
    S = tail_shortfall_score(0.5, 'ell.clipped_linear')
    assert S.arity == 2 and is_strictly_increasing_in_y(S.parameters['generator'])
    ratio = tail_ratio_score(0.5, 'u.square', 't.one')
    value = pair_value(0.5, GeneratorSpec('ratio', u=get_building_block('u.square'),
                                          t=get_building_block('t.one')))
    assert certify_consistency(ratio, value, [U4], Grid([(0.0, 5.0, 0.25), (0.0, 20.0, 0.25)])).passed
    with pytest.raises(InputArgumentError):
        tail_mean_score(0.5, 'phi.square')


def test_conditional_score(U4):
    Sstar = squared_error()
    assert argmin_set(conditional_score(Sstar, 0.5, 2.0), U4).tolist() == [3.5]
    assert argmin_set(conditional_score(Sstar, 0.5, 2.5), U4).tolist() == [3.5]
    assert argmin_set(conditional_score(Sstar, 0.5, 3.0), make_discrete([(3, 1)])).tolist() == [3.0]


def test_restrict_score():
    G = make_discrete([(3, .5), (4, .5)])
    assert argmin_set(restrict_score(squared_error(), 0.5, 2.0), G).tolist() == [2.75]
    assert argmin_set(restrict_score(squared_error(), 0.5, 2.0), make_discrete([(2, 1)])).tolist() == [2.0]


def test_restrict_score_pair():
    S = restrict_score_pair(fz_score(0.5), 0.5, 2.0)
    assert argmin_set(S, make_discrete([(3, .5), (4, .5)])).tolist() == [3.5]
    assert argmin_set(S, make_discrete([(4, 1)])).tolist() == [4.0]


def test_left_tail_score_is_the_reflected_lifting():
    q = 0.3
    Sstar = bregman_score(a=lambda y: -2.0 * y)
    reflected = ScoreSpec(1, lambda x, y: Sstar.evaluator(-x, -y), 'mean', 'reflected')
    left = left_tail_score(Sstar, q)
    right = lift_score(reflected, 1.0 - q, check=False)
    rng = np.random.default_rng(5)
    v, x, y = rng.uniform(-4.0, 4.0, (3, 2000))
    assert np.allclose(left((v, x), y), right((-v, -x), -y), atol=1e-12)


def test_left_tail_mean_score(U4):
    report = certify_consistency(left_tail_mean_score(0.5), left_pair_value(0.5, GeneratorSpec('mean')), [U4],
                                 Grid.uniform(0.0, 5.0, 0.25, 2))
    assert report.passed
    assert report.cases[0]['found'] == [(2.0, 3.0), (1.5, 1.5)]


def test_expected_score_arity(U4):
    with pytest.raises(InputArgumentError):
        expected_score(fz_score(0.5), 2.0, U4)


def test_family_spec_round_trip():
    family = FamilySpec('rvar', p=0.25, q=0.75, phi='phi.bounded_quadratic')
    assert FamilySpec.from_json(family.to_json()) == family
    assert family.build().arity == 3
    assert not family.is_identification
    identification = FamilySpec('id-var-es', p=0.5)
    assert identification.is_identification and identification.build().arity == 2


def test_family_spec_errors():
    with pytest.raises(InputArgumentError):
        FamilySpec('fz-typo', p=0.5)
    with pytest.raises(InputArgumentError):
        FamilySpec('fz').build()
    with pytest.raises(InputArgumentError):
        FamilySpec.from_dict({'construction': 'fz', 'level': 0.5})
    from tailscore._private_tools.exceptions import UnknownRegistryNameError
    with pytest.raises(UnknownRegistryNameError):
        FamilySpec('fz', p=0.5, phi='phi.cubic')


@pytest.mark.parametrize('name', family_names())
def test_every_family_builds(name):
    family = FamilySpec(name, p=0.25, q=0.75, tau=0.8, loss='ell.clipped_linear', u='u.square', t='t.one')
    built = family.build()
    assert built.arity in (1, 2, 3)
