import numpy as np
import pytest
from tailscore._private_tools.exceptions import InputArgumentError, UnknownRegistryNameError
from tailscore.building_blocks import (BuildingBlock, ConvexSpec, as_block, bounded_quadratic, square,
                                       get_building_block, registered_names, clipped_linear, exp_minus_one,
                                       indicator, piecewise_monotone_variation)


def test_registry_names():
    names = registered_names()
    assert 'phi.bounded_quadratic' in names and 'ell.exp_minus_one' in names
    assert registered_names('t') == ['t.identity', 't.one', 't.square']


def test_unknown_name():
    with pytest.raises(UnknownRegistryNameError) as error:
        get_building_block('g.cubic')
    assert 'g.identity' in str(error.value)


def test_fresh_instances():
    assert get_building_block('g.identity') is not get_building_block('g.identity')


def test_bounded_quadratic():
    phi = bounded_quadratic()
    x = np.linspace(-50.0, 50.0, 1001)
    assert np.all(np.abs(phi.dphi(x)) < 1.0)
    assert phi.derivative_bound == 1.0
    step = 1e-6
    numeric = (phi.phi(x + step) - phi.phi(x - step)) / (2.0 * step)
    assert np.allclose(numeric, phi.dphi(x), atol=1e-6)


def test_convex_spec_rejects_non_convex():
    with pytest.raises(InputArgumentError):
        ConvexSpec(lambda x: -x * x, lambda x: -2.0 * x)
    with pytest.raises(InputArgumentError):
        ConvexSpec(lambda x: x * x, lambda x: -2.0 * x)
    assert square().derivative_bound is None


def test_as_block():
    block = as_block(2.0, 'g')
    assert np.all(block(np.array([-1.0, 3.0])) == 2.0)
    assert block.variation(-1.0, 3.0) == 0.0
    assert as_block(None) is None
    wrapped = as_block(np.abs, 'u')
    assert isinstance(wrapped, BuildingBlock) and wrapped.variation is None
    assert as_block(wrapped) is wrapped
    with pytest.raises(InputArgumentError):
        BuildingBlock('g.bad', 3)


def test_losses_are_bounded_below():
    loss = clipped_linear(-1.0)
    assert loss(np.array([-5.0, -1.0, 2.0])).tolist() == [-1.0, -1.0, 2.0]
    assert loss.lower_bound == -1.0
    assert exp_minus_one().lower_bound == -1.0
    s = np.linspace(-4.0, 4.0, 81)
    step = 1e-6
    numeric = (loss.antiderivative(s + step) - loss.antiderivative(s - step)) / (2.0 * step)
    assert np.allclose(numeric, loss(s), atol=1e-6)


def test_indicator_variation():
    block = indicator(1.0, 2.0)
    assert block(np.array([0.5, 1.0, 1.5, 2.0])).tolist() == [0.0, 1.0, 1.0, 0.0]
    assert block.variation(0.0, 1.5) == 1.0
    assert block.variation(0.5, 1.0) == 1.0
    assert block.variation(1.0, 2.0) == 1.0
    assert block.variation(2.0, 3.0) == 0.0
    assert block.variation(0.0, 3.0) == 2.0
    assert block.variation(1.0, 3.0) == 1.0


def test_piecewise_monotone_variation():
    variation = piecewise_monotone_variation(lambda x: x * x, (0.0,))
    assert variation(-2.0, 3.0) == pytest.approx(13.0)
    assert get_building_block('t.square').variation(-2.0, 0.0) == pytest.approx(4.0)
