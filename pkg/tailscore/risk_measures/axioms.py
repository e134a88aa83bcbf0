"""
Numerical probes of the classical risk measure axioms.

Random variables live on a common probability space of n equally likely
states and are given by their values on those states, so sums, scalings and
comonotonicity are taken state by state. The sign convention is the loss one
used throughout the library: larger values are riskier, and translation
equivariance reads rho(X + m) = rho(X) + m.
"""

from dataclasses import dataclass
from typing import Any, Optional
import numpy as np
from tailscore._private_tools.configuration import AXIOM_TOLERANCE
from tailscore._private_tools.exceptions import InputArgumentError
from tailscore.distribution import DiscreteDistribution

AXIOMS = {
    'A1': 'monotonicity',
    'A2': 'translation equivariance',
    'A3': 'convexity',
    'A4': 'positive homogeneity',
    'A5': 'subadditivity',
    'A6': 'comonotonic additivity',
}


@dataclass(frozen=True)
class AxiomReport:
    axiom: str
    passed: bool
    n_instances: int
    witness: Optional[Any] = None
    violation: float = 0.0


def law(values):
    """Distribution of a random variable given by its values on equally likely states."""

    values = np.asarray(values, dtype=float).ravel()
    return DiscreteDistribution(values, np.ones_like(values))


def are_comonotonic(X, Y):

    X = np.asarray(X, dtype=float)
    Y = np.asarray(Y, dtype=float)
    return bool(np.all(np.subtract.outer(X, X) * np.subtract.outer(Y, Y) >= 0.0))


def _as_states(values, n_states=None):

    values = np.asarray(values, dtype=float).ravel()
    if values.size == 0 or not np.all(np.isfinite(values)):
        raise InputArgumentError('instances', 'axiom_probe', 'random variables need finite values')
    if n_states is not None and values.size != n_states:
        raise InputArgumentError('instances', 'axiom_probe', 'random variables on different state spaces')

    return values


def _gap(axiom, measure, instance):
    """Signed violation of the axiom on one instance; positive means violated."""

    if axiom in ('A1', 'A3', 'A5', 'A6'):
        X = _as_states(instance[0])
        Y = _as_states(instance[1], X.size)

    if axiom == 'A1':
        if np.any(X > Y):
            raise InputArgumentError('instances', 'axiom_probe', 'A1 needs X <= Y state by state')
        return measure(law(X)) - measure(law(Y))

    if axiom == 'A2':
        X = _as_states(instance[0])
        m = float(instance[1])
        return abs(measure(law(X + m)) - measure(law(X)) - m)

    if axiom == 'A3':
        weight = float(instance[2])
        if not 0.0 <= weight <= 1.0:
            raise InputArgumentError('instances', 'axiom_probe', 'A3 needs a weight in [0, 1]')
        mixed = measure(law(weight * X + (1.0 - weight) * Y))
        return mixed - weight * measure(law(X)) - (1.0 - weight) * measure(law(Y))

    if axiom == 'A4':
        X = _as_states(instance[0])
        factor = float(instance[1])
        if not factor > 0.0:
            raise InputArgumentError('instances', 'axiom_probe', 'A4 needs a positive factor')
        return abs(measure(law(factor * X)) - factor * measure(law(X)))

    if axiom == 'A5':
        return measure(law(X + Y)) - measure(law(X)) - measure(law(Y))

    if not are_comonotonic(X, Y):
        raise InputArgumentError('instances', 'axiom_probe', 'A6 needs comonotonic X and Y')
    return abs(measure(law(X + Y)) - measure(law(X)) - measure(law(Y)))


def axiom_probe(measure, axiom, instances, tolerance=AXIOM_TOLERANCE):
    """Check one axiom of a risk measure on the supplied instances.

    Parameters
    ----------
    measure : callable
        Map from a :class:`DiscreteDistribution` to a real number.
    axiom : {'A1', 'A2', 'A3', 'A4', 'A5', 'A6'}
    instances : iterable
        ``(X, Y)`` for A1, A5 and A6, ``(X, m)`` for A2, ``(X, Y, weight)``
        for A3 and ``(X, factor)`` for A4, where X and Y are arrays of values
        on equally likely states.
    tolerance : float, default: 1e-9

    Returns
    -------
    AxiomReport
        Passed flag, number of instances checked and the first counterexample.

    """

    if axiom not in AXIOMS:
        raise InputArgumentError('axiom', 'axiom_probe', 'unknown axiom {!r}'.format(axiom))

    n_instances = 0
    for instance in instances:
        n_instances += 1
        try:
            gap = _gap(axiom, measure, instance)
        except (TypeError, IndexError):
            raise InputArgumentError('instances', 'axiom_probe', 'malformed instance for {}'.format(axiom))
        if gap > tolerance:
            return AxiomReport(axiom, False, n_instances, witness=instance, violation=float(gap))

    return AxiomReport(axiom, True, n_instances)
