"""
Named verification suites, runnable from the command line with
``tailscore verify --suite <name> --seed <seed>``.

Each suite returns a single :class:`VerificationReport`. Suites that
demonstrate a failure on purpose (``broken-no-correction`` and
``identification-unconditioned``) report ``passed=False``.
"""

import logging
import numpy as np
from tailscore._private_tools.exceptions import RepairFailureError, UnknownSuiteError
from tailscore.distribution import make_discrete, mix_with_atom, mixture
from tailscore.identification import expected_id, lift_id, mean_id, quantile_id, restrict_id
from tailscore.proper_scoring import crps, qw_crps, tail_crps_score, expected_rule
from tailscore.risk_measures import GeneratorSpec
from tailscore.scoring import (bregman_score, expected_score, expectile_score, fz_score, lift_score, monotone_repair,
                               restrict_score, rvar_score, scaled, shortfall_score, shortfall_repair_bound,
                               squared_error, body_mean_score, tail_expectile_score, tail_mean_score)
from tailscore.building_blocks import clipped_linear
from tailscore.verification.families import random_distribution, random_family, uniform_four
from tailscore.verification.functionals import (es_pair_value, pair_value, quantile_value, triplet_value,
                                                variance_value)
from tailscore.verification.grid import Grid
from tailscore.verification.oracles import (certify_consistency, certify_identifiability, cxls_probe,
                                            order_sensitivity_probe)
from tailscore.verification.verification_report import VerificationReport, combine

logger = logging.getLogger(__name__)

_LO, _HI = -0.5, 10.5


def fz_suite(seed):
    """FZ score with default parameters on 30 random distributions in M_(0.5), step 0.02."""

    family = random_family(30, seed, levels=(0.5,))
    return certify_consistency(fz_score(0.5), es_pair_value(0.5), family, Grid.uniform(_LO, _HI, 0.02, 2), name='fz')


def lift_mean_suite(seed):

    reports = []
    for number, p in enumerate((0.25, 0.5, 0.9)):
        family = random_family(10, seed + number, levels=(p,))
        reports.append(certify_consistency(tail_mean_score(p), es_pair_value(p), family,
                                           Grid.uniform(_LO, _HI, 0.05, 2), name='lift-mean p={}'.format(p)))

    return combine('lift-mean', reports)


def lift_expectile_suite(seed):
    """Tail expectile: U4 first, then 30 random distributions in M_(0.5)."""

    value = pair_value(0.5, GeneratorSpec('expectile', tau=0.8))
    family = [uniform_four()] + random_family(30, seed, levels=(0.5,))

    return certify_consistency(tail_expectile_score(0.5, 0.8), value, family, Grid.uniform(_LO, _HI, 0.02, 2),
                               name='lift-expectile')


def body_rvar_suite(seed):

    p, q = 0.25, 0.75
    value = triplet_value(p, q, GeneratorSpec('mean'))
    reports = []
    for S, label in ((rvar_score(p, q), 'rvar'), (body_mean_score(p, q), 'body')):
        reports.append(certify_consistency(S, value, [uniform_four()], Grid.uniform(0.0, 5.0, 0.1, 3),
                                           name='{} U4'.format(label)))
        reports.append(certify_consistency(S, value, random_family(5, seed, levels=(p, q)),
                                           Grid.uniform(_LO, _HI, 0.25, 3), name='{} random'.format(label)))

    return combine('body-rvar', reports)


def restriction_suite(seed, n_cases=100):
    """Change of measure under mix_with_atom, and the restricted quantile identification."""

    rng = np.random.default_rng(seed)
    S = squared_error()
    V = mean_id()
    x = np.linspace(-2.0, 12.0, 57)
    cases, counterexample = [], None

    for number in range(n_cases):
        G = random_distribution(rng)
        p = float(rng.uniform(0.05, 0.95))
        r = float(rng.uniform(-2.0, G.min_atom))
        mixed = mix_with_atom(G, p, r)
        score_gap = np.max(np.abs(expected_score(restrict_score(S, p, r), x, G) - expected_score(S, x, mixed)))
        id_gap = np.max(np.abs(expected_id(restrict_id(V, p, r), x, G) - expected_id(V, x, mixed)))
        scale = 1.0 + np.max(np.abs(expected_score(S, x, mixed)))
        passed = score_gap <= 1e-12 * scale and id_gap <= 1e-12 * scale
        case = {'case': number, 'p': p, 'r': r, 'score_gap': float(score_gap), 'id_gap': float(id_gap),
                'passed': bool(passed)}
        cases.append(case)
        if not passed and counterexample is None:
            counterexample = case

    round_trip = VerificationReport('restriction round trip', counterexample is None, n_cases, float('nan'), cases,
                                    counterexample)
    quantile = certify_identifiability(restrict_id(quantile_id(0.9), 0.5, 0.0), quantile_value(0.8),
                                       random_family(30, seed, levels=(0.8,)), Grid([(_LO, _HI, 0.01)]),
                                       name='restricted quantile')

    return combine('restriction', [round_trip, quantile])


def cxls_suite(seed):
    """(Q_p, ES_p) keeps its value on mixtures; the variance does not."""

    rng = np.random.default_rng(seed)
    p = 0.5
    G0 = random_distribution(rng, support=(3.0, 7.0))
    mean = G0.mean()
    G1 = G0.reflect().shift(2.0 * mean)
    r = min(G0.min_atom, G1.min_atom) - 1.0

    shared = cxls_probe(es_pair_value(p), mix_with_atom(G0, p, r), mix_with_atom(G1, p, r), name='(Q_p, ES_p)')
    broken = cxls_probe(variance_value, make_discrete([(0.0, 0.5), (2.0, 0.5)]),
                        make_discrete([(10.0, 0.5), (12.0, 0.5)]), name='variance')

    return combine('cxls', [shared, broken], expected=[True, False])


def _one_sided_pairs(F, p):

    lower, upper = F.var_minus(p), F.var_plus(p)
    return [(lower, lower - 1.0), (lower - 0.5, lower - 2.0), (upper, upper + 1.0), (upper + 0.5, upper + 2.0)]


def order_sensitivity_suite(seed):

    S = tail_mean_score(0.5)
    U4 = uniform_four()
    reports = [order_sensitivity_probe(S, U4, [(3.0, 4.0), (2.0, 1.0)] + _one_sided_pairs(U4, 0.5), name='U4')]
    for number, F in enumerate(random_family(20, seed)):
        reports.append(order_sensitivity_probe(S, F, _one_sided_pairs(F, 0.5), name='random {}'.format(number)))

    return combine('order-sensitivity', reports)


def _tail_candidates(rng, n_candidates=20):
    """Candidates for U4 at p = 0.5: half share its tail uniform{3, 4}, half are random."""

    tail = make_discrete([(3.0, 0.5), (4.0, 0.5)])
    sharing = [uniform_four()]
    while len(sharing) < n_candidates // 2:
        sharing.append(mixture(random_distribution(rng, support=(0.0, 3.0), n_atoms=(1, 4)), tail, 0.5))
    others = [random_distribution(rng) for _ in range(n_candidates - len(sharing))]

    return sharing, others


def proper_tail_suite(seed, p=0.5):

    rng = np.random.default_rng(seed)
    F = uniform_four()
    sharing, others = _tail_candidates(rng)
    candidates = sharing + others
    rule = tail_crps_score(p)
    v_grid = np.round(np.arange(0.0, 5.0 + 1e-9, 0.25), 12)

    table = np.array([[expected_rule(rule, F, v, G) for v in v_grid] for G in candidates])
    minimum = table.min()
    winners = np.argwhere(table <= minimum + 1e-12 * (1.0 + abs(minimum)))
    best_candidates = sorted(set(int(index) for index in winners[:, 0]))
    best_v = v_grid[winners[:, 1]]
    wrong_tail = table[len(sharing):].min() - minimum
    passed = (best_candidates == list(range(len(sharing))) and best_v.min() == 2.0 and best_v.max() == 3.0
              and wrong_tail > 1e-10)
    tail_report = VerificationReport('tail crps', bool(passed), len(candidates), float(wrong_tail),
                                     [{'minimizing_candidates': best_candidates,
                                       'v_range': [float(best_v.min()), float(best_v.max())]}],
                                     None if passed else {'minimizing_candidates': best_candidates})

    expected_crps = np.array([expected_rule(crps, F, G) for G in candidates])
    margin = float(np.delete(expected_crps, 0).min() - expected_crps[0])
    crps_report = VerificationReport('crps propriety', margin > 1e-10, len(candidates), margin,
                                     [{'expected_crps': [float(value) for value in expected_crps]}],
                                     None if margin > 1e-10 else {'margin': margin})

    gaps = []
    for _ in range(100):
        G = random_distribution(rng)
        y = float(rng.uniform(-1.0, 11.0))
        gaps.append(abs(qw_crps(0.0)(G, y) - crps(G, y)))
    qw_report = VerificationReport('qw crps at p = 0', max(gaps) <= 1e-10, len(gaps), float('nan'),
                                   [{'max_gap': float(max(gaps))}], None if max(gaps) <= 1e-10 else
                                   {'max_gap': float(max(gaps))})

    return combine('proper-tail', [tail_report, crps_report, qw_report])


def _repair_attempt(name, build):

    try:
        build()
    except RepairFailureError as error:
        return VerificationReport(name, False, 1, float('nan'), [{'error': str(error)}],
                                  {'witness': list(error.witness) if error.witness else None})

    return VerificationReport(name, True, 1)


def repair_suite(seed):
    """Bounded-phi Bregman, expectile and shortfall repairs succeed; the squared loss cannot be repaired."""

    loss = clipped_linear(-1.0)
    attempts = [
        _repair_attempt('bregman', lambda: monotone_repair(bregman_score(), -1.0)),
        _repair_attempt('expectile', lambda: monotone_repair(expectile_score(0.8), -2.0)),
        _repair_attempt('shortfall', lambda: monotone_repair(shortfall_score(loss), shortfall_repair_bound(loss))),
        _repair_attempt('squared loss', lambda: monotone_repair(squared_error(), -10.0)),
    ]

    return combine('repair', attempts, expected=[True, True, True, False])


def broken_no_correction_suite(seed, p=0.5):
    """Lifted mean score without its correction term, on distributions outside M_(p); expected to fail."""

    Sstar = monotone_repair(scaled(bregman_score(), 1.0 / (1.0 - p)), -1.0 / (1.0 - p))
    S = lift_score(Sstar, p, with_correction=False)

    return certify_consistency(S, es_pair_value(p), random_family(30, seed), Grid.uniform(_LO, _HI, 0.05, 2),
                               name='broken-no-correction')


def _identification_reports(seed, conditioned):

    reports = []
    for number, p in enumerate((0.25, 0.5, 0.9)):
        levels = (p,) if conditioned else ()
        reports.append(certify_identifiability(lift_id(mean_id(), p), es_pair_value(p),
                                               random_family(10, seed + number, levels=levels),
                                               Grid.uniform(_LO, _HI, 0.05, 2), name='lift mean p={}'.format(p)))

    levels = (0.5,) if conditioned else ()
    reports.append(certify_identifiability(quantile_id(0.5), quantile_value(0.5),
                                           random_family(10, seed, levels=levels), Grid([(_LO, _HI, 0.01)]),
                                           name='quantile'))
    return reports


def identification_suite(seed):
    return combine('identification', _identification_reports(seed, True))


def identification_unconditioned_suite(seed):
    """The same identification checks without conditioning on M_(p); expected to fail."""

    report = combine('identification-unconditioned', _identification_reports(seed, False))
    return report


SUITES = {
    'fz': fz_suite,
    'lift-mean': lift_mean_suite,
    'lift-expectile': lift_expectile_suite,
    'body-rvar': body_rvar_suite,
    'restriction': restriction_suite,
    'cxls': cxls_suite,
    'order-sensitivity': order_sensitivity_suite,
    'proper-tail': proper_tail_suite,
    'repair': repair_suite,
    'broken-no-correction': broken_no_correction_suite,
    'identification': identification_suite,
    'identification-unconditioned': identification_unconditioned_suite,
}


def run_suite(name, seed=0):
    """Run the verification suite called `name`.

    Raises
    ------
    UnknownSuiteError

    """

    try:
        suite = SUITES[name]
    except KeyError:
        raise UnknownSuiteError(name, SUITES.keys())

    logger.info('Running verification suite %s with seed %d', name, seed)
    report = suite(int(seed))
    logger.info('Suite %s: %s', name, 'pass' if report.passed else 'fail')

    return report
