"""
Command line front end.

    tailscore eval      --input sample.csv --level-p 0.5 [--level-q 0.9] [--tau 0.8] [--measures es,rvar]
    tailscore score     --input forecasts.csv --family fz --level-p 0.5 [--output scored.csv]
    tailscore fit       --input sample.csv --family fz --level-p 0.5 --grid 0:5:0.02 --grid 0:5:0.02
    tailscore backtest  --input forecasts.csv --family id-tail-mean --level-p 0.5 [--input other.csv]
    tailscore verify    --suite fz --seed 7

Reports are JSON documents written to ``--output`` (standard output by
default); ``score`` writes the scored rows to ``--output`` and its aggregate
report to standard output, and ``backtest`` writes a one-row CSV report when
``--output`` ends in ``.csv``. Exit codes: 0 success, 2 input error, 3 failed
verification.
"""

import argparse
import logging
import os
import sys
from dataclasses import dataclass, field
import numpy as np
from tailscore._private_tools.exceptions import TailScoreError, InputArgumentError
from tailscore._private_tools.input_arguments import check_level, check_level_pair
from tailscore.building_blocks import get_building_block
from tailscore.risk_measures import GeneratorSpec, TailPairSpec, tail_risk, es, rvar, expectile
from tailscore.scoring import FamilySpec
from tailscore.estimation import m_estimate, z_estimate
from tailscore.backtest import calibration_test, comparative_test
from tailscore.verification import Grid, run_suite, SUITES
from tailscore.io import (from_csv_sample, from_csv_series, to_csv_scores, to_csv_report, to_json_report,
                          from_json_family)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_VERIFICATION_FAILURE = 3

MEASURES = ('var_minus', 'var_plus', 'es', 'rvar', 'expectile', 'tail_risk')


@dataclass
class RunConfig:

    """ Validated arguments of one command.

    Levels lie in (0, 1), p < q when both are given and every building block
    name exists in the registry.

    """

    command: str
    inputs: list = field(default_factory=list)
    output: str = None
    family: str = None
    p: float = None
    q: float = None
    tau: float = None
    phi: str = None
    g: str = None
    loss: str = None
    u: str = None
    t: str = None
    grid: list = field(default_factory=list)
    lag: int = None
    seed: int = 0
    suite: str = None
    measures: list = field(default_factory=list)
    method: str = 'm'

    def __post_init__(self):

        if self.p is not None and self.q is not None:
            self.p, self.q = check_level_pair(self.p, self.q, self.command)
        elif self.p is not None:
            self.p = check_level(self.p, self.command)
        elif self.q is not None:
            self.q = check_level(self.q, self.command, 'q')
        if self.tau is not None:
            self.tau = check_level(self.tau, self.command, 'tau')

        for name in ('phi', 'g', 'loss', 'u', 't'):
            if getattr(self, name) is not None:
                get_building_block(getattr(self, name))

        unknown = [measure for measure in self.measures if measure not in MEASURES]
        if unknown:
            raise InputArgumentError('measures', self.command, 'unknown measure(s) {}'.format(unknown))

    @classmethod
    def from_arguments(cls, arguments):

        measures = getattr(arguments, 'measures', None)
        return cls(command=arguments.command, inputs=list(getattr(arguments, 'input', None) or []),
                   output=arguments.output, family=getattr(arguments, 'family', None),
                   p=getattr(arguments, 'level_p', None), q=getattr(arguments, 'level_q', None),
                   tau=getattr(arguments, 'tau', None), phi=getattr(arguments, 'phi', None),
                   g=getattr(arguments, 'g', None), loss=getattr(arguments, 'loss', None),
                   u=getattr(arguments, 'u', None), t=getattr(arguments, 't', None),
                   grid=list(getattr(arguments, 'grid', None) or []), lag=getattr(arguments, 'lag', None),
                   seed=getattr(arguments, 'seed', 0), suite=getattr(arguments, 'suite', None),
                   measures=[] if not measures else [item.strip() for item in measures.split(',') if item.strip()],
                   method=getattr(arguments, 'method', 'm'))

    def family_spec(self):
        """The FamilySpec named by ``--family``: a construction name or a JSON family file."""

        if self.family is None:
            raise InputArgumentError('family', self.command, 'the command needs --family')
        if self.family.endswith('.json') or os.path.isfile(self.family):
            return from_json_family(self.family)

        return FamilySpec(self.family, p=self.p, q=self.q, tau=self.tau, phi=self.phi, g=self.g, loss=self.loss,
                          u=self.u, t=self.t)

    def single_input(self):

        if len(self.inputs) != 1:
            raise InputArgumentError('input', self.command, 'expected exactly one --input')

        return self.inputs[0]


def _emit(config, report):

    text = to_json_report(config.command, report, config.output)
    if config.output is None:
        sys.stdout.write(text + '\n')


def cmd_eval(config):
    """Requested risk measures of the empirical distribution of the column ``y``."""

    sample = from_csv_sample(config.single_input())
    F = sample.distribution
    measures = config.measures or ['var_minus', 'var_plus', 'es']
    values = {}

    for measure in measures:
        if measure in ('var_minus', 'var_plus', 'es', 'tail_risk') and config.p is None:
            raise InputArgumentError('level-p', 'eval', '{} needs --level-p'.format(measure))
        if measure == 'var_minus':
            values[measure] = F.var_minus(config.p)
        elif measure == 'var_plus':
            values[measure] = F.var_plus(config.p)
        elif measure == 'es':
            values[measure] = es(F, config.p)
        elif measure == 'rvar':
            if config.p is None or config.q is None:
                raise InputArgumentError('level-q', 'eval', 'rvar needs --level-p and --level-q')
            values[measure] = rvar(F, config.p, config.q)
        elif measure == 'expectile':
            if config.tau is None:
                raise InputArgumentError('tau', 'eval', 'expectile needs --tau')
            values[measure] = expectile(F, config.tau)
        else:
            generator = GeneratorSpec('mean') if config.tau is None else GeneratorSpec('expectile', tau=config.tau)
            values[measure] = tail_risk(TailPairSpec(generator, config.p), F)

    logger.info('eval: %d observations, %s', len(sample), ', '.join(measures))
    report = {'n': len(sample), 'n_atoms': F.n_atoms,
              'p': config.p, 'q': config.q, 'tau': config.tau,
              'values': {measure: float(value) for measure, value in values.items()}}
    _emit(config, report)

    return EXIT_OK


def cmd_score(config):
    """Per-row scores of a forecast file and their mean."""

    family = config.family_spec()
    if family.is_identification:
        raise InputArgumentError('family', 'score', '{!r} is an identification family'.format(family.construction))

    S = family.build()
    series = from_csv_series(config.single_input(), S.arity)
    scores = np.asarray(S(series.components, series.y), dtype=float)
    aggregate = float(np.mean(scores))

    if config.output is not None:
        to_csv_scores(series, scores, config.output)
    logger.info('score: %d rows with %s, mean %.17g', len(series), S.construction, aggregate)

    report = {'family': family.to_dict(), 'functional': S.functional, 'n': len(series), 'mean_score': aggregate,
              'scores_file': config.output}
    sys.stdout.write(to_json_report('score', report) + '\n')

    return EXIT_OK


def _fit_grid(config, arity):

    if not config.grid:
        raise InputArgumentError('grid', 'fit', 'M-estimation needs --grid lo:hi:step')
    specifications = config.grid * arity if len(config.grid) == 1 else config.grid

    return Grid.parse(specifications)


def cmd_fit(config):
    """M-estimate over a grid (``--method m``) or sequential Z-estimate (``--method z``)."""

    family = config.family_spec()
    sample = from_csv_sample(config.single_input())

    if config.method == 'z':
        if not family.is_identification:
            raise InputArgumentError('family', 'fit', 'Z-estimation needs an identification family (id-*)')
        report = z_estimate(family.build(), sample)
    else:
        if family.is_identification:
            raise InputArgumentError('family', 'fit', 'M-estimation needs a score family')
        S = family.build()
        report = m_estimate(S, sample, _fit_grid(config, S.arity))

    logger.info('fit: %s estimate %s from %d observations', report.method, report.point, report.n)
    _emit(config, report)

    return EXIT_OK


def cmd_backtest(config):
    """Calibration test for identification families, comparative test of two files for score families."""

    family = config.family_spec()
    function = family.build()

    if family.is_identification:
        report = calibration_test(function, from_csv_series(config.single_input(), function.arity), config.lag)
    else:
        if len(config.inputs) != 2:
            raise InputArgumentError('input', 'backtest', 'a comparative backtest needs two --input files')
        first, second = (from_csv_series(path, function.arity) for path in config.inputs)
        report = comparative_test(function, first, second, config.lag)

    logger.info('backtest: %s test on %d rows, lag %d', report.kind, report.n, report.lag)
    if config.output is not None and config.output.lower().endswith('.csv'):
        to_csv_report(report, config.output)
    else:
        _emit(config, report)

    return EXIT_OK


def cmd_verify(config):
    """Run a named verification suite; a failed suite gives exit code 3."""

    if config.suite is None:
        raise InputArgumentError('suite', 'verify', 'choose one of {}'.format(', '.join(sorted(SUITES))))

    report = run_suite(config.suite, config.seed)
    logger.info('verify: suite %s with seed %d %s', config.suite, config.seed,
                'passed' if report.passed else 'failed')
    _emit(config, report)

    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILURE


COMMANDS = {'eval': cmd_eval, 'score': cmd_score, 'fit': cmd_fit, 'backtest': cmd_backtest, 'verify': cmd_verify}


def _add_family_arguments(parser):

    parser.add_argument('--family', help='Construction name (e.g. fz, tail-mean, id-var-es) or a JSON family file.')
    parser.add_argument('--phi', help='Convex function, registry name phi.*')
    parser.add_argument('--g', help='Increasing function, registry name g.*')
    parser.add_argument('--loss', help='Loss function of shortfall families, registry name ell.*')
    parser.add_argument('--u', help='Numerator of ratio families, registry name u.*')
    parser.add_argument('--t', help='Denominator of ratio families, registry name t.*')


def _add_level_arguments(parser):

    parser.add_argument('--level-p', type=float, dest='level_p', help='Tail level p in (0, 1).')
    parser.add_argument('--level-q', type=float, dest='level_q', help='Upper level q in (p, 1).')
    parser.add_argument('--tau', type=float, help='Expectile level in (0, 1).')


def build_parser():

    parser = argparse.ArgumentParser(prog='tailscore',
                                     description='Scoring and identification functions for tail risk measures.')
    parser.add_argument('--verbose', action='store_true', help='Log debug messages to standard error.')
    subparsers = parser.add_subparsers(dest='command', required=True)

    evaluate = subparsers.add_parser('eval', help='Risk measures of the empirical distribution of a sample.')
    evaluate.add_argument('--measures', help='Comma list out of {}.'.format(', '.join(MEASURES)))
    _add_level_arguments(evaluate)

    score = subparsers.add_parser('score', help='Score the rows of a forecast file.')
    _add_level_arguments(score)
    _add_family_arguments(score)

    fit = subparsers.add_parser('fit', help='M- or Z-estimation from a sample.')
    fit.add_argument('--method', choices=('m', 'z'), default='m')
    fit.add_argument('--grid', action='append', metavar='LO:HI:STEP',
                     help='Search grid, once per forecast component (a single one is repeated).')
    _add_level_arguments(fit)
    _add_family_arguments(fit)

    backtest = subparsers.add_parser('backtest', help='Calibration or comparative backtest of forecast files.')
    backtest.add_argument('--lag', type=int, help='Bartlett lags, floor(n^(1/3)) by default.')
    _add_level_arguments(backtest)
    _add_family_arguments(backtest)

    verify = subparsers.add_parser('verify', help='Run a verification suite.')
    verify.add_argument('--suite', help='One of: {}.'.format(', '.join(sorted(SUITES))))
    verify.add_argument('--seed', type=int, default=0)

    for command, subparser in subparsers.choices.items():
        if command != 'verify':
            subparser.add_argument('--input', action='append', required=True, help='Input CSV file.')
        subparser.add_argument('--output', help='Output file, standard output when omitted.')

    return parser


def main(argv=None):

    arguments = build_parser().parse_args(argv)

    logging.basicConfig(stream=sys.stderr, level=logging.DEBUG if arguments.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')
    logging.captureWarnings(True)

    try:
        config = RunConfig.from_arguments(arguments)
        return COMMANDS[config.command](config)
    except TailScoreError as error:
        logger.debug('%s failed: %r', arguments.command, error)
        sys.stderr.write('tailscore {}: {}\n'.format(arguments.command, error))
        return EXIT_INPUT_ERROR


if __name__ == '__main__':
    sys.exit(main())
