from dataclasses import dataclass, field


@dataclass
class VerificationReport:

    """ Outcome of an oracle run over a family of distributions.

    Attributes
    ----------
    name : str
    passed : bool
    n_cases : int
    margin : float
        Smallest gap between the expected score off the claimed set and its
        minimum (consistency), or smallest strict gap (order sensitivity).
    cases : list of dict
        Claimed value set and found set per distribution.
    counterexample : dict or None
        First failing case.

    """

    name: str
    passed: bool
    n_cases: int
    margin: float = float('nan')
    cases: list = field(default_factory=list)
    counterexample: dict = None

    def to_dict(self):

        margin = None if self.margin != self.margin else float(self.margin)
        return {'name': self.name, 'passed': bool(self.passed), 'n_cases': self.n_cases, 'margin': margin,
                'cases': self.cases, 'counterexample': self.counterexample}


def combine(name, reports, expected=None):
    """Single report passing when every report meets its expectation (pass by default)."""

    expected = [True] * len(reports) if expected is None else list(expected)
    met = [report.passed == wanted for report, wanted in zip(reports, expected)]
    counterexample = next((dict(report.counterexample or {}, report=report.name, expected=wanted)
                           for report, wanted, ok in zip(reports, expected, met) if not ok), None)
    margins = [report.margin for report in reports if report.margin == report.margin]

    return VerificationReport(name, all(met), sum(report.n_cases for report in reports),
                              min(margins) if margins else float('nan'),
                              [{'report': report.name, 'passed': report.passed, 'expected': wanted}
                               for report, wanted in zip(reports, expected)], counterexample)
