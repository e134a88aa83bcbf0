from dataclasses import dataclass, field
import numpy as np


def _listed(values):
    return [None if np.isnan(value) else float(value) for value in values]


@dataclass
class BacktestReport:

    """ Result of a calibration or comparative backtest.

    Per-component lists hold one entry per identification component, or a
    single entry for the mean score difference of a comparative test.

    Attributes
    ----------
    kind : str
        ``'calibration'`` or ``'comparative'``.
    functional : str
    mean_id : list of float
        Mean identification values, or the mean score difference.
    se : list of float
        Bartlett-kernel long-run standard errors of the means.
    se_plain : list of float
        Standard errors ignoring autocorrelation.
    stat : list of float
        mean / se.
    p_value : list of float
        Two-sided normal p-values.
    n : int
    lag : int
    joint_stat, joint_p_value : float
        Wald statistic of all components together and its chi-square p-value.
    degenerate : list of bool
        Components whose standard error vanishes or is undefined.

    """

    kind: str
    functional: str
    mean_id: list
    se: list
    se_plain: list
    stat: list
    p_value: list
    n: int
    lag: int
    joint_stat: float = float('nan')
    joint_p_value: float = float('nan')
    degenerate: list = field(default_factory=list)

    @property
    def is_degenerate(self):
        return any(self.degenerate)

    def to_dict(self):
        """JSON-ready dictionary; undefined numbers become None."""

        return {'kind': self.kind, 'functional': self.functional, 'mean_id': _listed(self.mean_id),
                'se': _listed(self.se), 'se_plain': _listed(self.se_plain), 'stat': _listed(self.stat),
                'p_value': _listed(self.p_value), 'n': self.n, 'lag': self.lag,
                'joint_stat': _listed([self.joint_stat])[0], 'joint_p_value': _listed([self.joint_p_value])[0],
                'degenerate': [bool(flag) for flag in self.degenerate]}
