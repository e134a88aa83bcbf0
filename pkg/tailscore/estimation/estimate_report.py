from dataclasses import dataclass, field
import numpy as np


@dataclass
class EstimateReport:

    """ Outcome of an M- or Z-estimation.

    Attributes
    ----------
    method : str
        ``'m'`` for score minimization, ``'z'`` for identification roots.
    functional : str
    point : tuple of float
        The point estimate, an element of `estimate_set`.
    estimate_set : numpy.ndarray
        All grid minimizers (M) or the root (Z), shape (n, k).
    objective : float or tuple of float
        Minimal mean score (M) or mean identification at the root (Z).
    n : int
        Sample size.
    grid : dict
        Grid axes (M) or bracket and tolerance (Z).
    warnings : list of str

    """

    method: str
    functional: str
    point: tuple
    estimate_set: np.ndarray
    objective: object
    n: int
    grid: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)

    @property
    def interval(self):
        """Per-coordinate (min, max) of the estimate set."""
        return [(float(column.min()), float(column.max())) for column in np.asarray(self.estimate_set).T]

    def to_dict(self):

        objective = self.objective
        if np.ndim(objective) > 0:
            objective = [float(value) for value in objective]
        else:
            objective = float(objective)

        return {'method': self.method, 'functional': self.functional,
                'point': [float(value) for value in self.point],
                'interval': [list(bounds) for bounds in self.interval],
                'n_minimizers': int(len(self.estimate_set)), 'objective': objective, 'n': self.n,
                'grid': self.grid, 'warnings': list(self.warnings)}
