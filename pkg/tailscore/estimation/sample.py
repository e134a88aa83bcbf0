import numpy as np
from tailscore._private_tools.exceptions import InputArgumentError
from tailscore.distribution import DiscreteDistribution


class Sample():

    """ Realizations y_1, ..., y_n of the loss.

    Parameters
    ----------
    observations : array_like
        Nonempty sequence of finite reals.

    Attributes
    ----------
    observations : numpy.ndarray
        Read-only copy of the data.
    distribution : DiscreteDistribution
        Empirical distribution, mass 1/n per observation.

    """

    def __init__(self, observations):

        observations = np.array(observations, dtype=float).ravel()
        if observations.size == 0:
            raise InputArgumentError('observations', 'Sample', 'the sample is empty')
        if not np.all(np.isfinite(observations)):
            raise InputArgumentError('observations', 'Sample', 'the sample has non-finite values')

        observations.flags.writeable = False
        self.observations = observations
        self.distribution = DiscreteDistribution.from_sample(observations)

    def __len__(self):
        return self.observations.size

    def __repr__(self):
        return 'Sample(n={})'.format(len(self))
