from tailscore._private_tools.exceptions import InputArgumentError
from tailscore._private_tools.input_arguments import check_level


class Level(float):

    """ Probability level p in the open interval (0, 1).

    A ``Level`` is a float that refuses values outside (0, 1), so it can be
    passed anywhere a plain level is expected.

    """

    def __new__(cls, p):

        return super().__new__(cls, check_level(p, 'Level'))


class QuantileInterval():

    """ Interval-valued p-quantile [VaR_p^-(F), VaR_p^+(F)].

    Parameters
    ----------
    lower : float
        Left quantile VaR_p^-.
    upper : float
        Right quantile VaR_p^+.

    """

    __slots__ = ('lower', 'upper')

    def __init__(self, lower, upper):

        lower = float(lower)
        upper = float(upper)
        if lower > upper:
            raise InputArgumentError('lower', 'QuantileInterval', 'lower {} above upper {}'.format(lower, upper))

        object.__setattr__(self, 'lower', lower)
        object.__setattr__(self, 'upper', upper)

    def __setattr__(self, name, value):
        raise AttributeError('QuantileInterval is immutable')

    def __contains__(self, value):
        return self.lower <= value <= self.upper

    def __iter__(self):
        yield self.lower
        yield self.upper

    def __eq__(self, other):
        if not isinstance(other, QuantileInterval):
            return NotImplemented
        return (self.lower, self.upper) == (other.lower, other.upper)

    def __hash__(self):
        return hash((self.lower, self.upper))

    def __repr__(self):
        return 'QuantileInterval({!r}, {!r})'.format(self.lower, self.upper)

    @property
    def width(self):
        return self.upper - self.lower

    @property
    def is_singleton(self):
        return self.lower == self.upper
