from .quantile_interval import Level, QuantileInterval
from .discrete_distribution import DiscreteDistribution
from .transforms import (make_discrete, cdf, var_minus, var_plus, quantile_interval, in_M_p, in_M_ge,
                         expectation, tail_distribution, left_tail_distribution, body_distribution,
                         mix_with_atom, mixture)
from .discretize import discretize
