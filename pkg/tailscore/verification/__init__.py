from .grid import Grid, scan, minimizer_indices
from .verification_report import VerificationReport, combine
from .families import uniform_four, random_distribution, random_family
from .functionals import (quantile_value, generator_value, pair_value, left_pair_value, triplet_value,
                          variance_value, es_pair_value)
from .oracles import certify_consistency, certify_identifiability, cxls_probe, order_sensitivity_probe
from .suites import SUITES, run_suite
