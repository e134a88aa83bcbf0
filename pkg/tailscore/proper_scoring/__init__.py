from .crps import PredictiveDistribution, crps, energy_crps, tail_crps_score, qw_crps, expected_rule
