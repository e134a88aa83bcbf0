from .scoring_function import ScoreSpec, expected_score, min_slope, min_slope_in_y, is_strictly_increasing_in_y
from .elementary import (bregman_score, quantile_score, pinball_score, fz_score, rvar_score, expectile_score,
                         ratio_score, shortfall_score, squared_error, linear_block)
from .repair import monotone_repair, scaled, total_variation, ratio_repair, shortfall_repair_bound
from .constructions import (lift_score, conditional_score, restrict_score, restrict_score_pair, left_tail_score,
                            body_score)
from .tail_scores import (tail_mean_score, tail_expectile_score, tail_shortfall_score, tail_ratio_score,
                          left_tail_mean_score, body_mean_score)
from .family import FamilySpec, family_names
