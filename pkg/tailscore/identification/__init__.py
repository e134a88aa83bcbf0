from .identification_function import IdSpec, expected_id, grid_root_set
from .elementary import mean_id, quantile_id, expectile_id, shortfall_id, ratio_id, var_es_id, rvar_id
from .constructions import lift_id, restrict_id, restrict_id_pair, body_id
