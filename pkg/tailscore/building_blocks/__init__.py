from .building_block import BuildingBlock, as_block, piecewise_monotone_variation
from .convex import ConvexSpec, bounded_quadratic, square
from .registry import get_building_block, registered_names, clipped_linear, exp_minus_one, indicator
