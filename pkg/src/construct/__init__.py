from .lower_bounds import chain_lower_bound, complete_grid, duplicate, ugig_construction, ugig_edge_margin
from .random_instances import coordinate_box, random_representation
