from .chain import flip_chain_rep, points_on_u
from .chain3 import assemble_chain3, chain3_projections, rerank_heights
from .conv2 import (
    Conv2Decomposition,
    ConvFactor,
    conv2_decompose,
    conv2_graph,
    gig_to_conv2,
    labeled_edges,
    prig_to_conv2,
)
from .dyadic import (
    DyadicPiece,
    DyadicRange,
    ceil_log2,
    chaind_bound,
    dyadic_cover,
    dyadic_decompose,
    next_power_of_two,
)
