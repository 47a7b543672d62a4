"""Generalized Sierpinski graphs and exact metric-dimension variants."""

from .graph_core import (
    Graph,
    GraphError,
    all_pairs_distances,
    build_graph,
    is_bipartite,
    is_connected,
)
from .metric import (
    GeneratorCertificate,
    Variant,
    is_edge_metric_generator,
    is_ft_edge_metric_generator,
    is_ft_metric_generator,
    is_metric_generator,
)
from .sierpinski import build_sierpinski, index_of, prefix_block, word_of
from .solver import SolveResult, brute_force_dimension, exact_dimension, greedy_upper_bound
from .twins import TwinPartition, find_twins, twin_lower_bounds
from .c4 import build_R, closed_form, verify_theorem

__version__ = "0.1.0"
