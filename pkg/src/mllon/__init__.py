"""Local optima networks and multi-layer LONs for exhaustively enumerated NK landscapes."""

__version__ = "0.1.0"

from .basins import BasinMap, CapacityError, enumerate_basins, hill_climb
from .graph import WeightedDigraph
from .lon import Lon, build_lon
from .metrics import MetricsReport, compute_metrics
from .multilayer import Mllon, MllonConfig, build_mllon, flatten, jaccard_overlap
from .neighborhood import OperatorKind, move_probability, neighbors
from .nk import NkInstance, fitness, fitness_table, generate_instance

__all__ = [
    "BasinMap", "CapacityError", "Lon", "Mllon", "MllonConfig", "MetricsReport", "NkInstance",
    "OperatorKind", "WeightedDigraph", "build_lon", "build_mllon", "compute_metrics",
    "enumerate_basins", "fitness", "fitness_table", "flatten", "generate_instance",
    "hill_climb", "jaccard_overlap", "move_probability", "neighbors",
]
