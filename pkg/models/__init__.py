# Import all models so they can be used from the package root
from .graph import Graph
from .instance import Instance, RP3Status, ValidationReport
from .gamma import BipartiteGraph, ColorClassDecomposition, GammaGraph, Matching, UNMATCHED
from .verdict import ProfileLeaf, ReducerStats, SolveStats, Verdict
from .run_config import RunConfig

# Export for easier imports
__all__ = [
    'Graph',
    'Instance', 'RP3Status', 'ValidationReport',
    'BipartiteGraph', 'ColorClassDecomposition', 'GammaGraph', 'Matching', 'UNMATCHED',
    'ProfileLeaf', 'ReducerStats', 'SolveStats', 'Verdict',
    'RunConfig',
]
