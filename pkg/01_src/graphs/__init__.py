from .criticality import (
    AnalysisConfig,
    CriticalityAnalysis,
    analysis_report,
    check_furedi,
    check_g0_lemmas,
    critical_pairs,
    is_diameter_k_critical,
    multiplicity_table,
)
from .errors import GraphError, GraphFormatError, InvalidParams, TooLarge
from .families import family_graph, gen_g3m, gen_gk, random_matching
from .graph_core import UNREACHABLE, EdgeRef, Graph, build_graph, diameter
from .hypergraph import Hypergraph3, pipeline_all_levels, rsz_exhaustive
from .search import degree_square_check, extremal_search

__all__ = [
    'AnalysisConfig',
    'CriticalityAnalysis',
    'analysis_report',
    'check_furedi',
    'check_g0_lemmas',
    'critical_pairs',
    'is_diameter_k_critical',
    'multiplicity_table',
    'GraphError',
    'GraphFormatError',
    'InvalidParams',
    'TooLarge',
    'family_graph',
    'gen_g3m',
    'gen_gk',
    'random_matching',
    'UNREACHABLE',
    'EdgeRef',
    'Graph',
    'build_graph',
    'diameter',
    'Hypergraph3',
    'pipeline_all_levels',
    'rsz_exhaustive',
    'degree_square_check',
    'extremal_search',
]
