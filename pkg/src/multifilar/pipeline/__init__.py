from .cache import cache_key, cached_enumeration, load_family, store_family
from .clustering import FilarGroup, centroid_gaps, cluster_filars
from .config import CACHE_ENV, RunConfig
from .experiment import ExperimentResult, FilarRecord, analyze_graph, run_experiment
from .export import CSV_HEADER, Window, export_csv, export_svg_scatter

__all__ = [
    "CACHE_ENV",
    "CSV_HEADER",
    "ExperimentResult",
    "FilarGroup",
    "FilarRecord",
    "RunConfig",
    "Window",
    "analyze_graph",
    "cache_key",
    "cached_enumeration",
    "centroid_gaps",
    "cluster_filars",
    "export_csv",
    "export_svg_scatter",
    "load_family",
    "run_experiment",
    "store_family",
]
