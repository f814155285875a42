from .analyze_runner import AnalyzeRunner
from .base_runner import BaseRunner
from .conjecture_runner import ConjectureRunner
from .gen_runner import GenRunner
from .hyper_runner import HyperRunner
from .search_runner import SearchRunner
from .verify_runner import VerifyRunner

__all__ = [
    'AnalyzeRunner',
    'BaseRunner',
    'ConjectureRunner',
    'GenRunner',
    'HyperRunner',
    'SearchRunner',
    'VerifyRunner',
]
