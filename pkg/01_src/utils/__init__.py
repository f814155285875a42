from .checkpoint_utils import handle_problematic_inputs
from .logging_utils import setup_logger
from .parallel_utils import map_in_workers, resolve_threads

__all__ = [
    'handle_problematic_inputs',
    'setup_logger',
    'map_in_workers',
    'resolve_threads',
]
