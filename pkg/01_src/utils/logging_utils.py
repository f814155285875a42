import logging
import os
from datetime import datetime
from pathlib import Path

LOG_DIR_ENV = "DIAMCRIT_LOG_DIR"


def setup_logger(script_name, log_directory="03_logs", console_level=logging.INFO):
    """
    Sets up a logger that writes to both console and a file.

    The DIAMCRIT_LOG_DIR environment variable overrides the log directory;
    set it to an empty string to log to the console only.

    Args:
        script_name (str): Name of the run (used for logger and log file naming)
        log_directory (str): Directory, relative to the repository root, for log files
        console_level (int): Level of the console handler

    Returns:
        logging.Logger: Configured logger instance
    """
    override = os.environ.get(LOG_DIR_ENV)
    if override is not None:
        log_dir = Path(override) if override else None
    else:
        log_dir = Path(os.path.dirname(os.path.dirname(os.path.dirname(__file__)))) / log_directory

    # Create logger
    logger = logging.getLogger(script_name)
    logger.setLevel(logging.DEBUG)
    logger.propagate = False

    # Repeated setup (several CLI runs in one process) must not stack handlers
    for handler in list(logger.handlers):
        handler.close()
        logger.removeHandler(handler)

    # Library modules log under their own names; route them here too
    graphs_logger = logging.getLogger("graphs")
    graphs_logger.setLevel(logging.DEBUG)

    handlers = []
    if log_dir is not None:
        log_dir.mkdir(parents=True, exist_ok=True)
        timestamp = datetime.now().strftime('%Y%m%d_%H%M%S')
        file_handler = logging.FileHandler(log_dir / f"{script_name}_{timestamp}.log", encoding='utf-8')
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(logging.Formatter(
            '%(asctime)s - %(levelname)s - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        ))
        handlers.append(file_handler)

    console_handler = logging.StreamHandler()
    console_handler.setLevel(console_level)
    console_handler.setFormatter(logging.Formatter('%(message)s'))
    handlers.append(console_handler)

    for handler in handlers:
        logger.addHandler(handler)
    for handler in list(graphs_logger.handlers):
        graphs_logger.removeHandler(handler)
    if log_dir is not None:
        graphs_logger.addHandler(handlers[0])

    return logger
