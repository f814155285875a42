"""
Package for checkpoint management functionality.
"""

from .checkpoint_handler import CheckpointManager

__all__ = ['CheckpointManager']
