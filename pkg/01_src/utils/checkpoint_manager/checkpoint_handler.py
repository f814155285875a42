"""
Handles checkpoint management for sharded searches.
"""

import json
import logging
import os
from pathlib import Path
from typing import Dict, List, Optional


class CheckpointManager:
    """
    Records finished shards of a long search in a JSON file.

    The file also stores the search context (e.g. n and k); a checkpoint
    written for another context is ignored rather than mixed in.
    """

    def __init__(self, checkpoint_file: str | Path, context: Optional[Dict] = None, logger: Optional[logging.Logger] = None):
        self.checkpoint_file = Path(checkpoint_file)
        self.context = context or {}
        self.logger = logger or logging.getLogger(__name__)

    def _load(self) -> Dict:
        if not self.checkpoint_file.exists():
            return {'context': self.context, 'shards': {}}
        with open(self.checkpoint_file, 'r') as f:
            data = json.load(f)
        if data.get('context') != self.context:
            self.logger.warning(
                f"Ignoring checkpoint {self.checkpoint_file}: written for {data.get('context')}, not {self.context}"
            )
            return {'context': self.context, 'shards': {}}
        return data

    def get_processed_shards(self) -> Dict[str, List[int]]:
        """Read the shards already finished, keyed by shard id."""
        return dict(self._load()['shards'])

    def update_checkpoint(self, shard_id: str, result: List[int]) -> None:
        """Record one finished shard and its result."""
        data = self._load()
        data['shards'][shard_id] = list(result)
        self.checkpoint_file.parent.mkdir(parents=True, exist_ok=True)
        tmp_path = self.checkpoint_file.with_suffix(self.checkpoint_file.suffix + '.tmp')
        with open(tmp_path, 'w') as f:
            json.dump(data, f, sort_keys=True)
        os.replace(tmp_path, self.checkpoint_file)

    def clear_checkpoints(self) -> None:
        """Clear the checkpoint file to start fresh."""
        if self.checkpoint_file.exists():
            self.checkpoint_file.unlink()
            self.logger.info("Checkpoint file cleared.")
