"""
Runner for `search`: exhaustive extremal search over all graphs on n vertices.
"""

import argparse
from pathlib import Path
from typing import Optional

from graphs.families import gen_complete_bipartite
from graphs.search import canonical_form, extremal_search, SearchResult
from utils.checkpoint_manager import CheckpointManager
from utils.graph_io import write_graphs

from .base_runner import BaseRunner, RunResult, VERIFICATION_FAILED


def murty_simon_holds(result: SearchResult) -> Optional[bool]:
    """
    For k = 2: at most floor(n^2/4) edges, and at the bound only the balanced
    complete bipartite graph. None for other k.
    """
    if result.k != 2:
        return None
    if result.max_edges is None:
        return True
    bound = result.n * result.n // 4
    if result.max_edges < bound:
        return True
    balanced = canonical_form(gen_complete_bipartite(result.n // 2, result.n - result.n // 2))
    return result.max_edges == bound and [canonical_form(g) for g in result.extremal] == [balanced]


class SearchRunner(BaseRunner):
    command = 'search'
    required_sections = ('defaults', 'limits', 'checkpoint', 'output')

    def run(self, args: argparse.Namespace, output_dir: Path) -> RunResult:
        n = args.n
        k = self.setting(args, 'k', 2)
        threads = self.setting(args, 'threads', 1)
        limits = self.config['limits']

        checkpoint_file = None
        if args.exhaustive and self.config['checkpoint'].get('use_for_exhaustive', True):
            checkpoint_file = output_dir / self.config['checkpoint']['file_name'].format(n=n, k=k)
            self.logger.info(f"Using checkpoint file {checkpoint_file}")

        result = extremal_search(
            n,
            k,
            exhaustive=args.exhaustive,
            threads=threads,
            progress=args.exhaustive,
            checkpoint_file=checkpoint_file,
            default_max_n=limits['default_max_n'],
            exhaustive_max_n=limits['exhaustive_max_n'],
        )
        if checkpoint_file is not None:
            CheckpointManager(checkpoint_file, logger=self.logger).clear_checkpoints()

        document = result.to_document()
        murty_simon = murty_simon_holds(result)
        if murty_simon is False:
            self._log_issue(f"search_n{n}_k{k}", VERIFICATION_FAILED, f"Extremal graphs contradict the floor(n^2/4) bound: {document.extremal_graph6}")

        if not self.json_to_stdout(args):
            shown = "none" if result.max_edges is None else result.max_edges
            print(f"n={n} k={k}: {result.class_count} classes, {result.critical_count} diameter-{k}-critical, max edges {shown}")
            for line in document.extremal_graph6:
                print(f"  {line}")

        if getattr(args, 'output', None) and result.extremal:
            path = write_graphs(result.extremal, args.output, 'graph6')
            self.logger.info(f"{len(result.extremal)} extremal graph(s) written to {path}")
        if getattr(args, 'json', None):
            self.write_json([document], args.json)
        self.write_issue_ledger(output_dir)

        row = {
            'n': n,
            'k': k,
            'max_edges': result.max_edges,
            'critical_count': result.critical_count,
            'class_count': result.class_count,
            'extremal_graph6': ";".join(document.extremal_graph6),
            'murty_simon_ok': murty_simon,
        }
        return RunResult(rows=[row], documents=[document])
