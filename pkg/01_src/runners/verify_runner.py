"""
Runner for `verify`: diameter-k-criticality verdicts with witnesses.
"""

import argparse

from graphs.criticality import analysis_report, is_diameter_k_critical
from graphs.graph_core import UNREACHABLE, Graph

from .base_runner import BaseRunner, GraphOutcome


class VerifyRunner(BaseRunner):
    command = 'verify'

    def process_graph(self, graph: Graph, source: str, args: argparse.Namespace) -> GraphOutcome:
        k = self.setting(args, 'k')
        threads = self.setting(args, 'threads', 1)
        verdict = is_diameter_k_critical(graph, k, threads)
        self.logger.debug(f"{source}: n={graph.n}, m={graph.m}, verdict {verdict}")

        document = None
        if getattr(args, 'json', None):
            document = analysis_report(graph, self.analysis_config(args, graph), source=source, threads=threads)

        return GraphOutcome(
            row={
                'source': source,
                'n': graph.n,
                'm': graph.m,
                'k': k,
                'diameter': None if verdict.diameter == UNREACHABLE else verdict.diameter,
                'is_critical': bool(verdict),
                'verdict': str(verdict),
            },
            document=document,
            passed=bool(verdict),
            message=f"diameter-{k}-critical: {verdict}",
        )
