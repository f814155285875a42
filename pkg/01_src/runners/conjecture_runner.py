"""
Runner for `conjecture`: degree-square sum against n*e(G) and the Fueredi inequality.
"""

import argparse

from graphs.criticality import analysis_report, check_furedi
from graphs.graph_core import Graph
from graphs.search import degree_square_check

from .base_runner import BaseRunner, GraphOutcome


class ConjectureRunner(BaseRunner):
    command = 'conjecture'

    def process_graph(self, graph: Graph, source: str, args: argparse.Namespace) -> GraphOutcome:
        k = self.setting(args, 'k')
        squares = degree_square_check(graph, k)
        furedi = check_furedi(graph)
        furedi_ratio = furedi.lhs / furedi.bound if furedi.bound else None

        document = None
        if getattr(args, 'json', None) and k >= 2:
            document = analysis_report(graph, self.analysis_config(args, graph), source=source)

        problems = []
        if squares.violation:
            problems.append(f"sum d^2 = {squares.lhs} > n*e(G) = {squares.rhs}")
        if not furedi.holds:
            problems.append(f"e(G) + |Disj(G)| = {furedi.lhs} > n^2/2 = {furedi.bound:g}")

        ratio_text = f"{squares.ratio:.4f}" if squares.ratio is not None else "n/a"
        furedi_text = f"{furedi_ratio:.4f}" if furedi_ratio is not None else "n/a"
        message = (
            f"degree-square ratio {ratio_text} ({'claimed' if squares.claimed else 'not claimed'}), "
            f"Fueredi ratio {furedi_text}"
        )
        if problems:
            message += "; violated: " + "; ".join(problems)

        return GraphOutcome(
            row={
                'source': source,
                'n': graph.n,
                'm': graph.m,
                'k': k,
                'degree_square_sum': squares.lhs,
                'n_times_m': squares.rhs,
                'degree_square_ratio': squares.ratio,
                'degree_square_claimed': squares.claimed,
                'degree_square_holds': squares.holds,
                'furedi_lhs': furedi.lhs,
                'furedi_bound': furedi.bound,
                'furedi_ratio': furedi_ratio,
                'furedi_holds': furedi.holds,
            },
            document=document,
            passed=not problems,
            message=message,
        )
