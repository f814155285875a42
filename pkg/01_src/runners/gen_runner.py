"""
Runner for `gen`: build one graph of a named family and write it out.
"""

import argparse
import sys
from pathlib import Path

from graphs.families import family_graph, parse_matching, random_matching
from utils.graph_io import format_edge_list, graph6_string, write_graphs

from .base_runner import BaseRunner, RunResult


class GenRunner(BaseRunner):
    command = 'gen'

    def run(self, args: argparse.Namespace, output_dir: Path) -> RunResult:
        matching = parse_matching(args.matching) if args.matching else None
        seed = self.setting(args, 'seed')
        if args.family == 'g3m' and matching is None and seed is not None:
            matching = random_matching(args.n, seed)
            self.logger.info(f"Drew random matching {str(matching) or '(empty)'} with seed {seed}")

        graph = family_graph(
            args.family,
            n=args.n,
            k=args.k,
            a0=args.a0,
            a1=args.a1,
            a2=args.a2,
            matching=matching,
        )
        self.logger.info(f"Generated {args.family}: n={graph.n}, m={graph.m}")

        if args.output:
            path = write_graphs([graph], args.output, args.format)
            self.logger.info(f"Graph written to {path}")
        else:
            fmt = args.format or self.defaults.get('format', 'edgelist')
            sys.stdout.write(graph6_string(graph) + "\n" if fmt == 'graph6' else format_edge_list(graph))

        return RunResult(rows=[{
            'family': args.family,
            'n': graph.n,
            'm': graph.m,
            'matching': str(matching) if matching is not None else None,
            'output': args.output,
        }])
