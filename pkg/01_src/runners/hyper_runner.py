"""
Runner for `hyper`: the H1 -> H2 -> H3 -> H4 hypergraph reduction per level.
"""

import argparse
from pathlib import Path
from typing import Optional

from graphs.criticality import CriticalityAnalysis, analysis_report
from graphs.errors import InvalidParams
from graphs.graph_core import Graph
from graphs.hypergraph import run_pipeline
from utils.graph_io import write_hypergraph

from .analyze_runner import failed_checks, report_row
from .base_runner import BaseRunner, GraphOutcome


class HyperRunner(BaseRunner):
    command = 'hyper'

    def __init__(self, config, logger=None):
        super().__init__(config, logger)
        self._written = 0

    def _h4_path(self, target: str) -> Path:
        target = Path(target)
        if self._written == 0:
            return target
        return target.with_name(f"{target.stem}_{self._written + 1}{target.suffix}")

    def process_graph(self, graph: Graph, source: str, args: argparse.Namespace) -> GraphOutcome:
        cfg = self.analysis_config(args, graph)
        level: Optional[int] = getattr(args, 'i', None)
        if level is not None and not 2 <= level <= cfg.k:
            raise InvalidParams(f"-i must lie in 2..{cfg.k}, got {level}")
        levels = [level] if level is not None else list(range(2, cfg.k + 1))

        analysis = CriticalityAnalysis(graph, cfg.k, threads=self.setting(args, 'threads', 1), logger=self.logger)
        stages = {lvl: run_pipeline(graph, cfg, lvl, analysis) for lvl in levels}
        pipelines = [stages[lvl].report for lvl in levels]
        report = analysis_report(graph, cfg, source=source, analysis=analysis).model_copy(update={'pipelines': pipelines})

        if getattr(args, 'output', None):
            h4_level = level if level is not None else cfg.k
            path = write_hypergraph(stages[h4_level].h4, self._h4_path(args.output))
            self._written += 1
            self.logger.info(f"H4 of level {h4_level} ({stages[h4_level].h4.m} 3-edges) written to {path}")

        row = report_row(report)
        for pipe in pipelines:
            prefix = f"level{pipe.level}_"
            row[prefix + 'sizes'] = f"{pipe.h1_size}/{pipe.h2_size}/{pipe.h3_size}/{pipe.h4_size}"
            row[prefix + 'ok'] = pipe.all_ok
            row[prefix + 'collisions'] = pipe.collisions
            row[prefix + 'step_bound_ok'] = pipe.step_bound_ok

        failed = failed_checks(report) + [f"pipeline level {p.level}" for p in pipelines if not p.all_ok]
        lines = [
            f"level {p.level}: |H1|={p.h1_size} |H2|={p.h2_size} |H3|={p.h3_size} |H4|={p.h4_size} "
            f"linear={p.h2_linear} triangle_free={p.h4_triangle_free} ratios_ok={p.h2_ratio_ok and p.h3_ratio_ok and p.h4_ratio_ok}"
            for p in pipelines
        ]
        if failed:
            lines.append(f"failed checks: {', '.join(failed)}")
        return GraphOutcome(row=row, document=report, passed=not failed, message="\n".join(lines))
