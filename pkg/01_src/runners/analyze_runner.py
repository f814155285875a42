"""
Runner for `analyze`: critical pairs, multiplicities, G0 statistics and lemma checks.
"""

import argparse
import json
from typing import Dict

from graphs.criticality import analysis_report
from graphs.graph_core import Graph
from graphs.reports import AnalysisReport

from .base_runner import BaseRunner, GraphOutcome


def report_row(report: AnalysisReport) -> Dict:
    """Flatten a report into one summary-table row."""
    row = report.model_dump(mode='json', exclude={'lemma_checks', 'witness', 'pipelines', 'multiplicity_histogram'})
    row['witness'] = json.dumps(report.witness.model_dump(mode='json', exclude_none=True)) if report.witness else None
    row['multiplicity_histogram'] = json.dumps({str(m): c for m, c in sorted(report.multiplicity_histogram.items())})
    for name, value in report.lemma_checks.model_dump().items():
        row[f"lemma_{name}"] = value
    return row


def failed_checks(report: AnalysisReport) -> list:
    """Names of lemma checks that ran and came out false; null checks are skipped."""
    return [name for name, value in report.lemma_checks.model_dump().items() if value is False]


class AnalyzeRunner(BaseRunner):
    command = 'analyze'

    def process_graph(self, graph: Graph, source: str, args: argparse.Namespace) -> GraphOutcome:
        cfg = self.analysis_config(args, graph)
        report = analysis_report(graph, cfg, source=source, threads=self.setting(args, 'threads', 1))
        failed = failed_checks(report)
        summary = (
            f"k={cfg.k} t={cfg.t} critical={'yes' if report.is_critical else 'no'} "
            f"pairs={report.critical_pair_count} heavy={report.heavy_edge_count} "
            f"t_edges={report.t_edge_count} e(G0)={report.g0_edge_count}"
        )
        if failed:
            summary += f" failed checks: {', '.join(failed)}"
        return GraphOutcome(row=report_row(report), document=report, passed=not failed, message=summary)
