"""
Base class for the subcommand runners.
"""

import argparse
import json
import logging
import sys
import traceback
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd
from pydantic import BaseModel

from graphs.criticality import AnalysisConfig
from graphs.graph_core import Graph
from utils.checkpoint_utils import handle_problematic_inputs
from utils.graph_io import iter_input_files, read_graphs

# Issue types recorded in the problematic-inputs ledger
ERROR = 'ERROR'
NO_DATA = 'NO_DATA'
VERIFICATION_FAILED = 'VERIFICATION_FAILED'

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


@dataclass
class GraphOutcome:
    """Result of one graph: a summary row, an optional JSON document and the check verdict."""

    row: Dict
    document: Optional[BaseModel] = None
    passed: bool = True
    message: str = ""


@dataclass
class RunResult:
    rows: List[Dict] = field(default_factory=list)
    documents: List[BaseModel] = field(default_factory=list)

    @property
    def table(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows)


class BaseRunner:
    command: str = ""
    required_sections: Sequence[str] = ('defaults', 'output')

    def __init__(self, config: Dict, logger: Optional[logging.Logger] = None):
        """
        Initialize the runner.

        Args:
            config: Settings dictionary loaded from <command>_settings.yaml
            logger: Optional logger instance

        Raises:
            ValueError: If a required settings section is missing
        """
        self.config = config
        self.logger = logger or logging.getLogger(__name__)
        self.issues = []  # List to track all issues (errors and failed checks)
        self.validate_config_sections(self.required_sections)

    @property
    def defaults(self) -> Dict:
        return self.config.get('defaults') or {}

    def setting(self, args: argparse.Namespace, name: str, default=None):
        """Explicit flag first, then the settings file, then the given default."""
        value = getattr(args, name, None)
        if value is not None:
            return value
        return self.defaults.get(name, default)

    def analysis_config(self, args: argparse.Namespace, graph: Graph) -> AnalysisConfig:
        """
        Build the AnalysisConfig for one graph. The settings value of t is either
        an integer or 'sqrt' for ceil(sqrt(n)).
        """
        k = self.setting(args, 'k')
        t = self.setting(args, 't', 'sqrt')
        strict = bool(getattr(args, 'strict_p_membership', False) or self.defaults.get('strict_p_membership', False))
        if t == 'sqrt':
            return AnalysisConfig.with_default_t(graph.n, k, strict_p_membership=strict)
        try:
            t = int(t)
        except (TypeError, ValueError):
            raise ValueError(f"Setting t must be an integer or 'sqrt', got {t!r}")
        return AnalysisConfig(k=k, t=t, strict_p_membership=strict)

    def validate_config_sections(self, required_sections: Sequence[str]) -> None:
        """Validate that required sections exist in config."""
        for section in required_sections:
            if section not in self.config:
                raise ValueError(f"Missing required section '{section}' in config")

    def _log_issue(self, source: str | Path, issue_type: str, message: str, details: Optional[Dict] = None) -> None:
        """
        Log an issue with an input.

        Args:
            source: Input file or graph label
            issue_type: One of ERROR, NO_DATA, VERIFICATION_FAILED
            message: Description of the issue
            details: Additional details about the issue (optional)
        """
        issue = {
            'timestamp': datetime.now().isoformat(),
            'input_name': Path(str(source)).name,
            'input_path': str(source),
            'issue_type': issue_type,
            'message': message,
            'runner': self.__class__.__name__,
        }
        if details:
            issue.update(details)
        self.issues.append(issue)

        log_method = self.logger.error if issue_type == ERROR else self.logger.warning
        log_method(f"{issue_type} in {issue['input_name']}: {message}")

    def _handle_processing_error(self, source: str | Path, error: Exception) -> Dict:
        error_info = {
            'error_type': type(error).__name__,
            'traceback': traceback.format_exc(),
        }
        self._log_issue(source, ERROR, str(error), error_info)
        return error_info

    def exit_status(self) -> int:
        """2 if any input could not be processed, 1 if a check came out false, else 0."""
        issue_types = {issue['issue_type'] for issue in self.issues}
        if ERROR in issue_types:
            return EXIT_USAGE
        if VERIFICATION_FAILED in issue_types:
            return EXIT_CHECK_FAILED
        return EXIT_OK

    def load_inputs(self, inputs: Sequence[str], fmt: Optional[str] = None) -> List[Tuple[str, Graph]]:
        """
        Read every graph from the given files and directories.

        Graphs from a multi-line graph6 file are labeled <file>#<line>.
        Unreadable files are recorded as ERROR issues and skipped.
        """
        labeled = []
        for raw in inputs:
            if Path(raw).is_dir() and not iter_input_files([raw]):
                self._log_issue(raw, NO_DATA, 'Directory holds no .g6/.el files')
        for file_path in iter_input_files(inputs):
            try:
                graphs = read_graphs(file_path, fmt)
            except Exception as e:
                self._handle_processing_error(file_path, e)
                continue
            if len(graphs) == 1:
                labeled.append((str(file_path), graphs[0]))
            else:
                labeled.extend((f"{file_path}#{idx}", graph) for idx, graph in enumerate(graphs, 1))
        return labeled

    def process_graph(self, graph: Graph, source: str, args: argparse.Namespace) -> GraphOutcome:
        """
        Process a single graph.
        To be implemented by child classes.
        """
        raise NotImplementedError("Child classes must implement process_graph method")

    def run(self, args: argparse.Namespace, output_dir: Path) -> RunResult:
        """
        Process every input graph and write the problematic-inputs ledger.

        Raises:
            ValueError: If no graph was processed
        """
        labeled = self.load_inputs(args.inputs, getattr(args, 'format', None))
        total = len(labeled)
        self.logger.info(f"Found {total} graph(s) to process")
        result = RunResult()

        for idx, (source, graph) in enumerate(labeled, 1):
            try:
                self.logger.info(f"Processing input [{idx}/{total}]: {Path(source).name}")
                outcome = self.process_graph(graph, source, args)
            except Exception as e:
                self._handle_processing_error(source, e)
                continue
            result.rows.append(outcome.row)
            if outcome.document is not None:
                result.documents.append(outcome.document)
            if not outcome.passed:
                self._log_issue(source, VERIFICATION_FAILED, outcome.message)
            if outcome.message and not self.json_to_stdout(args):
                print(outcome.message if total == 1 else f"{Path(source).name}: {outcome.message}")

        self.write_issue_ledger(output_dir)
        if not result.rows:
            raise ValueError("No graphs were successfully processed")

        self.logger.info(f"Processing complete: {len(result.rows)}/{total} graphs")
        if getattr(args, 'json', None):
            self.write_json(result.documents, args.json)
        return result

    def write_issue_ledger(self, output_dir: Path) -> None:
        if not self.issues:
            return
        ledger = handle_problematic_inputs(self.issues, output_dir, self.__class__.__name__)
        issue_summary = pd.DataFrame(self.issues)['issue_type'].value_counts()
        self.logger.warning(f"Issue summary (details in {ledger}):")
        for issue_type, count in issue_summary.items():
            self.logger.warning(f"{issue_type}: {count} input(s)")

    @staticmethod
    def json_to_stdout(args: argparse.Namespace) -> bool:
        return getattr(args, 'json', None) == '-'

    def write_json(self, documents: Sequence[BaseModel], target: str) -> None:
        """One object for a single document, an array otherwise; '-' writes to stdout."""
        payload = [document.model_dump(mode='json') for document in documents]
        text = json.dumps(payload[0] if len(payload) == 1 else payload, indent=2) + "\n"
        if target == '-':
            sys.stdout.write(text)
            return
        Path(target).parent.mkdir(parents=True, exist_ok=True)
        Path(target).write_text(text, encoding='utf-8')
        self.logger.info(f"JSON report written to {target}")

    def select_columns(self, df: pd.DataFrame) -> pd.DataFrame:
        """Restrict the summary table to the configured output columns, when set."""
        columns = (self.config.get('output') or {}).get('columns')
        if not columns or df.empty:
            return df
        return df.reindex(columns=list(columns))
