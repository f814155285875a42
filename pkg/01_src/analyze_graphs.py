"""
Main script for generating, verifying and analyzing diameter-critical graphs.
Supports one subcommand per kind of run; batch runs also write a CSV summary.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

import yaml

import sql_data_types
from graphs.families import ELEMENTARY_FAMILIES
from runners import AnalyzeRunner, ConjectureRunner, GenRunner, HyperRunner, SearchRunner, VerifyRunner
from runners.base_runner import EXIT_USAGE
from utils import setup_logger
from utils.db_utils import write_to_sql
from utils.graph_io import GRAPH_FORMATS

# Map of subcommands to their runner classes
# Optional SQL types can be provided to override automatic type inference
RUNNERS = {
    'gen': {'class': GenRunner, 'sql_types': None, 'writes_table': False},
    'verify': {'class': VerifyRunner, 'sql_types': None, 'writes_table': True},
    'analyze': {'class': AnalyzeRunner, 'sql_types': sql_data_types.sql_types_analyze, 'writes_table': True},
    'hyper': {'class': HyperRunner, 'sql_types': sql_data_types.sql_types_analyze, 'writes_table': True},
    'search': {'class': SearchRunner, 'sql_types': sql_data_types.sql_types_search, 'writes_table': True},
    'conjecture': {'class': ConjectureRunner, 'sql_types': None, 'writes_table': True},
}

FAMILIES = ('gk', 'g30', 'g3m', 'bipartite') + ELEMENTARY_FAMILIES


def _add_batch_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--config', type=str, help='Path to the settings file of this subcommand')
    parser.add_argument('--output-dir', type=str, help='Directory for the CSV summary and problem ledger')
    parser.add_argument('--sql', action='store_true', help='Also append the summary table to the database in config.json')


def _add_graph_inputs(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('inputs', nargs='+', help='Graph files (.g6/.el) or directories holding them')
    parser.add_argument('--format', choices=GRAPH_FORMATS, help='Input format; detected from the extension by default')
    parser.add_argument('--json', type=str, metavar='PATH', help="Write the report(s) as JSON to PATH ('-' for stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='analyze_graphs',
        description='Generate, verify and analyze diameter-k-critical graphs.',
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    gen = subparsers.add_parser('gen', help='Generate a graph of a named family')
    gen.add_argument('--family', choices=FAMILIES, required=True, help='Graph family')
    gen.add_argument('--n', type=int, help='Vertex count')
    gen.add_argument('--k', type=int, help='Diameter parameter of G_k')
    gen.add_argument('--a0', type=int, help='G_k: left hub size; bipartite: left side')
    gen.add_argument('--a1', type=int, help='G_k: number of internal paths')
    gen.add_argument('--a2', type=int, help='G_k: right hub size; bipartite: right side')
    gen.add_argument('--matching', type=str, help="Matching on the clique side of G_3,M as 'u-v,u-v,...'")
    gen.add_argument('--seed', type=int, help='Seed for a random G_3,M matching when --matching is absent')
    gen.add_argument('--format', choices=GRAPH_FORMATS, help='Output format; detected from -o by default')
    gen.add_argument('-o', '--output', type=str, help='Output file (stdout when omitted)')
    _add_batch_options(gen)

    verify = subparsers.add_parser('verify', help='Check diameter-k-criticality')
    _add_graph_inputs(verify)
    verify.add_argument('-k', '--k', type=int, help='Diameter to verify')
    verify.add_argument('--threads', type=int, help='Worker processes (0 = all CPUs)')
    _add_batch_options(verify)

    analyze = subparsers.add_parser('analyze', help='Critical pairs, multiplicities, G0 and lemma checks')
    _add_graph_inputs(analyze)
    analyze.add_argument('-k', '--k', type=int, help='Diameter parameter')
    analyze.add_argument('-t', '--t', type=int, help='Multiplicity threshold (default ceil(sqrt(n)))')
    analyze.add_argument('--threads', type=int, help='Worker processes (0 = all CPUs)')
    analyze.add_argument('--strict-p-membership', action='store_true',
                         help='Require all edges at both path ends to be light and associated')
    _add_batch_options(analyze)

    hyper = subparsers.add_parser('hyper', help='Run the hypergraph reduction H1 -> H4')
    _add_graph_inputs(hyper)
    hyper.add_argument('-k', '--k', type=int, help='Diameter parameter')
    hyper.add_argument('-t', '--t', type=int, help='Multiplicity threshold (default ceil(sqrt(n)))')
    hyper.add_argument('-i', '--i', type=int, help='Single level to run (default: all levels 2..k)')
    hyper.add_argument('--strict-p-membership', action='store_true',
                       help='Require all edges at both path ends to be light and associated')
    hyper.add_argument('-o', '--output', type=str, help='Write H4 (level -i, else k) to this file')
    _add_batch_options(hyper)

    search = subparsers.add_parser('search', help='Exhaustive extremal search on n vertices')
    search.add_argument('--n', type=int, required=True, help='Vertex count')
    search.add_argument('-k', '--k', type=int, help='Diameter parameter')
    search.add_argument('--exhaustive', action='store_true', help='Allow the larger vertex counts (slow)')
    search.add_argument('--threads', type=int, help='Worker processes (0 = all CPUs)')
    search.add_argument('--json', type=str, metavar='PATH', help="Write the search result as JSON ('-' for stdout)")
    search.add_argument('-o', '--output', type=str, help='Write the extremal graphs as graph6')
    _add_batch_options(search)

    conjecture = subparsers.add_parser('conjecture', help='Degree-square and Fueredi inequality checks')
    _add_graph_inputs(conjecture)
    conjecture.add_argument('-k', '--k', type=int, help='Diameter parameter')
    _add_batch_options(conjecture)

    return parser


def get_default_paths(command: str) -> dict:
    """Get default paths relative to script location."""
    script_dir = Path(__file__).parent
    return {
        'output_dir': script_dir.parent / "02_data" / "02_output",
        'config': script_dir / "config" / f"{command}_settings.yaml",
    }


def validate_paths(paths: dict) -> None:
    """
    Validate existence of required paths and create output directory if needed.

    Raises:
        FileNotFoundError: If the settings file doesn't exist
    """
    if not paths['config'].exists():
        raise FileNotFoundError(f"Configuration file not found: {paths['config']}")
    paths['output_dir'].mkdir(parents=True, exist_ok=True)


def load_config(config_path: Path) -> dict:
    """
    Load configuration from YAML file.

    Raises:
        ValueError: If config file is invalid
    """
    try:
        with open(config_path, 'r', encoding='utf-8') as f:
            config = yaml.safe_load(f)
        if not isinstance(config, dict):
            raise ValueError(f"Invalid config format in {config_path}")
        return config
    except Exception as e:
        raise ValueError(f"Error loading config from {config_path}: {str(e)}")


def main(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand and return its exit status (0 ok, 1 check failed, 2 usage/IO error)."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    logger = setup_logger(args.command)

    try:
        default_paths = get_default_paths(args.command)
        paths = {
            'output_dir': Path(args.output_dir) if args.output_dir else default_paths['output_dir'],
            'config': Path(args.config) if args.config else default_paths['config'],
        }
        validate_paths(paths)
        config = load_config(paths['config'])

        runner_info = RUNNERS[args.command]
        runner = runner_info['class'](config, logger=logger)
        result = runner.run(args, paths['output_dir'])
    except (ValueError, OSError) as e:
        # GraphError derives from ValueError
        logger.error(f"Error: {str(e)}")
        return EXIT_USAGE

    if runner_info['writes_table']:
        table_name = config['output'].get('table_name', f"diameter_critical_{args.command}")
        results_df = runner.select_columns(result.table)
        output_path = paths['output_dir'] / f"{table_name}.csv"
        results_df.to_csv(output_path, index=False)
        logger.info(f"Results saved to: {output_path}")

        if args.sql:
            try:
                write_to_sql(df=results_df, table_name=table_name, sql_types=runner_info['sql_types'], logger=logger)
                logger.info(f"Results also written to SQL table: {table_name}")
            except Exception as e:
                logger.error(f"Failed to write to SQL database: {str(e)}")
                logger.error("Data was saved to CSV but not to the database")

    return runner.exit_status()


if __name__ == "__main__":
    sys.exit(main())
