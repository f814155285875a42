"""
Reading and writing graphs and hypergraphs.

Formats:
- edge list: first line "n m", then m lines "u v" (0-indexed, any orientation)
- graph6: one graph per line, optional ">>graph6<<" header
- hypergraph: first line "n m", then m lines of three vertex ids, plus an
  optional JSON sidecar <file>.json with handle/center annotations and partition
"""

import json
import logging
from pathlib import Path
from typing import Iterable, List, Optional, Sequence

import networkx as nx

from graphs.errors import GraphError, GraphFormatError
from graphs.graph_core import Graph, build_graph
from graphs.hypergraph import Annotation, Hypergraph3, make_hypergraph

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"

# File extensions mapped to input formats
FORMAT_BY_EXTENSION = {
    '.g6': 'graph6',
    '.graph6': 'graph6',
    '.el': 'edgelist',
    '.edges': 'edgelist',
    '.txt': 'edgelist',
}

GRAPH_FORMATS = ('edgelist', 'graph6')


def detect_format(path: str | Path, fmt: Optional[str] = None) -> str:
    """
    Resolve the graph format of a file from an explicit choice or its extension.

    Raises:
        GraphFormatError: If the format cannot be determined
    """
    if fmt:
        if fmt not in GRAPH_FORMATS:
            raise GraphFormatError(f"Unsupported graph format '{fmt}'")
        return fmt
    suffix = Path(path).suffix.lower()
    if suffix not in FORMAT_BY_EXTENSION:
        raise GraphFormatError(f"Cannot detect the format of {path}; use .g6/.el or --format")
    return FORMAT_BY_EXTENSION[suffix]


def to_networkx(graph: Graph) -> nx.Graph:
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(graph.n))
    nx_graph.add_edges_from(edge.as_tuple() for edge in graph.edges())
    return nx_graph


def from_networkx(nx_graph: nx.Graph) -> Graph:
    """Convert a networkx graph, relabeling its nodes to 0..n-1 in sorted order."""
    relabeled = nx.convert_node_labels_to_integers(nx.Graph(nx_graph), ordering='sorted')
    return build_graph(relabeled.number_of_nodes(), relabeled.edges())


def parse_edge_list(text: str, source: str = "<text>") -> Graph:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise GraphFormatError(f"{source}: empty edge list")
    try:
        n, m = (int(token) for token in lines[0].split())
    except ValueError:
        raise GraphFormatError(f"{source}: first line must be 'n m', got '{lines[0]}'")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"{source}: header announces {m} edges, found {len(body)} lines")
    edges = []
    for number, line in enumerate(body, start=2):
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"{source}:{number}: expected 'u v', got '{line}'")
        try:
            edges.append((int(tokens[0]), int(tokens[1])))
        except ValueError:
            raise GraphFormatError(f"{source}:{number}: vertex ids must be integers, got '{line}'")
    return build_graph(n, edges)


def format_edge_list(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{edge.u} {edge.v}" for edge in graph.edges())
    return "\n".join(lines) + "\n"


def graph6_string(graph: Graph) -> str:
    """graph6 encoding without header or trailing newline."""
    return nx.to_graph6_bytes(to_networkx(graph), header=False).decode('ascii').strip()


def parse_graph6(line: str) -> Graph:
    text = line.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):].strip()
    try:
        return from_networkx(nx.from_graph6_bytes(text.encode('ascii')))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as e:
        raise GraphFormatError(f"Invalid graph6 string '{text}': {str(e)}")


def read_graphs(path: str | Path, fmt: Optional[str] = None) -> List[Graph]:
    """
    Read every graph stored in a file: one per edge-list file, one per non-empty
    graph6 line.
    """
    path = Path(path)
    fmt = detect_format(path, fmt)
    text = path.read_text(encoding='utf-8')
    if fmt == 'edgelist':
        return [parse_edge_list(text, source=path.name)]
    graphs = [parse_graph6(line) for line in text.splitlines() if line.strip()]
    if not graphs:
        raise GraphFormatError(f"{path.name}: no graph6 lines found")
    return graphs


def read_graph(path: str | Path, fmt: Optional[str] = None) -> Graph:
    graphs = read_graphs(path, fmt)
    if len(graphs) != 1:
        raise GraphFormatError(f"{path} holds {len(graphs)} graphs, expected one")
    return graphs[0]


def write_graphs(graphs: Sequence[Graph], path: str | Path, fmt: str) -> Path:
    """
    Write graphs to a file; edge-list files hold exactly one graph.
    """
    path = Path(path)
    fmt = detect_format(path, fmt)
    path.parent.mkdir(parents=True, exist_ok=True)
    if fmt == 'edgelist':
        if len(graphs) != 1:
            raise GraphError(f"An edge-list file holds one graph, got {len(graphs)}")
        path.write_text(format_edge_list(graphs[0]), encoding='utf-8')
    else:
        path.write_text("".join(graph6_string(graph) + "\n" for graph in graphs), encoding='utf-8')
    logger.debug(f"Wrote {len(graphs)} graph(s) to {path} as {fmt}")
    return path


def iter_input_files(paths: Iterable[str | Path]) -> List[Path]:
    """
    Expand input arguments: files are kept as given, directories contribute all
    files with a known graph extension, sorted by name.

    Raises:
        FileNotFoundError: If an argument does not exist
    """
    files = []
    for raw in paths:
        path = Path(raw)
        if path.is_dir():
            files.extend(sorted(p for p in path.iterdir() if p.suffix.lower() in FORMAT_BY_EXTENSION))
        elif path.exists():
            files.append(path)
        else:
            raise FileNotFoundError(f"Input not found: {path}")
    return files


def sidecar_path(path: str | Path) -> Path:
    path = Path(path)
    return path.with_name(path.name + '.json')


def write_hypergraph(hypergraph: Hypergraph3, path: str | Path) -> Path:
    """Write the 3-edges as text and, when present, annotations and partition to the JSON sidecar."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [f"{hypergraph.n} {hypergraph.m}"]
    lines.extend(" ".join(str(x) for x in edge) for edge in hypergraph.edges)
    path.write_text("\n".join(lines) + "\n", encoding='utf-8')
    if hypergraph.annotations or hypergraph.partition is not None:
        sidecar = {
            'annotations': [
                [*edge, note.handle, note.center]
                for edge, note in sorted(hypergraph.annotations.items())
            ],
            'partition': [int(part) for part in hypergraph.partition] if hypergraph.partition is not None else None,
        }
        sidecar_path(path).write_text(json.dumps(sidecar, indent=2) + "\n", encoding='utf-8')
    return path


def read_hypergraph(path: str | Path) -> Hypergraph3:
    path = Path(path)
    lines = [line.strip() for line in path.read_text(encoding='utf-8').splitlines() if line.strip()]
    if not lines:
        raise GraphFormatError(f"{path.name}: empty hypergraph file")
    try:
        n, m = (int(token) for token in lines[0].split())
        edges = [tuple(int(token) for token in line.split()) for line in lines[1:]]
    except ValueError:
        raise GraphFormatError(f"{path.name}: hypergraph lines must hold integers")
    if len(edges) != m:
        raise GraphFormatError(f"{path.name}: header announces {m} 3-edges, found {len(edges)}")
    annotations, partition = {}, None
    sidecar = sidecar_path(path)
    if sidecar.exists():
        data = json.loads(sidecar.read_text(encoding='utf-8'))
        for a, b, c, handle, center in data.get('annotations') or []:
            annotations[(a, b, c)] = Annotation(handle=handle, center=center)
        partition = data.get('partition')
    return make_hypergraph(n, edges, annotations=annotations, partition=partition)
