"""Plain-text and JSON formats for graphs, hypergraphs and systems.

Edge lists hold one edge per line (a loop repeats its token), triple lists
one triple per line. A line with a single token declares a vertex, so any
label is allowed, and ``#`` starts a comment line. Tokens are read back as
strings.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Sequence, Tuple, Union

from hypercert.errors import FormatError
from hypercert.graph import LoopGraph, Vertex, edge, ends, isolated_vertices
from hypercert.hypergraph import CliqueFamily, Hypergraph3, sorted_labels
from hypercert.pairs import PairSystem
from hypercert.realize import Realization
from hypercert.utils import write_atomic_text

PathLike = Union[str, Path]


def _records(text: str, width: int) -> Tuple[List[str], List[List[str]]]:
    vertices: List[str] = []
    rows: List[List[str]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) == 1:
            vertices.append(tokens[0])
            continue
        if len(tokens) != width:
            raise FormatError(
                f"expected {width} tokens, found {len(tokens)}", line=number
            )
        if width == 3 and len(set(tokens)) != 3:
            raise FormatError(f"repeated vertex in {line!r}", line=number)
        rows.append(tokens)
    return vertices, rows


def parse_edge_list(text: str) -> LoopGraph:
    vertices, rows = _records(text, 2)
    return LoopGraph.from_edges(((u, v) for u, v in rows), vertices)


def format_edge_list(graph: LoopGraph) -> str:
    lines = [str(v) for v in sorted_labels(isolated_vertices(graph))]
    for e in graph.sorted_edges():
        u, v = ends(e)
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def parse_triple_list(text: str) -> Hypergraph3:
    vertices, rows = _records(text, 3)
    return Hypergraph3.from_triples(((a, b, c) for a, b, c in rows), vertices)


def format_triple_list(hypergraph: Hypergraph3) -> str:
    covered = frozenset().union(*hypergraph.triples)
    lines = [str(v) for v in sorted_labels(hypergraph.vertices - covered)]
    for triple in hypergraph.sorted_triples():
        lines.append(" ".join(str(v) for v in sorted_labels(triple)))
    return "\n".join(lines) + "\n"


def _tokens(vertices: Sequence[Vertex]) -> List[str]:
    return [str(v) for v in sorted_labels(vertices)]


def family_to_json(family: CliqueFamily) -> List[List[str]]:
    return [_tokens(member) for member in family.members]


def family_from_json(data: Any, ground: Sequence[str] = ()) -> CliqueFamily:
    if not isinstance(data, list) or not all(isinstance(m, list) for m in data):
        raise FormatError("a clique family is a JSON array of arrays")
    return CliqueFamily.of(([str(v) for v in m] for m in data), ground)


def system_to_json(system: PairSystem) -> Dict[str, Any]:
    return {
        "m": system.m,
        "pairs": [_tokens(list(pair)) for pair in system.pairs],
        "complements": [_tokens(list(c)) for c in system.complements],
        "ground": _tokens(list(system.ground)),
    }


def system_from_json(data: Dict[str, Any]) -> PairSystem:
    try:
        return PairSystem(
            ground=frozenset(str(v) for v in data["ground"]),
            m=int(data["m"]),
            pairs=tuple(edge(str(a), str(b)) for a, b in data["pairs"]),
            complements=tuple(
                frozenset(str(v) for v in c) for c in data["complements"]
            ),
        )
    except (KeyError, TypeError, ValueError) as e:
        raise FormatError(f"malformed pair system: {e}") from e


def realization_to_json(realization: Realization) -> Dict[str, Any]:
    return {
        "k": realization.k,
        "system": system_to_json(realization.system),
        "family": family_to_json(realization.family),
        "triples": [
            _tokens(list(t)) for t in realization.hypergraph.sorted_triples()
        ],
    }


def realization_from_json(data: Dict[str, Any]) -> Realization:
    system = system_from_json(data.get("system", {}))
    family = family_from_json(data.get("family"), sorted(system.ground))
    try:
        triples = [(str(a), str(b), str(c)) for a, b, c in data["triples"]]
        hypergraph = Hypergraph3.from_triples(triples, system.ground)
        k = int(data["k"])
    except (KeyError, TypeError, ValueError) as e:
        raise FormatError(f"malformed realization: {e}") from e
    return Realization(system, hypergraph, family, k)


def read_text(path: PathLike) -> str:
    return Path(path).read_text(encoding="utf-8")


def write_text(path: PathLike, content: str) -> None:
    write_atomic_text(Path(path), content)


def write_json(path: PathLike, data: Any) -> None:
    write_text(path, json.dumps(data, indent=2, sort_keys=True) + "\n")


def read_json(path: PathLike) -> Any:
    try:
        return json.loads(read_text(path))
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e.msg}", line=e.lineno) from e
