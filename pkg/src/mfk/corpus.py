"""Built-in example registry: the worked examples, with realizations."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import UnknownName
from .matroid import LinearRealization, Matroid, from_matrix


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    description: str
    matroid: Matroid
    realization: LinearRealization | None


def _graph_matrix(vertex_count: int, edges) -> list[list[Fraction]]:
    matrix = [[Fraction(0)] * len(edges) for _ in range(vertex_count)]
    for idx, (u, v) in enumerate(edges):
        matrix[u - 1][idx] = Fraction(1)
        matrix[v - 1][idx] = Fraction(-1)
    return matrix


def _vandermonde(d: int, n: int) -> list[list[Fraction]]:
    return [[Fraction(j) ** i for j in range(1, n + 1)] for i in range(d)]


_FIXED = {
    "u23": ("three generic lines in the plane",
            [[1, 0, 1], [0, 1, -1]]),
    "u24": ("four generic lines in the plane",
            [[1, 0, 1, 1], [0, 1, -1, 1]]),
    "delA3": ("five lines with two triple points",
              [[1, 0, 0, 1, 1], [0, 1, 0, -1, 0], [0, 0, 1, 0, -1]]),
}


def _complete_graph_entry(vertices: int, name: str) -> CorpusEntry:
    edges = list(combinations(range(1, vertices + 1), 2))
    matroid, realization = from_matrix(_graph_matrix(vertices, edges))
    return CorpusEntry(name=name,
                       description=f"braid arrangement of K_{vertices}",
                       matroid=matroid, realization=realization)


def corpus(name: str) -> CorpusEntry:
    """Named access to the example arrangements."""
    if name in _FIXED:
        description, rows = _FIXED[name]
        matroid, realization = from_matrix(rows)
        return CorpusEntry(name=name, description=description,
                           matroid=matroid, realization=realization)
    if name == "braidK4":
        return _complete_graph_entry(4, name)
    if name == "braidK5":
        return _complete_graph_entry(5, name)
    m = re.fullmatch(r"boolean_(\d+)", name)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise UnknownName(name)
        matroid, realization = from_matrix(_vandermonde(n, n))
        return CorpusEntry(name=name, description=f"coordinate matroid on [{n}]",
                           matroid=matroid, realization=realization)
    m = re.fullmatch(r"uniform_(\d+)_(\d+)", name)
    if m:
        d, n = int(m.group(1)), int(m.group(2))
        if not 1 <= d <= n:
            raise UnknownName(name)
        matroid, realization = from_matrix(_vandermonde(d, n))
        return CorpusEntry(name=name,
                           description=f"generic arrangement U_{{{d},{n}}}",
                           matroid=matroid, realization=realization)
    raise UnknownName(name)


def corpus_names() -> list[str]:
    return ["u23", "u24", "delA3", "braidK4", "braidK5",
            "boolean_<n>", "uniform_<d>_<n>"]
