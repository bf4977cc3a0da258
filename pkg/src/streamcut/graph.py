"""Directed multigraph container and edge-list I/O.

Graphs are immutable once built: edges live in two parallel int64 arrays,
degree tables are precomputed, and adjacency structures are derived lazily
and cached. Degrees follow the undirected convention used throughout:
``total_degree(v) = in_degree(v) + out_degree(v)``, so a self-loop adds 2.
"""

from __future__ import annotations

import io
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence, Union

import numpy as np


class Edge(NamedTuple):
    source: int
    target: int


class GraphFormatError(ValueError):
    """Raised for malformed or empty edge-list input."""


class Graph:
    """Immutable directed multigraph over dense vertex ids 0..n-1.

    Duplicate edges are kept as distinct occurrences and self-loops are
    allowed; ids never seen as a source are still vertices (they matter to
    vertex-arrival streaming).
    """

    __slots__ = ("_n", "_src", "_dst", "_in_deg", "_out_deg", "_out_csr", "_und_csr")

    def __init__(self, vertex_count: int, src: np.ndarray, dst: np.ndarray) -> None:
        if vertex_count < 1:
            raise GraphFormatError("graph needs at least one vertex")
        src = np.ascontiguousarray(src, dtype=np.int64)
        dst = np.ascontiguousarray(dst, dtype=np.int64)
        if src.shape != dst.shape or src.ndim != 1:
            raise ValueError("src/dst must be parallel 1-d arrays")
        if src.size and (src.min() < 0 or dst.min() < 0):
            raise GraphFormatError("negative vertex id")
        if src.size and max(int(src.max()), int(dst.max())) >= vertex_count:
            raise GraphFormatError("vertex id out of range")
        self._n = int(vertex_count)
        self._src = src
        self._dst = dst
        self._in_deg = np.bincount(dst, minlength=self._n).astype(np.int64)
        self._out_deg = np.bincount(src, minlength=self._n).astype(np.int64)
        self._out_csr: tuple[np.ndarray, np.ndarray] | None = None
        self._und_csr: tuple[np.ndarray, np.ndarray] | None = None

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
        pairs = list(edges)
        if pairs:
            arr = np.asarray(pairs, dtype=np.int64)
            return cls(vertex_count, arr[:, 0], arr[:, 1])
        empty = np.empty(0, dtype=np.int64)
        return cls(vertex_count, empty, empty)

    # -- basic accessors ---------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return int(self._src.size)

    @property
    def edge_sources(self) -> np.ndarray:
        return self._src

    @property
    def edge_targets(self) -> np.ndarray:
        return self._dst

    def edges(self) -> Iterable[Edge]:
        for u, v in zip(self._src.tolist(), self._dst.tolist()):
            yield Edge(u, v)

    def in_degree(self, v: int) -> int:
        return int(self._in_deg[v])

    def out_degree(self, v: int) -> int:
        return int(self._out_deg[v])

    def total_degree(self, v: int) -> int:
        return int(self._in_deg[v] + self._out_deg[v])

    @property
    def in_degrees(self) -> np.ndarray:
        return self._in_deg

    @property
    def out_degrees(self) -> np.ndarray:
        return self._out_deg

    @property
    def total_degrees(self) -> np.ndarray:
        return self._in_deg + self._out_deg

    # -- adjacency views ---------------------------------------------------

    def out_csr(self) -> tuple[np.ndarray, np.ndarray]:
        """(ptr, edge_idx): out-edges of v are edge indices ptr[v]:ptr[v+1],
        in input order."""
        if self._out_csr is None:
            order = np.argsort(self._src, kind="stable")
            ptr = np.zeros(self._n + 1, dtype=np.int64)
            np.cumsum(np.bincount(self._src, minlength=self._n), out=ptr[1:])
            self._out_csr = (ptr, order.astype(np.int64))
        return self._out_csr

    def undirected_csr(self) -> tuple[np.ndarray, np.ndarray]:
        """(ptr, nbr): neighbors of v over the undirected edge set, ascending,
        one entry per incident edge end (duplicates and loops kept)."""
        if self._und_csr is None:
            ends_src = np.concatenate([self._src, self._dst])
            ends_dst = np.concatenate([self._dst, self._src])
            order = np.lexsort((ends_dst, ends_src))
            ptr = np.zeros(self._n + 1, dtype=np.int64)
            np.cumsum(np.bincount(ends_src, minlength=self._n), out=ptr[1:])
            self._und_csr = (ptr, ends_dst[order].astype(np.int64))
        return self._und_csr


TextSource = Union[str, Path, io.TextIOBase]


def load_edge_list(source: TextSource) -> Graph:
    """Parse whitespace-separated "source target" lines into a Graph.

    Blank lines and lines starting with '#' are skipped. Duplicate lines are
    kept as distinct edges. Vertex count is max id + 1.
    """
    if isinstance(source, (str, Path)):
        text = Path(source).read_text()
    else:
        text = source.read()
    srcs: list[int] = []
    dsts: list[int] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two integer tokens, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer token in {line!r}") from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex id in {line!r}")
        srcs.append(u)
        dsts.append(v)
    if not srcs:
        raise GraphFormatError("edge list is empty")
    src = np.asarray(srcs, dtype=np.int64)
    dst = np.asarray(dsts, dtype=np.int64)
    n = int(max(src.max(), dst.max())) + 1
    return Graph(n, src, dst)


def write_edge_list(graph: Graph, target: Union[str, Path, io.TextIOBase]) -> None:
    """Write the graph in the same format load_edge_list reads."""
    lines = io.StringIO()
    for u, v in zip(graph.edge_sources.tolist(), graph.edge_targets.tolist()):
        lines.write(f"{u} {v}\n")
    if isinstance(target, (str, Path)):
        Path(target).write_text(lines.getvalue())
    else:
        target.write(lines.getvalue())


def edge_array(edges: Sequence[Edge]) -> tuple[np.ndarray, np.ndarray]:
    if not edges:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    arr = np.asarray(edges, dtype=np.int64)
    return arr[:, 0], arr[:, 1]
