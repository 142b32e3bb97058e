"""Graphs, 2-schemes, simplicial complexes and their chain complexes.

Cells are indexed densely in input order.  Boundary matrices are stored
column-per-higher-cell as sparse ``{row: coefficient}`` dicts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

Dart = tuple[int, int]  # (edge id, side): side 0 sits at edges[e][0], side 1 at edges[e][1]
FaceDart = tuple[int, int]  # (edge id, +1 | -1): +1 traverses edges[e][0] -> edges[e][1]


class MalformedInput(ValueError):
    """Input violates the structural contract of the data model."""


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple((int(a), int(b)) for a, b in self.edges))
        if self.vertex_count < 0:
            raise MalformedInput("negative vertex count")
        for i, (a, b) in enumerate(self.edges):
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise MalformedInput(f"edge {i} has endpoint outside 0..{self.vertex_count - 1}")

    @property
    def V(self) -> int:
        return self.vertex_count

    @property
    def E(self) -> int:
        return len(self.edges)

    def darts(self) -> list[Dart]:
        return [(e, s) for e in range(self.E) for s in (0, 1)]

    def dart_vertex(self, d: Dart) -> int:
        return self.edges[d[0]][d[1]]

    def darts_at(self) -> list[list[Dart]]:
        """Darts grouped by vertex, in edge order."""
        out: list[list[Dart]] = [[] for _ in range(self.V)]
        for e, (a, b) in enumerate(self.edges):
            out[a].append((e, 0))
            out[b].append((e, 1))
        return out

    def degrees(self) -> list[int]:
        deg = [0] * self.V
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def neighbors(self) -> list[list[tuple[int, int]]]:
        """Per vertex, list of (neighbor, edge id); a loop is listed twice."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.V)]
        for e, (a, b) in enumerate(self.edges):
            adj[a].append((b, e))
            adj[b].append((a, e))
        return adj

    def is_simple(self) -> bool:
        seen = set()
        for a, b in self.edges:
            if a == b:
                return False
            key = (min(a, b), max(a, b))
            if key in seen:
                return False
            seen.add(key)
        return True


@dataclass(frozen=True)
class Scheme2:
    graph: Graph
    faces: tuple[tuple[FaceDart, ...], ...] = ()

    def __post_init__(self) -> None:
        faces = tuple(tuple((int(e), int(s)) for e, s in f) for f in self.faces)
        object.__setattr__(self, "faces", faces)
        for k, f in enumerate(faces):
            if not f:
                raise MalformedInput(f"face {k} is empty")
            for e, s in f:
                if not 0 <= e < self.graph.E:
                    raise MalformedInput(f"face {k} references missing edge {e}")
                if s not in (1, -1):
                    raise MalformedInput(f"face {k} has dart direction {s}")
            for i, d in enumerate(f):
                if self.head(d) != self.tail(f[(i + 1) % len(f)]):
                    raise MalformedInput(f"face {k} is not a closed walk at position {i}")

    def tail(self, d: FaceDart) -> int:
        a, b = self.graph.edges[d[0]]
        return a if d[1] > 0 else b

    def head(self, d: FaceDart) -> int:
        a, b = self.graph.edges[d[0]]
        return b if d[1] > 0 else a

    @property
    def F(self) -> int:
        return len(self.faces)

    def edge_slots(self) -> list[list[tuple[int, int, int]]]:
        """For each edge, its face slots as (face, position, direction)."""
        slots: list[list[tuple[int, int, int]]] = [[] for _ in range(self.graph.E)]
        for k, f in enumerate(self.faces):
            for i, (e, s) in enumerate(f):
                slots[e].append((k, i, s))
        return slots


@dataclass(frozen=True)
class SimplicialComplex:
    """Simplices grouped by dimension, each a sorted vertex tuple, closed under faces."""

    simplices: tuple[tuple[tuple[int, ...], ...], ...]

    @classmethod
    def from_maximal(cls, tops: Iterable[Sequence[int]]) -> "SimplicialComplex":
        found: set[tuple[int, ...]] = set()
        for s in tops:
            t = tuple(sorted(int(v) for v in s))
            if not t:
                continue
            if len(set(t)) != len(t):
                raise MalformedInput(f"simplex {t} repeats a vertex")
            for k in range(1, len(t) + 1):
                found.update(combinations(t, k))
        if not found:
            return cls(())
        top = max(len(s) for s in found)
        by_dim = [sorted(s for s in found if len(s) == k + 1) for k in range(top)]
        return cls(tuple(tuple(d) for d in by_dim))

    @property
    def dimension(self) -> int:
        return len(self.simplices) - 1

    def counts(self) -> tuple[int, ...]:
        return tuple(len(d) for d in self.simplices)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.counts()))


@dataclass(frozen=True)
class ChainComplex:
    """Chain complex with ``boundaries[k]`` the map C_{k+1} -> C_k.

    ``boundaries[k][j]`` is the boundary of the j-th (k+1)-cell as a sparse
    ``{k-cell: coefficient}`` dict.  ``ring`` is ``"z2"`` or ``"z"``.
    """

    ring: str
    counts: tuple[int, ...]
    boundaries: tuple[tuple[dict[int, int], ...], ...] = field(default=())

    def __post_init__(self) -> None:
        if self.ring not in ("z2", "z"):
            raise ValueError(f"unknown ring {self.ring!r}")
        if len(self.boundaries) != max(len(self.counts) - 1, 0):
            raise MalformedInput("need one boundary map between consecutive dimensions")
        for k, cols in enumerate(self.boundaries):
            if len(cols) != self.counts[k + 1]:
                raise MalformedInput(f"boundary {k} has {len(cols)} columns, expected {self.counts[k + 1]}")
            for col in cols:
                for r in col:
                    if not 0 <= r < self.counts[k]:
                        raise MalformedInput(f"boundary {k} references missing cell {r}")

    @property
    def top(self) -> int:
        return len(self.counts) - 1

    def matrix(self, k: int) -> list[list[int]]:
        """Dense matrix of the map C_{k+1} -> C_k (rows = k-cells)."""
        rows, cols = self.counts[k], self.counts[k + 1]
        m = [[0] * cols for _ in range(rows)]
        for j, col in enumerate(self.boundaries[k]):
            for i, c in col.items():
                m[i][j] = c
        return m

    def columns_gf2(self, k: int) -> list[int]:
        out = []
        for col in self.boundaries[k]:
            v = 0
            for i, c in col.items():
                if c & 1:
                    v |= 1 << i
            out.append(v)
        return out

    def rows_gf2(self, k: int) -> list[int]:
        rows = [0] * self.counts[k]
        for j, col in enumerate(self.boundaries[k]):
            for i, c in col.items():
                if c & 1:
                    rows[i] |= 1 << j
        return rows

    def boundary_squared_is_zero(self) -> bool:
        for k in range(1, len(self.boundaries)):
            lower, upper = self.boundaries[k - 1], self.boundaries[k]
            for col in upper:
                acc: dict[int, int] = {}
                for mid, c in col.items():
                    for low, c2 in lower[mid].items():
                        acc[low] = acc.get(low, 0) + c * c2
                if self.ring == "z2":
                    if any(v % 2 for v in acc.values()):
                        return False
                elif any(acc.values()):
                    return False
        return True

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.counts))


def _clean(col: dict[int, int], ring: str) -> dict[int, int]:
    if ring == "z2":
        return {i: 1 for i, c in sorted(col.items()) if c % 2}
    return {i: c for i, c in sorted(col.items()) if c}


def build_chain_complex(obj, ring: str = "z2") -> ChainComplex:
    """Chain complex of a Graph, Scheme2 or SimplicialComplex over ``ring``."""
    if isinstance(obj, SimplicialComplex):
        return _simplicial_chain_complex(obj, ring)
    if isinstance(obj, Graph):
        obj = Scheme2(obj, ())
    if not isinstance(obj, Scheme2):
        raise TypeError(f"cannot build a chain complex from {type(obj).__name__}")
    g = obj.graph
    d0 = []
    for a, b in g.edges:
        col: dict[int, int] = {}
        col[b] = col.get(b, 0) + 1
        col[a] = col.get(a, 0) - 1
        d0.append(_clean(col, ring))
    d1 = []
    for f in obj.faces:
        col = {}
        for e, s in f:
            col[e] = col.get(e, 0) + s
        d1.append(_clean(col, ring))
    return ChainComplex(ring, (g.V, g.E, obj.F), (tuple(d0), tuple(d1)))


def _simplicial_chain_complex(sc: SimplicialComplex, ring: str) -> ChainComplex:
    index = [{s: i for i, s in enumerate(d)} for d in sc.simplices]
    maps = []
    for k in range(1, len(sc.simplices)):
        cols = []
        for s in sc.simplices[k]:
            col = {}
            for i in range(len(s)):
                col[index[k - 1][s[:i] + s[i + 1:]]] = (-1) ** i
            cols.append(_clean(col, ring))
        maps.append(tuple(cols))
    return ChainComplex(ring, sc.counts(), tuple(maps))


def euler_characteristic(s) -> int:
    if isinstance(s, Scheme2):
        return s.graph.V - s.graph.E + s.F
    if isinstance(s, Graph):
        return s.V - s.E
    return s.euler_characteristic()


def connected_components(g: Graph) -> tuple[int, list[int]]:
    """Number of components and a label per vertex (labels in order of first vertex)."""
    label = [-1] * g.V
    adj = g.neighbors()
    count = 0
    for start in range(g.V):
        if label[start] >= 0:
            continue
        label[start] = count
        stack = [start]
        while stack:
            v = stack.pop()
            for w, _ in adj[v]:
                if label[w] < 0:
                    label[w] = count
                    stack.append(w)
        count += 1
    return count, label


def subdivide_edge(s, edge: int):
    """Insert a new vertex in the middle of ``edge``.

    The new vertex gets id V and the second half becomes edge E; edge ``edge``
    keeps its tail and now ends at the new vertex.  Faces are rewritten.
    """
    g = s.graph if isinstance(s, Scheme2) else s
    if not 0 <= edge < g.E:
        raise MalformedInput(f"no edge {edge}")
    a, b = g.edges[edge]
    m = g.V
    new_edges = list(g.edges)
    new_edges[edge] = (a, m)
    new_edges.append((m, b))
    ng = Graph(g.V + 1, tuple(new_edges))
    if not isinstance(s, Scheme2):
        return ng
    tail_half = g.E
    faces = []
    for f in s.faces:
        nf: list[FaceDart] = []
        for e, d in f:
            if e != edge:
                nf.append((e, d))
            elif d > 0:
                nf += [(edge, 1), (tail_half, 1)]
            else:
                nf += [(tail_half, -1), (edge, -1)]
        faces.append(tuple(nf))
    return Scheme2(ng, tuple(faces))


def subdivide_face(s: Scheme2, face: int, i: int, j: int) -> Scheme2:
    """Cut ``face`` by a new edge from the tail of dart i to the tail of dart j (i < j)."""
    f = s.faces[face]
    if not (0 <= i < j < len(f)):
        raise MalformedInput("face cut positions must satisfy 0 <= i < j < len(face)")
    u, w = s.tail(f[i]), s.tail(f[j])
    g = s.graph
    new = g.E
    ng = Graph(g.V, g.edges + ((u, w),))
    first = f[i:j] + ((new, -1),)
    second = f[j:] + f[:i] + ((new, 1),)
    faces = list(s.faces)
    faces[face] = first
    faces.append(second)
    return Scheme2(ng, tuple(faces))
