"""Rotation systems (thickenings) of graphs.

Face tracing, the surface of a thickening, genus by exhaustive search and
by the rank of the interlacement matrix of a spanning tree's boundary
word, planarity of oriented thickenings, and thickening counts.

Darts are ``(edge, side)``; the rotation at a vertex lists its darts in
counterclockwise order.  A twisted edge flips the traversal side.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial, prod
from typing import Iterator

from . import gf2
from .complex import Dart, Graph, MalformedInput, connected_components
from .surfaces import SurfaceClass

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """Exhaustive search would exceed the configured budget."""


@dataclass(frozen=True)
class RotationSystem:
    graph: Graph
    rotation: tuple[tuple[Dart, ...], ...]
    twist: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        g = self.graph
        rot = tuple(tuple((int(e), int(s)) for e, s in r) for r in self.rotation)
        object.__setattr__(self, "rotation", rot)
        tw = tuple(int(t) & 1 for t in self.twist) if self.twist else (0,) * g.E
        object.__setattr__(self, "twist", tw)
        if len(rot) != g.V:
            raise MalformedInput("need one rotation per vertex")
        if len(tw) != g.E:
            raise MalformedInput("need one twist bit per edge")
        seen = set()
        for v, r in enumerate(rot):
            for d in r:
                if d in seen:
                    raise MalformedInput(f"dart {d} appears twice")
                if not (0 <= d[0] < g.E and d[1] in (0, 1)):
                    raise MalformedInput(f"no dart {d}")
                if g.dart_vertex(d) != v:
                    raise MalformedInput(f"dart {d} is not at vertex {v}")
                seen.add(d)
        if len(seen) != 2 * g.E:
            raise MalformedInput("some darts are missing from the rotation")

    @classmethod
    def default(cls, g: Graph, twist=()) -> "RotationSystem":
        return cls(g, tuple(tuple(ds) for ds in g.darts_at()), tuple(twist))

    @property
    def orientable_labels(self) -> bool:
        return not any(self.twist)

    def successor(self) -> dict[Dart, Dart]:
        out = {}
        for r in self.rotation:
            for i, d in enumerate(r):
                out[d] = r[(i + 1) % len(r)]
        return out

    def predecessor(self) -> dict[Dart, Dart]:
        return {b: a for a, b in self.successor().items()}

    def flipped(self, vertices) -> "RotationSystem":
        """Invert at the given vertices: reverse their rotations and retwist incident edges."""
        vs = set(vertices)
        rot = tuple(tuple(reversed(r)) if v in vs else r for v, r in enumerate(self.rotation))
        tw = list(self.twist)
        for e, (a, b) in enumerate(self.graph.edges):
            if a != b:
                tw[e] ^= (a in vs) ^ (b in vs)
        return RotationSystem(self.graph, rot, tuple(tw))


@dataclass(frozen=True)
class FaceTrace:
    circuits: tuple[tuple[Dart, ...], ...]

    @property
    def h(self) -> int:
        return len(self.circuits)


@dataclass(frozen=True)
class InterlacementMatrix:
    off_tree: tuple[int, ...]  # edge ids, row/column order
    word: tuple[int, ...]  # boundary word of the tree neighbourhood (edge ids)
    rows: tuple[int, ...]  # bitset rows, symmetric
    diagonal: tuple[int, ...] = ()  # twist bits of off-tree edges after retwisting

    @property
    def b(self) -> int:
        return len(self.off_tree)

    def rank(self, diagonal: int | None = None) -> int:
        """GF(2) rank with an optional diagonal bitset added."""
        if diagonal is None:
            return gf2.rank(self.rows)
        return gf2.rank(r ^ (((diagonal >> i) & 1) << i) for i, r in enumerate(self.rows))

    def twisted_rank(self) -> int:
        return self.rank(gf2.pack(self.diagonal))


def _opp(d: Dart) -> Dart:
    return (d[0], 1 - d[1])


def trace_faces(r: RotationSystem) -> FaceTrace:
    """Boundary circuits of the thickening.

    States are (dart, direction).  Each boundary circle is traced twice in
    the state space, once per direction; one orbit of each pair is kept, so
    circuit lengths sum to 2E.  Isolated vertices give empty circuits.
    """
    succ, pred = r.successor(), r.predecessor()
    twist = r.twist

    def step(state):
        d, s = state
        o = _opp(d)
        if twist[d[0]]:
            s = -s
        return ((succ if s > 0 else pred)[o], s)

    def mirror(state):
        d, s = state
        return (_opp(d), s if twist[d[0]] else -s)

    seen = set()
    circuits = []
    for d in r.graph.darts():
        for s in (1, -1):
            start = (d, s)
            if start in seen:
                continue
            orbit = []
            st = start
            while True:
                orbit.append(st)
                st = step(st)
                if st == start:
                    break
            seen.update(orbit)
            seen.update(mirror(x) for x in orbit)
            circuits.append(tuple(x[0] for x in orbit))
    # an isolated vertex thickens to a disc with one empty boundary circuit
    circuits += [() for rot in r.rotation if not rot]
    return FaceTrace(tuple(circuits))


def orientable_twists(g: Graph, twist) -> tuple[bool, list[int]]:
    """Decide whether a twist labeling is a coboundary of vertex flips.

    Returns (True, flip bits per vertex) or (False, partial flips).
    """
    flips = [-1] * g.V
    adj = g.neighbors()
    ok = True
    for root in range(g.V):
        if flips[root] >= 0:
            continue
        flips[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w, e in adj[v]:
                want = flips[v] ^ twist[e]
                if flips[w] < 0:
                    flips[w] = want
                    queue.append(w)
                elif w != v and flips[w] != want:
                    ok = False
    for e, (a, b) in enumerate(g.edges):
        if a == b and twist[e]:
            ok = False
    return ok, flips


def euler_genus(r: RotationSystem) -> int:
    """2 - V + E - h for a connected rotation system."""
    g = r.graph
    return 2 - g.V + g.E - trace_faces(r).h


def thickening_surface(r: RotationSystem) -> SurfaceClass:
    g = r.graph
    count, _ = connected_components(g)
    if count != 1:
        raise ValueError(f"rotation system has {count} components; split it first")
    h = trace_faces(r).h
    chi = g.V - g.E
    if orientable_twists(g, r.twist)[0]:
        return SurfaceClass(True, (2 - chi - h) // 2, 0, h, chi)
    return SurfaceClass(False, 0, 2 - chi - h, h, chi)


def is_planar_rotation(r: RotationSystem) -> bool:
    if any(r.twist):
        raise ValueError("planarity is defined for oriented thickenings (no twists)")
    g = r.graph
    if connected_components(g)[0] != 1:
        raise ValueError("planarity criterion needs a connected thickening")
    return g.V - g.E + trace_faces(r).h == 2


# --- enumeration ------------------------------------------------------------

def rotation_count(g: Graph) -> int:
    return prod(factorial(max(d - 1, 0)) for d in g.degrees())


def _vertex_choices(g: Graph) -> list[list[tuple[Dart, ...]]]:
    out = []
    for ds in g.darts_at():
        if len(ds) <= 2:
            out.append([tuple(ds)])
        else:
            out.append([(ds[0],) + p for p in permutations(ds[1:])])
    return out


def iter_rotation_systems(g: Graph, twist=()) -> Iterator[RotationSystem]:
    """All rotation systems, lexicographic over per-vertex orders with the first dart fixed."""
    for rot in product(*_vertex_choices(g)):
        yield RotationSystem(g, rot, tuple(twist))


def _check_budget(n: int, budget: int) -> None:
    if n > budget:
        raise BudgetExceeded(f"too large for exhaustion: {n} configurations exceed budget {budget}")


def _require_connected(g: Graph) -> None:
    if connected_components(g)[0] != 1:
        raise ValueError("graph must be connected")


def spanning_tree(g: Graph, root: int = 0) -> list[int]:
    """Edge ids of a BFS spanning tree from ``root`` (vertex order, then edge order)."""
    seen = [False] * g.V
    seen[root] = True
    tree = []
    adj = g.neighbors()
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w, e in adj[v]:
            if not seen[w]:
                seen[w] = True
                tree.append(e)
                queue.append(w)
    return tree


def _bfs_order(g: Graph) -> list[int]:
    order, seen = [], [False] * g.V
    adj = g.neighbors()
    for root in range(g.V):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w, _ in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def min_face_length(g: Graph) -> int:
    # in a connected simple graph with two or more edges every face has length >= 3
    return 3 if g.is_simple() and g.E >= 2 else 1


def _reaches_faces(g: Graph, target: int) -> bool:
    """Is there an untwisted rotation system with at least ``target`` faces?

    Branch and bound over vertices in BFS order.  Determined successor links
    form chains of darts; a completed face is a closed chain.  Upper bound on
    the final face count: closed faces, plus open chains of length >= L,
    plus the leftover short-chain darts divided by L.
    """
    darts = g.darts()
    n = len(darts)
    if n == 0:
        return (1 if g.V else 0) >= target
    L = min_face_length(g)
    if n // L < target:
        return False
    choices = _vertex_choices(g)
    order = _bfs_order(g)
    start_of = {d: d for d in darts}
    end_of = {d: d for d in darts}
    length = {d: 1 for d in darts}
    open_starts = set(darts)
    closed = [0]

    def link(d, y, log):
        s = start_of[d]
        if s == y:
            closed[0] += 1
            open_starts.discard(s)
            log.append((0, s))
            return
        t = end_of[y]
        end_of[s] = t
        start_of[t] = s
        length[s] += length[y]
        open_starts.discard(y)
        log.append((1, d, y, s, t))

    def undo(log):
        for item in reversed(log):
            if item[0] == 0:
                closed[0] -= 1
                open_starts.add(item[1])
            else:
                _, d, y, s, t = item
                length[s] -= length[y]
                start_of[t] = y
                end_of[s] = d
                open_starts.add(y)

    def bound() -> int:
        long_chains = short = 0
        for s in open_starts:
            k = length[s]
            if k >= L:
                long_chains += 1
            else:
                short += k
        return closed[0] + long_chains + short // L

    def rec(k: int) -> bool:
        if bound() < target:
            return False
        if k == len(order):
            return closed[0] >= target
        v = order[k]
        for rot in choices[v]:
            log: list = []
            m = len(rot)
            for i, x in enumerate(rot):
                link(_opp(x), rot[(i + 1) % m], log)
            found = rec(k + 1)
            undo(log)
            if found:
                return True
        return False

    return rec(0)


def euler_lower_bound(g: Graph) -> int:
    """Lower bound on the Euler genus 2 - V + E - h from h <= 2E / L."""
    if g.E == 0:
        return 0
    return max(0, 2 - g.V + g.E - (2 * g.E) // min_face_length(g))


def genus_exhaustive(g: Graph, orientable: bool = True, budget: int = DEFAULT_BUDGET) -> int:
    """Minimum genus over all thickenings of a connected graph.

    Orientable: handles of the best untwisted rotation system (branch and
    bound on the face count).  Non-orientable: fewest crosscaps over
    rotation systems with a nonempty twist set on the edges off a spanning
    tree; acyclic graphs have no non-orientable thickening.
    """
    _require_connected(g)
    if orientable:
        _check_budget(rotation_count(g), budget)
        genus = (euler_lower_bound(g) + 1) // 2
        while not _reaches_faces(g, 2 - g.V + g.E - 2 * genus):
            genus += 1
        return genus
    tree = set(spanning_tree(g))
    off = [e for e in range(g.E) if e not in tree]
    if not off:
        raise ValueError("an acyclic graph has no non-orientable thickening")
    _check_budget(rotation_count(g) * (2 ** len(off) - 1), budget)
    floor = max(1, euler_lower_bound(g))
    best = None
    for mask in range(1, 2 ** len(off)):
        tw = [0] * g.E
        for i, e in enumerate(off):
            tw[e] = (mask >> i) & 1
        for r in iter_rotation_systems(g, tw):
            m = euler_genus(r)
            if best is None or m < best:
                best = m
                if best == floor:
                    return best
    return best


def genus_plain(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Orientable genus by tracing every rotation system (no pruning)."""
    _require_connected(g)
    _check_budget(rotation_count(g), budget)
    return min(euler_genus(r) for r in iter_rotation_systems(g)) // 2


def has_planar_rotation(g: Graph) -> bool:
    _require_connected(g)
    return _reaches_faces(g, 2 - g.V + g.E)


# --- interlacement ----------------------------------------------------------

def interlacement_matrix(r: RotationSystem) -> InterlacementMatrix:
    """Interlacement of off-tree edges along the boundary of a spanning tree's neighbourhood.

    The thickening is first retwisted so the BFS tree from vertex 0 is
    untwisted; the diagonal records the remaining twists of off-tree edges.
    """
    g = r.graph
    _require_connected(g)
    tree = spanning_tree(g)
    tree_set = set(tree)
    # flip bits that untwist the tree
    flips = [0] * g.V
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.V)]
    for e in tree:
        a, b = g.edges[e]
        adj[a].append((b, e))
        adj[b].append((a, e))
    seen = [False] * g.V
    if g.V:
        seen[0] = True
    queue = deque([0] if g.V else [])
    while queue:
        v = queue.popleft()
        for w, e in adj[v]:
            if not seen[w]:
                seen[w] = True
                flips[w] = flips[v] ^ r.twist[e]
                queue.append(w)
    nr = r.flipped([v for v in range(g.V) if flips[v]])
    assert all(nr.twist[e] == 0 for e in tree)
    off = [e for e in range(g.E) if e not in tree_set]
    word: list[int] = []
    if g.E:
        succ = nr.successor()
        start = nr.rotation[0][0] if nr.rotation[0] else None
        d = start
        while True:
            if d[0] in tree_set:
                d = succ[_opp(d)]
            else:
                word.append(d[0])
                d = succ[d]
            if d == start:
                break
    pos: dict[int, list[int]] = {}
    for i, e in enumerate(word):
        pos.setdefault(e, []).append(i)
    index = {e: i for i, e in enumerate(off)}
    rows = [0] * len(off)
    for e in off:
        a1, a2 = pos[e]
        for f in off:
            if f == e:
                continue
            b1, b2 = pos[f]
            if (a1 < b1 < a2) != (a1 < b2 < a2):
                rows[index[e]] |= 1 << index[f]
    return InterlacementMatrix(tuple(off), tuple(word), tuple(rows), tuple(nr.twist[e] for e in off))


def mohar_genus(g: Graph, orientable: bool = True, budget: int = DEFAULT_BUDGET) -> int:
    """Genus as the minimum interlacement rank over rotation systems.

    Orientable: min rank / 2.  Non-orientable: min over rotations and
    nonempty diagonal sets of rank of the matrix with that diagonal.
    """
    _require_connected(g)
    b = g.E - g.V + 1
    if orientable:
        _check_budget(rotation_count(g), budget)
        floor = euler_lower_bound(g)
        best = None
        for r in iter_rotation_systems(g):
            k = interlacement_matrix(r).rank()
            if best is None or k < best:
                best = k
                if best <= floor:
                    break
        return best // 2
    if b == 0:
        raise ValueError("an acyclic graph has no non-orientable thickening")
    _check_budget(rotation_count(g) * (2**b - 1), budget)
    best = None
    for r in iter_rotation_systems(g):
        m = interlacement_matrix(r)
        for diag in range(1, 2**b):
            k = m.rank(diag)
            if best is None or k < best:
                best = k
                if best <= max(1, euler_lower_bound(g)):
                    return best
    return best


# --- counting -----------------------------------------------------------------

def _homeomorphic_to_point_segment_circle(g: Graph) -> bool:
    return max(g.degrees(), default=0) <= 2


def count_thickenings(g: Graph, up_to: str = "labeled", orientable_only: bool = True) -> int:
    """Number of thickenings of a connected graph.

    ``labeled``: raw rotation systems (times 2^E twist labels when not
    orientable-only).  ``rel-homeomorphism``: classes relative to the graph.
    ``isomorphism``: classes up to graph automorphisms as well (brute force,
    simple graphs only).
    """
    _require_connected(g)
    base = rotation_count(g)
    if up_to == "labeled":
        return base if orientable_only else 2**g.E * base
    if up_to == "rel-homeomorphism":
        if _homeomorphic_to_point_segment_circle(g):
            raise ValueError("formula does not apply to graphs homeomorphic to a point, segment or circle")
        return base // 2 if orientable_only else 2 ** (g.E - g.V) * base
    if up_to == "isomorphism":
        return len(thickening_classes(g, orientable_only))
    raise ValueError(f"unknown equivalence {up_to!r}")


def automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """Vertex automorphisms of a simple graph."""
    import networkx as nx
    from networkx.algorithms.isomorphism import GraphMatcher

    if not g.is_simple():
        raise ValueError("automorphisms are computed for simple graphs only")
    G = nx.Graph()
    G.add_nodes_from(range(g.V))
    G.add_edges_from(g.edges)
    return [tuple(m[v] for v in range(g.V)) for m in GraphMatcher(G, G).isomorphisms_iter()]


def _neighbor_form(r: RotationSystem) -> tuple:
    """Rotation written as neighbour sequences plus twists keyed by vertex pairs (simple graphs)."""
    g = r.graph
    rot = tuple(tuple(g.edges[e][1 - s] for e, s in rv) for rv in r.rotation)
    tw = frozenset((min(g.edges[e]), max(g.edges[e])) for e in range(g.E) if r.twist[e])
    return rot, tw


def _canonical_cycle(seq: tuple[int, ...]) -> tuple[int, ...]:
    if not seq:
        return seq
    k = seq.index(min(seq))
    return seq[k:] + seq[:k]


def _image(form, perm, reverse_at) -> tuple:
    rot, tw = form
    new = [()] * len(rot)
    for v, seq in enumerate(rot):
        s = tuple(perm[w] for w in seq)
        if v in reverse_at:
            s = tuple(reversed(s))
        new[perm[v]] = _canonical_cycle(s)
    ntw = set()
    for a, b in tw:
        ntw.add((min(perm[a], perm[b]), max(perm[a], perm[b])))
    for v in reverse_at:
        for w in rot[v]:
            key = (min(perm[v], perm[w]), max(perm[v], perm[w]))
            ntw ^= {key}
    return tuple(new), frozenset(ntw)


def thickening_classes(g: Graph, orientable_only: bool = True) -> list[RotationSystem]:
    """Representatives of thickenings up to automorphisms of a simple graph.

    Oriented: automorphisms plus global reversal.  All: automorphisms plus
    inversions at any vertex set.
    """
    auts = automorphisms(g)
    if orientable_only:
        flips = [frozenset(), frozenset(range(g.V))]
        twists = [(0,) * g.E]
    else:
        flips = [frozenset(v for v in range(g.V) if (m >> v) & 1) for m in range(2**g.V)]
        twists = [tuple((m >> e) & 1 for e in range(g.E)) for m in range(2**g.E)]
    seen = set()
    reps = []
    for tw in twists:
        for r in iter_rotation_systems(g, tw):
            form = _neighbor_form(r)
            form = (tuple(_canonical_cycle(x) for x in form[0]), form[1])
            if form in seen:
                continue
            reps.append(r)
            for p in auts:
                for fl in flips:
                    seen.add(_image(form, p, fl))
    return reps
