"""Double covers of graphs and surfaces as Z2 edge labelings.

A label of 1 on an edge means its two lifts swap sheets.  Two labelings give
equivalent covers iff they differ by the coboundary of a vertex set (rename
the sheets over those vertices).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product

from . import gf2
from .complex import Graph, MalformedInput, Scheme2, connected_components

DEFAULT_BUDGET = 1 << 20


@dataclass(frozen=True)
class DoubleCover:
    base: Graph
    label: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "label", tuple(int(x) & 1 for x in self.label))
        if len(self.label) != self.base.E:
            raise MalformedInput(f"need {self.base.E} labels, got {len(self.label)}")

    @property
    def bits(self) -> int:
        return gf2.pack(self.label)

    def lift(self) -> Graph:
        """The covering graph: vertex v has lifts v and v + V."""
        n = self.base.V
        edges = []
        for (a, b), s in zip(self.base.edges, self.label):
            edges += [(a, b + n * s), (a + n, b + n * (1 - s))]
        return Graph(2 * n, tuple(edges))


@dataclass(frozen=True)
class CycleFunctional:
    """Values of w1 on the fundamental cycles, indexed by off-tree edges."""

    off_tree: tuple[int, ...]
    values: tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return not any(self.values)


def spanning_forest(g: Graph) -> tuple[list[int], list[int], list[int]]:
    """BFS forest: (tree edges, parent edge per vertex or -1, depth per vertex)."""
    parent = [-1] * g.V
    depth = [-1] * g.V
    tree = []
    adj = g.neighbors()
    for root in range(g.V):
        if depth[root] >= 0:
            continue
        depth[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w, e in adj[v]:
                if depth[w] < 0:
                    depth[w] = depth[v] + 1
                    parent[w] = e
                    tree.append(e)
                    queue.append(w)
    return tree, parent, depth


def fundamental_cycles(g: Graph) -> tuple[list[int], list[int]]:
    """Off-tree edges and, for each, the edge bitset of its fundamental cycle."""
    tree, parent, depth = spanning_forest(g)
    in_tree = set(tree)
    off = [e for e in range(g.E) if e not in in_tree]
    cycles = []
    for e in off:
        a, b = g.edges[e]
        z = 1 << e
        while a != b:
            if depth[a] < depth[b]:
                a, b = b, a
            pe = parent[a]
            z ^= 1 << pe
            x, y = g.edges[pe]
            a = y if x == a else x
        cycles.append(z)
    return off, cycles


def w1_functional(c: DoubleCover) -> CycleFunctional:
    off, cycles = fundamental_cycles(c.base)
    lab = c.bits
    return CycleFunctional(tuple(off), tuple(gf2.dot(lab, z) for z in cycles))


def evaluate(c: DoubleCover, cycle: int) -> int:
    """w1 on an arbitrary edge chain (bitset); meaningful on cycles."""
    return gf2.dot(c.bits, cycle)


def switch_coboundary(g: Graph, vertices) -> int:
    """Edges with exactly one endpoint in the vertex set (loops never)."""
    vs = set(vertices)
    out = 0
    for e, (a, b) in enumerate(g.edges):
        if (a in vs) != (b in vs):
            out |= 1 << e
    return out


@dataclass(frozen=True)
class Equivalence:
    equivalent: bool
    switch: tuple[int, ...] = ()  # vertices whose sheets are renamed

    def __bool__(self) -> bool:
        return self.equivalent


def are_equivalent(c1: DoubleCover, c2: DoubleCover) -> Equivalence:
    if c1.base != c2.base:
        raise ValueError("covers live over different bases")
    g = c1.base
    diff = [x ^ y for x, y in zip(c1.label, c2.label)]
    # propagate sheet renamings along a spanning forest, then check every edge
    tree, parent, depth = spanning_forest(g)
    side = [0] * g.V
    for v in sorted(range(g.V), key=lambda x: depth[x]):
        e = parent[v]
        if e >= 0:
            a, b = g.edges[e]
            u = b if a == v else a
            side[v] = side[u] ^ diff[e]
    for e, (a, b) in enumerate(g.edges):
        if side[a] ^ side[b] != diff[e]:
            return Equivalence(False)
    return Equivalence(True, tuple(v for v in range(g.V) if side[v]))


def first_betti(g: Graph) -> int:
    return g.E - g.V + connected_components(g)[0]


def enumerate_covers(g: Graph, budget: int = DEFAULT_BUDGET) -> list[DoubleCover]:
    """One labeling per class: all labelings supported on the off-tree edges."""
    b = first_betti(g)
    if 2**b > budget:
        raise ValueError(f"2^{b} classes exceed the budget {budget}")
    off, _ = fundamental_cycles(g)
    out = []
    for bits in product((0, 1), repeat=len(off)):
        lab = [0] * g.E
        for e, x in zip(off, bits):
            lab[e] = x
        out.append(DoubleCover(g, tuple(lab)))
    return out


def count_classes_bruteforce(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Orbits of all 2^E labelings under the 2^V vertex switches."""
    if 2**g.E > budget:
        raise ValueError(f"2^{g.E} labelings exceed the budget {budget}")
    switches = gf2.row_space_basis(switch_coboundary(g, [v]) for v in range(g.V))
    seen = set()
    classes = 0
    for lab in range(2**g.E):
        if lab in seen:
            continue
        classes += 1
        orbit = {lab}
        for s in switches:
            orbit |= {x ^ s for x in orbit}
        seen |= orbit
    return classes


def surface_cover_space(s: Scheme2) -> tuple[list[int], list[int]]:
    """Cocycle space (labelings even on every face) and coboundaries, as edge bitsets."""
    g = s.graph
    faces = []
    for f in s.faces:
        z = 0
        for e, _ in f:
            z ^= 1 << e
        faces.append(z)
    cocycles = gf2.nullspace(faces, g.E)
    cobound = gf2.row_space_basis(switch_coboundary(g, [v]) for v in range(g.V))
    return cocycles, cobound


def enumerate_covers_surface(s: Scheme2, budget: int = DEFAULT_BUDGET) -> list[DoubleCover]:
    """Class representatives of double covers of the 2-complex, 2^{dim H^1(Z2)} of them."""
    cocycles, cobound = surface_cover_space(s)
    el = gf2.Eliminator()
    for c in cobound:
        el.add(c)
    reps = []
    for z in cocycles:
        if el.add(z):
            reps.append(z)
    if 2 ** len(reps) > budget:
        raise ValueError(f"2^{len(reps)} classes exceed the budget {budget}")
    out = []
    for bits in product((0, 1), repeat=len(reps)):
        lab = 0
        for x, z in zip(bits, reps):
            if x:
                lab ^= z
        out.append(DoubleCover(s.graph, tuple(gf2.unpack(lab, s.graph.E))))
    return out


def is_surface_cover(s: Scheme2, c: DoubleCover) -> bool:
    """A labeling extends over the faces iff it is even on every face boundary."""
    return all(sum(c.label[e] for e, _ in f) % 2 == 0 for f in s.faces)
