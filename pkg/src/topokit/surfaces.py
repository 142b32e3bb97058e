"""Recognition, orientability and classification of 2-manifold schemes.

Also builds the dual scheme of a closed surface and the mod-2
intersection form on H_1, evaluated on the common refinement of a scheme
and its dual.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from . import gf2
from .complex import MalformedInput, Scheme2, Graph, connected_components, euler_characteristic, build_chain_complex


class NotASurface(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceVerdict:
    kind: str  # "closed" | "boundary" | "not-surface"
    boundary_edges: tuple[int, ...] = ()
    boundary_circles: tuple[tuple[int, ...], ...] = ()
    reason: str = ""
    vertex: int | None = None
    edge: int | None = None

    @property
    def is_surface(self) -> bool:
        return self.kind != "not-surface"

    @property
    def h(self) -> int:
        return len(self.boundary_circles)


@dataclass(frozen=True)
class SurfaceClass:
    orientable: bool
    genus: int  # handles; 0 when non-orientable
    crosscaps: int  # 0 when orientable
    boundary: int
    chi: int

    def __str__(self) -> str:
        ori = "yes" if self.orientable else "no"
        core = f"genus={self.genus}" if self.orientable else f"crosscaps={self.crosscaps}"
        return f"surface orientable={ori} {core} boundary={self.boundary} chi={self.chi}"


@dataclass(frozen=True)
class Orientability:
    orientable: bool
    orientations: tuple[int, ...]  # +1 keeps a face as listed, -1 reverses it
    red: tuple[int, ...]  # obstruction cycle: edges whose two slots agree in direction
    certificate: int | None = None  # edge functional, see orientability()


@dataclass(frozen=True)
class IntersectionForm:
    basis: tuple[int, ...]  # H_1 representatives as edge bitsets
    matrix: tuple[tuple[int, ...], ...]
    dual_basis: tuple[int, ...] = field(default=())  # the same classes as dual-edge bitsets

    @property
    def rank(self) -> int:
        return gf2.rank(gf2.pack(row) for row in self.matrix)


# --- link structure -------------------------------------------------------

def _tail_end(d) -> tuple[int, int]:
    return (d[0], 0 if d[1] > 0 else 1)


def _head_end(d) -> tuple[int, int]:
    return (d[0], 1 if d[1] > 0 else 0)


def _corners(s: Scheme2):
    """Corners (face, i) between dart i and dart i+1, each with two ports (end, slot)."""
    out = []
    for f, walk in enumerate(s.faces):
        n = len(walk)
        for i in range(n):
            d, nxt = walk[i], walk[(i + 1) % n]
            out.append(((f, i), (_head_end(d), (f, i)), (_tail_end(nxt), (f, (i + 1) % n))))
    return out


def _end_vertex(s: Scheme2, end) -> int:
    return s.graph.edges[end[0]][end[1]]


def is_surface(s: Scheme2) -> SurfaceVerdict:
    g = s.graph
    if g.V == 0:
        return SurfaceVerdict("not-surface", reason="empty scheme")
    slots = s.edge_slots()
    for e, sl in enumerate(slots):
        if len(sl) not in (1, 2):
            return SurfaceVerdict("not-surface", reason=f"edge lies in {len(sl)} face slots", edge=e)
    # link graph at each vertex: nodes are edge ends, arcs are corners
    parent: dict = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    deg: dict = {}
    for e in range(g.E):
        for side in (0, 1):
            parent[(e, side)] = (e, side)
            deg[(e, side)] = 0
    for _, (x, _), (y, _) in _corners(s):
        deg[x] += 1
        deg[y] += 1
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry
    ends_at: list[list] = [[] for _ in range(g.V)]
    for end in parent:
        ends_at[_end_vertex(s, end)].append(end)
    for v in range(g.V):
        ends = ends_at[v]
        if not ends:
            return SurfaceVerdict("not-surface", reason="isolated vertex", vertex=v)
        if len({find(x) for x in ends}) != 1:
            return SurfaceVerdict("not-surface", reason="vertex link is disconnected", vertex=v)
        ones = sum(1 for x in ends if deg[x] == 1)
        if ones not in (0, 2):
            return SurfaceVerdict("not-surface", reason="vertex link is neither a circle nor a segment", vertex=v)
    boundary = tuple(e for e, sl in enumerate(slots) if len(sl) == 1)
    if not boundary:
        return SurfaceVerdict("closed")
    sub = Graph(g.V, tuple(g.edges[e] for e in boundary))
    # every boundary vertex has exactly two boundary edge ends, so components are circles
    _, label = connected_components(sub)
    circles: dict[int, list[int]] = {}
    for e in boundary:
        circles.setdefault(label[g.edges[e][0]], []).append(e)
    return SurfaceVerdict("boundary", boundary, tuple(tuple(c) for c in circles.values()))


def _require_surface(s: Scheme2) -> SurfaceVerdict:
    v = is_surface(s)
    if not v.is_surface:
        where = f" at vertex {v.vertex}" if v.vertex is not None else f" at edge {v.edge}" if v.edge is not None else ""
        raise NotASurface(f"not a surface: {v.reason}{where}")
    return v


# --- orientability ----------------------------------------------------------

def red_edges(s: Scheme2, orientations) -> int:
    """Obstruction cycle of a face orientation choice, as an edge bitset."""
    red = 0
    for e, sl in enumerate(s.edge_slots()):
        if len(sl) == 2:
            (f1, _, d1), (f2, _, d2) = sl
            if d1 * orientations[f1] == d2 * orientations[f2]:
                red |= 1 << e
    return red


def face_boundaries_z2(s: Scheme2) -> list[int]:
    return build_chain_complex(s, "z2").columns_gf2(1)


def orientability(s: Scheme2) -> Orientability:
    """Greedy orientation by BFS over face adjacency from the lowest face.

    When no consistent choice exists the red edge set is returned together
    with an edge functional that vanishes on every face boundary and every
    boundary edge but is 1 on the red set, certifying that the obstruction
    class is nonzero.
    """
    verdict = _require_surface(s)
    n = s.F
    slots = s.edge_slots()
    by_face: list[list[int]] = [[] for _ in range(n)]
    for e, sl in enumerate(slots):
        for f, _, _ in sl:
            by_face[f].append(e)
    orient = [0] * n
    for start in range(n):
        if orient[start]:
            continue
        orient[start] = 1
        queue = deque([start])
        while queue:
            f = queue.popleft()
            for e in by_face[f]:
                sl = slots[e]
                if len(sl) != 2:
                    continue
                (f1, _, d1), (f2, _, d2) = sl
                other, mine, theirs = (f2, d1, d2) if f1 == f else (f1, d2, d1)
                if not orient[other]:
                    orient[other] = -orient[f] * mine * theirs
                    queue.append(other)
    red = red_edges(s, orient)
    if not red:
        return Orientability(True, tuple(orient), ())
    gens = face_boundaries_z2(s) + [1 << e for e in verdict.boundary_edges]
    inside, witness = gf2.certify_membership(gens, red, s.graph.E)
    if inside:
        raise AssertionError("greedy orientation left a removable obstruction cycle")
    return Orientability(False, tuple(orient), tuple(gf2.support(red)), witness)


def classify_surface(s: Scheme2) -> SurfaceClass:
    verdict = _require_surface(s)
    count, _ = connected_components(s.graph)
    if count != 1:
        raise NotASurface(f"scheme has {count} components; classify them separately")
    chi = euler_characteristic(s)
    h = verdict.h
    if orientability(s).orientable:
        return SurfaceClass(True, (2 - chi - h) // 2, 0, h, chi)
    return SurfaceClass(False, 0, 2 - chi - h, h, chi)


def split_components(s: Scheme2) -> list[Scheme2]:
    count, label = connected_components(s.graph)
    parts = []
    for c in range(count):
        verts = [v for v in range(s.graph.V) if label[v] == c]
        vmap = {v: i for i, v in enumerate(verts)}
        edges = [e for e, (a, _) in enumerate(s.graph.edges) if label[a] == c]
        emap = {e: i for i, e in enumerate(edges)}
        g = Graph(len(verts), tuple((vmap[a], vmap[b]) for a, b in (s.graph.edges[e] for e in edges)))
        faces = tuple(
            tuple((emap[e], d) for e, d in f) for f in s.faces if label[s.graph.edges[f[0][0]][0]] == c
        )
        parts.append(Scheme2(g, faces))
    return parts


def classify_components(s: Scheme2) -> list[SurfaceClass]:
    return [classify_surface(p) for p in split_components(s)]


# --- dual scheme and intersection form ----------------------------------------

def _slot_index(s: Scheme2):
    """Map (face, position) -> (edge, 0|1) where 0/1 is the slot order on that edge."""
    out = {}
    for e, sl in enumerate(s.edge_slots()):
        for k, (f, i, _) in enumerate(sl):
            out[(f, i)] = (e, k)
    return out


def dual_scheme(s: Scheme2) -> Scheme2:
    """Dual of a closed surface scheme: a vertex per face, an edge per edge, a face per vertex.

    Dual edge e* runs from the face of e's first slot to the face of its second.
    """
    verdict = _require_surface(s)
    if verdict.kind != "closed":
        raise NotASurface("dual scheme needs a closed surface")
    slots = s.edge_slots()
    slot_of = _slot_index(s)
    ports_at: dict = {}
    corner_ports = {}
    for cid, p, q in _corners(s):
        corner_ports[cid] = (p, q)
        ports_at.setdefault(p[0], []).append((cid, 0))
        ports_at.setdefault(q[0], []).append((cid, 1))
    dual_edges = tuple((sl[0][0], sl[1][0]) for sl in slots)
    faces = []
    for v in range(s.graph.V):
        ends = sorted(x for x in ports_at if _end_vertex(s, x) == v)
        start_end = ends[0]
        cid, which = ports_at[start_end][0]
        walk = []
        # enter start_end through the port (cid, which)
        x, cur = start_end, (cid, which)
        while True:
            arrived_slot = slot_of[corner_ports[cur[0]][cur[1]][1]]
            others = [p for p in ports_at[x] if p != cur]
            leave = others[0]
            left_slot = slot_of[corner_ports[leave[0]][leave[1]][1]]
            e = x[0]
            walk.append((e, 1 if arrived_slot[1] == 0 else -1))
            assert left_slot[0] == e and left_slot[1] != arrived_slot[1]
            # through the corner to its other port
            nxt = (leave[0], 1 - leave[1])
            x = corner_ports[nxt[0]][nxt[1]][0]
            cur = nxt
            if cur == (cid, which):
                break
        faces.append(tuple(walk))
    return Scheme2(Graph(s.F, dual_edges), tuple(faces))


def homology_basis_z2(s: Scheme2) -> list[int]:
    """Edge bitsets of cycles representing a basis of H_1(Z2)."""
    cx = build_chain_complex(s, "z2")
    cycles = gf2.nullspace(cx.rows_gf2(0), s.graph.E)
    el = gf2.Eliminator()
    for b in cx.columns_gf2(1):
        el.add(b)
    basis = []
    for z in cycles:
        if el.add(z):
            basis.append(z)
    return basis


class _Refinement:
    """Common subdivision of a closed scheme and its dual.

    Edges: two primal halves per edge (2e + side) and one dual half per face
    slot (2E + slot id).  Faces: one quadrilateral per corner.
    """

    def __init__(self, s: Scheme2):
        E = s.graph.E
        self.E = E
        slot_id = {}
        for e, sl in enumerate(s.edge_slots()):
            for k, (f, i, _) in enumerate(sl):
                slot_id[(f, i)] = 2 * E + 2 * e + k
        self.dual_edges = [(1 << (2 * E + 2 * e)) | (1 << (2 * E + 2 * e + 1)) for e in range(E)]
        self.quads = []
        for _, (x, sx), (y, sy) in _corners(s):
            q = (1 << slot_id[sx]) ^ (1 << (2 * x[0] + x[1])) ^ (1 << (2 * y[0] + y[1])) ^ (1 << slot_id[sy])
            self.quads.append(q)
        self._solver = gf2.Eliminator()
        for d in self.dual_edges:
            self._solver.add(d)
        for q in self.quads:
            self._solver.add(q)

    def primal(self, z: int) -> int:
        out = 0
        for e in gf2.support(z):
            out ^= (1 << (2 * e)) | (1 << (2 * e + 1))
        return out

    def to_dual(self, z: int) -> int:
        """A dual-edge cycle homologous to the primal cycle ``z``."""
        combo = self._solver.express(self.primal(z))
        if combo is None:
            raise AssertionError("cycle has no dual representative")
        return combo & ((1 << self.E) - 1)


def intersection_form(s: Scheme2) -> IntersectionForm:
    verdict = _require_surface(s)
    if verdict.kind != "closed":
        raise NotASurface("intersection form needs a closed surface")
    basis = homology_basis_z2(s)
    ref = _Refinement(s)
    duals = [ref.to_dual(b) for b in basis]
    m = tuple(tuple(gf2.dot(a, d) for d in duals) for a in basis)
    return IntersectionForm(tuple(basis), m, tuple(duals))


def intersect(s: Scheme2, a: int, b: int) -> int:
    """a ∩ b for primal Z2 cycles given as edge bitsets."""
    return gf2.dot(a, _Refinement(s).to_dual(b))


def w1_class(s: Scheme2) -> int:
    """Representative of w1 as an edge bitset (the greedy obstruction cycle)."""
    return gf2.pack(1 if e in set(orientability(s).red) else 0 for e in range(s.graph.E))


def w1_self_pairing_check(s: Scheme2) -> bool:
    """w1 ∩ a == a ∩ a on an H_1 basis, and w1 ∩ w1 == chi mod 2."""
    form = intersection_form(s)
    ref = _Refinement(s)
    w = w1_class(s)
    for a, da in zip(form.basis, form.dual_basis):
        if gf2.dot(w, da) != gf2.dot(a, da):
            return False
    return gf2.dot(w, ref.to_dual(w)) == euler_characteristic(s) % 2
