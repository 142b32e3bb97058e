"""The van Kampen obstruction for graphs in the plane, and for paths.

A drawing assigns rational points to vertices and a polyline to each edge.
Its crossing cochain on the deleted square (pairs of disjoint edges) is
reduced modulo the elementary coboundaries delta{a, e}; the class vanishes
iff the graph is planar.

For a path whose image is a graph, the singular graph Delta records pairs
of breakpoints with the same image, and the obstruction is a bit per
component of Delta that avoids the marked vertices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Sequence

from . import gf2
from .complex import Graph, MalformedInput
from .geometry import (
    Point,
    angle_key,
    crossing_point,
    on_segment,
    orient,
    point_in_polygon,
    segment_contact,
)


class MustSubdivide(ValueError):
    """The deleted square needs a simple graph."""


class GeneralPositionError(ValueError):
    """A drawing or path violates general position."""


# --- deleted square ------------------------------------------------------------

@dataclass(frozen=True)
class DeletedSquare:
    graph: Graph
    cells2: tuple[tuple[int, int], ...]  # (sigma, tau) edge ids, sigma < tau, disjoint
    cells1: tuple[tuple[int, int], ...]  # (vertex a, edge e), a not on e

    def index(self) -> dict[tuple[int, int], int]:
        return {c: i for i, c in enumerate(self.cells2)}

    def coboundary(self, a: int, e: int) -> int:
        """delta{a, e}: the cells {e', e} with e' at a and disjoint from e."""
        idx = self.index()
        ends = set(self.graph.edges[e])
        v = 0
        for e2, (x, y) in enumerate(self.graph.edges):
            if a in (x, y) and not ends & {x, y}:
                v |= 1 << idx[(min(e, e2), max(e, e2))]
        return v

    def coboundaries(self) -> list[int]:
        return [self.coboundary(a, e) for a, e in self.cells1]


def deleted_square(g: Graph) -> DeletedSquare:
    if not g.is_simple():
        raise MustSubdivide("loops and multiple edges must be subdivided first")
    cells2 = tuple(
        (s, t)
        for s, t in combinations(range(g.E), 2)
        if not set(g.edges[s]) & set(g.edges[t])
    )
    cells1 = tuple((a, e) for e in range(g.E) for a in range(g.V) if a not in g.edges[e])
    return DeletedSquare(g, cells2, cells1)


# --- drawings ------------------------------------------------------------------

@dataclass(frozen=True)
class Drawing:
    positions: tuple[Point, ...]
    polylines: tuple[tuple[Point, ...], ...]  # per edge, endpoints included

    def __post_init__(self) -> None:
        pos = tuple((Fraction(x), Fraction(y)) for x, y in self.positions)
        lines = tuple(tuple((Fraction(x), Fraction(y)) for x, y in pl) for pl in self.polylines)
        object.__setattr__(self, "positions", pos)
        object.__setattr__(self, "polylines", lines)

    @classmethod
    def straight(cls, g: Graph, positions: Sequence[Point]) -> "Drawing":
        return cls(tuple(positions), tuple((positions[a], positions[b]) for a, b in g.edges))

    def with_edge(self, e: int, polyline: Sequence[Point]) -> "Drawing":
        lines = list(self.polylines)
        lines[e] = tuple(polyline)
        return Drawing(self.positions, tuple(lines))


def _segments(d: Drawing):
    for e, pl in enumerate(d.polylines):
        for k in range(len(pl) - 1):
            yield e, k, pl[k], pl[k + 1]


def check_drawing(g: Graph, d: Drawing) -> None:
    """Raise GeneralPositionError naming the offending segments, or MalformedInput."""
    if len(d.positions) != g.V or len(d.polylines) != g.E:
        raise MalformedInput("drawing does not match the graph's vertex and edge counts")
    if len(set(d.positions)) != g.V:
        raise GeneralPositionError("two vertices share a position")
    for e, pl in enumerate(d.polylines):
        a, b = g.edges[e]
        if len(pl) < 2 or pl[0] != d.positions[a] or pl[-1] != d.positions[b]:
            raise MalformedInput(f"polyline of edge {e} must run from vertex {a} to vertex {b}")
        for k in range(len(pl) - 1):
            if pl[k] == pl[k + 1]:
                raise GeneralPositionError(f"edge {e} segment {k} has zero length")
    segs = list(_segments(d))
    seen: dict[Point, tuple] = {}
    for (e1, k1, p1, q1), (e2, k2, p2, q2) in combinations(segs, 2):
        kind = segment_contact(p1, q1, p2, q2)
        if kind == "none":
            continue
        where = f"edge {e1} segment {k1} and edge {e2} segment {k2}"
        if kind == "touch":
            shared = _allowed_touch(g, d, e1, k1, e2, k2)
            if shared is None or not _touch_only_at(p1, q1, p2, q2, shared):
                raise GeneralPositionError(f"{where} touch or overlap")
            continue
        x = crossing_point(p1, q1, p2, q2)
        if x in seen:
            raise GeneralPositionError(f"triple point at {x}: {where} and {seen[x]}")
        seen[x] = (e1, k1, e2, k2)


def _allowed_touch(g: Graph, d: Drawing, e1, k1, e2, k2) -> Point | None:
    """The single point at which two segments may legitimately meet, if any."""
    pl1, pl2 = d.polylines[e1], d.polylines[e2]
    if e1 == e2:
        if abs(k1 - k2) == 1:
            return pl1[max(k1, k2)]
        # a closed loop's first and last segments meet at its vertex
        if g.edges[e1][0] == g.edges[e1][1] and {k1, k2} == {0, len(pl1) - 2}:
            return pl1[0]
        return None
    for s1, v1 in ((0, g.edges[e1][0]), (len(pl1) - 2, g.edges[e1][1])):
        for s2, v2 in ((0, g.edges[e2][0]), (len(pl2) - 2, g.edges[e2][1])):
            if s1 == k1 and s2 == k2 and v1 == v2:
                return d.positions[v1]
    return None


def _touch_only_at(p1, q1, p2, q2, x) -> bool:
    """Do the segments meet exactly at their common endpoint x (no overlap)?"""
    if x not in (p1, q1) or x not in (p2, q2):
        return False
    o1 = q1 if p1 == x else p1
    o2 = q2 if p2 == x else p2
    if orient(x, o1, o2) != 0:
        return True
    # collinear: fine only if they leave x in opposite directions
    return not (on_segment(o1, x, o2) or on_segment(o2, x, o1))


def is_general_position(g: Graph, d: Drawing) -> bool:
    try:
        check_drawing(g, d)
    except GeneralPositionError:
        return False
    return True


def _crossings(pl1, pl2) -> list[tuple[int, Point]]:
    """Signed transversal crossings between two polylines."""
    out = []
    for k1 in range(len(pl1) - 1):
        for k2 in range(len(pl2) - 1):
            a, b, c, e = pl1[k1], pl1[k1 + 1], pl2[k2], pl2[k2 + 1]
            if segment_contact(a, b, c, e) == "cross":
                out.append((orient(a, b, e), crossing_point(a, b, c, e)))
    return out


def obstruction_cocycle(g: Graph, d: Drawing, ring: str = "z2", ds: DeletedSquare | None = None) -> tuple[int, ...]:
    """Crossing cochain on the deleted square.

    Over Z2 the entry for {sigma, tau} is the crossing parity.  Over Z each
    crossing counts +1 when tau crosses sigma from right to left (edges
    oriented from their first to their second endpoint).
    """
    if ring not in ("z2", "z"):
        raise ValueError(f"unknown ring {ring!r}")
    ds = ds or deleted_square(g)
    check_drawing(g, d)
    out = []
    for s, t in ds.cells2:
        cr = _crossings(d.polylines[s], d.polylines[t])
        out.append(len(cr) % 2 if ring == "z2" else sum(c for c, _ in cr))
    return tuple(out)


@dataclass(frozen=True)
class VKVerdict:
    zero: bool
    witness: tuple[tuple[int, int], ...] = ()  # cells1 whose coboundaries sum to nu
    certificate: int = 0  # functional on cells2: kills every coboundary, pairs to 1 with nu

    def __str__(self) -> str:
        return "obstruction=zero" if self.zero else "obstruction=nonzero"


def vk_class_is_zero(ds: DeletedSquare, nu: Sequence[int]) -> VKVerdict:
    target = gf2.pack(x & 1 for x in nu)
    ok, data = gf2.certify_membership(ds.coboundaries(), target, len(ds.cells2))
    if ok:
        return VKVerdict(True, tuple(ds.cells1[i] for i in data))
    return VKVerdict(False, (), data)


def verify_verdict(ds: DeletedSquare, nu: Sequence[int], v: VKVerdict) -> bool:
    """Check a verdict's witness or certificate independently."""
    target = gf2.pack(x & 1 for x in nu)
    if v.zero:
        acc = 0
        for a, e in v.witness:
            acc ^= ds.coboundary(a, e)
        return acc == target
    return gf2.dot(v.certificate, target) == 1 and all(gf2.dot(v.certificate, c) == 0 for c in ds.coboundaries())


def annihilator_basis(ds: DeletedSquare) -> list[int]:
    """Basis of the functionals vanishing on every coboundary (cocycle-class coordinates)."""
    return gf2.nullspace(ds.coboundaries(), len(ds.cells2))


def class_coordinates(ds: DeletedSquare, nu: Sequence[int], basis: Sequence[int] | None = None) -> tuple[int, ...]:
    target = gf2.pack(x & 1 for x in nu)
    return tuple(gf2.dot(y, target) for y in (basis if basis is not None else annihilator_basis(ds)))


# --- drawing generators -------------------------------------------------------

def convex_positions(n: int) -> list[Point]:
    return [(Fraction(i), Fraction(i * i)) for i in range(n)]


def default_drawing(g: Graph, max_rounds: int = 64) -> Drawing:
    """Straight-line drawing on a parabola, perturbed by 2^-k until general position."""
    base = convex_positions(g.V)
    d = Drawing.straight(g, base)
    if is_general_position(g, d):
        return d
    for k in range(1, max_rounds + 1):
        rng = random.Random(k)
        eps = Fraction(1, 2**k)
        pos = [(x + eps * Fraction(rng.randint(-64, 64), 64), y + eps * Fraction(rng.randint(-64, 64), 64)) for x, y in base]
        d = Drawing.straight(g, pos)
        if is_general_position(g, d):
            return d
    raise GeneralPositionError("no general-position perturbation found")


def random_drawing(g: Graph, rng: random.Random, bends: int = 1, scale: int = 20) -> Drawing:
    """Random general-position drawing with up to ``bends`` bend points per edge."""
    while True:
        pts: set[Point] = set()
        while len(pts) < g.V:
            pts.add((Fraction(rng.randint(-scale, scale)), Fraction(rng.randint(-scale, scale))))
        pos = list(pts)
        rng.shuffle(pos)
        lines = []
        for a, b in g.edges:
            mids = [
                (Fraction(rng.randint(-scale * 4, scale * 4), 4), Fraction(rng.randint(-scale * 4, scale * 4), 4))
                for _ in range(rng.randint(0, bends))
            ]
            lines.append((pos[a], *mids, pos[b]))
        d = Drawing(tuple(pos), tuple(lines))
        if is_general_position(g, d):
            return d


def enclosed_vertices(g: Graph, d: Drawing, closed: Sequence[Point], skip=()) -> list[int]:
    """Vertices (other than ``skip``) inside a closed polyline, by the even-odd rule."""
    return [v for v in range(g.V) if v not in skip and point_in_polygon(d.positions[v], closed)]


def simple_subdivision(g: Graph) -> Graph:
    """Subdivide loops twice and repeated edges once, leaving a simple graph."""
    edges = []
    n = g.V
    seen = set()
    for a, b in g.edges:
        key = (min(a, b), max(a, b))
        if a == b:
            edges += [(a, n), (n, n + 1), (n + 1, a)]
            n += 2
        elif key in seen:
            edges += [(a, n), (n, b)]
            n += 1
        else:
            edges.append((a, b))
        seen.add(key)
    return Graph(n, tuple(edges))


@dataclass(frozen=True)
class VKResult:
    planar: bool
    graph: Graph
    drawing: Drawing
    nu: tuple[int, ...]
    verdict: VKVerdict = field(repr=False)

    def __str__(self) -> str:
        return f"planar={'yes' if self.planar else 'no'} {self.verdict}"


def vk_obstruction(g: Graph, drawing: Drawing | None = None) -> VKResult:
    h = g if g.is_simple() else simple_subdivision(g)
    if drawing is not None and h is not g:
        raise MustSubdivide("a drawing can only be given for a simple graph")
    d = drawing or default_drawing(h)
    ds = deleted_square(h)
    nu = obstruction_cocycle(h, d, ds=ds)
    v = vk_class_is_zero(ds, nu)
    return VKResult(v.zero, h, d, nu, v)


def vk_planarity(g: Graph) -> bool:
    return vk_obstruction(g).planar


# --- paths ---------------------------------------------------------------------

@dataclass(frozen=True)
class SingularGraph:
    vertices: tuple[tuple[int, int], ...]  # (i, j), i > j, same image point
    edges: tuple[tuple[int, int], ...]  # indices into vertices
    marked: tuple[bool, ...]
    components: tuple[int, ...]  # component label per vertex
    unmarked: tuple[int, ...]  # labels of components without marked vertices, in order

    @property
    def c(self) -> int:
        return len(self.unmarked)


@dataclass(frozen=True)
class PathObstruction:
    delta: SingularGraph
    nu: tuple[int, ...]  # per Delta vertex
    v: tuple[int, ...]  # per unmarked component

    @property
    def c(self) -> int:
        return self.delta.c

    @property
    def approximable(self) -> bool:
        return not any(self.v)

    def __str__(self) -> str:
        bits = ",".join(map(str, self.v))
        return f"c={self.c} v=({bits}) approximable={'yes' if self.approximable else 'no'}"


@dataclass(frozen=True)
class PathImage:
    """The image graph of a simplicial path: points, trails and per-segment data."""

    points: tuple[Point, ...]
    breaks: tuple[int, ...]  # point id per breakpoint
    trails: tuple[tuple[int, int], ...]  # (u, v), u < v point ids
    seg_trail: tuple[int, ...]
    trail_segs: tuple[tuple[int, ...], ...]


def path_image(path: Sequence[Point]) -> PathImage:
    pts = [(Fraction(x), Fraction(y)) for x, y in path]
    if len(pts) < 2:
        raise MalformedInput("a path needs at least two breakpoints")
    ids: dict[Point, int] = {}
    breaks = []
    for p in pts:
        breaks.append(ids.setdefault(p, len(ids)))
    points = tuple(sorted(ids, key=ids.get))
    trail_id: dict[tuple[int, int], int] = {}
    seg_trail = []
    for i in range(len(breaks) - 1):
        u, v = breaks[i], breaks[i + 1]
        if u == v:
            raise GeneralPositionError(f"segment {i} is mapped to a point")
        key = (min(u, v), max(u, v))
        seg_trail.append(trail_id.setdefault(key, len(trail_id)))
    trails = tuple(sorted(trail_id, key=trail_id.get))
    # the image must be a graph: distinct trails meet only at shared endpoints
    for t, (u, v) in enumerate(trails):
        for w in range(len(points)):
            if w not in (u, v) and on_segment(points[w], points[u], points[v]):
                raise GeneralPositionError(f"breakpoint image {w} lies inside trail {t}")
    for (t1, (u1, v1)), (t2, (u2, v2)) in combinations(enumerate(trails), 2):
        kind = segment_contact(points[u1], points[v1], points[u2], points[v2])
        if kind == "cross":
            raise GeneralPositionError(f"trails {t1} and {t2} cross; the path is not simplicial")
        if kind == "touch" and not {u1, v1} & {u2, v2}:
            raise GeneralPositionError(f"trails {t1} and {t2} touch")
    trail_segs = [[] for _ in trails]
    for i, t in enumerate(seg_trail):
        trail_segs[t].append(i)
    return PathImage(points, tuple(breaks), trails, tuple(seg_trail), tuple(tuple(s) for s in trail_segs))


def singular_graph(img: PathImage) -> SingularGraph:
    b = img.breaks
    n = len(b) - 1
    verts = [(i, j) for i in range(n + 1) for j in range(i) if b[i] == b[j]]
    index = {v: k for k, v in enumerate(verts)}
    edges = []
    for k, (i, j) in enumerate(verts):
        for di, dj in ((1, 1), (1, -1)):
            w = (i + di, j + dj)
            if w in index:
                edges.append((k, index[w]))
    marked = tuple(j == i - 2 or j == 0 or i == n for i, j in verts)
    label = list(range(len(verts)))

    def find(x):
        while label[x] != x:
            label[x] = label[label[x]]
            x = label[x]
        return x

    for x, y in edges:
        rx, ry = find(x), find(y)
        if rx != ry:
            label[max(rx, ry)] = min(rx, ry)
    roots = [find(x) for x in range(len(verts))]
    order: dict[int, int] = {}
    for r in roots:
        order.setdefault(r, len(order))
    comp = tuple(order[r] for r in roots)
    bad = {comp[k] for k in range(len(verts)) if marked[k]}
    unmarked = tuple(c for c in range(len(order)) if c not in bad)
    return SingularGraph(tuple(verts), tuple(edges), marked, comp, unmarked)


def _circle_positions(img: PathImage, lanes: Sequence[Sequence[int]]) -> dict[tuple[int, int], tuple]:
    """Cyclic position key of every segment end at its glade.

    Keys are (segment, 0) for the start of a segment and (segment, 1) for its
    end.  Positions around a point are ordered by the angle of the trail,
    then by lane: lane 0 is rightmost w.r.t. the trail's direction u -> v,
    so lanes ascend counterclockwise at u and descend at v.
    """
    lane_of = {}
    for t, order in enumerate(lanes):
        for k, s in enumerate(order):
            lane_of[s] = k
    pos = {}
    pts, b = img.points, img.breaks
    for s, t in enumerate(img.seg_trail):
        u, v = img.trails[t]
        for end in (0, 1):
            here, there = b[s + end], b[s + 1 - end]
            vec = (pts[there][0] - pts[here][0], pts[there][1] - pts[here][1])
            lane = lane_of[s] if here == u else -lane_of[s]
            pos[(s, end)] = (angle_key(vec), lane)
    return pos


def _interleaved(x1, x2, y1, y2) -> bool:
    """Do chords x1x2 and y1y2 (distinct sortable keys on a circle) interleave?"""
    lo, hi = min(x1, x2), max(x1, x2)
    return (lo < y1 < hi) != (lo < y2 < hi)


def _check_lanes(img: PathImage, lanes) -> list[tuple[int, ...]]:
    if lanes is None:
        return [tuple(s) for s in img.trail_segs]
    lanes = [tuple(x) for x in lanes]
    if len(lanes) != len(img.trails) or any(sorted(a) != sorted(b) for a, b in zip(lanes, img.trail_segs)):
        raise MalformedInput("lanes must permute the segments of each trail")
    return lanes


def path_obstruction(path: Sequence[Point], lanes=None) -> PathObstruction:
    """Approximability obstruction of a planar simplicial path.

    ``lanes`` optionally orders, per trail, the segments running along it in
    the companion path; the default uses segment order.  The result does not
    depend on this choice.
    """
    img = path_image(path)
    delta = singular_graph(img)
    pos = _circle_positions(img, _check_lanes(img, lanes))
    n = len(img.breaks) - 1
    nu = []
    for (i, j), mk in zip(delta.vertices, delta.marked):
        if j == 0 or i == n:
            nu.append(0)
            continue
        nu.append(int(_interleaved(pos[(j - 1, 1)], pos[(j, 0)], pos[(i - 1, 1)], pos[(i, 0)])))
    v = []
    for c in delta.unmarked:
        v.append(sum(x for x, k in zip(nu, delta.components) if k == c) % 2)
    return PathObstruction(delta, tuple(nu), tuple(v))


def lane_assignments(img: PathImage):
    for choice in product(*(permutations(s) for s in img.trail_segs)):
        yield list(choice)


def approximable_bruteforce(path: Sequence[Point], budget: int = 10**6) -> bool:
    """Search for lane orders whose full chords are pairwise disjoint at every glade."""
    img = path_image(path)
    total = 1
    for s in img.trail_segs:
        for k in range(2, len(s) + 1):
            total *= k
    if total > budget:
        raise ValueError(f"{total} lane assignments exceed the budget {budget}")
    n = len(img.breaks) - 1
    visits: dict[int, list[int]] = {}
    for i in range(1, n):
        visits.setdefault(img.breaks[i], []).append(i)
    pairs = [(i, j) for vs in visits.values() for j, i in combinations(vs, 2)]
    for lanes in lane_assignments(img):
        pos = _circle_positions(img, lanes)
        if not any(
            _interleaved(pos[(j - 1, 1)], pos[(j, 0)], pos[(i - 1, 1)], pos[(i, 0)]) for i, j in pairs
        ):
            return True
    return False


def refine_trail(path: Sequence[Point], trail: int) -> list[Point]:
    """Subdivide every segment whose image is the given trail at its midpoint."""
    img = path_image(path)
    u, v = img.trails[trail]
    mid = ((img.points[u][0] + img.points[v][0]) / 2, (img.points[u][1] + img.points[v][1]) / 2)
    out = [tuple(path[0])]
    for s in range(len(path) - 1):
        if img.seg_trail[s] == trail:
            out.append(mid)
        out.append(tuple(path[s + 1]))
    return [(Fraction(x), Fraction(y)) for x, y in out]
