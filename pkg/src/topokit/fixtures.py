"""Standard graphs, surface schemes, paths and links used across tests and the CLI."""

from __future__ import annotations

from fractions import Fraction
from importlib import resources
from itertools import combinations

from .complex import Graph, Scheme2, SimplicialComplex
from .links import PolyLink
from .vankampen import Drawing


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def complete_bipartite(m: int, n: int) -> Graph:
    return Graph(m + n, tuple((a, m + b) for a in range(m) for b in range(n)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


def theta_graph() -> Graph:
    return Graph(2, ((0, 1), (0, 1), (0, 1)))


def figure_eight() -> Graph:
    return Graph(1, ((0, 0), (0, 0)))


def simplex_boundary(n: int) -> SimplicialComplex:
    """Boundary of the (n+1)-simplex: a triangulated n-sphere."""
    return SimplicialComplex.from_maximal(combinations(range(n + 2), n + 1))


# --- surfaces from polygon words ----------------------------------------------

def scheme_from_words(words) -> Scheme2:
    """Glue polygons labelled by words like ``"abAB"`` (capital = inverse).

    Each distinct letter becomes an edge, oriented as its lowercase
    occurrence reads; corners are identified accordingly.
    """
    letters: dict[str, int] = {}
    for w in words:
        for ch in w:
            letters.setdefault(ch.lower(), len(letters))
    corner_ids = []
    base = 0
    for w in words:
        corner_ids.append(list(range(base, base + len(w))))
        base += len(w)
    parent = list(range(base))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    ends: dict[int, tuple[int, int]] = {}
    for w, cs in zip(words, corner_ids):
        for i, ch in enumerate(w):
            a, b = cs[i], cs[(i + 1) % len(w)]
            tail, head = (a, b) if ch.islower() else (b, a)
            e = letters[ch.lower()]
            if e in ends:
                t0, h0 = ends[e]
                for x, y in ((t0, tail), (h0, head)):
                    rx, ry = find(x), find(y)
                    if rx != ry:
                        parent[max(rx, ry)] = min(rx, ry)
            else:
                ends[e] = (tail, head)
    roots: dict[int, int] = {}
    for x in range(base):
        roots.setdefault(find(x), len(roots))
    edges = tuple((roots[find(ends[e][0])], roots[find(ends[e][1])]) for e in range(len(letters)))
    faces = tuple(tuple((letters[ch.lower()], 1 if ch.islower() else -1) for ch in w) for w in words)
    return Scheme2(Graph(len(roots), edges), faces)


def orientable_surface(g: int) -> Scheme2:
    """Sphere with g handles: a_1 b_1 A_1 B_1 ... (g = 0: the word aA)."""
    if g == 0:
        return scheme_from_words(["aA"])
    word = []
    for k in range(g):
        a, b = chr(ord("a") + 2 * k), chr(ord("a") + 2 * k + 1)
        word += [a, b, a.upper(), b.upper()]
    return scheme_from_words(["".join(word)])


def nonorientable_surface(m: int) -> Scheme2:
    """Sphere with m crosscaps: a_1 a_1 ... a_m a_m."""
    if m < 1:
        raise ValueError("need at least one crosscap")
    return scheme_from_words(["".join(chr(ord("a") + k) * 2 for k in range(m))])


def torus() -> Scheme2:
    return orientable_surface(1)


def klein_bottle() -> Scheme2:
    return scheme_from_words(["abaB"])


def projective_plane() -> Scheme2:
    return nonorientable_surface(1)


def mobius_band() -> Scheme2:
    return scheme_from_words(["abac"])


def tetrahedron_scheme() -> Scheme2:
    g = complete_graph(4)  # edges 01 02 03 12 13 23
    idx = {e: i for i, e in enumerate(g.edges)}

    def tri(a, b, c):
        out = []
        for x, y in ((a, b), (b, c), (c, a)):
            out.append((idx[(x, y)], 1) if (x, y) in idx else (idx[(y, x)], -1))
        return tuple(out)

    return Scheme2(g, (tri(0, 2, 1), tri(0, 1, 3), tri(1, 2, 3), tri(0, 3, 2)))


def surface_fixtures() -> dict[str, Scheme2]:
    out = {f"orientable_g{g}": orientable_surface(g) for g in range(4)}
    out.update({f"nonorientable_m{m}": nonorientable_surface(m) for m in range(1, 5)})
    out["klein"] = klein_bottle()
    out["tetrahedron"] = tetrahedron_scheme()
    return out


# --- drawings -------------------------------------------------------------------

def k5_drawing() -> Drawing:
    """K5 with one crossing: a square with a center, one diagonal routed outside."""
    g = complete_graph(5)
    d = Drawing.straight(g, [(0, 0), (4, 0), (4, 4), (0, 4), (1, 2)])
    return d.with_edge(g.edges.index((1, 3)), [(4, 0), (6, -1), (6, 6), (-1, 6), (0, 4)])


def k33_drawing() -> Drawing:
    """Straight-line K3,3 with exactly one crossing."""
    return Drawing.straight(complete_bipartite(3, 3), [(2, 4), (4, 3), (6, 3), (6, 6), (3, 4), (4, 1)])


# --- paths ---------------------------------------------------------------------

def _pts(*xy):
    return [(Fraction(x), Fraction(y)) for x, y in xy]


def abab_path():
    """A tail into a square circuit traversed twice, then a tail out."""
    s, a, x, b, y, t = (-1, -1), (0, 0), (2, 0), (2, 2), (0, 2), (-1, 3)
    return _pts(s, a, x, b, y, a, x, b, y, t)


def figure_b_path():
    """Stem up to a junction P, two out-and-back lobes, back down the stem."""
    q, p = (0, 0), (0, 2)
    return _pts((1, -1), q, p, (-1, 4), p, (1, 4), p, q, (-1, -1))


def folded_path():
    return _pts((0, 0), (1, 0), (0, 0))


def zigzag_path():
    return _pts((0, 0), (1, 1), (2, 0), (3, 1), (4, 0))


# --- links -------------------------------------------------------------------------

def hopf_link() -> PolyLink:
    return PolyLink(((0, 0, 0), (2, 0, 0), (2, 2, 0), (0, 2, 0)), ((1, 1, -1), (1, 1, 1), (1, 3, 1), (1, 3, -1)))


def unlink() -> PolyLink:
    return PolyLink(((0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)), ((3, 0, 0), (4, 0, 0), (4, 1, 0), (3, 1, 0)))


# --- bundled files -------------------------------------------------------------

def data_path(name: str):
    return resources.files("topokit") / "data" / name


def bundled_files() -> list[str]:
    return sorted(p.name for p in (resources.files("topokit") / "data").iterdir() if not p.name.startswith("."))
