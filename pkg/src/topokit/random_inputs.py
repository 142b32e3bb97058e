"""Seeded generators of random graphs, schemes and complexes."""

from __future__ import annotations

import random
from collections import deque
from itertools import combinations

from .complex import Graph, Scheme2, SimplicialComplex, connected_components


def random_multigraph(rng: random.Random, max_v: int = 12, max_e: int = 30, loops: bool = True) -> Graph:
    n = rng.randint(1, max_v)
    edges = []
    for _ in range(rng.randint(0, max_e)):
        a = rng.randrange(n)
        b = rng.randrange(n)
        if a == b and not loops:
            continue
        edges.append((a, b))
    return Graph(n, tuple(edges))


def random_simple_graph(rng: random.Random, n: int, p: float = 0.5, connected: bool = False) -> Graph:
    while True:
        edges = tuple(e for e in combinations(range(n), 2) if rng.random() < p)
        g = Graph(n, edges)
        if not connected or connected_components(g)[0] == 1:
            return g


def _path_back(g: Graph, src: int, dst: int) -> list[tuple[int, int]]:
    """Directed darts (edge, +1/-1) of a shortest walk src -> dst."""
    adj = g.neighbors()
    prev: dict[int, tuple[int, int, int]] = {src: (-1, -1, 0)}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            break
        for w, e in adj[v]:
            if w not in prev:
                prev[w] = (v, e, 1 if g.edges[e][0] == v else -1)
                queue.append(w)
    out = []
    v = dst
    while v != src:
        u, e, s = prev[v]
        out.append((e, s))
        v = u
    return out[::-1]


def random_scheme(rng: random.Random, max_v: int = 8, max_e: int = 14, max_f: int = 5) -> Scheme2:
    """A graph with random closed walks as faces."""
    g = random_multigraph(rng, max_v, max_e)
    adj = g.neighbors()
    faces = []
    for _ in range(rng.randint(0, max_f)):
        start = rng.randrange(g.V)
        if not adj[start]:
            continue
        walk = []
        v = start
        for _ in range(rng.randint(1, 6)):
            w, e = rng.choice(adj[v])
            a, b = g.edges[e]
            s = 1 if a == v else -1
            if a == b:
                s = rng.choice((1, -1))
            walk.append((e, s))
            v = w
        walk += _path_back(g, v, start)
        faces.append(tuple(walk))
    return Scheme2(g, tuple(faces))


def random_complex(rng: random.Random, max_v: int = 7, max_simplices: int = 8, max_dim: int = 3) -> SimplicialComplex:
    n = rng.randint(1, max_v)
    tops = []
    for _ in range(rng.randint(1, max_simplices)):
        k = rng.randint(1, min(max_dim + 1, n))
        tops.append(rng.sample(range(n), k))
    return SimplicialComplex.from_maximal(tops)
