"""The acceptance checks, shared by ``topo selftest`` and the test suite.

Each check returns a ``Outcome``; an exception inside a check counts as a
failure.  Checks read bundled fixture files where one exists, so a
corrupted data file makes the corresponding check fail.
"""

from __future__ import annotations

import random
import time
import traceback
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Callable

import networkx as nx

from . import covers, formats, links, ribbon, surfaces, vankampen
from .complex import (
    Graph,
    Scheme2,
    build_chain_complex,
    connected_components,
    euler_characteristic,
    subdivide_edge,
    subdivide_face,
)
from .config import AcceptanceConfig
from .fixtures import (
    abab_path,
    bundled_files,
    complete_bipartite,
    complete_graph,
    data_path,
    figure_b_path,
    folded_path,
    hopf_link,
    k5_drawing,
    k33_drawing,
    klein_bottle,
    nonorientable_surface,
    orientable_surface,
    petersen,
    projective_plane,
    simplex_boundary,
    surface_fixtures,
    torus,
    unlink,
)
from .gf2 import pack
from .homology import betti_euler_check, homology_z, homology_z2
from .random_inputs import random_complex, random_multigraph, random_scheme


@dataclass
class Outcome:
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class Check:
    number: int
    name: str
    keywords: tuple[str, ...]
    run: Callable[[AcceptanceConfig], Outcome]

    def matches(self, pattern: str | None) -> bool:
        if not pattern:
            return True
        p = pattern.lower()
        return p == str(self.number) or p in self.name or any(p in k for k in self.keywords)


def _load(name: str):
    return formats.load(data_path(name))


def _fail(msg: str) -> Outcome:
    return Outcome(False, msg)


# 1 ----------------------------------------------------------------------------

def spheres(cfg: AcceptanceConfig) -> Outcome:
    bundled = _load("tetra.cx")
    if bundled.simplices != simplex_boundary(2).simplices:
        return _fail("tetra.cx is not the boundary of the 3-simplex")
    for n in range(1, 5):
        h = homology_z(build_chain_complex(simplex_boundary(n), "z"))
        want = tuple(1 if k in (0, n) else 0 for k in range(n + 1))
        if h.betti != want or any(h.torsion):
            return _fail(f"S^{n}: got {h}")
    return Outcome(True, "S^1..S^4 have H_k = Z exactly for k in {0, n}")


# 2 ----------------------------------------------------------------------------

def cycle_space(cfg: AcceptanceConfig) -> Outcome:
    rng = random.Random(cfg.seed)
    for t in range(cfg.random_multigraphs):
        g = random_multigraph(rng, 12, 30)
        h1 = homology_z2(build_chain_complex(g, "z2")).betti[1]
        c = connected_components(g)[0]
        if h1 != g.E - g.V + c:
            return _fail(f"graph {t}: dim H1 = {h1}, E - V + C = {g.E - g.V + c}")
    return Outcome(True, f"{cfg.random_multigraphs} random multigraphs")


# 3 ----------------------------------------------------------------------------

def closed_surface_fixtures() -> dict[str, Scheme2]:
    out = {f"T{g}": orientable_surface(g) for g in range(4)}
    out.update({f"N{m}": nonorientable_surface(m) for m in range(1, 5)})
    return out


def surface_homology(cfg: AcceptanceConfig) -> Outcome:
    bundled = {"torus.scheme": torus(), "klein.scheme": klein_bottle(), "rp2.scheme": projective_plane()}
    for name, s in bundled.items():
        if _load(name) != s:
            return _fail(f"{name} differs from the built-in fixture")
    for name, s in closed_surface_fixtures().items():
        h1 = homology_z2(build_chain_complex(s, "z2")).betti[1]
        if h1 != 2 - euler_characteristic(s):
            return _fail(f"{name}: dim H1 = {h1}, 2 - chi = {2 - euler_characteristic(s)}")
    return Outcome(True, "T_0..T_3 and N_1..N_4")


# 4 ----------------------------------------------------------------------------

def random_subdivision(s: Scheme2, rng: random.Random) -> Scheme2:
    cuttable = [k for k, f in enumerate(s.faces) if len(f) >= 2]
    if cuttable and rng.random() < 0.5:
        k = rng.choice(cuttable)
        i, j = sorted(rng.sample(range(len(s.faces[k])), 2))
        return subdivide_face(s, k, i, j)
    return subdivide_edge(s, rng.randrange(s.graph.E))


def classification(cfg: AcceptanceConfig) -> Outcome:
    rng = random.Random(cfg.seed + 4)
    expected = {
        "torus.scheme": (True, 1, 0),
        "klein.scheme": (False, 0, 2),
        "rp2.scheme": (False, 0, 1),
    }
    for name, (orient, g, m) in expected.items():
        s = _load(name)
        for step in range(cfg.subdivisions + 1):
            c = surfaces.classify_surface(s)
            if (c.orientable, c.genus, c.crosscaps, c.boundary) != (orient, g, m, 0):
                return _fail(f"{name} after {step} subdivisions: {c}")
            s = random_subdivision(s, rng)
    return Outcome(True, f"torus, Klein bottle, RP2 stable over {cfg.subdivisions} subdivisions")


# 5 ----------------------------------------------------------------------------

def intersection_forms(cfg: AcceptanceConfig) -> Outcome:
    form = surfaces.intersection_form(_load("torus.scheme"))
    if form.matrix != ((0, 1), (1, 0)):
        return _fail(f"torus form {form.matrix}")
    for name, s in closed_surface_fixtures().items():
        f = surfaces.intersection_form(s)
        dim = homology_z2(build_chain_complex(s, "z2")).betti[1]
        if f.rank != dim:
            return _fail(f"{name}: form rank {f.rank}, dim H1 {dim}")
        if not surfaces.w1_self_pairing_check(s):
            return _fail(f"{name}: w1 . w1 differs from chi mod 2")
    return Outcome(True, "torus form [[0,1],[1,0]]; nondegenerate; w1.w1 = chi mod 2")


# 6 ----------------------------------------------------------------------------

def k4_thickenings(cfg: AcceptanceConfig) -> Outcome:
    k4 = _load("k4.graph")
    labeled = ribbon.count_thickenings(k4, "labeled")
    classes = ribbon.thickening_classes(k4)
    genera = sorted(ribbon.euler_genus(r) // 2 for r in classes)
    if labeled != 16 or len(classes) != 3 or genera != [0, 1, 1]:
        return _fail(f"labeled {labeled}, classes {len(classes)}, genera {genera}")
    return Outcome(True, "16 labeled; 3 classes with genera 0, 1, 1")


# 7 ----------------------------------------------------------------------------

def genus_values(cfg: AcceptanceConfig) -> Outcome:
    for name, want in (("k4.graph", 0), ("k5.graph", 1), ("k33.graph", 1)):
        g = _load(name)
        a, b = ribbon.genus_exhaustive(g), ribbon.mohar_genus(g)
        if a != want or b != want:
            return _fail(f"{name}: exhaustive {a}, Mohar {b}, expected {want}")
    k5 = _load("k5.graph")
    t0 = time.perf_counter()
    count = 0
    for r in ribbon.iter_rotation_systems(k5):
        count += 1
        if ribbon.interlacement_matrix(r).rank() != ribbon.euler_genus(r):
            return _fail(f"rank s(rho) differs from twice the traced genus at {r.rotation}")
    dt = time.perf_counter() - t0
    if count != 7776:
        return _fail(f"enumerated {count} rotation systems of K5")
    if dt >= 30:
        return _fail(f"per-rotation identity took {dt:.1f} s")
    return Outcome(True, f"K4/K5/K3,3 genus 0/1/1; 7776 K5 rotations in {dt:.1f} s")


# 8 ----------------------------------------------------------------------------

def _chord_diagrams(k: int):
    """Perfect matchings of 0..2k-1, each pair in increasing order."""
    def rec(free):
        if not free:
            yield []
            return
        a = free[0]
        for i in range(1, len(free)):
            rest = free[1:i] + free[i + 1:]
            for m in rec(rest):
                yield [(a, free[i])] + m
    yield from rec(list(range(2 * k)))


def _one_vertex_systems(k: int, labeled: bool):
    g = Graph(1, tuple((0, 0) for _ in range(k)))
    if k == 0:
        yield g, ()
        return
    if labeled:
        darts = [(e, s) for e in range(k) for s in (0, 1)]
        first = darts[0]
        for rest in permutations(darts[1:]):
            yield g, (first,) + rest
        return
    # up to relabelling loops and swapping their two ends, which preserve both sides
    for m in _chord_diagrams(k):
        rot = [None] * (2 * k)
        for e, (a, b) in enumerate(m):
            rot[a], rot[b] = (e, 0), (e, 1)
        yield g, tuple(rot)


def one_vertex_ribbons(cfg: AcceptanceConfig) -> Outcome:
    total = 0
    for k in range(0, cfg.max_one_vertex_loops + 1):
        labeled = k <= 4
        for g, rot in _one_vertex_systems(k, labeled):
            r0 = ribbon.RotationSystem(g, (rot,))
            m = ribbon.interlacement_matrix(r0)
            plain = m.rank()
            if plain % 2 or plain != ribbon.euler_genus(r0):
                return _fail(f"{k} loops, rotation {rot}: rank {plain}, traced Euler genus {ribbon.euler_genus(r0)}")
            for tw in product((0, 1), repeat=k):
                if not any(tw):
                    continue
                r = ribbon.RotationSystem(g, (rot,), tw)
                total += 1
                if m.rank(pack(tw)) != ribbon.euler_genus(r):
                    return _fail(f"{k} loops, rotation {rot}, twists {tw}: rank with diagonal differs")
            total += 1
    return Outcome(True, f"{total} one-vertex ribbon graphs with <= {cfg.max_one_vertex_loops} loops")


# 9 ----------------------------------------------------------------------------

def small_connected_graphs(max_v: int = 6):
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if 1 <= n <= max_v and nx.is_connected(h):
            yield Graph(n, tuple(sorted(tuple(sorted(e)) for e in h.edges())))


def planarity_oracle(cfg: AcceptanceConfig) -> Outcome:
    count = 0
    for g in small_connected_graphs(6):
        count += 1
        vk = vankampen.vk_planarity(g)
        oracle = ribbon.genus_exhaustive(g, budget=cfg.budgets.large_rotations) == 0
        if vk != oracle:
            return _fail(f"graph {g.edges}: van Kampen {vk}, genus oracle {oracle}")
    for name, d in (("k5.draw", k5_drawing()), ("k33.draw", k33_drawing())):
        g, bundled = _load(name)
        if bundled != d:
            return _fail(f"{name} differs from the built-in drawing")
        ds = vankampen.deleted_square(g)
        nu = vankampen.obstruction_cocycle(g, d, ds=ds)
        v = vankampen.vk_class_is_zero(ds, nu)
        if sum(nu) != 1 or v.zero or not vankampen.verify_verdict(ds, nu, v):
            return _fail(f"{name}: sum nu = {sum(nu)}, verdict {v}")
    return Outcome(True, f"{count} connected graphs on <= 6 vertices agree; v(K5), v(K3,3) nonzero")


# 10 ---------------------------------------------------------------------------

def drawing_independence(cfg: AcceptanceConfig) -> Outcome:
    rng = random.Random(cfg.seed + 10)
    cases = {"K5": complete_graph(5), "K3,3": complete_bipartite(3, 3), "K4": complete_graph(4), "Petersen": petersen()}
    for name, g in cases.items():
        ds = vankampen.deleted_square(g)
        basis = vankampen.annihilator_basis(ds)
        seen = set()
        for _ in range(cfg.random_drawings):
            d = vankampen.random_drawing(g, rng)
            nu = vankampen.obstruction_cocycle(g, d, ds=ds)
            v = vankampen.vk_class_is_zero(ds, nu)
            if not vankampen.verify_verdict(ds, nu, v):
                return _fail(f"{name}: certificate does not verify")
            seen.add((v.zero, vankampen.class_coordinates(ds, nu, basis)))
        if len(seen) != 1:
            return _fail(f"{name}: verdicts vary across drawings: {seen}")
    return Outcome(True, f"{cfg.random_drawings} drawings each of K5, K3,3, K4, Petersen")


# 11 ---------------------------------------------------------------------------

def path_approximability(cfg: AcceptanceConfig) -> Outcome:
    expect = [
        ("abab.path", abab_path(), 1, (1,)),
        ("figure_b.path", figure_b_path(), 1, (1,)),
        ("folded.path", folded_path(), 0, ()),
    ]
    for name, path, c, v in expect:
        if _load(name) != path:
            return _fail(f"{name} differs from the built-in path")
        r = vankampen.path_obstruction(path)
        if r.c != c or r.v != v:
            return _fail(f"{name}: {r}")
        if vankampen.approximable_bruteforce(path) != r.approximable:
            return _fail(f"{name}: lane search disagrees with v")
    return Outcome(True, "abab v=(1); figure-b c=1 v=(1); folded c=0")


# 12 ---------------------------------------------------------------------------

def double_covers(cfg: AcceptanceConfig) -> Outcome:
    rng = random.Random(cfg.seed + 12)
    done = 0
    while done < cfg.random_cover_graphs:
        g = random_multigraph(rng, 8, 16)
        b = covers.first_betti(g)
        if b > 10:
            continue
        done += 1
        brute = covers.count_classes_bruteforce(g)
        reps = covers.enumerate_covers(g)
        if brute != 2**b or len(reps) != 2**b:
            return _fail(f"graph {g.edges}: brute {brute}, listed {len(reps)}, 2^b {2**b}")
    for name, s in closed_surface_fixtures().items():
        n = len(covers.enumerate_covers_surface(s))
        if n != 2 ** (2 - euler_characteristic(s)):
            return _fail(f"{name}: {n} surface cover classes")
    return Outcome(True, f"{cfg.random_cover_graphs} random graphs; surface counts 2^(2 - chi)")


# 13 ---------------------------------------------------------------------------

def linking(cfg: AcceptanceConfig) -> Outcome:
    hopf, free = _load("hopf.link"), _load("unlink.link")
    if hopf != hopf_link() or free != unlink():
        return _fail("bundled link files differ from the built-in fixtures")
    for name, l, want in (("Hopf", hopf, {1, -1}), ("unlink", free, {0})):
        dirs = links.generic_directions(l, cfg.projection_directions)
        if len(dirs) < cfg.projection_directions:
            return _fail(f"{name}: only {len(dirs)} generic directions")
        vals = {links.linking_number(l, d) for d in dirs}
        if len(vals) != 1 or not vals <= want:
            return _fail(f"{name}: values {vals}")
        lk = vals.pop()
        if links.cone_linking_number(l) % 2 != lk % 2 or links.cone_linking_number(l) != lk:
            return _fail(f"{name}: cone oracle disagrees")
    return Outcome(True, "Hopf lk = +-1, unlink 0; 5 directions; cone oracle agrees")


# 14 ---------------------------------------------------------------------------

def _roundtrip(obj, suffix) -> bool:
    text = formats.dump(obj, suffix)
    back = formats.PARSERS[suffix](text)
    return back == obj and formats.dump(back, suffix) == text


def structural(cfg: AcceptanceConfig) -> Outcome:
    rng = random.Random(cfg.seed + 14)
    items = list(surface_fixtures().values())
    for n in range(cfg.structural_inputs):
        items.append(random_scheme(rng) if n % 2 == 0 else random_complex(rng))
    for k, obj in enumerate(items):
        for ring in ("z2", "z"):
            cx = build_chain_complex(obj, ring)
            if not cx.boundary_squared_is_zero():
                return _fail(f"input {k} ({ring}): boundary squared is nonzero")
            if not betti_euler_check(cx):
                return _fail(f"input {k} ({ring}): Betti numbers miss chi")
        if isinstance(obj, Scheme2):
            if obj.graph.E:
                sub = subdivide_edge(obj, rng.randrange(obj.graph.E))
                if euler_characteristic(sub) != euler_characteristic(obj):
                    return _fail(f"input {k}: chi changed under subdivision")
            if not _roundtrip(obj, ".scheme") or not _roundtrip(obj.graph, ".graph"):
                return _fail(f"input {k}: scheme round trip failed")
        elif not _roundtrip(obj, ".cx"):
            return _fail(f"input {k}: complex round trip failed")
    for name in bundled_files():
        obj = _load(name)
        suffix = "." + name.rsplit(".", 1)[1]
        if not _roundtrip(obj, suffix):
            return _fail(f"bundled {name} does not round-trip")
    return Outcome(True, f"{len(items)} inputs and every bundled file")


CHECKS: tuple[Check, ...] = (
    Check(1, "homology-spheres", ("homology", "smith"), spheres),
    Check(2, "cycle-space", ("homology", "graph"), cycle_space),
    Check(3, "surface-homology", ("homology", "surface"), surface_homology),
    Check(4, "classification", ("surface",), classification),
    Check(5, "intersection-form", ("surface", "duality", "w1"), intersection_forms),
    Check(6, "k4-thickenings", ("ribbon", "thickening"), k4_thickenings),
    Check(7, "genus", ("ribbon", "mohar", "exhaustive"), genus_values),
    Check(8, "one-vertex-ribbons", ("ribbon", "mohar", "interlacement"), one_vertex_ribbons),
    Check(9, "planarity-oracle", ("vankampen", "planar"), planarity_oracle),
    Check(10, "drawing-independence", ("vankampen", "drawing"), drawing_independence),
    Check(11, "path-approximability", ("vankampen", "path"), path_approximability),
    Check(12, "double-covers", ("covers",), double_covers),
    Check(13, "linking", ("links",), linking),
    Check(14, "structural", ("roundtrip", "formats"), structural),
)


@dataclass
class Report:
    results: list[tuple[Check, Outcome, float]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(o.ok for _, o, _ in self.results)

    def lines(self) -> list[str]:
        return [
            f"[{'PASS' if o.ok else 'FAIL'}] {c.number:2d} {c.name}: {o.detail} ({dt:.1f}s)"
            for c, o, dt in self.results
        ]


def run_check(check: Check, cfg: AcceptanceConfig) -> tuple[Outcome, float]:
    t0 = time.perf_counter()
    try:
        out = check.run(cfg)
    except Exception as err:  # a crash is a failure with its diagnostic
        tb = traceback.format_exception_only(type(err), err)[-1].strip()
        out = Outcome(False, f"raised {tb}")
    return out, time.perf_counter() - t0


def run_all(pattern: str | None = None, cfg: AcceptanceConfig | None = None) -> Report:
    cfg = cfg or AcceptanceConfig()
    rep = Report()
    for c in CHECKS:
        if c.matches(pattern):
            out, dt = run_check(c, cfg)
            rep.results.append((c, out, dt))
    return rep
