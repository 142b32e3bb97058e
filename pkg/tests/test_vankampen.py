import random
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from strategies import connected_simple_graphs, seeds
from topokit.complex import Graph, MalformedInput
from topokit.fixtures import (
    abab_path,
    complete_bipartite,
    complete_graph,
    figure_b_path,
    folded_path,
    k33_drawing,
    k5_drawing,
    petersen,
    theta_graph,
    zigzag_path,
)
from topokit.vankampen import (
    Drawing,
    GeneralPositionError,
    MustSubdivide,
    annihilator_basis,
    approximable_bruteforce,
    check_drawing,
    class_coordinates,
    deleted_square,
    enclosed_vertices,
    is_general_position,
    lane_assignments,
    obstruction_cocycle,
    path_image,
    path_obstruction,
    random_drawing,
    refine_trail,
    verify_verdict,
    vk_class_is_zero,
    vk_obstruction,
)


def _nx_planar(g):
    G = nx.MultiGraph()
    G.add_nodes_from(range(g.V))
    G.add_edges_from(g.edges)
    return nx.check_planarity(nx.Graph(G))[0]


@pytest.mark.parametrize(
    "g, cells2",
    [(complete_graph(5), 15), (Graph(4, ((0, 1), (0, 2), (0, 3))), 0), (complete_bipartite(3, 3), 18)],
    ids=["K5", "star", "K33"],
)
def test_deleted_square_cells(g, cells2):
    ds = deleted_square(g)
    assert len(ds.cells2) == cells2
    assert len(ds.cells1) == sum(g.V - 2 for _ in g.edges)


def test_deleted_square_needs_simple_graph():
    with pytest.raises(MustSubdivide):
        deleted_square(theta_graph())


def test_fixture_drawings():
    g5 = complete_graph(5)
    nu = obstruction_cocycle(g5, k5_drawing())
    assert sum(nu) == 1
    g33 = complete_bipartite(3, 3)
    nu = obstruction_cocycle(g33, k33_drawing())
    assert sum(1 for x in nu if x) == 1
    for g, d in ((g5, k5_drawing()), (g33, k33_drawing())):
        r = vk_obstruction(g, d)
        assert not r.planar and verify_verdict(deleted_square(g), r.nu, r.verdict)
        assert str(r) == "planar=no obstruction=nonzero"


def test_planar_graph_has_zero_witness():
    g = complete_graph(4)
    r = vk_obstruction(g)
    assert r.planar and r.verdict.zero
    assert verify_verdict(deleted_square(g), r.nu, r.verdict)


def test_multigraphs_are_subdivided():
    assert vk_obstruction(theta_graph()).planar
    assert vk_obstruction(Graph(1, ((0, 0), (0, 0)))).planar
    assert not vk_obstruction(petersen()).planar


def test_general_position_errors_name_segments():
    g = complete_graph(4)
    square = Drawing.straight(g, [(0, 0), (2, 0), (2, 2), (0, 2)])
    assert is_general_position(g, square)
    # a vertex in the middle of a nonincident edge
    bad = Drawing.straight(g, [(0, 0), (2, 0), (1, 0), (0, 2)])
    with pytest.raises(GeneralPositionError, match="edge"):
        check_drawing(g, bad)
    # three edges through one point
    g6 = Graph(6, ((0, 1), (2, 3), (4, 5)))
    triple = Drawing.straight(g6, [(-1, 0), (1, 0), (0, -1), (0, 1), (-1, -1), (1, 1)])
    with pytest.raises(GeneralPositionError):
        check_drawing(g6, triple)
    with pytest.raises(MalformedInput):
        check_drawing(g, Drawing(square.positions, square.polylines[:3]))


@given(seeds)
def test_parity_lemma(seed):
    rng = random.Random(seed)
    for g in (complete_graph(5), complete_bipartite(3, 3)):
        nu = obstruction_cocycle(g, random_drawing(g, rng, bends=2))
        assert sum(nu) % 2 == 1


@given(connected_simple_graphs(min_v=3, max_v=6), seeds)
def test_rerouting_changes_nu_by_enclosed_coboundaries(g, seed):
    rng = random.Random(seed)
    d1 = random_drawing(g, rng, bends=1)
    e = rng.randrange(g.E)
    a, b = g.edges[e]
    mids = tuple((Fraction(rng.randint(-80, 80), 4), Fraction(rng.randint(-80, 80), 4)) for _ in range(2))
    d2 = d1.with_edge(e, (d1.positions[a],) + mids + (d1.positions[b],))
    assume(is_general_position(g, d2))
    closed = list(d1.polylines[e]) + list(reversed(d2.polylines[e]))[1:-1]
    ds = deleted_square(g)
    try:
        inside = enclosed_vertices(g, d1, closed, skip=(a, b))
    except ValueError:
        assume(False)
    expect = 0
    for v in inside:
        expect ^= ds.coboundary(v, e)
    n1, n2 = obstruction_cocycle(g, d1, ds=ds), obstruction_cocycle(g, d2, ds=ds)
    diff = sum((x ^ y) << i for i, (x, y) in enumerate(zip(n1, n2)))
    assert diff == expect


@given(connected_simple_graphs(min_v=2, max_v=7), seeds)
def test_vk_matches_planarity_oracle(g, seed):
    d = random_drawing(g, random.Random(seed), bends=1)
    r = vk_obstruction(g, d)
    assert r.planar == _nx_planar(g)
    assert verify_verdict(deleted_square(g), r.nu, r.verdict)


@given(connected_simple_graphs(min_v=4, max_v=6), seeds)
def test_class_coordinates_do_not_depend_on_drawing(g, seed):
    rng = random.Random(seed)
    ds = deleted_square(g)
    basis = annihilator_basis(ds)
    coords = {class_coordinates(ds, obstruction_cocycle(g, random_drawing(g, rng), ds=ds), basis) for _ in range(3)}
    assert len(coords) == 1


@given(connected_simple_graphs(min_v=4, max_v=6), seeds)
def test_signed_cochain_reduces_to_parity(g, seed):
    d = random_drawing(g, random.Random(seed), bends=2)
    z = obstruction_cocycle(g, d, ring="z")
    z2 = obstruction_cocycle(g, d)
    assert tuple(x % 2 for x in z) == z2


def test_verdict_certificate_is_checked():
    g = complete_graph(5)
    ds = deleted_square(g)
    nu = obstruction_cocycle(g, k5_drawing())
    v = vk_class_is_zero(ds, nu)
    assert not v.zero and verify_verdict(ds, nu, v)
    forged = type(v)(False, (), 0)
    assert not verify_verdict(ds, nu, forged)


# --- paths ---------------------------------------------------------------------


@pytest.mark.parametrize(
    "path, c, approximable",
    [(abab_path(), 1, False), (figure_b_path(), 1, False), (folded_path(), 0, True), (zigzag_path(), 0, True)],
    ids=["abab", "figure_b", "folded", "zigzag"],
)
def test_path_fixtures(path, c, approximable):
    r = path_obstruction(path)
    assert r.c == c and r.approximable == approximable
    assert approximable_bruteforce(path) == approximable


def test_walk_strategy_reaches_obstructed_paths():
    # the random-walk oracle test is only meaningful if both outcomes occur
    walk = [SITES[v] for v in (4, 0, 1, 2, 3, 0, 1, 2, 3, 7)]
    assert not path_obstruction(walk).approximable


def test_path_output_format():
    assert str(path_obstruction(abab_path())) == "c=1 v=(1) approximable=no"


def test_paths_must_be_simplicial():
    with pytest.raises(GeneralPositionError):
        path_image([(0, 0), (0, 0), (1, 0)])
    with pytest.raises(GeneralPositionError):
        path_image([(0, 0), (2, 2), (2, 0), (0, 2)])
    with pytest.raises(GeneralPositionError):
        path_image([(0, 0), (2, 0), (1, 0)])
    with pytest.raises(MalformedInput):
        path_image([(0, 0)])


# a square with an outward whisker at each corner and one inward whisker
SITES = {0: (0, 0), 1: (2, 0), 2: (2, 2), 3: (0, 2), 4: (-1, -1), 5: (3, -1), 6: (3, 3), 7: (-1, 3), 8: (1, 1)}
MOVES = {0: (1, 3, 4), 1: (0, 2, 5), 2: (1, 3, 6, 8), 3: (2, 0, 7), 4: (0,), 5: (1,), 6: (2,), 7: (3,), 8: (2,)}


@st.composite
def grid_walks(draw, max_len=13):
    """Random walks on a fixed plane graph, so every walk is a simplicial path."""
    rng = random.Random(draw(seeds))
    v = rng.choice(sorted(SITES))
    walk = [v]
    for _ in range(draw(st.integers(1, max_len - 1))):
        v = rng.choice(MOVES[v])
        walk.append(v)
    return [(Fraction(x), Fraction(y)) for x, y in (SITES[v] for v in walk)]


def _lane_budget(path):
    total = 1
    for s in path_image(path).trail_segs:
        for k in range(2, len(s) + 1):
            total *= k
    return total


@given(grid_walks())
@settings(max_examples=150)
def test_obstruction_matches_bruteforce(path):
    assume(_lane_budget(path) <= 20000)
    assert path_obstruction(path).approximable == approximable_bruteforce(path)


@given(grid_walks(), seeds)
def test_obstruction_does_not_depend_on_lanes(path, seed):
    img = path_image(path)
    rng = random.Random(seed)
    lanes = [rng.sample(s, len(s)) for s in img.trail_segs]
    assert path_obstruction(path, lanes).v == path_obstruction(path).v


@given(grid_walks(), st.data())
def test_refinement_preserves_approximability(path, data):
    img = path_image(path)
    t = data.draw(st.integers(0, len(img.trails) - 1))
    assert path_obstruction(refine_trail(path, t)).approximable == path_obstruction(path).approximable


def test_lane_assignments_enumerate_permutations():
    img = path_image(abab_path())
    assert sum(1 for _ in lane_assignments(img)) == _lane_budget(abab_path())
    with pytest.raises(MalformedInput):
        path_obstruction(abab_path(), [[0]])
