import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import connected_simple_graphs, seeds
from topokit.complex import Graph, connected_components
from topokit.fixtures import complete_bipartite, complete_graph, cycle_graph, figure_eight, petersen, theta_graph
from topokit.ribbon import (
    BudgetExceeded,
    RotationSystem,
    count_thickenings,
    euler_genus,
    genus_exhaustive,
    genus_plain,
    has_planar_rotation,
    interlacement_matrix,
    is_planar_rotation,
    iter_rotation_systems,
    mohar_genus,
    rotation_count,
    thickening_surface,
    trace_faces,
)


def _random_rotation(g, rng, twisted=False):
    rot = []
    for ds in g.darts_at():
        ds = list(ds)
        rng.shuffle(ds)
        rot.append(tuple(ds))
    tw = tuple(rng.randrange(2) for _ in range(g.E)) if twisted else ()
    return RotationSystem(g, tuple(rot), tw)


@st.composite
def rotations(draw, twisted=True):
    g = draw(connected_simple_graphs(max_v=6))
    return _random_rotation(g, random.Random(draw(seeds)), twisted)


@given(rotations())
def test_face_lengths_sum_to_twice_edges(r):
    t = trace_faces(r)
    assert sum(len(c) for c in t.circuits) == 2 * r.graph.E
    c = thickening_surface(r)
    assert c.chi == r.graph.V - r.graph.E
    assert 2 * c.genus + c.crosscaps == euler_genus(r) >= 0


@given(rotations(), st.data())
def test_vertex_flips_preserve_the_surface(r, data):
    vs = data.draw(st.sets(st.integers(0, r.graph.V - 1)))
    assert thickening_surface(r.flipped(vs)) == thickening_surface(r)


@given(rotations())
def test_interlacement_rank_is_euler_genus(r):
    m = interlacement_matrix(r)
    assert m.b == r.graph.E - r.graph.V + 1
    assert m.twisted_rank() == euler_genus(r)
    if not any(r.twist):
        assert m.rank() % 2 == 0


@pytest.mark.parametrize(
    "g, genus",
    [
        (complete_graph(4), 0),
        (complete_graph(5), 1),
        (complete_bipartite(3, 3), 1),
        (petersen(), 1),
        (complete_graph(6), 1),
        (complete_bipartite(4, 4), 1),
        (theta_graph(), 0),
        (figure_eight(), 0),
    ],
    ids=["K4", "K5", "K33", "petersen", "K6", "K44", "theta", "figure8"],
)
def test_known_genera(g, genus):
    assert genus_exhaustive(g, budget=10**9) == genus


@pytest.mark.parametrize(
    "g, crosscaps",
    [(complete_graph(4), 1), (complete_graph(5), 1), (complete_bipartite(3, 3), 1), (cycle_graph(3), 1)],
    ids=["K4", "K5", "K33", "C3"],
)
def test_known_nonorientable_genera(g, crosscaps):
    assert genus_exhaustive(g, orientable=False) == crosscaps
    assert mohar_genus(g, orientable=False) == crosscaps


@given(connected_simple_graphs(max_v=5))
def test_search_methods_agree(g):
    plain = genus_plain(g)
    assert genus_exhaustive(g) == plain == mohar_genus(g)
    assert has_planar_rotation(g) == (plain == 0)


def test_mohar_matches_per_rotation():
    g = complete_graph(4)
    for r in iter_rotation_systems(g):
        assert interlacement_matrix(r).rank() == euler_genus(r)


def test_planar_rotation_check():
    g = complete_graph(4)
    planar = [r for r in iter_rotation_systems(g) if is_planar_rotation(r)]
    assert planar and len(planar) < rotation_count(g)
    with pytest.raises(ValueError):
        is_planar_rotation(RotationSystem.default(g, (1,) + (0,) * 5))


def test_isolated_vertex_is_a_disc():
    r = RotationSystem.default(Graph(1, ()))
    assert trace_faces(r).h == 1
    assert thickening_surface(r).chi == 1 and thickening_surface(r).genus == 0


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        genus_exhaustive(complete_graph(7), budget=1000)
    with pytest.raises(BudgetExceeded):
        mohar_genus(complete_graph(6), budget=10)


def test_disconnected_graph_is_rejected():
    g = Graph(4, ((0, 1), (2, 3)))
    assert connected_components(g)[0] == 2
    with pytest.raises(ValueError):
        genus_exhaustive(g)


def test_thickening_counts():
    k4 = complete_graph(4)
    assert count_thickenings(k4) == 16
    assert count_thickenings(k4, "rel-homeomorphism") == 8
    assert count_thickenings(k4, "labeled", orientable_only=False) == 16 * 64
    assert count_thickenings(k4, "rel-homeomorphism", orientable_only=False) == 4 * 16
    with pytest.raises(ValueError):
        count_thickenings(cycle_graph(4), "rel-homeomorphism")


def test_isomorphism_classes_bruteforce():
    # face-length profiles are invariant, so they bound the class count from below
    k4 = complete_graph(4)
    profiles = {tuple(sorted(len(c) for c in trace_faces(r).circuits)) for r in iter_rotation_systems(k4)}
    assert profiles == {(3, 3, 3, 3), (3, 9), (4, 8)}
    assert count_thickenings(k4, "isomorphism") == 3
    assert count_thickenings(cycle_graph(3), "isomorphism") == 1
