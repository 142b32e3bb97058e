import random
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import multigraphs, seeds
from topokit.complex import Graph, MalformedInput, build_chain_complex, connected_components
from topokit.covers import (
    DoubleCover,
    are_equivalent,
    count_classes_bruteforce,
    enumerate_covers,
    enumerate_covers_surface,
    evaluate,
    first_betti,
    fundamental_cycles,
    is_surface_cover,
    switch_coboundary,
    w1_functional,
)
from topokit.fixtures import complete_graph, figure_eight, surface_fixtures, theta_graph
from topokit.homology import homology


@given(multigraphs(max_e=10))
def test_class_count_matches_bruteforce(g):
    reps = enumerate_covers(g)
    assert len(reps) == 2 ** first_betti(g) == count_classes_bruteforce(g)


@given(multigraphs(max_v=6, max_e=8))
def test_representatives_are_pairwise_inequivalent(g):
    reps = enumerate_covers(g)
    for c1, c2 in combinations(reps, 2):
        assert not are_equivalent(c1, c2)
        assert w1_functional(c1) != w1_functional(c2)


@given(multigraphs(), seeds)
def test_switching_gives_equivalent_covers(g, seed):
    rng = random.Random(seed)
    lab = tuple(rng.randrange(2) for _ in range(g.E))
    vs = [v for v in range(g.V) if rng.random() < 0.5]
    sw = switch_coboundary(g, vs)
    other = tuple(x ^ ((sw >> e) & 1) for e, x in enumerate(lab))
    c1, c2 = DoubleCover(g, lab), DoubleCover(g, other)
    eq = are_equivalent(c1, c2)
    assert eq
    # the returned switch set reproduces the difference
    assert switch_coboundary(g, eq.switch) == sw
    assert w1_functional(c1) == w1_functional(c2)


@given(multigraphs(), seeds)
def test_w1_vanishes_on_cycles_iff_trivial(g, seed):
    rng = random.Random(seed)
    c = DoubleCover(g, tuple(rng.randrange(2) for _ in range(g.E)))
    trivial = DoubleCover(g, (0,) * g.E)
    assert bool(are_equivalent(c, trivial)) == w1_functional(c).is_zero
    _, cycles = fundamental_cycles(g)
    assert w1_functional(c).values == tuple(evaluate(c, z) for z in cycles)


@given(multigraphs(), seeds)
def test_lift_components(g, seed):
    rng = random.Random(seed)
    c = DoubleCover(g, tuple(rng.randrange(2) for _ in range(g.E)))
    lift = c.lift()
    assert (lift.V, lift.E) == (2 * g.V, 2 * g.E)
    n_base = connected_components(g)[0]
    n_lift = connected_components(lift)[0]
    # each base component lifts to one component if w1 is nonzero on it, else two
    assert n_base <= n_lift <= 2 * n_base
    if n_base == 1:
        assert n_lift == (1 if not w1_functional(c).is_zero else 2)


def test_small_examples():
    assert len(enumerate_covers(complete_graph(4))) == 8
    assert len(enumerate_covers(theta_graph())) == 4
    assert len(enumerate_covers(figure_eight())) == 4
    assert len(enumerate_covers(Graph(3, ((0, 1), (1, 2))))) == 1


def test_budget_and_validation():
    with pytest.raises(ValueError):
        enumerate_covers(complete_graph(8), budget=100)
    with pytest.raises(MalformedInput):
        DoubleCover(theta_graph(), (1,))
    with pytest.raises(ValueError):
        are_equivalent(DoubleCover(theta_graph(), (0, 0, 0)), DoubleCover(figure_eight(), (0, 0)))


@pytest.mark.parametrize("name", sorted(surface_fixtures()))
def test_surface_covers_count(name):
    s = surface_fixtures()[name]
    b1 = homology(build_chain_complex(s, "z2"), "z2").betti[1]
    reps = enumerate_covers_surface(s)
    assert len(reps) == 2**b1
    assert all(is_surface_cover(s, c) for c in reps)
    for c1, c2 in combinations(reps, 2):
        assert not are_equivalent(c1, c2)


def test_surface_cover_rejects_odd_face():
    s = surface_fixtures()["orientable_g1"]
    lab = [0] * s.graph.E
    lab[0] = 1
    assert is_surface_cover(s, DoubleCover(s.graph, tuple(lab))) == (sum(1 for e, _ in s.faces[0] if e == 0) % 2 == 0)
