from fractions import Fraction

import pytest
from hypothesis import given

from strategies import complexes, multigraphs, schemes
from topokit.complex import (
    Graph,
    MalformedInput,
    Scheme2,
    SimplicialComplex,
    build_chain_complex,
    connected_components,
    euler_characteristic,
)
from topokit.fixtures import klein_bottle, orientable_surface, projective_plane, simplex_boundary, tetrahedron_scheme
from topokit.homology import (
    betti_euler_check,
    homology,
    relative_homology,
    universal_coefficients_agree,
)


def _h(obj, ring):
    return homology(build_chain_complex(obj, "z2" if ring == "z2" else "z"), ring)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_spheres(n):
    h = _h(simplex_boundary(n), "z")
    assert h.betti == tuple([1] + [0] * (n - 1) + [1])
    assert all(t == () for t in h.torsion)


def test_tetrahedron_string():
    assert str(_h(simplex_boundary(2), "z")) == "H_0=Z H_1=0 H_2=Z"


def test_projective_plane():
    hz = _h(projective_plane(), "z")
    assert hz.betti == (1, 0, 0) and hz.torsion[1] == (2,)
    assert _h(projective_plane(), "z2").betti == (1, 1, 1)
    assert str(hz).split()[1] == "H_1=Z/2"


def test_klein_bottle():
    hz = _h(klein_bottle(), "z")
    assert hz.betti == (1, 1, 0) and hz.torsion[1] == (2,)
    assert _h(klein_bottle(), "z2").betti == (1, 2, 1)


@pytest.mark.parametrize("g", [0, 1, 2, 3])
def test_orientable_surfaces(g):
    hz = _h(orientable_surface(g), "z")
    assert hz.betti == (1, 2 * g, 1)
    assert all(t == () for t in hz.torsion)


def test_graph_homology_counts_cycles():
    g = Graph(3, ((0, 1), (1, 2), (2, 0), (0, 0)))
    assert _h(g, "z").betti[:2] == (1, 2)


def _rank_q(m):
    rows = [[Fraction(x) for x in r] for r in m]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


@given(complexes())
def test_q_betti_matches_rational_elimination(sc):
    cx = build_chain_complex(sc, "z")
    ranks = [_rank_q(cx.matrix(k)) if cx.counts[k] and cx.counts[k + 1] else 0 for k in range(len(cx.boundaries))]
    h = homology(cx, "q")
    for k, c in enumerate(cx.counts):
        below = ranks[k - 1] if k else 0
        above = ranks[k] if k < len(ranks) else 0
        assert h.betti[k] == c - below - above


@given(complexes())
def test_universal_coefficients_and_euler(sc):
    cx = build_chain_complex(sc, "z")
    assert cx.boundary_squared_is_zero()
    assert betti_euler_check(cx)
    assert universal_coefficients_agree(homology(cx, "z"), homology(build_chain_complex(sc, "z2"), "z2"))


@given(schemes())
def test_scheme_chain_complex_is_a_complex(s):
    for ring in ("z2", "z"):
        cx = build_chain_complex(s, ring)
        assert cx.boundary_squared_is_zero()
        assert betti_euler_check(cx)
    assert cx.euler_characteristic() == euler_characteristic(s)


@given(multigraphs())
def test_h0_counts_components(g):
    assert _h(g, "z2").betti[0] == connected_components(g)[0]


def test_relative_homology_of_disk_rel_boundary():
    disk = SimplicialComplex.from_maximal([(0, 1, 2)])
    cx = build_chain_complex(disk, "z")
    mask = [[True] * 3, [True] * 3, [False]]
    assert relative_homology(cx, mask).betti == (0, 0, 1)


def test_relative_homology_rejects_non_subcomplex():
    disk = SimplicialComplex.from_maximal([(0, 1, 2)])
    cx = build_chain_complex(disk, "z")
    with pytest.raises(MalformedInput):
        relative_homology(cx, [[False] * 3, [True] * 3, [False]])


def test_sphere_rel_point_kills_h0():
    cx = build_chain_complex(tetrahedron_scheme(), "z")
    mask = [[v == 0 for v in range(cx.counts[0])], [False] * cx.counts[1], [False] * cx.counts[2]]
    assert relative_homology(cx, mask).betti == (0, 0, 1)


def test_malformed_scheme_is_rejected():
    with pytest.raises(MalformedInput):
        Scheme2(Graph(2, ((0, 1),)), (((0, 1), (0, 1)),))
    with pytest.raises(MalformedInput):
        Graph(2, ((0, 5),))
