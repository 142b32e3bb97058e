import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import seeds
from topokit import gf2
from topokit.complex import Graph, Scheme2, subdivide_edge, subdivide_face
from topokit.fixtures import (
    klein_bottle,
    mobius_band,
    nonorientable_surface,
    orientable_surface,
    scheme_from_words,
    surface_fixtures,
    tetrahedron_scheme,
)
from topokit.surfaces import (
    NotASurface,
    classify_components,
    classify_surface,
    dual_scheme,
    face_boundaries_z2,
    intersection_form,
    is_surface,
    orientability,
    w1_self_pairing_check,
)

EXPECTED = {
    "orientable_g0": (True, 0, 0),
    "orientable_g1": (True, 1, 0),
    "orientable_g2": (True, 2, 0),
    "orientable_g3": (True, 3, 0),
    "nonorientable_m1": (False, 0, 1),
    "nonorientable_m2": (False, 0, 2),
    "nonorientable_m3": (False, 0, 3),
    "nonorientable_m4": (False, 0, 4),
    "klein": (False, 0, 2),
    "tetrahedron": (True, 0, 0),
}


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_fixture_classification(name):
    c = classify_surface(surface_fixtures()[name])
    assert (c.orientable, c.genus, c.crosscaps) == EXPECTED[name]
    assert c.boundary == 0


def test_surfaces_with_boundary():
    m = classify_surface(mobius_band())
    assert (m.orientable, m.crosscaps, m.boundary, m.chi) == (False, 1, 1, 0)
    c = classify_surface(scheme_from_words(["abABcdCDe"]))
    assert (c.orientable, c.genus, c.boundary, c.chi) == (True, 2, 1, -3)
    disk = classify_surface(scheme_from_words(["abc"]))
    assert (disk.orientable, disk.genus, disk.boundary) == (True, 0, 1)


def test_surface_string():
    assert str(classify_surface(klein_bottle())) == "surface orientable=no crosscaps=2 boundary=0 chi=0"


def test_non_surfaces_are_detected():
    # an edge in three face slots
    g = Graph(1, ((0, 0),))
    v = is_surface(Scheme2(g, (((0, 1),), ((0, 1),), ((0, 1),))))
    assert not v.is_surface and v.edge == 0
    # two spheres glued at a vertex: disconnected link
    s = scheme_from_words(["aA", "bB"])
    pinched = Scheme2(Graph(2, ((0, 1), (0, 1))), s.faces)
    assert not is_surface(pinched).is_surface
    # isolated vertex
    sphere = scheme_from_words(["aA"])
    extra = Scheme2(Graph(sphere.graph.V + 1, sphere.graph.edges), sphere.faces)
    assert is_surface(extra).reason == "isolated vertex"
    with pytest.raises(NotASurface):
        classify_surface(pinched)


def _check_certificate(s):
    o = orientability(s)
    if o.orientable:
        return
    cert = o.certificate
    red = gf2.pack(1 if e in o.red else 0 for e in range(s.graph.E))
    assert gf2.dot(cert, red) == 1
    assert all(gf2.dot(cert, b) == 0 for b in face_boundaries_z2(s))
    for e in is_surface(s).boundary_edges:
        assert not (cert >> e) & 1


@pytest.mark.parametrize("s", [klein_bottle(), mobius_band(), nonorientable_surface(3)] , ids=["klein", "mobius", "m3"])
def test_nonorientability_certificate(s):
    assert not orientability(s).orientable
    _check_certificate(s)


def random_subdivision(s, rng, steps):
    for _ in range(steps):
        if rng.random() < 0.5 or not any(len(f) >= 4 for f in s.faces):
            s = subdivide_edge(s, rng.randrange(s.graph.E))
        else:
            k = rng.choice([i for i, f in enumerate(s.faces) if len(f) >= 4])
            n = len(s.faces[k])
            i = rng.randrange(n - 2)
            j = rng.randrange(i + 2, n if i else n - 1)
            s = subdivide_face(s, k, i, j)
    return s


@given(st.sampled_from(sorted(EXPECTED)), seeds, st.integers(1, 6))
def test_subdivision_invariance(name, seed, steps):
    s = surface_fixtures()[name]
    t = random_subdivision(s, random.Random(seed), steps)
    assert classify_surface(t) == classify_surface(s)
    _check_certificate(t)


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_dual_has_same_type(name):
    s = surface_fixtures()[name]
    d = dual_scheme(s)
    assert (d.graph.V, d.graph.E, d.F) == (s.F, s.graph.E, s.graph.V)
    assert classify_surface(d) == classify_surface(s)


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_intersection_form(name):
    s = surface_fixtures()[name]
    c = classify_surface(s)
    f = intersection_form(s)
    n = 2 * c.genus + c.crosscaps
    assert len(f.basis) == n and f.rank == n
    assert all(f.matrix[i][j] == f.matrix[j][i] for i in range(n) for j in range(n))
    # the form is even exactly when the surface is orientable
    assert all(f.matrix[i][i] == 0 for i in range(n)) == c.orientable
    assert w1_self_pairing_check(s)


def test_components_classified_separately():
    s = scheme_from_words(["abAB", "cc"])
    with pytest.raises(NotASurface):
        classify_surface(s)
    kinds = sorted((c.orientable, c.genus, c.crosscaps) for c in classify_components(s))
    assert kinds == [(False, 0, 1), (True, 1, 0)]


def test_tetrahedron_orientations_consistent():
    o = orientability(tetrahedron_scheme())
    assert o.orientable and o.red == () and o.certificate is None
