import random

import pytest
from hypothesis import given

from strategies import complexes, multigraphs, schemes, seeds
from topokit import formats
from topokit.complex import MalformedInput
from topokit.fixtures import abab_path, bundled_files, data_path, hopf_link, k5_drawing, complete_graph
from topokit.ribbon import RotationSystem
from topokit.vankampen import random_drawing
from topokit.random_inputs import random_simple_graph


def _rt(obj, suffix):
    return formats.PARSERS[suffix](formats.dump(obj, suffix))


@given(multigraphs())
def test_graph_roundtrip(g):
    assert _rt(g, ".graph") == g


@given(schemes())
def test_scheme_roundtrip(s):
    assert _rt(s, ".scheme") == s


@given(complexes())
def test_complex_roundtrip(sc):
    assert _rt(sc, ".cx").simplices == sc.simplices


@given(multigraphs(loops=True), seeds)
def test_rotation_roundtrip(g, seed):
    rng = random.Random(seed)
    rot = []
    for ds in g.darts_at():
        ds = list(ds)
        rng.shuffle(ds)
        rot.append(tuple(ds))
    r = RotationSystem(g, tuple(rot), tuple(rng.randrange(2) for _ in range(g.E)))
    assert _rt(r, ".rot") == r


@given(seeds)
def test_drawing_roundtrip(seed):
    rng = random.Random(seed)
    g = random_simple_graph(rng, rng.randint(2, 6), 0.5)
    d = random_drawing(g, rng, bends=2)
    assert _rt((g, d), ".draw") == (g, d)


def test_path_and_link_roundtrip():
    assert _rt(abab_path(), ".path") == abab_path()
    assert _rt(hopf_link(), ".link") == hopf_link()
    g = complete_graph(5)
    assert _rt((g, k5_drawing()), ".draw") == (g, k5_drawing())


def test_header_is_optional_and_comments_ignored():
    text = "# a triangle\nvertices 3\nedge 0 1 # first\nedge 1 2\nedge 2 0\n"
    assert formats.parse_graph(text) == formats.parse_graph("topokit-format 1\n" + text)
    with pytest.raises(MalformedInput, match="header"):
        formats.parse_graph("topokit-format 2\nvertices 1\n")


@pytest.mark.parametrize(
    "suffix, text, line",
    [
        (".graph", "vertices 2\nedge 0 x\n", 2),
        (".graph", "vertices 2\nedge 0 1\nvertex 3\n", 3),
        (".scheme", "vertices 1\nedge 0 0\nface 0*\n", 3),
        (".rot", "vertices 1\nedge 0 0\nrotation 5 0.0\n", 3),
        (".draw", "vertices 1\nvertex 0 1/0 2\n", 2),
        (".path", "point 0 0\npoint 1\n", 2),
        (".link", "point 0 0 0\n", 1),
    ],
)
def test_malformed_lines_are_reported(suffix, text, line):
    with pytest.raises(MalformedInput, match=f"line {line}"):
        formats.PARSERS[suffix](text)


def test_structural_errors():
    with pytest.raises(MalformedInput):
        formats.parse_graph("edge 0 1\n")
    with pytest.raises(MalformedInput):
        formats.parse_graph("vertices 2\nedge 0 3\n")
    with pytest.raises(MalformedInput):
        formats.parse_link("curve\npoint 0 0 0\npoint 1 0 0\npoint 0 1 0\n")
    with pytest.raises(MalformedInput):
        formats.parse_drawing("vertices 2\nvertex 0 0 0\n")


def test_load_dispatch(tmp_path):
    p = tmp_path / "x.txt"
    p.write_text("vertices 1\n")
    with pytest.raises(MalformedInput, match="unknown file type"):
        formats.load(p)
    q = tmp_path / "x.graph"
    q.write_bytes(b"\xff\xfe")
    with pytest.raises(MalformedInput):
        formats.load(q)


@pytest.mark.parametrize("name", bundled_files())
def test_bundled_files_parse_and_roundtrip(name):
    obj = formats.load(data_path(name))
    suffix = "." + name.rsplit(".", 1)[1]
    again = formats.PARSERS[suffix](formats.dump(obj, suffix))
    if suffix == ".cx":
        assert again.simplices == obj.simplices
    else:
        assert again == obj
