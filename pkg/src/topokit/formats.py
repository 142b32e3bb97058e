"""Line-oriented text formats.

Every file may start with ``topokit-format 1``; writers always emit it.
``#`` starts a comment.  Rationals are written ``p/q`` or as integers.

    .graph   vertices N / edge a b
    .scheme  a graph block, then face 0+ 3- ...
    .cx      one simplex per line as vertex ids
    .rot     a graph block, then rotation v e.s e.s ... / twist e
    .draw    a graph block, then vertex v x y / poly e x y x y ...
    .path    point x y
    .link    curve / point x y z  (two curves)
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .complex import Graph, MalformedInput, Scheme2, SimplicialComplex
from .links import PolyLink
from .ribbon import RotationSystem
from .vankampen import Drawing

HEADER = "topokit-format 1"
SUFFIXES = (".graph", ".scheme", ".cx", ".rot", ".draw", ".path", ".link")


def _lines(text: str):
    first = True
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if first and line.startswith("topokit-format"):
            first = False
            if line != HEADER:
                raise MalformedInput(f"line {no}: unsupported format header {line!r}")
            continue
        first = False
        yield no, line.split()


def _int(tok: str, no: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise MalformedInput(f"line {no}: expected an integer, got {tok!r}") from None


def _rat(tok: str, no: int) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise MalformedInput(f"line {no}: expected a rational, got {tok!r}") from None


def _fmt(x: Fraction) -> str:
    return str(Fraction(x))


# --- graph-based formats --------------------------------------------------------

def _parse_graph_block(text: str, extra: tuple[str, ...]):
    n = None
    edges = []
    rest = []
    for no, tok in _lines(text):
        key = tok[0]
        if key == "vertices":
            if n is not None or len(tok) != 2:
                raise MalformedInput(f"line {no}: expected a single 'vertices N'")
            n = _int(tok[1], no)
        elif key == "edge":
            if len(tok) != 3:
                raise MalformedInput(f"line {no}: expected 'edge a b'")
            edges.append((_int(tok[1], no), _int(tok[2], no)))
        elif key in extra:
            rest.append((no, tok))
        else:
            raise MalformedInput(f"line {no}: unknown keyword {key!r}")
    if n is None:
        raise MalformedInput("missing 'vertices N' line")
    return Graph(n, tuple(edges)), rest


def _graph_lines(g: Graph) -> list[str]:
    return [HEADER, f"vertices {g.V}"] + [f"edge {a} {b}" for a, b in g.edges]


def parse_graph(text: str) -> Graph:
    return _parse_graph_block(text, ())[0]


def dump_graph(g: Graph) -> str:
    return "\n".join(_graph_lines(g)) + "\n"


def _face_dart(tok: str, no: int):
    if len(tok) < 2 or tok[-1] not in "+-":
        raise MalformedInput(f"line {no}: dart {tok!r} must look like 3+ or 3-")
    return (_int(tok[:-1], no), 1 if tok[-1] == "+" else -1)


def parse_scheme(text: str) -> Scheme2:
    g, rest = _parse_graph_block(text, ("face",))
    faces = [tuple(_face_dart(t, no) for t in tok[1:]) for no, tok in rest]
    return Scheme2(g, tuple(faces))


def dump_scheme(s: Scheme2) -> str:
    lines = _graph_lines(s.graph)
    for f in s.faces:
        lines.append("face " + " ".join(f"{e}{'+' if d > 0 else '-'}" for e, d in f))
    return "\n".join(lines) + "\n"


def parse_rotation(text: str) -> RotationSystem:
    g, rest = _parse_graph_block(text, ("rotation", "twist"))
    rot: list[tuple | None] = [None] * g.V
    twist = [0] * g.E
    for no, tok in rest:
        if tok[0] == "twist":
            for t in tok[1:]:
                e = _int(t, no)
                if not 0 <= e < g.E:
                    raise MalformedInput(f"line {no}: no edge {e}")
                twist[e] = 1
            continue
        v = _int(tok[1], no) if len(tok) > 1 else -1
        if not 0 <= v < g.V or rot[v] is not None:
            raise MalformedInput(f"line {no}: bad or repeated rotation vertex")
        darts = []
        for t in tok[2:]:
            e, _, s = t.partition(".")
            darts.append((_int(e, no), _int(s, no)))
        rot[v] = tuple(darts)
    default = g.darts_at()
    full = tuple(r if r is not None else tuple(default[v]) for v, r in enumerate(rot))
    return RotationSystem(g, full, tuple(twist))


def dump_rotation(r: RotationSystem) -> str:
    lines = _graph_lines(r.graph)
    for v, ds in enumerate(r.rotation):
        lines.append(f"rotation {v} " + " ".join(f"{e}.{s}" for e, s in ds) if ds else f"rotation {v}")
    tw = [str(e) for e, t in enumerate(r.twist) if t]
    if tw:
        lines.append("twist " + " ".join(tw))
    return "\n".join(lines) + "\n"


def parse_drawing(text: str) -> tuple[Graph, Drawing]:
    g, rest = _parse_graph_block(text, ("vertex", "poly"))
    pos: list = [None] * g.V
    polys: dict[int, tuple] = {}
    for no, tok in rest:
        if tok[0] == "vertex":
            if len(tok) != 4:
                raise MalformedInput(f"line {no}: expected 'vertex v x y'")
            v = _int(tok[1], no)
            if not 0 <= v < g.V:
                raise MalformedInput(f"line {no}: no vertex {v}")
            pos[v] = (_rat(tok[2], no), _rat(tok[3], no))
        else:
            e = _int(tok[1], no)
            nums = [_rat(t, no) for t in tok[2:]]
            if not 0 <= e < g.E or len(nums) % 2:
                raise MalformedInput(f"line {no}: expected 'poly e x y x y ...'")
            polys[e] = tuple(zip(nums[::2], nums[1::2]))
    if any(p is None for p in pos):
        raise MalformedInput("every vertex needs a position")
    lines = tuple(polys.get(e, (pos[a], pos[b])) for e, (a, b) in enumerate(g.edges))
    return g, Drawing(tuple(pos), lines)


def dump_drawing(g: Graph, d: Drawing) -> str:
    lines = _graph_lines(g)
    for v, (x, y) in enumerate(d.positions):
        lines.append(f"vertex {v} {_fmt(x)} {_fmt(y)}")
    for e, pl in enumerate(d.polylines):
        lines.append(f"poly {e} " + " ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in pl))
    return "\n".join(lines) + "\n"


# --- other formats ---------------------------------------------------------------

def parse_complex(text: str) -> SimplicialComplex:
    tops = [tuple(_int(t, no) for t in tok) for no, tok in _lines(text)]
    return SimplicialComplex.from_maximal(tops)


def dump_complex(sc: SimplicialComplex) -> str:
    """Write the maximal simplices (those not a face of a larger one)."""
    all_s = [s for d in sc.simplices for s in d]
    sets = [set(s) for s in all_s]
    tops = [s for s, ss in zip(all_s, sets) if not any(ss < t for t in sets)]
    return "\n".join([HEADER] + [" ".join(map(str, s)) for s in tops]) + "\n"


def parse_path(text: str) -> list[tuple[Fraction, Fraction]]:
    pts = []
    for no, tok in _lines(text):
        if tok[0] != "point" or len(tok) != 3:
            raise MalformedInput(f"line {no}: expected 'point x y'")
        pts.append((_rat(tok[1], no), _rat(tok[2], no)))
    return pts


def dump_path(pts) -> str:
    return "\n".join([HEADER] + [f"point {_fmt(x)} {_fmt(y)}" for x, y in pts]) + "\n"


def parse_link(text: str) -> PolyLink:
    curves: list[list] = []
    for no, tok in _lines(text):
        if tok[0] == "curve" and len(tok) == 1:
            curves.append([])
        elif tok[0] == "point" and len(tok) == 4:
            if not curves:
                raise MalformedInput(f"line {no}: point before the first 'curve'")
            curves[-1].append(tuple(_rat(t, no) for t in tok[1:]))
        else:
            raise MalformedInput(f"line {no}: expected 'curve' or 'point x y z'")
    if len(curves) != 2:
        raise MalformedInput(f"a link file needs exactly two curves, found {len(curves)}")
    return PolyLink(tuple(curves[0]), tuple(curves[1]))


def dump_link(l: PolyLink) -> str:
    lines = [HEADER]
    for c in (l.curve1, l.curve2):
        lines.append("curve")
        lines += [f"point {' '.join(_fmt(x) for x in p)}" for p in c]
    return "\n".join(lines) + "\n"


PARSERS = {
    ".graph": parse_graph,
    ".scheme": parse_scheme,
    ".cx": parse_complex,
    ".rot": parse_rotation,
    ".draw": parse_drawing,
    ".path": parse_path,
    ".link": parse_link,
}


def load(path) -> object:
    p = Path(path)
    parser = PARSERS.get(p.suffix)
    if parser is None:
        raise MalformedInput(f"unknown file type {p.suffix!r}; expected one of {', '.join(SUFFIXES)}")
    try:
        text = p.read_text(encoding="utf-8")
    except UnicodeDecodeError:
        raise MalformedInput(f"{p} is not UTF-8 text") from None
    return parser(text)


def dump(obj, suffix: str) -> str:
    if suffix == ".graph":
        return dump_graph(obj)
    if suffix == ".scheme":
        return dump_scheme(obj)
    if suffix == ".cx":
        return dump_complex(obj)
    if suffix == ".rot":
        return dump_rotation(obj)
    if suffix == ".draw":
        return dump_drawing(*obj)
    if suffix == ".path":
        return dump_path(obj)
    if suffix == ".link":
        return dump_link(obj)
    raise ValueError(f"unknown suffix {suffix!r}")
