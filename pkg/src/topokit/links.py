"""Linking numbers of two disjoint closed polygons in R^3.

The primary computation projects along a generic rational direction and
sums the signs of the crossings where curve 1 passes over curve 2.  The
cone over curve 1 from a generic apex gives an independent count: its
signed intersections with curve 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .complex import MalformedInput
from .geometry import (
    Point3,
    cross3,
    dot3,
    segment_contact,
    segment_meets_triangle,
    segment_triangle,
    segments_meet_3d,
    sign,
    sub3,
)


class NotDisjoint(ValueError):
    """The two curves meet, or a curve is not a simple closed polygon."""


class InvalidMove(ValueError):
    def __init__(self, index: int, reason: str):
        super().__init__(f"move {index}: {reason}")
        self.index = index


def _edges(curve):
    n = len(curve)
    return [(curve[k], curve[(k + 1) % n]) for k in range(n)]


def check_simple(curve: Sequence[Point3], name: str = "curve") -> None:
    n = len(curve)
    if n < 3:
        raise MalformedInput(f"{name} needs at least 3 points")
    segs = _edges(curve)
    for k, (p, q) in enumerate(segs):
        if p == q:
            raise NotDisjoint(f"{name} segment {k} has zero length")
    for i in range(n):
        for j in range(i + 1, n):
            p, q = segs[i]
            r, s = segs[j]
            if j == i + 1 or (i == 0 and j == n - 1):
                # adjacent: share one vertex and must not fold back over each other
                shared = q if j == i + 1 else p
                a = p if j == i + 1 else q
                b = s if j == i + 1 else r
                if cross3(sub3(a, shared), sub3(b, shared)) == (0, 0, 0) and dot3(sub3(a, shared), sub3(b, shared)) > 0:
                    raise NotDisjoint(f"{name} segments {i} and {j} overlap")
                continue
            if segments_meet_3d(p, q, r, s):
                raise NotDisjoint(f"{name} segments {i} and {j} intersect")


@dataclass(frozen=True)
class PolyLink:
    curve1: tuple[Point3, ...]
    curve2: tuple[Point3, ...]

    def __post_init__(self) -> None:
        c1 = tuple(tuple(Fraction(x) for x in p) for p in self.curve1)
        c2 = tuple(tuple(Fraction(x) for x in p) for p in self.curve2)
        object.__setattr__(self, "curve1", c1)
        object.__setattr__(self, "curve2", c2)
        for c in (c1, c2):
            if any(len(p) != 3 for p in c):
                raise MalformedInput("points must have three coordinates")
        check_simple(c1, "curve 1")
        check_simple(c2, "curve 2")
        for i, (p, q) in enumerate(_edges(c1)):
            for j, (r, s) in enumerate(_edges(c2)):
                if segments_meet_3d(p, q, r, s):
                    raise NotDisjoint(f"curve 1 segment {i} meets curve 2 segment {j}")

    def reversed(self, which: int = 2) -> "PolyLink":
        if which == 1:
            return PolyLink(tuple(reversed(self.curve1)), self.curve2)
        return PolyLink(self.curve1, tuple(reversed(self.curve2)))

    def swapped(self) -> "PolyLink":
        return PolyLink(self.curve2, self.curve1)


def _frame(d: Point3) -> tuple[Point3, Point3]:
    axis = min(range(3), key=lambda i: abs(d[i]))
    e = tuple(Fraction(int(i == axis)) for i in range(3))
    u = cross3(d, e)
    w = cross3(d, u)
    return u, w


def candidate_directions(limit: int = 4):
    """Deterministic rational directions, small ones first."""
    seen = set()
    for m in range(1, limit + 1):
        for v in product(range(-m, m + 1), repeat=3):
            if max(abs(x) for x in v) != m or v in seen:
                continue
            seen.add(v)
            yield tuple(Fraction(x) for x in v)


def projection_crossings(l: PolyLink, d: Point3) -> list[tuple[int, int]] | None:
    """Crossings of the two projected curves as (over, sign), or None if d is not generic.

    ``over`` is 1 when curve 1 is nearer the viewer (who looks along -d).
    The sign is that of det(t_over, t_under, d).
    """
    u, w = _frame(d)

    def proj(p):
        return (dot3(p, u), dot3(p, w))

    for c in (l.curve1, l.curve2):
        for p, q in _edges(c):
            if proj(p) == proj(q):
                return None  # d is parallel to a segment
    out = []
    for p, q in _edges(l.curve1):
        for r, s in _edges(l.curve2):
            a, b, c, e = proj(p), proj(q), proj(r), proj(s)
            kind = segment_contact(a, b, c, e)
            if kind == "none":
                continue
            if kind == "touch":
                return None
            # parameters along each segment; the 3D points differ by a multiple of d
            t1, t2 = sub3(q, p), sub3(s, r)
            r2 = (b[0] - a[0], b[1] - a[1])
            s2 = (e[0] - c[0], e[1] - c[1])
            den = r2[0] * s2[1] - r2[1] * s2[0]
            lam = ((c[0] - a[0]) * s2[1] - (c[1] - a[1]) * s2[0]) / den
            mu = ((c[0] - a[0]) * r2[1] - (c[1] - a[1]) * r2[0]) / den
            x1 = tuple(p[i] + lam * t1[i] for i in range(3))
            x2 = tuple(r[i] + mu * t2[i] for i in range(3))
            h = dot3(sub3(x1, x2), d)
            if h == 0:
                raise NotDisjoint("curves intersect")
            over = 1 if h > 0 else 2
            to, tu = (t1, t2) if over == 1 else (t2, t1)
            out.append((over, sign(dot3(cross3(to, tu), d))))
    return out


def generic_directions(l: PolyLink, count: int = 1, limit: int = 6) -> list[Point3]:
    found = []
    for d in candidate_directions(limit):
        if projection_crossings(l, d) is not None:
            found.append(d)
            if len(found) == count:
                break
    return found


def linking_number(l: PolyLink, direction: Point3 | None = None) -> int:
    """Signed count of crossings with curve 1 over curve 2 in a generic projection."""
    if direction is None:
        dirs = generic_directions(l)
        if not dirs:
            raise RuntimeError("no generic projection direction found")
        direction = dirs[0]
    cr = projection_crossings(l, tuple(Fraction(x) for x in direction))
    if cr is None:
        raise ValueError(f"direction {direction} is not generic for this link")
    return sum(s for over, s in cr if over == 1)


def linking_number_both(l: PolyLink, direction: Point3) -> tuple[int, int]:
    """(sum over curve-1-over crossings, sum over curve-2-over crossings); they agree."""
    cr = projection_crossings(l, direction)
    if cr is None:
        raise ValueError("direction is not generic")
    return sum(s for o, s in cr if o == 1), sum(s for o, s in cr if o == 2)


def cone_intersections(l: PolyLink, apex: Point3) -> int | None:
    """Signed intersections of curve 2 with the cone over curve 1, or None if degenerate."""
    total = 0
    for p, q in _edges(l.curve1):
        for r, s in _edges(l.curve2):
            x = segment_triangle(r, s, apex, p, q)
            if x is None:
                return None
            total += x
    return total


def cone_apexes(l: PolyLink, count: int = 1, limit: int = 6) -> list[Point3]:
    pts = l.curve1 + l.curve2
    lo = [min(p[i] for p in pts) for i in range(3)]
    hi = [max(p[i] for p in pts) for i in range(3)]
    found = []
    for d in candidate_directions(limit):
        # spread candidates around the bounding box, off the integer lattice
        apex = tuple(lo[i] + (hi[i] - lo[i] + 1) * d[i] / 3 + Fraction(1, 7 + i) for i in range(3))
        if cone_intersections(l, apex) is not None:
            found.append(apex)
            if len(found) == count:
                break
    return found


def cone_linking_number(l: PolyLink, apex: Point3 | None = None) -> int:
    """Linking number from the cone oracle (same sign convention as the projection)."""
    if apex is None:
        apexes = cone_apexes(l)
        if not apexes:
            raise RuntimeError("no generic apex found")
        apex = apexes[0]
    x = cone_intersections(l, apex)
    if x is None:
        raise ValueError("apex is not generic")
    return x


# --- isotopy moves ---------------------------------------------------------------

def _apply(curves: list[list[Point3]], move) -> tuple[Point3 | None, tuple]:
    kind = move[0]
    if kind == "subdivide":
        _, c, k = move
        curve = curves[c]
        p, q = curve[k], curve[(k + 1) % len(curve)]
        curve.insert(k + 1, tuple((p[i] + q[i]) / 2 for i in range(3)))
        return None, ()
    if kind == "move":
        _, c, k, target = move
        curve = curves[c]
        old = curve[k]
        new = tuple(Fraction(x) for x in target)
        prev, nxt = curve[k - 1], curve[(k + 1) % len(curve)]
        curve[k] = new
        return old, ((prev, old, new), (nxt, old, new))
    raise MalformedInput(f"unknown move {kind!r}")


def isotopy_moves_check(l: PolyLink, moves: Sequence[tuple]) -> bool:
    """Apply moves and report whether the linking number stayed constant.

    Moves are ``("subdivide", curve, segment)`` (insert the midpoint) and
    ``("move", curve, vertex, point)`` (slide a vertex in a straight line).
    A slide is accepted only if the triangles swept by its two segments
    avoid the other curve; otherwise InvalidMove names the move.
    """
    curves = [list(l.curve1), list(l.curve2)]
    base = linking_number(l)
    for idx, move in enumerate(moves):
        if move[0] not in ("subdivide", "move") or move[1] not in (0, 1):
            raise InvalidMove(idx, f"bad move {move!r}")
        trial = [list(curves[0]), list(curves[1])]
        try:
            _, swept = _apply(trial, move)
        except (IndexError, ValueError) as err:
            raise InvalidMove(idx, str(err)) from None
        other = trial[1 - move[1]]
        for tri in swept:
            for r, s in _edges(other):
                if segment_meets_triangle(r, s, *tri):
                    raise InvalidMove(idx, "the slide sweeps through the other curve")
        try:
            cur = PolyLink(tuple(trial[0]), tuple(trial[1]))
        except (NotDisjoint, MalformedInput) as err:
            raise InvalidMove(idx, str(err)) from None
        curves = trial
        if linking_number(cur) != base:
            return False
    return True
