"""Exact rational predicates in the plane and in space.

Everything takes and returns ``Fraction`` (or int) coordinates; no floats.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Point = tuple[Fraction, Fraction]
Point3 = tuple[Fraction, Fraction, Fraction]


def rational(token) -> Fraction:
    """Parse ``p/q``, an integer or a finite decimal; reject floats."""
    if isinstance(token, float):
        raise TypeError("floats are not exact; pass a Fraction or a string")
    return Fraction(token)


def point(*coords) -> tuple[Fraction, ...]:
    return tuple(rational(c) for c in coords)


def sign(x) -> int:
    return (x > 0) - (x < 0)


# --- plane -------------------------------------------------------------------

def orient(a: Point, b: Point, c: Point) -> int:
    """+1 if a, b, c turn counterclockwise, -1 clockwise, 0 collinear."""
    return sign((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """Is p on the closed segment ab?"""
    if orient(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def segment_contact(a: Point, b: Point, c: Point, d: Point) -> str:
    """Classify how closed segments ab and cd meet.

    ``"none"``: disjoint.  ``"cross"``: a single transversal point interior to
    both.  ``"touch"``: anything else (shared endpoint, endpoint on the other
    segment, collinear overlap).
    """
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return "cross"
    if (o1 == 0 and on_segment(c, a, b)) or (o2 == 0 and on_segment(d, a, b)) \
            or (o3 == 0 and on_segment(a, c, d)) or (o4 == 0 and on_segment(b, c, d)):
        return "touch"
    return "none"


def crossing_point(a: Point, b: Point, c: Point, d: Point) -> Point:
    """Intersection point of the lines ab and cd (assumed not parallel)."""
    r = (b[0] - a[0], b[1] - a[1])
    s = (d[0] - c[0], d[1] - c[1])
    den = r[0] * s[1] - r[1] * s[0]
    t = Fraction((c[0] - a[0]) * s[1] - (c[1] - a[1]) * s[0]) / den
    return (a[0] + t * r[0], a[1] + t * r[1])


def point_in_polygon(p: Point, poly: Sequence[Point]) -> bool:
    """Even-odd rule for a closed polyline (may self-intersect).

    Raises ValueError when p lies on the polyline, where parity is undefined.
    """
    n = len(poly)
    inside = False
    for k in range(n):
        a, b = poly[k], poly[(k + 1) % n]
        if on_segment(p, a, b):
            raise ValueError(f"point {p} lies on the polygon")
        # half-open rule on y
        if (a[1] > p[1]) != (b[1] > p[1]):
            o = orient(a, b, p)
            if (o > 0) == (b[1] > a[1]):
                inside = not inside
    return inside


def angle_key(v: Point) -> tuple[int, Fraction]:
    """Sort key realizing counterclockwise angular order starting at the +x axis."""
    x, y = v
    if x == 0 and y == 0:
        raise ValueError("zero vector has no direction")
    # half-plane index, then a monotone function of the angle within it
    if y > 0 or (y == 0 and x > 0):
        half = 0
    else:
        half = 1
    # within a half-plane, -x/|.| is monotone; compare by slope-free key
    if half == 0:
        key = Fraction(-x, abs(x) + abs(y))
    else:
        key = Fraction(x, abs(x) + abs(y))
    return (half, key)


# --- space -------------------------------------------------------------------

def sub3(a: Point3, b: Point3) -> Point3:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def dot3(a: Point3, b: Point3):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def cross3(a: Point3, b: Point3) -> Point3:
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def orient3(a: Point3, b: Point3, c: Point3, d: Point3) -> int:
    """Sign of det(b - a, c - a, d - a)."""
    return sign(dot3(cross3(sub3(b, a), sub3(c, a)), sub3(d, a)))


def _drop_axis(n: Point3) -> int:
    """Coordinate to drop when projecting a plane with normal n."""
    absn = [abs(x) for x in n]
    return absn.index(max(absn))


def _project(p: Point3, axis: int) -> Point:
    return tuple(p[i] for i in range(3) if i != axis)  # type: ignore[return-value]


def segments_meet_3d(p: Point3, q: Point3, r: Point3, s: Point3) -> bool:
    """Do the closed segments pq and rs share a point?"""
    if orient3(p, q, r, s) != 0:
        return False
    n = cross3(sub3(q, p), sub3(s, r))
    if n == (0, 0, 0):
        n = cross3(sub3(q, p), sub3(r, p))
    if n == (0, 0, 0):
        # all four points on a line (or degenerate); project to a line axis
        d = sub3(q, p) if q != p else sub3(s, r)
        if d == (0, 0, 0):
            return p == r
        ax = max(range(3), key=lambda i: abs(d[i]))
        lo1, hi1 = sorted((p[ax], q[ax]))
        lo2, hi2 = sorted((r[ax], s[ax]))
        # collinear: overlap iff the intervals on the dominant axis overlap
        if cross3(sub3(r, p), d) != (0, 0, 0):
            return False
        return lo1 <= hi2 and lo2 <= hi1
    ax = _drop_axis(n)
    a, b, c, d2 = (_project(x, ax) for x in (p, q, r, s))
    return segment_contact(a, b, c, d2) != "none"


def segment_triangle(p: Point3, q: Point3, a: Point3, b: Point3, c: Point3) -> int | None:
    """Crossing of segment pq with triangle abc.

    Returns 0 if they are disjoint, +1/-1 for a transversal crossing through
    the open triangle at a point interior to the segment (sign of the
    segment direction against the normal (b - a) x (c - a)), and None for
    any degenerate contact.
    """
    sp, sq = orient3(a, b, c, p), orient3(a, b, c, q)
    if sp * sq > 0:
        return 0
    if sp == 0 or sq == 0:
        return None if segment_meets_triangle(p, q, a, b, c) else 0
    o1, o2, o3 = orient3(p, q, a, b), orient3(p, q, b, c), orient3(p, q, c, a)
    if (o1 > 0 and o2 > 0 and o3 > 0) or (o1 < 0 and o2 < 0 and o3 < 0):
        return 1 if sq > 0 else -1
    if (o1 >= 0 and o2 >= 0 and o3 >= 0) or (o1 <= 0 and o2 <= 0 and o3 <= 0):
        return None
    return 0


def _in_triangle_2d(x: Point, a: Point, b: Point, c: Point) -> bool:
    o1, o2, o3 = orient(a, b, x), orient(b, c, x), orient(c, a, x)
    return (o1 >= 0 and o2 >= 0 and o3 >= 0) or (o1 <= 0 and o2 <= 0 and o3 <= 0)


def segment_meets_triangle(p: Point3, q: Point3, a: Point3, b: Point3, c: Point3) -> bool:
    """Does the closed segment pq meet the closed triangle abc?"""
    n = cross3(sub3(b, a), sub3(c, a))
    if n == (0, 0, 0):
        return any(segments_meet_3d(p, q, u, v) for u, v in ((a, b), (b, c), (c, a)))
    sp, sq = orient3(a, b, c, p), orient3(a, b, c, q)
    if sp * sq > 0:
        return False
    ax = _drop_axis(n)
    ta, tb, tc = (_project(x, ax) for x in (a, b, c))
    if sp == 0 and sq == 0:
        pp, qq = _project(p, ax), _project(q, ax)
        if _in_triangle_2d(pp, ta, tb, tc) or _in_triangle_2d(qq, ta, tb, tc):
            return True
        return any(segment_contact(pp, qq, u, v) != "none" for u, v in ((ta, tb), (tb, tc), (tc, ta)))
    if sp == 0:
        return _in_triangle_2d(_project(p, ax), ta, tb, tc)
    if sq == 0:
        return _in_triangle_2d(_project(q, ax), ta, tb, tc)
    # proper crossing of the plane: intersection point in the closed triangle?
    o1, o2, o3 = orient3(p, q, a, b), orient3(p, q, b, c), orient3(p, q, c, a)
    return (o1 >= 0 and o2 >= 0 and o3 >= 0) or (o1 <= 0 and o2 <= 0 and o3 <= 0)
