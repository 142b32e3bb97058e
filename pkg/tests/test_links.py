import random
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from strategies import seeds
from topokit.complex import MalformedInput
from topokit.fixtures import hopf_link, unlink
from topokit.links import (
    InvalidMove,
    NotDisjoint,
    PolyLink,
    cone_linking_number,
    generic_directions,
    isotopy_moves_check,
    linking_number,
    linking_number_both,
)


def _random_curve(rng, n, scale=6):
    return tuple(tuple(Fraction(rng.randint(-scale, scale)) for _ in range(3)) for _ in range(n))


@st.composite
def random_links(draw):
    rng = random.Random(draw(seeds))
    for _ in range(50):
        try:
            return PolyLink(_random_curve(rng, rng.randint(3, 6)), _random_curve(rng, rng.randint(3, 6)))
        except (NotDisjoint, MalformedInput):
            continue
    assume(False)


def test_fixtures():
    assert abs(linking_number(hopf_link())) == 1
    assert linking_number(unlink()) == 0


@given(random_links())
def test_direction_independence(l):
    values = {linking_number(l, d) for d in generic_directions(l, count=4)}
    assert len(values) == 1


@given(random_links())
def test_cone_oracle_agrees(l):
    assert cone_linking_number(l) == linking_number(l)


@given(random_links())
def test_symmetry_and_reversal(l):
    lk = linking_number(l)
    assert linking_number(l.swapped()) == lk
    assert linking_number(l.reversed(1)) == -lk
    assert linking_number(l.reversed(2)) == -lk
    d = generic_directions(l)[0]
    assert linking_number_both(l, d) == (lk, lk)


def test_invalid_inputs():
    with pytest.raises(NotDisjoint):
        PolyLink(((0, 0, 0), (1, 0, 0), (0, 1, 0)), ((0, 0, 0), (0, 0, 1), (1, 1, 1)))
    with pytest.raises(NotDisjoint):
        PolyLink(((0, 0, 0), (2, 0, 0), (1, 0, 0)), ((5, 5, 5), (6, 5, 5), (5, 6, 5)))
    with pytest.raises(MalformedInput):
        PolyLink(((0, 0, 0), (1, 0, 0)), ((5, 5, 5), (6, 5, 5), (5, 6, 5)))
    with pytest.raises(ValueError):
        linking_number(hopf_link(), direction=(0, 0, 1))


def test_isotopy_moves_keep_linking_number():
    l = hopf_link()
    moves = [
        ("subdivide", 0, 0),
        ("move", 0, 1, (1, -1, 0)),
        ("subdivide", 1, 2),
        ("move", 1, 3, (1, 4, 2)),
        ("move", 0, 0, (-1, -1, 0)),
    ]
    assert isotopy_moves_check(l, moves)


def test_slide_through_other_curve_is_rejected():
    l = hopf_link()
    # dragging vertex (2,0,0) across to x=0 sweeps through curve 2's edge at x=1
    with pytest.raises(InvalidMove) as info:
        isotopy_moves_check(l, [("subdivide", 0, 0), ("move", 0, 2, (0, 0, 0))])
    assert info.value.index == 1
    with pytest.raises(InvalidMove):
        isotopy_moves_check(l, [("twist", 0, 0)])


@given(random_links(), seeds)
def test_random_valid_slides(l, seed):
    rng = random.Random(seed)
    moves = []
    curves = [list(l.curve1), list(l.curve2)]
    for _ in range(4):
        c = rng.randrange(2)
        k = rng.randrange(len(curves[c]))
        p = curves[c][k]
        target = tuple(x + Fraction(rng.randint(-2, 2), 3) for x in p)
        moves.append(("move", c, k, target))
    try:
        ok = isotopy_moves_check(l, moves)
    except InvalidMove:
        assume(False)
    assert ok
