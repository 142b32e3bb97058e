"""Dense GF(2) linear algebra on Python-int bitsets.

A vector of length n is an ``int`` whose bit ``i`` is coordinate ``i``.
A matrix is a list of such ints (rows, or columns, depending on the caller).
"""

from __future__ import annotations

from typing import Iterable, Sequence


def parity(x: int) -> int:
    return bin(x).count("1") & 1


def dot(x: int, y: int) -> int:
    return parity(x & y)


def pack(bits: Iterable[int]) -> int:
    """Pack an iterable of 0/1 (or any ints, taken mod 2) into a bitset."""
    v = 0
    for i, b in enumerate(bits):
        if b & 1:
            v |= 1 << i
    return v


def unpack(v: int, n: int) -> list[int]:
    return [(v >> i) & 1 for i in range(n)]


def support(v: int) -> list[int]:
    out = []
    i = 0
    while v:
        if v & 1:
            out.append(i)
        v >>= 1
        i += 1
    return out


def rank(vectors: Iterable[int]) -> int:
    """Rank of the span of ``vectors``."""
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = v
                break
            v ^= b
    return len(basis)


class Eliminator:
    """Incremental echelon basis that remembers how each basis vector was built.

    ``add(v)`` inserts a generator; ``express(t)`` returns a bitset over
    generator indices whose XOR equals ``t``, or ``None`` if ``t`` is outside
    the span.
    """

    def __init__(self) -> None:
        self._basis: dict[int, tuple[int, int]] = {}  # pivot -> (vector, combo)
        self.count = 0

    def add(self, v: int) -> bool:
        combo = 1 << self.count
        self.count += 1
        while v:
            top = v.bit_length() - 1
            hit = self._basis.get(top)
            if hit is None:
                self._basis[top] = (v, combo)
                return True
            v ^= hit[0]
            combo ^= hit[1]
        return False

    @property
    def rank(self) -> int:
        return len(self._basis)

    def reduce(self, t: int) -> tuple[int, int]:
        combo = 0
        while t:
            top = t.bit_length() - 1
            hit = self._basis.get(top)
            if hit is None:
                return t, combo
            t ^= hit[0]
            combo ^= hit[1]
        return 0, combo

    def express(self, t: int) -> int | None:
        rest, combo = self.reduce(t)
        return combo if rest == 0 else None


def solve(generators: Sequence[int], target: int) -> list[int] | None:
    """Indices of a subset of ``generators`` XOR-ing to ``target``, or None."""
    el = Eliminator()
    for g in generators:
        el.add(g)
    combo = el.express(target)
    return None if combo is None else support(combo)


def nullspace(rows: Sequence[int], ncols: int) -> list[int]:
    """Basis of ``{x : dot(r, x) == 0 for every r in rows}`` inside GF(2)^ncols."""
    # reduced row echelon form keyed by pivot column (lowest set bit)
    pivots: dict[int, int] = {}
    for r in rows:
        for p, b in pivots.items():
            if (r >> p) & 1:
                r ^= b
        if not r:
            continue
        p = (r & -r).bit_length() - 1
        for q in list(pivots):
            if (pivots[q] >> p) & 1:
                pivots[q] ^= r
        pivots[p] = r
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        x = 1 << free
        for p, r in pivots.items():
            if (r >> free) & 1:
                x |= 1 << p
        basis.append(x)
    return basis


def certify_membership(generators: Sequence[int], target: int, ncols: int):
    """Decide whether ``target`` lies in the span of ``generators``.

    Returns ``(True, indices)`` with a subset of generators summing to the
    target, or ``(False, functional)`` where ``functional`` annihilates every
    generator and pairs to 1 with the target.
    """
    hit = solve(generators, target)
    if hit is not None:
        return True, hit
    for y in nullspace(generators, ncols):
        if dot(y, target):
            return False, y
    raise AssertionError("target outside span but no separating functional")


def row_space_basis(vectors: Iterable[int]) -> list[int]:
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = v
                break
            v ^= b
    return list(basis.values())
