"""Homology of chain complexes over Z2, Z and Q, absolute and relative."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import gf2
from .complex import ChainComplex, MalformedInput
from .smith import invariant_factors


@dataclass(frozen=True)
class HomologyResult:
    ring: str  # "z2" | "z" | "q"
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    def group(self, k: int) -> str:
        if k >= len(self.betti):
            return "0"
        unit = {"z2": "Z2", "z": "Z", "q": "Q"}[self.ring]
        parts = []
        r = self.betti[k]
        if r == 1:
            parts.append(unit)
        elif r > 1:
            parts.append(f"{unit}^{r}")
        parts += [f"Z/{d}" for d in self.torsion[k]]
        return "+".join(parts) if parts else "0"

    def __str__(self) -> str:
        return " ".join(f"H_{k}={self.group(k)}" for k in range(len(self.betti)))


def _ranks_gf2(cx: ChainComplex) -> list[int]:
    return [gf2.rank(cx.columns_gf2(k)) for k in range(len(cx.boundaries))]


def homology_z2(cx: ChainComplex) -> HomologyResult:
    """Z2 Betti numbers; an integer complex is reduced mod 2 first."""
    ranks = _ranks_gf2(cx)
    betti = []
    for k, c in enumerate(cx.counts):
        below = ranks[k - 1] if k >= 1 else 0
        above = ranks[k] if k < len(ranks) else 0
        betti.append(c - below - above)
    return HomologyResult("z2", tuple(betti), tuple(() for _ in betti))


def homology_z(cx: ChainComplex) -> HomologyResult:
    if cx.ring != "z":
        raise ValueError("integer homology needs an integer chain complex")
    ranks, tors = [], []
    for k in range(len(cx.boundaries)):
        r, t = invariant_factors(cx.matrix(k))
        ranks.append(r)
        tors.append(tuple(t))
    betti, torsion = [], []
    for k, c in enumerate(cx.counts):
        below = ranks[k - 1] if k >= 1 else 0
        above = ranks[k] if k < len(ranks) else 0
        betti.append(c - below - above)
        torsion.append(tors[k] if k < len(tors) else ())
    return HomologyResult("z", tuple(betti), tuple(torsion))


def homology_q(cx: ChainComplex) -> HomologyResult:
    h = homology_z(cx)
    return HomologyResult("q", h.betti, tuple(() for _ in h.betti))


def homology(cx: ChainComplex, ring: str) -> HomologyResult:
    if ring == "z2":
        return homology_z2(cx)
    if ring == "z":
        return homology_z(cx)
    if ring == "q":
        return homology_q(cx)
    raise ValueError(f"unknown ring {ring!r}")


def check_subcomplex(cx: ChainComplex, mask: Sequence[Sequence[bool]]) -> None:
    if len(mask) != len(cx.counts) or any(len(m) != c for m, c in zip(mask, cx.counts)):
        raise MalformedInput("subcomplex mask does not match the cell counts")
    for k, cols in enumerate(cx.boundaries):
        for j, col in enumerate(cols):
            if mask[k + 1][j]:
                for i in col:
                    if not mask[k][i]:
                        raise MalformedInput(
                            f"subcomplex not closed: cell {j} of dim {k + 1} is in, its face {i} is not"
                        )


def quotient_complex(cx: ChainComplex, mask: Sequence[Sequence[bool]]) -> ChainComplex:
    """C(X)/C(A): drop the cells of A and reindex."""
    check_subcomplex(cx, mask)
    keep = [[i for i in range(c) if not m[i]] for c, m in zip(cx.counts, mask)]
    new_index = [{old: new for new, old in enumerate(ks)} for ks in keep]
    maps = []
    for k, cols in enumerate(cx.boundaries):
        out = []
        for j in keep[k + 1]:
            out.append({new_index[k][i]: c for i, c in cols[j].items() if i in new_index[k]})
        maps.append(tuple(out))
    return ChainComplex(cx.ring, tuple(len(ks) for ks in keep), tuple(maps))


def relative_homology(cx: ChainComplex, mask: Sequence[Sequence[bool]], ring: str | None = None) -> HomologyResult:
    """H_k(X, A) for the subcomplex A given as a per-dimension boolean mask."""
    q = quotient_complex(cx, mask)
    return homology(q, ring or cx.ring)


def betti_euler_check(cx: ChainComplex) -> bool:
    h = homology_z(cx) if cx.ring == "z" else homology_z2(cx)
    lhs = sum((-1) ** k * b for k, b in enumerate(h.betti))
    return lhs == cx.euler_characteristic()


def universal_coefficients_agree(hz: HomologyResult, h2: HomologyResult) -> bool:
    """dim H_k(Z2) = rank H_k(Z) + #even torsion in H_k + #even torsion in H_{k-1}."""
    for k, d in enumerate(h2.betti):
        even_here = sum(1 for t in hz.torsion[k] if t % 2 == 0)
        even_below = sum(1 for t in hz.torsion[k - 1] if t % 2 == 0) if k else 0
        if d != hz.betti[k] + even_here + even_below:
            return False
    return True
