"""Genus of every connected graph in the atlas up to N vertices.

Compares the pruned exhaustive search with the interlacement-rank method
and prints a histogram of genera per vertex count.

    python3 scripts/genus_survey.py --max-vertices 6
"""

import argparse
import time
from collections import Counter

import networkx as nx

from topokit.complex import Graph
from topokit.ribbon import genus_exhaustive, mohar_genus, rotation_count


def atlas_graphs(max_v: int):
    for G in nx.graph_atlas_g()[1:]:
        if G.number_of_nodes() <= max_v and nx.is_connected(G):
            yield Graph(G.number_of_nodes(), tuple(G.edges()))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-vertices", type=int, default=6)
    ap.add_argument("--mohar-limit", type=int, default=20000, help="skip the rank method above this many rotations")
    args = ap.parse_args()

    hist: dict[int, Counter] = {}
    checked = skipped = 0
    t0 = time.perf_counter()
    for g in atlas_graphs(args.max_vertices):
        genus = genus_exhaustive(g, budget=10**9)
        if rotation_count(g) <= args.mohar_limit:
            m = mohar_genus(g, budget=10**9)
            if m != genus:
                raise SystemExit(f"disagreement on {g.edges}: exhaustive {genus}, rank {m}")
            checked += 1
        else:
            skipped += 1
        hist.setdefault(g.V, Counter())[genus] += 1
    for n in sorted(hist):
        row = "  ".join(f"g={k}:{v}" for k, v in sorted(hist[n].items()))
        print(f"V={n}  {row}")
    print(f"rank method agreed on {checked} graphs ({skipped} skipped) in {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
