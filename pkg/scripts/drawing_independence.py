"""Cocycle-class coordinates of the crossing cochain across random drawings.

For each graph, draws it many times with random bends and prints the set
of class coordinates seen (one element means the class is drawing-free).

    python3 scripts/drawing_independence.py --drawings 50
"""

import argparse
import random

from topokit import fixtures as fx
from topokit.vankampen import annihilator_basis, class_coordinates, deleted_square, obstruction_cocycle, random_drawing


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--drawings", type=int, default=30)
    ap.add_argument("--bends", type=int, default=2)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    graphs = {
        "K4": fx.complete_graph(4),
        "K5": fx.complete_graph(5),
        "K3,3": fx.complete_bipartite(3, 3),
        "Petersen": fx.petersen(),
    }
    for name, g in graphs.items():
        ds = deleted_square(g)
        basis = annihilator_basis(ds)
        seen = set()
        crossings = []
        for _ in range(args.drawings):
            nu = obstruction_cocycle(g, random_drawing(g, rng, bends=args.bends), ds=ds)
            seen.add(class_coordinates(ds, nu, basis))
            crossings.append(sum(nu))
        coords = ", ".join("".join(map(str, c)) or "-" for c in sorted(seen))
        print(f"{name:9s} cells={len(ds.cells2):3d} classes seen={len(seen)} [{coords}]"
              f" crossing pairs {min(crossings)}..{max(crossings)}")


if __name__ == "__main__":
    main()
