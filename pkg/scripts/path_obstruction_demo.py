"""Approximability of random walks on a small plane graph.

Each walk is checked with the cocycle obstruction and with a brute-force
search over lane orders; the script reports agreement and a few
non-approximable examples.

    python3 scripts/path_obstruction_demo.py --walks 500 --seed 1
"""

import argparse
import random

from topokit.vankampen import approximable_bruteforce, path_image, path_obstruction

# square with outward whiskers at the corners and one inward whisker
SITES = {0: (0, 0), 1: (2, 0), 2: (2, 2), 3: (0, 2), 4: (-1, -1), 5: (3, -1), 6: (3, 3), 7: (-1, 3), 8: (1, 1)}
MOVES = {0: (1, 3, 4), 1: (0, 2, 5), 2: (1, 3, 6, 8), 3: (2, 0, 7), 4: (0,), 5: (1,), 6: (2,), 7: (3,), 8: (2,)}


def random_walk(rng: random.Random, length: int) -> list[int]:
    v = rng.choice(sorted(SITES))
    walk = [v]
    for _ in range(length - 1):
        v = rng.choice(MOVES[v])
        walk.append(v)
    return walk


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--walks", type=int, default=300)
    ap.add_argument("--max-length", type=int, default=14)
    ap.add_argument("--budget", type=int, default=50000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--show", type=int, default=5)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    agree = skipped = blocked = 0
    shown = 0
    for _ in range(args.walks):
        walk = random_walk(rng, rng.randint(2, args.max_length))
        path = [SITES[v] for v in walk]
        r = path_obstruction(path)
        try:
            brute = approximable_bruteforce(path, args.budget)
        except ValueError:
            skipped += 1
            continue
        if brute != r.approximable:
            raise SystemExit(f"disagreement on walk {walk}: {r} vs brute force {brute}")
        agree += 1
        if not r.approximable:
            blocked += 1
            if shown < args.show:
                shown += 1
                print(f"walk {'-'.join(map(str, walk))}: {r}  trails={len(path_image(path).trails)}")
    print(f"{agree} walks agree with brute force ({blocked} not approximable), {skipped} over budget")


if __name__ == "__main__":
    main()
