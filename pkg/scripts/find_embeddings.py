"""Search for minimal-genus rotations of K_n and print them as catalog entries.

The stored catalog entries for n = 8, 9 came from this script.

    python scripts/find_embeddings.py 8 --seeds 0..5
"""

import argparse

from kissnum import ribbon
from kissnum.errors import EmbeddingNotFoundError


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("n", type=int)
    p.add_argument("--seeds", default="0..5")
    p.add_argument("--max-iter", type=int, default=300_000)
    args = p.parse_args(argv)

    lo, _, hi = args.seeds.partition("..")
    target = ribbon.ringel_youngs_genus(args.n)
    for seed in range(int(lo), int(hi or lo) + 1):
        try:
            rs = ribbon.search_embedding(args.n, seed=seed, max_iter=args.max_iter)
        except EmbeddingNotFoundError as exc:
            print(f"seed {seed}: {exc}")
            continue
        print(f"seed {seed}: genus {ribbon.genus(rs).genus} (minimum {target})")
        print(f"    {args.n}: {ribbon.neighbor_orders(rs)},")
        return 0
    return 1


if __name__ == "__main__":
    raise SystemExit(main())
