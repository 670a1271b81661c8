"""Run the complete-graph construction for a range of n and print one row per n.

Columns: genus, triangle and qualifying counts against the two floors,
crossing data and the ratio N / g^(3/2).

    python scripts/construction_growth.py --nmax 9
"""

import argparse

from kissnum import ribbon, systoles


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--nmin", type=int, default=5)
    p.add_argument("--nmax", type=int, default=9)
    args = p.parse_args(argv)

    cols = ["n", "genus", "tri", "N", "ceil(n^2(n-3)/6)", "ceil(n(n-1)(n-4)/6)", "max_i", "distinct_rows", "connected", "N/g^1.5"]
    print("  ".join(f"{c:>8s}" for c in cols))
    for n in range(args.nmin, args.nmax + 1):
        r = systoles.count_qualifying(ribbon.complete_graph_embedding(n))
        distinct = len({tuple(row) for row in r.matrix.mod2.tolist()})
        vals = [n, r.genus, r.triangle_count, r.qualifying_count, r.formula_floor, r.degree_floor,
                r.max_intersection, f"{distinct}/{r.qualifying_count}", r.connected,
                f"{systoles.growth_ratio(r):.3f}"]
        print("  ".join(f"{str(v):>8s}" for v in vals))


if __name__ == "__main__":
    main()
