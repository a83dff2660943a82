"""Print a census table for a range of orders.

    python scripts/census_table.py 1 9 --mode full
    python scripts/census_table.py 10 10 --mode extremal --threads 4
"""
import argparse
import time

from d2c.cli import run_search

COLUMNS = ("total_graphs", "d2c", "d2c_bipartite", "d2c_nonbipartite", "with_dominating_edge",
           "attaining_strengthened", "c5plus_members", "exceptions_not_in_c5plus")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("lo", type=int)
    ap.add_argument("hi", type=int)
    ap.add_argument("--mode", default="d2c", choices=("full", "d2c", "extremal"))
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()
    print("n  " + " ".join(f"{c:>12.12}" for c in COLUMNS) + "  viol  secs")
    for n in range(args.lo, args.hi + 1):
        t = time.perf_counter()
        shards = args.threads * 4 if args.threads > 1 else None
        rep = run_search(n, args.mode, shards=shards, workers=args.threads)
        row = " ".join(f"{rep.counts[c]:>12}" for c in COLUMNS)
        print(f"{n:<2} {row}  {rep.violations:>4}  {time.perf_counter() - t:.1f}")


if __name__ == "__main__":
    main()
