"""Show the exceptional extremal graphs of orders 7-9 with a few invariants.

Reads the fixture file; run make_fixtures.py first to rebuild it from scratch.
"""
from d2c.analysis import dominating_edges
from d2c.families import figure3_graphs, strengthened_bound
from d2c.graph import complement, diameter, twin_classes


def main() -> None:
    print("graph6      n   m  bound  dominating  complement-diam  twin-classes")
    for g in figure3_graphs():
        dom = "yes" if dominating_edges(g) else "no"
        print(f"{str(g):<10} {g.n:>2} {g.m:>3} {strengthened_bound(g.n):>6}  {dom:>10}"
              f"  {diameter(complement(g)):>15}  {len(twin_classes(g)):>12}")


if __name__ == "__main__":
    main()
