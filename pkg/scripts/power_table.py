"""reg(I^s) for s = 1..S next to the linear bound 2s + match(G) - 1.

    python scripts/power_table.py P4 C4 example --max-s 3
"""

from __future__ import annotations

import argparse

from reesbip.betti import bound_min, power_regularity
from reesbip.cli import resolve_graph
from reesbip.graph import maximum_matching


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("graphs", nargs="+", help="edge-list files or corpus names")
    ap.add_argument("--max-s", type=int, default=3)
    args = ap.parse_args()

    for spec in args.graphs:
        G = resolve_graph(spec)
        match, bmin = maximum_matching(G).size, bound_min(G)
        print(f"{spec}: match {match}, min-bound {bmin}, linearity from s = {match + G.q + 1}")
        prev = None
        for s in range(1, args.max_s + 1):
            r = power_regularity(G, s, check=True)
            step = "" if prev is None else f"  step {r - prev:+d}"
            print(f"  s={s}: reg {r:>3}  <= {2 * s + match - 1:>3} and {2 * s + bmin:>3}{step}")
            prev = r


if __name__ == "__main__":
    main()
