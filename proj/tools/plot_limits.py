#!/usr/bin/env python3
"""Plot a scaling-limit error table produced by `plancherel limits`.

Usage: plot_limits.py limits.csv [out.png]

Draws the max entrywise error per theta rung on a log-log scale; needs
matplotlib (the CSV itself is already plot-ready for any other tool).
"""

import csv
import sys
from collections import defaultdict


def main() -> int:
    if len(sys.argv) < 2:
        print(__doc__)
        return 2
    path = sys.argv[1]
    out = sys.argv[2] if len(sys.argv) > 2 else "limits.png"
    worst = defaultdict(float)
    with open(path) as fh:
        for row in csv.DictReader(r for r in fh if not r.startswith("#")):
            worst[float(row["theta"])] = max(worst[float(row["theta"])],
                                             float(row["abs_error"]))
    if not worst:
        print("no data rows found")
        return 1
    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("matplotlib not available; per-theta max errors:")
        for theta in sorted(worst):
            print(f"  theta={theta:g}  max_abs_error={worst[theta]:.6g}")
        return 0
    thetas = sorted(worst)
    plt.figure(figsize=(5, 4))
    plt.loglog(thetas, [worst[t] for t in thetas], "o-")
    plt.xlabel("theta")
    plt.ylabel("max abs error")
    plt.title("scaling-limit convergence")
    plt.grid(True, which="both", alpha=0.3)
    plt.tight_layout()
    plt.savefig(out, dpi=150)
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
