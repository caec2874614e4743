"""Seed-averaged descriptive and global metric tables from a sweep's metrics.csv.

    python3 scripts/summarize.py runs/grid/metrics.csv [--out summary.csv]
"""

import argparse
from collections import defaultdict
from pathlib import Path

import numpy as np

from mllon.io import read_csv, write_csv

COLUMNS = ["nv", "ne", "knn", "fnn", "wcc_mean", "wcc_rand", "l_mean", "st_mean", "y2_mean",
           "zout_mean", "l_go_mean", "l_go_reach"]


def seed_means(rows):
    groups = defaultdict(list)
    for r in rows:
        groups[(r["network"], int(r["k"]))].append(r)
    order = list(dict.fromkeys(r["network"] for r in rows))
    table = []
    for (net, k), rs in sorted(groups.items(), key=lambda kv: (order.index(kv[0][0]), kv[0][1])):
        vals = {c: np.nanmean([float(r[c]) if r[c] else np.nan for r in rs]) for c in COLUMNS}
        table.append((net, k, len(rs), vals))
    return table


def main():
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("metrics", type=Path)
    p.add_argument("--out", type=Path, default=None)
    args = p.parse_args()
    meta, rows = read_csv(args.metrics)
    table = seed_means(rows)
    print(f"{'network':<11}{'K':>3}{'seeds':>6}" + "".join(f"{c:>11}" for c in COLUMNS))
    for net, k, count, vals in table:
        print(f"{net:<11}{k:>3}{count:>6}" + "".join(f"{vals[c]:>11.4g}" for c in COLUMNS))
    if args.out:
        write_csv(args.out, meta, ["network", "k", "seeds"] + COLUMNS,
                  ([net, k, count] + [repr(float(vals[c])) for c in COLUMNS] for net, k, count, vals in table))


if __name__ == "__main__":
    main()
