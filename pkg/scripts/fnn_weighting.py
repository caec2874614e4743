"""How the sign of fnn depends on the neighbour weighting.

fnn correlates a node's fitness with the mean fitness of its successors.  This
script recomputes it for one instance per K under three weightings of the
successor mean: the transition probability w (the library's definition), the
complement 1 - w, and a plain unweighted mean.

    python3 scripts/fnn_weighting.py --n 18 --seed 1
"""

import argparse

import numpy as np

from mllon import OperatorKind, build_lon, enumerate_basins, fitness_table, generate_instance
from mllon.config import DEFAULT_KS
from mllon.metrics import pearson


def fnn(lon, weights):
    st = np.bincount(lon.src, weights=weights, minlength=lon.nv)
    acc = np.bincount(lon.src, weights=weights * lon.fitness[lon.dst], minlength=lon.nv)
    live = st > 0
    return pearson(lon.fitness[live], acc[live] / st[live])


def main():
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--n", type=int, default=18)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--k", type=int, nargs="+", default=list(DEFAULT_KS))
    args = p.parse_args()
    print(f"{'op':<8}{'K':>3}{'w':>9}{'1-w':>9}{'unit':>9}")
    for k in args.k:
        inst = generate_instance(args.n, k, args.seed)
        table = fitness_table(inst)
        for op in OperatorKind:
            lon = build_lon(inst, op, enumerate_basins(inst, op, table=table))
            vals = [fnn(lon, w) for w in (lon.weight, 1.0 - lon.weight, np.ones(lon.ne))]
            print(f"{op.value:<8}{k:>3}" + "".join(f"{v:>9.3f}" if v is not None else f"{'-':>9}" for v in vals))


if __name__ == "__main__":
    main()
