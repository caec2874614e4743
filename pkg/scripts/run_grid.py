"""Run the N=18 experiment grid (all K, both operators, multi-layer) for several seeds.

    python3 scripts/run_grid.py --replicates 5 --out runs/grid
"""

import argparse
import logging
import time
from pathlib import Path

from mllon.config import DEFAULT_KS, RunConfig
from mllon.pipeline import sweep


def main():
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--n", type=int, default=18)
    p.add_argument("--k", type=int, nargs="+", default=list(DEFAULT_KS))
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--replicates", type=int, default=5)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", type=Path, default=Path("runs/grid"))
    args = p.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")

    cfg = RunConfig(n=args.n, ks=args.k, seed=args.seed, replicates=args.replicates,
                    workers=args.workers, out_dir=args.out)
    t0 = time.perf_counter()
    out = sweep(cfg)
    dt = time.perf_counter() - t0
    print(f"{out / 'metrics.csv'}  ({dt:.0f} s, {dt / args.replicates:.0f} s per seed)")


if __name__ == "__main__":
    main()
