"""Command-line entry point: ``mllon {generate,lon,mllon,metrics,sweep}``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__, io, pipeline
from .basins import MAX_ENUM_N, CapacityError
from .config import FORMATS, DEFAULT_KS, RunConfig, default_output_dir
from .multilayer import MllonConfig
from .neighborhood import OperatorKind

log = logging.getLogger("mllon")


def _formats(text: str) -> tuple:
    return tuple(f for f in text.split(",") if f)


def _mllon_flags(p):
    p.add_argument("--p-sl", type=float, default=0.0, help="intra-layer same-optimum probability")
    p.add_argument("--p-co-mirror", type=float, default=1.0, help="weight of mirror edges")
    p.add_argument("--p-co-diff", type=float, default=0.0, help="scale of basin-overlap edges")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mllon", description=__doc__)
    parser.add_argument("--version", action="version", version=f"mllon {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write NK instance files")
    p.add_argument("--n", type=int, default=18)
    p.add_argument("--k", type=int, nargs="+", default=list(DEFAULT_KS))
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--replicates", type=int, default=1)
    p.add_argument("--out", type=Path, default=None)
    p.add_argument("--max-n", type=int, default=MAX_ENUM_N)

    p = sub.add_parser("lon", help="enumerate basins and build one LON")
    p.add_argument("instance", type=Path)
    p.add_argument("--operator", required=True, choices=[o.value for o in OperatorKind])
    p.add_argument("--out", type=Path, default=None, help="artifact directory")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--formats", type=_formats, default=("csv",), help=f"comma list of {FORMATS}")
    p.add_argument("--max-n", type=int, default=MAX_ENUM_N, help="enumeration size guard")

    p = sub.add_parser("mllon", help="join LON artifacts into a multi-layer LON")
    p.add_argument("lons", type=Path, nargs="+")
    p.add_argument("--out", type=Path, default=None)
    p.add_argument("--formats", type=_formats, default=("csv", "graphml"))
    _mllon_flags(p)

    p = sub.add_parser("metrics", help="compute the metric report of a network artifact")
    p.add_argument("artifact", type=Path)
    p.add_argument("--out", type=Path, default=None)
    p.add_argument("--network", default=None, help="label used in the CSV row")

    p = sub.add_parser("sweep", help="run the full experiment grid")
    p.add_argument("--n", type=int, default=18)
    p.add_argument("--k", type=int, nargs="+", default=list(DEFAULT_KS))
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--replicates", type=int, default=1)
    p.add_argument("--operators", type=_formats, default=("bitflip", "swap"))
    p.add_argument("--out", type=Path, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--formats", type=_formats, default=("csv",))
    p.add_argument("--max-n", type=int, default=MAX_ENUM_N)
    _mllon_flags(p)
    return parser


def _run(args) -> int:
    if args.command == "generate":
        cfg = RunConfig(n=args.n, ks=args.k, seed=args.seed, replicates=args.replicates,
                        out_dir=args.out or default_output_dir(), max_n=args.max_n)
        for path in pipeline.generate(cfg):
            print(path)
    elif args.command == "lon":
        inst = io.read_instance(args.instance)
        out = args.out or default_output_dir() / f"{args.instance.stem}_{args.operator}"
        _, lon = pipeline.make_lon(inst, args.operator, out, args.workers, args.formats, args.max_n)
        print(f"nv={lon.nv} ne={lon.ne} -> {out}")
    elif args.command == "mllon":
        if len(args.lons) < 2:
            raise ValueError(f"mllon needs at least two LON artifacts, got {len(args.lons)}")
        cfg = MllonConfig(p_sl=args.p_sl, p_co_mirror=args.p_co_mirror, p_co_diff=args.p_co_diff)
        out = args.out or default_output_dir() / "multilayer"
        m, g = pipeline.make_mllon(args.lons, cfg, out, args.formats)
        print(f"nv={g.nv} ne={g.ne} mirror_pairs={len(m.mirror_edges) // 2} "
              f"overlap_pairs={len(m.overlap_edges) // 2} -> {out}")
    elif args.command == "metrics":
        out = args.out or args.artifact / "metrics"
        report, _ = pipeline.make_metrics(args.artifact, out, args.network)
        print(json.dumps(report.to_dict(), indent=2))
    elif args.command == "sweep":
        cfg = RunConfig(
            n=args.n, ks=args.k, seed=args.seed, replicates=args.replicates, operators=args.operators,
            mllon=MllonConfig(p_sl=args.p_sl, p_co_mirror=args.p_co_mirror, p_co_diff=args.p_co_diff),
            out_dir=args.out or default_output_dir(), workers=args.workers, formats=args.formats,
            max_n=args.max_n,
        )
        out = pipeline.sweep(cfg)
        print(out / "metrics.csv")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return _run(args)
    except (ValueError, CapacityError, OSError, KeyError) as exc:
        print(f"mllon {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
