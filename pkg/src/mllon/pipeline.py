"""End-to-end steps shared by the CLI and the experiment scripts."""

from __future__ import annotations

import logging
import time
from pathlib import Path

from . import io
from .basins import MAX_ENUM_N, enumerate_basins
from .config import RunConfig
from .lon import build_lon
from .metrics import compute_metrics, local_point_clouds
from .multilayer import MllonConfig, build_mllon, flatten
from .neighborhood import OperatorKind
from .nk import NkInstance, fitness_table, generate_instance

log = logging.getLogger(__name__)

DESCRIPTIVE = ["network", "k", "seed", "nv", "ne", "knn", "fnn"]
GLOBAL = ["network", "k", "seed", "wcc_mean", "wcc_rand", "l_mean", "st_mean", "y2_mean", "zout_mean", "l_go_mean"]


def instance_name(n: int, k: int, seed: int) -> str:
    return f"nk_n{n}_k{k}_seed{seed}.json"


def generate(cfg: RunConfig, out_dir=None) -> list[Path]:
    out = Path(out_dir or cfg.out_dir)
    paths = []
    for seed in cfg.seeds:
        for k in cfg.ks:
            inst = generate_instance(cfg.n, k, seed)
            paths.append(io.write_instance(inst, out / instance_name(cfg.n, k, seed)))
    return paths


def make_lon(inst: NkInstance, op, out_dir, workers=1, formats=("csv",), max_n=MAX_ENUM_N, table=None):
    """Enumerate basins, build the LON and write the artifact directory."""
    op = OperatorKind.parse(op)
    bm = enumerate_basins(inst, op, workers=workers, max_n=max_n, table=table)
    lon = build_lon(inst, op, bm)
    io.write_lon(out_dir, inst, bm, lon, formats=formats)
    log.info("%s k=%d seed=%d: nv=%d ne=%d", op.value, inst.k, inst.seed, lon.nv, lon.ne)
    return bm, lon


def make_mllon(lon_dirs, cfg: MllonConfig, out_dir, formats=("csv", "graphml")):
    """Combine LON artifacts of one instance into a multi-layer artifact."""
    lon_dirs = list(lon_dirs)
    if len(lon_dirs) < 2:
        raise ValueError(f"a multi-layer LON needs at least two LON artifacts, got {len(lon_dirs)}")
    loaded = [io.read_lon(d) for d in lon_dirs]
    ref = loaded[0][2]
    for _, _, meta in loaded[1:]:
        for key in ("n", "k", "seed"):
            if meta[key] != ref[key]:
                raise io.ArtifactError(
                    f"artifacts come from different instances ({key}: {ref[key]} vs {meta[key]})")
    layers = [(lon.operator, bm, lon) for lon, bm, _ in loaded]
    inst = io.read_instance(Path(lon_dirs[0]) / "instance.json")
    for d in lon_dirs[1:]:
        if io.read_instance(Path(d) / "instance.json") != inst:
            raise io.ArtifactError(f"{d}: instance differs from {lon_dirs[0]}")
    return _assemble(inst, layers, cfg, out_dir, formats)


def _assemble(inst, layers, cfg: MllonConfig, out_dir, formats):
    m = build_mllon(inst, layers, cfg)
    g = flatten(m)
    meta = io.provenance(inst.n, inst.k, inst.seed, layers=[op.value for op, _, _ in layers],
                         p_sl=cfg.p_sl, p_co_mirror=cfg.p_co_mirror, p_co_diff=cfg.p_co_diff)
    io.write_mllon(out_dir, m, g, meta, formats=formats)
    log.info("multilayer k=%d seed=%d: nv=%d ne=%d", inst.k, inst.seed, g.nv, g.ne)
    return m, g


def make_metrics(artifact_dir, out_dir=None, network=None):
    g, meta = io.read_flat_graph(artifact_dir)
    network = network or meta.get("operator") or "multilayer"
    report = _measure(g, meta, network, out_dir or Path(artifact_dir) / "metrics")
    return report, meta


def _measure(g, meta, network, out_dir):
    report = compute_metrics(g)
    io.write_report(out_dir, report, local_point_clouds(g), meta, network)
    return report


def sweep(cfg: RunConfig, inspect=None) -> Path:
    """generate -> LON per operator -> multi-layer LON -> metrics, for every (seed, k).

    Consolidated ``metrics.csv``, ``descriptive.csv`` and ``global.csv`` land in
    ``cfg.out_dir``.  ``inspect(network, k, seed, graph, report)``, if given,
    sees every measured graph while it is still in memory.
    """
    out = cfg.out_dir
    out.mkdir(parents=True, exist_ok=True)
    rows = []
    for seed in cfg.seeds:
        started = time.perf_counter()
        for k in cfg.ks:
            base = out / f"seed{seed}" / f"k{k}"
            inst = generate_instance(cfg.n, k, seed)
            io.write_instance(inst, base / "instance.json")
            table = fitness_table(inst)
            layers = []
            for op in cfg.operators:
                bm, lon = make_lon(inst, op, base / op.value, cfg.workers, cfg.formats, cfg.max_n, table=table)
                layers.append((op, bm, lon))
            graphs = [(op.value, lon.to_graph()) for op, _, lon in layers]
            if len(layers) >= 2:
                _, g = _assemble(inst, layers, cfg.mllon, base / "multilayer", cfg.formats)
                graphs.append(("multilayer", g))
            for name, g in graphs:
                meta = io.provenance(cfg.n, k, seed, name)
                report = _measure(g, meta, name, base / "metrics" / name)
                if inspect is not None:
                    inspect(name, k, seed, g, report)
                rows.append(io.metrics_row(report, meta, name))
        log.info("seed %d done in %.1f s", seed, time.perf_counter() - started)
    header = io.metrics_header()
    rows.sort(key=lambda r: (_order(r[0], cfg), int(r[2]), int(r[3])))
    summary = {"n": cfg.n, "ks": " ".join(map(str, cfg.ks)), "seeds": " ".join(map(str, cfg.seeds)),
               "tool_version": io.__version__}
    io.write_csv(out / "metrics.csv", summary, header, rows)
    for name, cols in (("descriptive.csv", DESCRIPTIVE), ("global.csv", GLOBAL)):
        idx = [header.index(c) for c in cols]
        io.write_csv(out / name, summary, cols, ([r[i] for i in idx] for r in rows))
    return out


def _order(network: str, cfg: RunConfig) -> int:
    names = [op.value for op in cfg.operators] + ["multilayer"]
    return names.index(network)
