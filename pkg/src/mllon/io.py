"""On-disk formats for instances, LON / multi-layer artifacts and metric reports.

Text files carry every real with 17 significant digits, so values survive a
write/read cycle exactly.  CSV files start with ``# key=value`` provenance
lines; data files never contain timestamps, which keeps reruns byte-identical.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import numpy as np

from . import __version__
from .basins import BasinMap
from .graph import EDGE_KINDS, WeightedDigraph
from .lon import Lon
from .metrics import MetricsReport, PointCloud
from .multilayer import Mllon
from .neighborhood import OperatorKind
from .nk import NkInstance

INSTANCE_FORMAT = "mllon/nk-instance"


class ArtifactError(ValueError):
    """A file is missing, malformed, or inconsistent with its siblings."""


def fmt(x: float) -> str:
    return format(float(x), ".16e")


def provenance(n, k, seed, operator=None, **extra) -> dict:
    meta = {"n": int(n), "k": int(k), "seed": int(seed)}
    if operator is not None:
        meta["operator"] = operator
    meta.update(extra)
    meta["tool_version"] = __version__
    return meta


# -- instances ---------------------------------------------------------------

def dumps_instance(inst: NkInstance) -> str:
    head = json.dumps({"format": INSTANCE_FORMAT, "tool_version": __version__,
                       "n": inst.n, "k": inst.k, "seed": inst.seed})
    links = ",\n    ".join(json.dumps([int(j) for j in row]) for row in inst.links)
    tables = ",\n    ".join("[" + ", ".join(fmt(v) for v in row) + "]" for row in inst.tables)
    return f'{head[:-1]},\n  "links": [\n    {links}\n  ],\n  "tables": [\n    {tables}\n  ]\n}}\n'


def write_instance(inst: NkInstance, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps_instance(inst))
    return path


def read_instance(path) -> NkInstance:
    try:
        doc = json.loads(Path(path).read_text())
        if doc.get("format") != INSTANCE_FORMAT:
            raise ArtifactError(f"{path}: not an NK instance file")
        n, k = int(doc["n"]), int(doc["k"])
        links = np.array(doc["links"], dtype=np.int64).reshape(n, k)
        return NkInstance(n=n, k=k, links=links, tables=np.array(doc["tables"], dtype=np.float64),
                          seed=int(doc["seed"]))
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ArtifactError(f"{path}: cannot parse instance ({exc})") from exc


# -- csv helpers -------------------------------------------------------------

def write_csv(path: Path, meta: dict, header: list[str], rows) -> None:
    buf = io.StringIO()
    for key, val in meta.items():
        if isinstance(val, (list, tuple)):
            val = " ".join(map(str, val))
        buf.write(f"# {key}={val}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    path.write_text(buf.getvalue())


def read_csv(path) -> tuple[dict, list[dict]]:
    """Provenance comments and rows (as dicts of strings) of a CSV written here."""
    meta, lines = {}, []
    with open(path, newline="") as fh:
        for line in fh:
            if line.startswith("#"):
                key, _, val = line[1:].strip().partition("=")
                meta[key] = val
            else:
                lines.append(line)
    return meta, list(csv.DictReader(lines))


# -- basins and LONs -----------------------------------------------------------

def write_basins(bm: BasinMap, meta: dict, path) -> None:
    np.savez_compressed(
        path,
        header=np.array(json.dumps(meta, sort_keys=True)),
        assignment=bm.assignment,
        optima=bm.optima,
        optima_fitness=bm.optima_fitness,
        basin_sizes=bm.basin_sizes,
        global_optima=np.array(bm.global_optima, dtype=np.int64),
    )


def read_basins(path) -> tuple[BasinMap, dict]:
    with np.load(path) as z:
        meta = json.loads(str(z["header"]))
        bm = BasinMap(
            operator=OperatorKind.parse(meta["operator"]),
            n=int(meta["n"]),
            assignment=z["assignment"],
            optima=z["optima"],
            optima_fitness=z["optima_fitness"],
            basin_sizes=z["basin_sizes"],
            global_optima=tuple(int(j) for j in z["global_optima"]),
        )
    return bm, meta


def write_lon(directory, inst: NkInstance, bm: BasinMap, lon: Lon, formats=("csv",)) -> Path:
    """Write ``meta.json``, ``instance.json``, ``basins.npz``, ``nodes.csv`` and ``edges.csv``."""
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    meta = provenance(inst.n, inst.k, inst.seed, lon.operator.value)
    write_instance(inst, d / "instance.json")
    write_basins(bm, meta, d / "basins.npz")
    glob = lon.is_global()
    write_csv(d / "nodes.csv", meta,
               ["id", "solution_int", "fitness", "basin_size", "is_global_opt", "self_mass"],
               ([j, int(lon.solution[j]), fmt(lon.fitness[j]), int(lon.basin_size[j]),
                 int(glob[j]), fmt(lon.self_mass[j])] for j in range(lon.nv)))
    write_csv(d / "edges.csv", meta, ["src_id", "dst_id", "weight"],
               zip(lon.src.tolist(), lon.dst.tolist(), map(fmt, lon.weight)))
    if "graphml" in formats:
        write_graphml(lon.to_graph(), d / "lon.graphml")
    if "edgelist" in formats:
        write_edgelist(lon.to_graph(), d / "lon.edgelist")
    doc = dict(meta, kind="lon", nv=lon.nv, ne=lon.ne)
    (d / "meta.json").write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return d


def read_meta(directory) -> dict:
    path = Path(directory) / "meta.json"
    if not path.is_file():
        raise ArtifactError(f"{directory}: no meta.json, not a network artifact")
    return json.loads(path.read_text())


def read_lon(directory) -> tuple[Lon, BasinMap, dict]:
    d = Path(directory)
    meta = read_meta(d)
    if meta.get("kind") != "lon":
        raise ArtifactError(f"{d}: expected a LON artifact, found {meta.get('kind')!r}")
    bm, _ = read_basins(d / "basins.npz")
    _, nodes = read_csv(d / "nodes.csv")
    _, edges = read_csv(d / "edges.csv")
    lon = Lon(
        operator=OperatorKind.parse(meta["operator"]),
        n=int(meta["n"]),
        solution=np.array([int(r["solution_int"]) for r in nodes], np.int64),
        fitness=np.array([float(r["fitness"]) for r in nodes]),
        basin_size=np.array([int(r["basin_size"]) for r in nodes], np.int64),
        self_mass=np.array([float(r["self_mass"]) for r in nodes]),
        src=np.array([int(r["src_id"]) for r in edges], np.int64),
        dst=np.array([int(r["dst_id"]) for r in edges], np.int64),
        weight=np.array([float(r["weight"]) for r in edges]),
        global_optima=tuple(int(r["id"]) for r in nodes if r["is_global_opt"] == "1"),
    )
    return lon, bm, meta


# -- multi-layer -----------------------------------------------------------------

def write_mllon(directory, m: Mllon, g: WeightedDigraph, meta: dict, formats=("csv", "graphml")) -> Path:
    """Supra node / edge lists of a multi-layer LON plus its flattened GraphML."""
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    names = g.layer_names
    write_csv(d / "supra_nodes.csv", meta,
               ["layer", "id", "operator", "solution_int", "fitness", "basin_size", "is_global_opt", "self_mass"],
               ([int(g.layer[v]), int(g.opt_id[v]), names[g.layer[v]], int(g.solution[v]), fmt(g.fitness[v]),
                 int(g.basin_size[v]), int(g.is_global[v]), fmt(g.self_mass[v])] for v in range(g.nv)))
    write_csv(d / "supra_edges.csv", meta,
               ["src_layer", "src_id", "dst_layer", "dst_id", "weight", "edge_kind"],
               ([int(g.layer[a]), int(g.opt_id[a]), int(g.layer[b]), int(g.opt_id[b]), fmt(w), EDGE_KINDS[kd]]
                for a, b, w, kd in zip(g.src, g.dst, g.weight, g.kind)))
    if "graphml" in formats:
        write_graphml(g, d / "flat.graphml")
    if "edgelist" in formats:
        write_edgelist(g, d / "flat.edgelist")
    doc = dict(meta, kind="mllon", nv=g.nv, ne=g.ne,
               mirror_pairs=len(m.mirror_edges) // 2, overlap_pairs=len(m.overlap_edges) // 2)
    (d / "meta.json").write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return d


def read_flat_graph(directory) -> tuple[WeightedDigraph, dict]:
    """Load a LON or multi-layer artifact as the graph the metrics operate on."""
    d = Path(directory)
    meta = read_meta(d)
    if meta.get("kind") == "lon":
        lon, _, _ = read_lon(d)
        return lon.to_graph(), meta
    if meta.get("kind") != "mllon":
        raise ArtifactError(f"{d}: unknown artifact kind {meta.get('kind')!r}")
    _, nodes = read_csv(d / "supra_nodes.csv")
    _, edges = read_csv(d / "supra_edges.csv")
    index = {(int(r["layer"]), int(r["id"])): v for v, r in enumerate(nodes)}
    names = tuple(meta["layers"])
    kinds = {k: i for i, k in enumerate(EDGE_KINDS)}
    g = WeightedDigraph(
        src=[index[int(r["src_layer"]), int(r["src_id"])] for r in edges],
        dst=[index[int(r["dst_layer"]), int(r["dst_id"])] for r in edges],
        weight=[float(r["weight"]) for r in edges],
        kind=[kinds[r["edge_kind"]] for r in edges],
        fitness=[float(r["fitness"]) for r in nodes],
        basin_size=[int(r["basin_size"]) for r in nodes],
        is_global=[r["is_global_opt"] == "1" for r in nodes],
        layer=[int(r["layer"]) for r in nodes],
        opt_id=[int(r["id"]) for r in nodes],
        solution=[int(r["solution_int"]) for r in nodes],
        self_mass=[float(r["self_mass"]) for r in nodes],
        layer_names=names,
    )
    return g, meta


# -- exports -----------------------------------------------------------------------

def write_graphml(g: WeightedDigraph, path) -> None:
    import networkx as nx

    nx.write_graphml(g.to_networkx(), str(path))


def write_edgelist(g: WeightedDigraph, path) -> None:
    with open(path, "w") as fh:
        for a, b, w in zip(g.src.tolist(), g.dst.tolist(), g.weight):
            fh.write(f"{a} {b} {fmt(w)}\n")


# -- metrics -----------------------------------------------------------------------

def _num(x):
    return "" if x is None else (fmt(x) if isinstance(x, float) else str(x))


def write_report(directory, report: MetricsReport, clouds, meta: dict, network: str) -> Path:
    """``report.json``, a one-row ``metrics.csv`` and the three point-cloud CSVs."""
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    doc = dict(meta, network=network, metrics=report.to_dict())
    (d / "report.json").write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    write_csv(d / "metrics.csv", meta, metrics_header(), [metrics_row(report, meta, network)])
    for name, cloud in zip(("cumstrength.csv", "strength_basin.csv", "fitness_basin.csv"), clouds):
        write_cloud(cloud, d / name, meta)
    return d


def metrics_header() -> list[str]:
    return ["network", "n", "k", "seed"] + MetricsReport.columns()


def metrics_row(report: MetricsReport, meta: dict, network: str) -> list[str]:
    return [network, meta.get("n", ""), meta.get("k", ""), meta.get("seed", "")] + [
        _num(getattr(report, c)) for c in MetricsReport.columns()
    ]


def write_cloud(cloud: PointCloud, path, meta: dict) -> None:
    write_csv(Path(path), meta, [cloud.xlabel, cloud.ylabel],
               ((fmt(x), fmt(y)) for x, y in zip(cloud.x, cloud.y)))


def read_report(path) -> tuple[MetricsReport, dict]:
    doc = json.loads(Path(path).read_text())
    return MetricsReport(**doc["metrics"]), doc
