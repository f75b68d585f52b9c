"""Batch cop-number sweeps over graph families, persisted as CSV + JSON."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field

from .engine import GameVariant, PushAbility
from .errors import BadFamilyParamsError, PushcopsError
from .generators import (
    circulant,
    complete,
    complete_multipartite,
    cycle,
    enumerate_connected_graphs,
    enumerate_orientations,
    grid,
    hypercube,
    octahedron,
    path,
    random_orientation,
)
from .graph import OrientedGraph, serialize_arcs
from .solver import build_arena, solve

CSV_HEADER = [
    "instance_id",
    "family",
    "n",
    "m",
    "class_index",
    "variant",
    "k",
    "verdict",
    "cop_number",
    "capture_rounds",
    "states",
    "runtime_ms",
    "error",
]


def build_family(family: str, params: dict):
    """Yield (graph label, UnderlyingGraph) pairs for one family spec."""
    if family == "complete":
        yield f"complete-{params['n']}", complete(int(params["n"]))
    elif family == "path":
        yield f"path-{params['n']}", path(int(params["n"]))
    elif family == "cycle":
        yield f"cycle-{params['n']}", cycle(int(params["n"]))
    elif family == "circulant":
        offs = tuple(int(d) for d in params["offsets"])
        yield f"circulant-{params['n']}-{'.'.join(map(str, offs))}", circulant(
            int(params["n"]), offs
        )
    elif family == "complete_multipartite":
        sizes = tuple(int(s) for s in params["sizes"])
        yield f"multipartite-{'.'.join(map(str, sizes))}", complete_multipartite(sizes)
    elif family == "octahedron":
        yield "octahedron", octahedron()
    elif family == "hypercube":
        yield f"hypercube-{params['d']}", hypercube(int(params["d"]))
    elif family == "grid":
        yield f"grid-{params['rows']}x{params['cols']}", grid(
            int(params["rows"]), int(params["cols"])
        )
    elif family == "connected":
        n = int(params["n"])
        max_degree = params.get("max_degree")
        max_degree = None if max_degree is None else int(max_degree)
        for i, g in enumerate(enumerate_connected_graphs(n, max_degree)):
            yield f"connected-{n}-{i}", g
    else:
        raise BadFamilyParamsError(f"unknown family {family!r}")


def orientations_for(g, orient: str, seed: int):
    if orient == "classes":
        return list(enumerate_orientations(g, per_class=True))
    if orient == "enumerate":
        return list(enumerate_orientations(g))
    if orient == "random":
        return [random_orientation(g, seed)]
    raise BadFamilyParamsError(f"unknown orientation mode {orient!r}")


@dataclass
class SweepReport:
    rows: list[dict] = field(default_factory=list)
    flagged: list[OrientedGraph] = field(default_factory=list)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_HEADER)
        writer.writeheader()
        writer.writerows(self.rows)
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(
            {
                "schema": 1,
                "rows": self.rows,
                "aggregate": {
                    "instances": len(self.rows),
                    "errors": sum(1 for r in self.rows if r["error"]),
                    "strong_push_above_one": len(self.flagged),
                },
            },
            indent=2,
        )


def sweep_row(instance_id: str, family: str, og: OrientedGraph, push: PushAbility, k_max: int):
    row = {
        "instance_id": instance_id,
        "family": family,
        "n": og.n,
        "m": og.m,
        "class_index": og.parity,
        "variant": push.value,
        "k": k_max,
        "verdict": "",
        "cop_number": "",
        "capture_rounds": "",
        "states": 0,
        "runtime_ms": 0,
        "error": "",
    }
    started = time.perf_counter()
    try:
        for k in range(1, k_max + 1):
            result = solve(build_arena(og, GameVariant(push, k)))
            row["states"] += result.arena.total
            if result.root_win:
                row["verdict"] = "cop-win"
                row["cop_number"] = k
                row["capture_rounds"] = result.capture_rounds
                break
        else:
            row["verdict"] = "robber-win"
            row["cop_number"] = f">{k_max}"
    except PushcopsError as exc:
        row["error"] = str(exc)
    row["runtime_ms"] = round((time.perf_counter() - started) * 1000, 3)
    return row


def run_sweep(spec: dict) -> SweepReport:
    """Run every job in the sweep spec; failures land in the row's error column."""
    report = SweepReport()
    for job in spec.get("jobs", []):
        family = job["family"]
        params = job.get("params", {})
        orient = job.get("orient", "classes")
        seed = int(job.get("seed", 0))
        push = PushAbility(job.get("push", "strong"))
        k_max = int(job.get("k_max", 1))
        for label, g in build_family(family, params):
            for og in orientations_for(g, orient, seed):
                instance_id = f"{label}-r{og.ref_bits}-c{og.parity}"
                row = sweep_row(instance_id, family, og, push, k_max)
                report.rows.append(row)
                if (
                    push is PushAbility.STRONG
                    and not row["error"]
                    and row["cop_number"] != 1
                ):
                    report.flagged.append(og)
    report.rows.sort(key=lambda r: r["instance_id"])
    return report


def write_report(report: SweepReport, prefix: str) -> list[str]:
    paths = [f"{prefix}.csv", f"{prefix}.json"]
    with open(paths[0], "w") as fh:
        fh.write(report.to_csv())
    with open(paths[1], "w") as fh:
        fh.write(report.to_json())
    for i, og in enumerate(report.flagged):
        p = f"{prefix}-flagged-{i}.arcs"
        with open(p, "w") as fh:
            fh.write(serialize_arcs(og))
        paths.append(p)
    return paths
