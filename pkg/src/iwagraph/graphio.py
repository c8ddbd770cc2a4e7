"""Reading and writing voltage graphs as strictly validated JSON files.

The on-disk shape is ``{"p", "vertices", "edges"}`` with per-vertex
ramification (the string "unramified" or a nonnegative depth) and a voltage
per edge.  Unknown fields are rejected so that typos fail loudly.  Derived
graphs are exported in the same shape minus the voltage and ramification
keys.
"""
from __future__ import annotations

import json

from .errors import SchemaError
from .graphs import MultiGraph, RamificationDatum, VoltageGraph

_VERTEX_KEYS = {"name", "ramification"}
_EDGE_KEYS = {"id", "from", "to", "voltage"}


def _check_keys(obj: dict, allowed: set, where: str) -> None:
    extra = set(obj) - allowed
    if extra:
        raise SchemaError(f"unknown field(s) {sorted(extra)} in {where}")


def graph_spec_to_voltage_graph(data: dict) -> VoltageGraph:
    if not isinstance(data, dict):
        raise SchemaError("graph spec must be a JSON object")
    _check_keys(data, {"p", "vertices", "edges"}, "graph spec")
    for key in ("p", "vertices", "edges"):
        if key not in data:
            raise SchemaError(f"graph spec is missing the {key!r} field")
    p = data["p"]
    if not isinstance(p, int) or isinstance(p, bool):
        raise SchemaError('"p" must be an integer')

    names = []
    ramification = {}
    for entry in data["vertices"]:
        if not isinstance(entry, dict):
            raise SchemaError("each vertex must be a JSON object")
        _check_keys(entry, _VERTEX_KEYS, f"vertex {entry.get('name')!r}")
        if "name" not in entry or not isinstance(entry["name"], str):
            raise SchemaError("each vertex needs a string name")
        name = entry["name"]
        ram = entry.get("ramification", "unramified")
        if ram == "unramified":
            ramification[name] = RamificationDatum.none()
        elif isinstance(ram, int) and not isinstance(ram, bool) and ram >= 0:
            ramification[name] = RamificationDatum(ram)
        else:
            raise SchemaError(
                f'vertex {name!r}: "ramification" must be "unramified" '
                f"or a nonnegative integer, got {ram!r}"
            )
        names.append(name)

    edges = []
    voltage = {}
    for entry in data["edges"]:
        if not isinstance(entry, dict):
            raise SchemaError("each edge must be a JSON object")
        _check_keys(entry, _EDGE_KEYS, f"edge {entry.get('id')!r}")
        for key in ("id", "from", "to", "voltage"):
            if key not in entry:
                raise SchemaError(f"edge {entry.get('id')!r} is missing {key!r}")
        eid = entry["id"]
        if not isinstance(eid, str):
            raise SchemaError("edge ids must be strings")
        a = entry["voltage"]
        if not isinstance(a, int) or isinstance(a, bool):
            raise SchemaError(f'edge {eid!r}: "voltage" must be an integer')
        edges.append((eid, entry["from"], entry["to"]))
        voltage[eid] = a

    try:
        graph = MultiGraph(tuple(names), tuple(edges))
        return VoltageGraph(graph, p, voltage, ramification)
    except SchemaError:
        raise
    except Exception as exc:  # non-prime p and friends surface as SchemaError
        raise SchemaError(str(exc)) from exc


def voltage_graph_to_graph_spec(vg: VoltageGraph) -> dict:
    vertices = []
    for v in vg.graph.vertices:
        ram = vg.ramification[v]
        vertices.append(
            {"name": v, "ramification": "unramified" if ram.unramified else ram.depth}
        )
    edges = [
        {"id": e, "from": u, "to": w, "voltage": vg.voltage[e]}
        for e, u, w in vg.graph.edges
    ]
    return {"p": vg.p, "vertices": vertices, "edges": edges}


def load_graph_spec(path: str) -> VoltageGraph:
    """Load and validate a voltage-graph JSON file."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(
            f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}: "
            f"{exc.msg}"
        ) from exc
    try:
        return graph_spec_to_voltage_graph(data)
    except SchemaError as exc:
        raise SchemaError(f"{path}: {exc}") from exc


def save_graph_spec(vg: VoltageGraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(voltage_graph_to_graph_spec(vg), fh, indent=2)
        fh.write("\n")


def save_multigraph_spec(g: MultiGraph, p: int, path: str) -> None:
    """Export a derived graph: same shape, no voltages, no ramification."""
    data = {
        "p": p,
        "vertices": [{"name": v} for v in g.vertices],
        "edges": [{"id": e, "from": u, "to": w} for e, u, w in g.edges],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2)
        fh.write("\n")
