"""Shared helpers: fixture paths, random generators, brute-force oracles."""
from __future__ import annotations

import random
from itertools import combinations
from pathlib import Path

from iwagraph.graphs import MultiGraph, VoltageGraph

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

FIXTURE_NAMES = (
    "fig2",
    "fig3",
    "fig4",
    "fig5",
    "fig6",
    "fig7",
    "fig8",
    "fig9",
    "fig10",
)


def fixture_path(name: str) -> str:
    return str(FIXTURES / f"{name}.json")


def random_multigraph(rng: random.Random, max_vertices=5, max_edges=8) -> MultiGraph:
    """A random connected multigraph: spanning-tree edges plus extras."""
    nv = rng.randint(1, max_vertices)
    verts = tuple(f"v{i}" for i in range(nv))
    edges = []
    for i in range(1, nv):
        edges.append((f"t{i}", verts[rng.randrange(i)], verts[i]))
    extra = rng.randint(0, max(0, max_edges - len(edges)))
    for j in range(extra):
        u, w = rng.choice(verts), rng.choice(verts)
        edges.append((f"x{j}", u, w))
    return MultiGraph(verts, tuple(edges))


def random_admissible_bouquet(
    rng: random.Random, p: int, max_loops=5, max_voltage=None
) -> VoltageGraph:
    """Bouquet guaranteed to have a connected tower: one unit voltage."""
    cap = max_voltage if max_voltage is not None else p**3
    nloops = rng.randint(1, max_loops)
    voltages = [rng.randint(1, cap) for _ in range(nloops - 1)]
    unit = rng.randint(1, cap)
    while unit % p == 0:
        unit = rng.randint(1, cap)
    voltages.append(unit)
    edges = tuple((f"e{i}", "v", "v") for i in range(nloops))
    voltage = {f"e{i}": voltages[i] for i in range(nloops)}
    return VoltageGraph(MultiGraph(("v",), edges), p, voltage)


def random_connected_voltage_graph(
    rng: random.Random, p: int, max_vertices=3, max_edges=5
) -> VoltageGraph:
    """Random unramified voltage graph with a connected tower.

    A spanning tree keeps the base connected; one extra unit-voltage loop
    guarantees connectivity of every level.
    """
    nv = rng.randint(1, max_vertices)
    verts = tuple(f"v{i}" for i in range(nv))
    cap = p**3
    edges = []
    voltage = {}
    for i in range(1, nv):
        edges.append((f"t{i}", verts[rng.randrange(i)], verts[i]))
        voltage[f"t{i}"] = rng.randint(-cap, cap)
    budget = max_edges - len(edges) - 1
    for j in range(rng.randint(0, max(0, budget))):
        u, w = rng.choice(verts), rng.choice(verts)
        edges.append((f"x{j}", u, w))
        voltage[f"x{j}"] = rng.randint(-cap, cap)
    unit = rng.randint(1, cap)
    while unit % p == 0:
        unit = rng.randint(1, cap)
    edges.append(("u0", verts[0], verts[0]))
    voltage["u0"] = unit
    return VoltageGraph(MultiGraph(verts, tuple(edges)), p, voltage)


def brute_force_tree_count(g: MultiGraph) -> int:
    """Count spanning trees by enumerating edge subsets of size |V| - 1."""
    nv = len(g.vertices)
    if nv == 0:
        raise ValueError("empty graph")
    if nv == 1:
        return 1
    idx = {v: i for i, v in enumerate(g.vertices)}
    usable = [(idx[u], idx[w]) for _, u, w in g.edges if u != w]
    count = 0
    for subset in combinations(usable, nv - 1):
        parent = list(range(nv))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        acyclic = True
        for u, w in subset:
            ru, rw = find(u), find(w)
            if ru == rw:
                acyclic = False
                break
            parent[ru] = rw
        if acyclic:
            count += 1
    return count
