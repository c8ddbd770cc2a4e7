"""Multigraphs, derived covers, and tower connectivity."""
import random

import pytest

from conftest import random_connected_voltage_graph
from iwagraph.errors import EmptyGraph, InvalidParameter, SchemaError
from iwagraph.graphs import (
    MultiGraph,
    RamificationDatum,
    VoltageGraph,
    derived_graph,
    is_connected,
    tower_is_connected,
)


def bouquet(p, loops):
    edges = tuple((f"e{i}", "v", "v") for i in range(len(loops)))
    voltage = {f"e{i}": a for i, a in enumerate(loops)}
    return VoltageGraph(MultiGraph(("v",), edges), p, voltage)


class TestMultiGraph:
    def test_validation(self):
        with pytest.raises(SchemaError):
            MultiGraph(("v", "v"), ())
        with pytest.raises(SchemaError):
            MultiGraph(("v",), (("e", "v", "v"), ("e", "v", "v")))
        with pytest.raises(SchemaError):
            MultiGraph(("v",), (("e", "v", "w"),))

    def test_dart_degree(self):
        gph = MultiGraph(("v", "w"), (("l", "v", "v"), ("e", "v", "w")))
        assert gph.dart_degree("v") == 3
        assert gph.dart_degree("w") == 1


class TestRamification:
    def test_negative_depth_rejected(self):
        with pytest.raises(InvalidParameter):
            RamificationDatum(-1)

    def test_fiber_modulus(self):
        vg = VoltageGraph(
            MultiGraph(("v", "w"), ()),
            3,
            {},
            {"w": RamificationDatum(1)},
        )
        assert vg.fiber_modulus("v", 2) == 9
        assert vg.fiber_modulus("w", 2) == 3
        assert vg.fiber_modulus("w", 0) == 1


class TestDerivedGraph:
    def test_level_zero_is_base_shape(self):
        vg = bouquet(3, [1, 2])
        d = derived_graph(vg, 0)
        assert len(d.graph.vertices) == 1
        assert len(d.graph.edges) == 2

    def test_bouquet_level_one_is_cycle(self):
        d = derived_graph(bouquet(3, [1]), 1).graph
        assert sorted(d.vertices) == ["v@0", "v@1", "v@2"]
        assert sorted((u, w) for _, u, w in d.edges) == [
            ("v@0", "v@1"),
            ("v@1", "v@2"),
            ("v@2", "v@0"),
        ]

    def test_totally_ramified_star(self):
        # three parallel base edges into a totally ramified vertex give,
        # at level 1, three triple-edges from the w-fiber point
        vg = VoltageGraph(
            MultiGraph(("v", "w"), tuple((f"c{j}", "v", "w") for j in range(3))),
            3,
            {f"c{j}": 0 for j in range(3)},
            {"w": RamificationDatum.total()},
        )
        d = derived_graph(vg, 1).graph
        assert len(d.vertices) == 4
        assert len(d.edges) == 9
        assert all(w == "w@0" for _, _, w in d.edges)

    def test_counting_formulas(self):
        rng = random.Random(0)
        for _ in range(30):
            p = rng.choice([2, 3])
            vg = random_connected_voltage_graph(rng, p)
            for n in range(4):
                d = derived_graph(vg, n).graph
                assert len(d.vertices) == sum(
                    vg.fiber_modulus(v, n) for v in vg.graph.vertices
                )
                assert len(d.edges) == p**n * len(vg.graph.edges)

    def test_projection_functoriality(self):
        # collapsing classes mod p^n sends the level-(n+1) graph onto level n
        rng = random.Random(1)
        for _ in range(20):
            p = rng.choice([2, 3])
            vg = random_connected_voltage_graph(rng, p)
            for n in range(3):
                up = derived_graph(vg, n + 1).graph
                down = derived_graph(vg, n).graph
                down_edges = {e: (u, w) for e, u, w in down.edges}

                def project(name, n=n):
                    base, r = name.rsplit("@", 1)
                    if base in vg.graph.vertices:
                        return f"{base}@{int(r) % vg.fiber_modulus(base, n)}"
                    return f"{base}@{int(r) % p**n}"

                for e, u, w in up.edges:
                    base, c = e.rsplit("@", 1)
                    target = down_edges[f"{base}@{int(c) % p**n}"]
                    assert (project(u), project(w)) == target

    def test_degree_transfer(self):
        rng = random.Random(2)
        for _ in range(20):
            p = rng.choice([2, 3])
            vg = random_connected_voltage_graph(rng, p)
            n = rng.randint(0, 2)
            d = derived_graph(vg, n).graph
            for v in vg.graph.vertices:
                m = vg.fiber_modulus(v, n)
                expected = vg.graph.dart_degree(v) * p**n // m
                for r in range(m):
                    assert d.dart_degree(f"{v}@{r}") == expected

    def test_negative_level_rejected(self):
        with pytest.raises(InvalidParameter):
            derived_graph(bouquet(3, [1]), -1)


class TestConnectivity:
    def test_is_connected(self):
        assert is_connected(MultiGraph(("a", "b"), (("e", "a", "b"),)))
        assert not is_connected(MultiGraph(("a", "b"), ()))
        with pytest.raises(EmptyGraph):
            is_connected(MultiGraph((), ()))

    def test_bouquet_shortcut(self):
        assert tower_is_connected(bouquet(3, [1]), 6) == (True, None)
        assert tower_is_connected(bouquet(3, [3]), 6) == (False, 1)
        assert tower_is_connected(bouquet(3, [3]), 0) == (True, None)

    def test_shortcuts_agree_with_bfs(self):
        rng = random.Random(3)
        for _ in range(200):
            p = rng.choice([2, 3])
            nv = rng.randint(1, 2)
            verts = tuple(f"v{i}" for i in range(nv))
            edges = []
            voltage = {}
            for j in range(rng.randint(1, 4)):
                u, w = rng.choice(verts), rng.choice(verts)
                edges.append((f"e{j}", u, w))
                voltage[f"e{j}"] = rng.randint(-p**2, p**2)
            ram = {}
            if nv == 2 and rng.random() < 0.4:
                ram["v1"] = RamificationDatum.total()
            vg = VoltageGraph(MultiGraph(verts, tuple(edges)), p, voltage, ram)
            claimed = tower_is_connected(vg, 3)
            levels = [
                is_connected(derived_graph(vg, n).graph) for n in range(4)
            ]
            if all(levels):
                assert claimed == (True, None)
            else:
                assert claimed[0] is False
                assert claimed[1] == levels.index(False)
