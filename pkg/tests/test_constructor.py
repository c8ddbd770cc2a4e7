"""Constructing graphs with prescribed invariants."""
from collections import Counter

import pytest

from iwagraph.constructor import (
    construct_ramified,
    construct_unramified,
    construct_with_mu_l,
    is_admissible,
)
from iwagraph.errors import InvalidTarget
from iwagraph.graphs import VoltageGraph
from iwagraph.groupring import GroupRingElement
from iwagraph.laplacian import predicted_invariants
from iwagraph.treecount import verify

g = GroupRingElement.gamma


def loop_multiset(vg: VoltageGraph) -> Counter:
    return Counter(
        vg.voltage[e] for e, u, w in vg.graph.edges if u == w
    )


def connecting_count(vg: VoltageGraph) -> int:
    return sum(1 for e, u, w in vg.graph.edges if u != w)


class TestAdmissibility:
    def test_examples(self):
        p = 5
        assert is_admissible((p - 1) * (1 - g(1)), p) == (True, None)
        assert is_admissible(g(1) - 1, 3) == (False, "b")
        assert is_admissible(2 * (1 - g(3)), 3) == (False, "c")
        assert is_admissible(2 * (1 - g(3)), 3, require_connectivity=False) == (
            True,
            None,
        )

    def test_augmentation_condition(self):
        assert is_admissible(GroupRingElement.constant(1) - 2 * g(1), 3) == (
            False,
            "a",
        )


class TestUnramifiedFigures:
    def test_single_loop(self):
        vg = construct_unramified(3, 1, 0, minimize=True)
        assert loop_multiset(vg) == Counter({1: 1})

    def test_p2_lambda3(self):
        vg = construct_unramified(2, 3, 0, minimize=True)
        assert loop_multiset(vg) == Counter({2: 1, 1: 2})

    def test_p3_lambda3(self):
        vg = construct_unramified(3, 3, 0, minimize=True)
        assert loop_multiset(vg) == Counter({2: 2, 1: 1})

    def test_p2_lambda5(self):
        vg = construct_unramified(2, 5, 0, minimize=True)
        assert loop_multiset(vg) == Counter({3: 1, 1: 1})

    def test_p3_lambda5(self):
        vg = construct_unramified(3, 5, 0, minimize=True)
        assert loop_multiset(vg) == Counter({3: 1, 1: 3})

    def test_without_minimize_default_sign(self):
        vg = construct_unramified(3, 1, 0)
        assert loop_multiset(vg) == Counter({1: 2})

    def test_mu_scaling_certifies(self):
        vg = construct_unramified(3, 1, 1)
        inv = predicted_invariants(vg)
        assert (inv.lambda_, inv.mu) == (1, 1)
        assert verify(vg, 4).passed


class TestRamifiedFigures:
    def test_lambda0(self):
        vg = construct_ramified(3, 0, 1)
        assert loop_multiset(vg) == Counter()
        assert connecting_count(vg) == 3
        inv = predicted_invariants(vg)
        assert (inv.lambda_, inv.mu) == (0, 1)

    def test_lambda2(self):
        vg = construct_ramified(3, 2, 0)
        assert loop_multiset(vg) == Counter({1: 1})
        assert connecting_count(vg) == 3

    def test_lambda6(self):
        vg = construct_ramified(3, 6, 0)
        assert loop_multiset(vg) == Counter({3: 1, 1: 3})
        assert connecting_count(vg) == 3

    def test_connecting_voltages_are_zero(self):
        vg = construct_ramified(2, 4, 0)
        for e, u, w in vg.graph.edges:
            if u != w:
                assert vg.voltage[e] == 0

    def test_exactly_one_totally_ramified_vertex(self):
        vg = construct_ramified(5, 2, 0)
        ram = vg.ramified_vertices()
        assert len(ram) == 1
        assert vg.ramification[ram[0]].depth == 0


class TestParityGuards:
    def test_unramified_rejects_even(self):
        with pytest.raises(InvalidTarget):
            construct_unramified(3, 2, 0)
        with pytest.raises(InvalidTarget):
            construct_unramified(3, 0, 0)
        with pytest.raises(InvalidTarget):
            construct_unramified(3, 1, -1)

    def test_ramified_rejects_odd(self):
        with pytest.raises(InvalidTarget):
            construct_ramified(3, 3, 0)
        with pytest.raises(InvalidTarget):
            construct_ramified(3, -2, 0)


class TestMuLPrescription:
    def test_empty_targets_match_unramified(self):
        base = construct_unramified(3, 1, 0)
        via = construct_with_mu_l(3, 1, 0, {})
        assert loop_multiset(base) == loop_multiset(via)

    def test_single_target(self):
        vg = construct_with_mu_l(3, 1, 0, {2: 1})
        inv = predicted_invariants(vg, mu_l_primes=(2,))
        assert (inv.lambda_, inv.mu) == (1, 0)
        assert inv.mu_l == {2: 1}

    def test_two_targets(self):
        vg = construct_with_mu_l(2, 3, 0, {3: 1, 5: 1})
        inv = predicted_invariants(vg, mu_l_primes=(3, 5))
        assert (inv.lambda_, inv.mu) == (3, 0)
        assert inv.mu_l == {3: 1, 5: 1}

    def test_target_at_p_rejected(self):
        with pytest.raises(InvalidTarget):
            construct_with_mu_l(3, 1, 0, {3: 1})
        with pytest.raises(InvalidTarget):
            construct_with_mu_l(3, 1, 0, {4: 1})
        with pytest.raises(InvalidTarget):
            construct_with_mu_l(3, 1, 0, {2: -1})
        with pytest.raises(InvalidTarget):
            construct_with_mu_l(3, 2, 0, {2: 1})


class TestOutputsAdmissible:
    def test_unramified_outputs(self):
        for p in (2, 3, 5):
            for lam in (1, 3, 5, 7, 9):
                for mu in (0, 1):
                    vg = construct_unramified(p, lam, mu)
                    h = GroupRingElement.zero()
                    for e, u, w in vg.graph.edges:
                        h = h + (1 - g(vg.voltage[e]))
                    assert is_admissible(h, p) == (True, None)

    def test_ramified_outputs_waive_connectivity(self):
        for p in (2, 3):
            for lam in (2, 4, 6, 8):
                vg = construct_ramified(p, lam, 0)
                h = GroupRingElement.zero()
                for e, u, w in vg.graph.edges:
                    if u == w:
                        h = h + (1 - g(vg.voltage[e]))
                assert is_admissible(h, p, require_connectivity=False) == (
                    True,
                    None,
                )
