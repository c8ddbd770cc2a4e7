"""Realization of prescribed invariants by explicit voltage graphs.

Odd lambda targets are met by a bouquet; even ones by a two-vertex graph
whose second vertex is totally ramified.  Targets for the content valuation
at other primes are met by rationally rescaling the loop multiplicities.
Every constructed graph is certified against the determinant prediction
before being returned.
"""
from __future__ import annotations

from .errors import InvalidTarget, RepairFailed
from .graphs import MultiGraph, RamificationDatum, VoltageGraph
from .groupring import (
    GroupRingElement,
    IntPolynomial,
    augmentation,
    is_prime,
    mu_l,
    require_prime,
)
from .laplacian import predicted_invariants
from .phi import phi_inverse


def is_admissible(
    h: GroupRingElement, p: int, require_connectivity: bool = True
) -> tuple[bool, str | None]:
    """Check the three admissibility conditions; returns (ok, violation).

    (a) augmentation zero; (b) every non-identity coefficient nonpositive;
    (c) some exponent with nonzero coefficient is a unit mod p (skipped when
    ``require_connectivity`` is false).
    """
    require_prime(p)
    if augmentation(h) != 0:
        return False, "a"
    if any(c > 0 for a, c in h.terms.items() if a != 0):
        return False, "b"
    if require_connectivity and not any(
        a % p != 0 for a, c in h.terms.items() if a != 0
    ):
        return False, "c"
    return True, None


def _bouquet_loops(
    p: int, lambda_prime: int, mu: int, minimize: bool, repair: bool = True
) -> dict:
    """Loop multiset {voltage k: count} realizing lambda_S = lambda', mu_S = mu.

    Works from g = sigma * p^mu * S^lambda', pulls back through the basis,
    and reduces each count into [0, p^(mu+1)).  ``repair`` adds p^(mu+1)
    loops of voltage 1 when no voltage is a unit mod p.  ``minimize`` tries
    both signs of g and keeps the smaller loop count, preferring sigma=+1
    on ties.
    """
    mod = p ** (mu + 1)

    def loops_for(sigma: int) -> dict:
        g = IntPolynomial.monomial(sigma * p**mu, lambda_prime, "S")
        h = phi_inverse(g)
        t = {}
        for k, c in h.terms.items():
            if k >= 1:
                count = (-c) % mod
                if count:
                    t[k] = count
        if repair and not any(k % p != 0 for k in t):
            t[1] = t.get(1, 0) + mod
        return t

    plus = loops_for(1)
    if not minimize:
        return plus
    minus = loops_for(-1)
    return minus if sum(minus.values()) < sum(plus.values()) else plus


def _bouquet_graph(p: int, loops: dict) -> VoltageGraph:
    edges = []
    voltage = {}
    i = 0
    for k in sorted(loops, reverse=True):
        for _ in range(loops[k]):
            i += 1
            edges.append((f"e{i}", "v", "v"))
            voltage[f"e{i}"] = k
    return VoltageGraph(MultiGraph(("v",), tuple(edges)), p, voltage)


def _certify(vg: VoltageGraph, lam: int, mu: int, targets: dict | None = None) -> None:
    inv = predicted_invariants(vg, mu_l_primes=tuple(targets or ()))
    if inv.lambda_ != lam or inv.mu != mu:
        raise RepairFailed(
            f"certification failed: predicted ({inv.lambda_}, {inv.mu}), "
            f"target ({lam}, {mu})"
        )
    for l, e in (targets or {}).items():
        if inv.mu_l[l] != e:
            raise RepairFailed(
                f"certification failed: mu_{l} = {inv.mu_l[l]}, target {e}"
            )


def construct_unramified(
    p: int, lambda_: int, mu: int, minimize: bool = False
) -> VoltageGraph:
    """Bouquet whose tower has the given odd lambda and mu."""
    require_prime(p)
    if lambda_ < 1 or lambda_ % 2 == 0:
        raise InvalidTarget("unramified lambda must be odd and >= 1")
    if mu < 0:
        raise InvalidTarget("mu must be nonnegative")
    loops = _bouquet_loops(p, (lambda_ + 1) // 2, mu, minimize)
    vg = _bouquet_graph(p, loops)
    _certify(vg, lambda_, mu)
    return vg


def construct_ramified(p: int, lambda_: int, mu: int) -> VoltageGraph:
    """Two-vertex graph (one totally ramified) with the given even lambda.

    Reuses the bouquet loop multiset of the corresponding odd target and
    adds p^(mu+1) connecting edges; lambda = 0 needs no loops and p^mu
    connecting edges.
    """
    require_prime(p)
    if lambda_ < 0 or lambda_ % 2 == 1:
        raise InvalidTarget("ramified lambda must be even and >= 0")
    if mu < 0:
        raise InvalidTarget("mu must be nonnegative")
    lambda_prime = lambda_ // 2
    if lambda_prime == 0:
        loops = {}
        c = p**mu
    else:
        loops = _bouquet_loops(p, lambda_prime, mu, minimize=True)
        c = p ** (mu + 1)
    edges = []
    voltage = {}
    i = 0
    for k in sorted(loops, reverse=True):
        for _ in range(loops[k]):
            i += 1
            edges.append((f"e{i}", "v", "v"))
            voltage[f"e{i}"] = k
    for j in range(1, c + 1):
        edges.append((f"c{j}", "v", "w"))
        voltage[f"c{j}"] = 0
    vg = VoltageGraph(
        MultiGraph(("v", "w"), tuple(edges)),
        p,
        voltage,
        {"w": RamificationDatum.total()},
    )
    _certify(vg, lambda_, mu)
    return vg


def construct_with_mu_l(
    p: int, lambda_: int, mu_p: int, targets: dict
) -> VoltageGraph:
    """Bouquet with prescribed (lambda, mu_p) and content valuations mu_l.

    Scales the base loop multiset by the positive rational that moves each
    targeted prime's content to its prescribed exponent; the scaling leaves
    the support, hence the connectivity condition, untouched.  Untargeted
    primes may carry incidental content; the certification reports the
    targeted ones.
    """
    require_prime(p)
    targets = dict(targets)
    for l, e in targets.items():
        if not is_prime(l):
            raise InvalidTarget(f"mu_l target key {l} is not prime")
        if l == p:
            raise InvalidTarget("mu_l targets must use primes l != p")
        if e < 0:
            raise InvalidTarget("mu_l targets must be nonnegative")
    if lambda_ < 1 or lambda_ % 2 == 0:
        raise InvalidTarget("lambda must be odd and >= 1")
    if mu_p < 0:
        raise InvalidTarget("mu_p must be nonnegative")

    loops = _bouquet_loops(p, (lambda_ + 1) // 2, mu_p, minimize=False)
    h = _element_of(loops)
    num = den = 1
    for l, e in targets.items():
        have = mu_l(h, l)
        if e >= have:
            num *= l ** (e - have)
        else:
            den *= l ** (have - e)
    loops = {k: c * num // den for k, c in loops.items()}

    mod = p ** (mu_p + 1)
    for l in targets:
        mod *= l ** (targets[l] + 1)
    for _ in range(2):
        ok, violation = is_admissible(_element_of(loops), p)
        if ok:
            break
        if violation != "c":
            raise RepairFailed(f"admissibility condition ({violation}) violated")
        loops[1] = loops.get(1, 0) + mod
    else:
        raise RepairFailed("connectivity repair did not converge")

    vg = _bouquet_graph(p, loops)
    _certify(vg, lambda_, mu_p, targets)
    return vg


def _element_of(loops: dict) -> GroupRingElement:
    """The element sum of count * (1 - g^k) for a loop multiset."""
    h = GroupRingElement.zero()
    for k, c in loops.items():
        h = h + c * (1 - GroupRingElement.gamma(k))
    return h
