"""Exact spanning-tree counts along the tower and the growth-formula fit.

Counting uses the matrix-tree theorem on the loop-free combinatorial
Laplacian: any principal cofactor determinant equals the number of spanning
trees.  Small orders run integer fraction-free elimination; large orders
switch to a CRT determinant over word-size primes under a Hadamard bound.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._detmod import det_crt
from .errors import (
    DisconnectedGraph,
    DisconnectedTower,
    EmptyGraph,
    InconsistentTail,
    InvalidParameter,
    NonIntegralFit,
)
from .graphs import MultiGraph, VoltageGraph, derived_graph, tower_is_connected
from .groupring import IwasawaInvariants, ord_p
from .laplacian import predicted_invariants

BAREISS_MAX_ORDER = 64


@dataclass(frozen=True)
class KappaSequence:
    p: int
    rows: tuple  # of (level, kappa, ord_p(kappa))


@dataclass(frozen=True)
class FitResult:
    lambda_: int
    mu: int
    nu: int
    stable_from: int


@dataclass(frozen=True)
class VerifyReport:
    sequence: KappaSequence
    predicted: IwasawaInvariants
    fitted: FitResult
    passed: bool


def kirchhoff_cofactor(g: MultiGraph) -> list:
    """Loop-free combinatorial Laplacian with row/column 0 deleted.

    Loops belong to no spanning tree and are dropped outright.
    """
    idx = {v: i for i, v in enumerate(g.vertices)}
    n = len(g.vertices)
    m = [[0] * n for _ in range(n)]
    for _, u, v in g.edges:
        if u == v:
            continue
        i, j = idx[u], idx[v]
        m[i][i] += 1
        m[j][j] += 1
        m[i][j] -= 1
        m[j][i] -= 1
    return [row[1:] for row in m[1:]]


def _det_bareiss_int(mat: list) -> int:
    n = len(mat)
    if n == 0:
        return 1
    m = [list(row) for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _hadamard_bits(mat: np.ndarray) -> float:
    bits = 0.0
    for row in mat:
        s = float(np.dot(row.astype(np.float64), row.astype(np.float64)))
        if s == 0.0:
            return 0.0
        bits += 0.5 * math.log2(s)
    return bits


def _det_crt_int(mat: list) -> int:
    arr = np.array(mat, dtype=np.int64)
    bits = _hadamard_bits(arr)
    if bits == 0.0:
        return 0
    return det_crt(arr, bits + 4)


def spanning_tree_count(g: MultiGraph, backend: str = "auto") -> int:
    """Number of spanning trees; 0 signals a disconnected graph.

    ``backend`` may force the small-order ("bareiss") or modular ("crt")
    determinant path; "auto" switches on the cofactor order.
    """
    if not g.vertices:
        raise EmptyGraph("spanning trees of the empty graph are undefined")
    if len(g.vertices) == 1:
        return 1
    cof = kirchhoff_cofactor(g)
    if backend == "auto":
        backend = "bareiss" if len(cof) <= BAREISS_MAX_ORDER else "crt"
    if backend == "bareiss":
        return _det_bareiss_int(cof)
    if backend == "crt":
        return _det_crt_int(cof)
    raise InvalidParameter(f"unknown determinant backend {backend!r}")


def kappa_sequence(vg: VoltageGraph, up_to: int) -> KappaSequence:
    """Tree numbers and their p-adic valuations for levels 0..up_to."""
    ok, level = tower_is_connected(vg, up_to)
    if not ok:
        raise DisconnectedTower(level)
    rows = []
    for n in range(up_to + 1):
        kappa = spanning_tree_count(derived_graph(vg, n).graph)
        if kappa <= 0:
            raise DisconnectedGraph(f"level {n} has no spanning tree")
        rows.append((n, kappa, ord_p(kappa, vg.p)))
    return KappaSequence(vg.p, tuple(rows))


def fit_invariants(seq: KappaSequence, min_tail: int = 4) -> FitResult:
    """Solve lambda*n + mu*p^n + nu against the tail of the sequence.

    The last three rows pin the three parameters; with the default
    ``min_tail`` of 4 the fit must then also hold on the fourth-to-last row.
    ``min_tail=3`` accepts a fit supported by the last three rows alone,
    which is needed when the growth enters its eventual regime late.
    ``stable_from`` is the least level from which the formula holds
    everywhere above.
    """
    if min_tail not in (3, 4):
        raise InvalidParameter("min_tail must be 3 or 4")
    if len(seq.rows) < min_tail:
        raise InvalidParameter(f"need at least {min_tail} rows to fit")
    p = seq.p
    (n2, _, o2), (n1, _, o1), (n0, _, o0) = seq.rows[-3:]
    d1, d2 = o1 - o2, o0 - o1
    denom = p**n2 * (p - 1) ** 2
    if (d2 - d1) % denom != 0:
        raise NonIntegralFit("mu is not an integer on the last three rows")
    mu = (d2 - d1) // denom
    lam = d1 - mu * p**n2 * (p - 1)
    if mu < 0 or lam < 0:
        raise NonIntegralFit("fitted lambda/mu are negative")
    nu = o0 - lam * n0 - mu * p**n0

    def fits(row) -> bool:
        n, _, o = row
        return o == lam * n + mu * p**n + nu

    if min_tail >= 4 and not fits(seq.rows[-4]):
        raise InconsistentTail(
            "the last four rows are inconsistent; raise the level cap"
        )
    stable = seq.rows[-3][0]
    for row in reversed(seq.rows[:-3]):
        if not fits(row):
            break
        stable = row[0]
    return FitResult(lam, mu, nu, stable)


def verify(vg: VoltageGraph, up_to: int) -> VerifyReport:
    """Compare predicted invariants against the fitted tree-number growth."""
    if up_to < 4:
        raise InvalidParameter("verification needs at least levels 0..4")
    predicted = predicted_invariants(vg)
    seq = kappa_sequence(vg, up_to)
    fitted = fit_invariants(seq)
    passed = predicted.lambda_ == fitted.lambda_ and predicted.mu == fitted.mu
    return VerifyReport(seq, predicted, fitted, passed)
