"""Group-ring Laplacians, their exact determinants, and predicted invariants.

The voltage Laplacian is a square matrix over the group ring; its
determinant (or the determinant of the unramified principal submatrix) is
the quantity whose lambda/mu invariants predict the growth of the tree
numbers.  Determinants are computed exactly: entries are shifted by a
common unit into integer polynomials and eliminated fraction-free.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DisconnectedTower,
    InvalidParameter,
    SingularLaplacian,
    UnsupportedShape,
)
from .groupring import (
    GroupRingElement,
    IntPolynomial,
    IwasawaInvariants,
    iwasawa_invariants,
    mu_l,
    require_prime,
)
from .graphs import VoltageGraph, tower_is_connected
from .phi import invariants_via_phi, phi_forward


@dataclass(frozen=True)
class GroupRingMatrix:
    index: tuple  # vertex names labelling rows and columns
    entries: tuple  # of tuples of GroupRingElement

    def __post_init__(self):
        if len(set(self.index)) != len(self.index):
            raise InvalidParameter("matrix index contains duplicates")
        if any(len(row) != len(self.index) for row in self.entries):
            raise InvalidParameter("matrix is not square")

    def submatrix(self, keep) -> "GroupRingMatrix":
        pos = [i for i, v in enumerate(self.index) if v in set(keep)]
        return GroupRingMatrix(
            tuple(self.index[i] for i in pos),
            tuple(tuple(self.entries[i][j] for j in pos) for i in pos),
        )


def laplacian_matrix(vg: VoltageGraph) -> GroupRingMatrix:
    """Row v collects, over darts leaving v, the term v - alpha(e) t(e).

    Each geometric edge contributes both of its darts, so a loop with
    voltage a adds 2 - g^a - g^-a to its diagonal entry.
    """
    verts = vg.graph.vertices
    idx = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    m = [[GroupRingElement.zero()] * n for _ in range(n)]
    for eid, u, v in vg.graph.edges:
        a = vg.voltage[eid]
        i, j = idx[u], idx[v]
        m[i][i] = m[i][i] + 1
        m[i][j] = m[i][j] - GroupRingElement.gamma(a)
        m[j][j] = m[j][j] + 1
        m[j][i] = m[j][i] - GroupRingElement.gamma(-a)
    return GroupRingMatrix(tuple(verts), tuple(tuple(row) for row in m))


def _det_bareiss_poly(mat: list) -> IntPolynomial:
    """Fraction-free determinant of a square IntPolynomial matrix."""
    n = len(mat)
    if n == 0:
        return IntPolynomial.make([1], "g")
    m = [list(row) for row in mat]
    sign = 1
    prev = IntPolynomial.make([1], "g")
    for k in range(n - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return IntPolynomial.zero("g")
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_div(prev)
            m[i][k] = IntPolynomial.zero("g")
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def determinant(matrix: GroupRingMatrix) -> GroupRingElement:
    """Exact determinant over the group ring.

    All entries are multiplied by a common unit power of the generator so
    that they become genuine polynomials; the accumulated unit is restored
    at the end.  The empty matrix has determinant 1.
    """
    n = len(matrix.index)
    if n == 0:
        return GroupRingElement.one()
    exps = [
        a
        for row in matrix.entries
        for x in row
        for a in x.terms
    ]
    if not exps:
        return GroupRingElement.zero()
    m0 = min(min(exps), 0)
    polymat = []
    for row in matrix.entries:
        prow = []
        for x in row:
            coeffs = [0] * (max((a - m0 for a in x.terms), default=0) + 1)
            for a, c in x.terms.items():
                coeffs[a - m0] = c
            prow.append(IntPolynomial.make(coeffs, "g"))
        polymat.append(prow)
    det = _det_bareiss_poly(polymat)
    shift = m0 * n
    return GroupRingElement(
        {k + shift: c for k, c in enumerate(det.coefficients) if c != 0}
    )


def z_alpha(vg: VoltageGraph) -> GroupRingElement:
    """Determinant of the full voltage Laplacian (unramified graphs)."""
    if vg.ramified_vertices():
        raise InvalidParameter("z_alpha requires a fully unramified voltage graph")
    return determinant(laplacian_matrix(vg))


def z_alpha_ramified(vg: VoltageGraph) -> GroupRingElement:
    """Determinant of the principal submatrix on unramified vertices.

    An empty submatrix (every vertex ramified) has determinant 1.
    """
    keep = [v for v in vg.graph.vertices if vg.ramification[v].unramified]
    return determinant(laplacian_matrix(vg).submatrix(keep))


def predicted_invariants(
    vg: VoltageGraph,
    mu_l_primes=(),
    connectivity_level: int = 2,
) -> IwasawaInvariants:
    """Invariants predicted from the Laplacian determinant.

    lambda is lambda(Z) - 1 plus the total index of the ramified vertices;
    mu is mu(Z); mu_l is the content valuation at each requested prime.
    """
    ok, level = tower_is_connected(vg, connectivity_level)
    if not ok:
        raise DisconnectedTower(level)
    z = z_alpha_ramified(vg)
    if z.is_zero():
        raise SingularLaplacian("the Laplacian determinant vanishes")
    lam_z, mu_z = iwasawa_invariants(z, vg.p)
    ram_index = sum(vg.p ** vg.ramification[v].depth for v in vg.ramified_vertices())
    mul = {}
    for l in mu_l_primes:
        require_prime(l)
        if l == vg.p:
            raise InvalidParameter("mu_l is only defined for primes l != p")
        mul[l] = mu_l(z, l)
    return IwasawaInvariants(lam_z - 1 + ram_index, mu_z, mu_l=mul)


def bouquet_invariants_fast(vg: VoltageGraph) -> IwasawaInvariants:
    """S-side shortcut for the two special shapes.

    Single unramified vertex: lambda = 2*lambda_S(Phi(h)) - 1.  Two vertices
    with one unramified and one totally ramified: lambda = 2*lambda_S(Phi(h)
    + c) where c counts the connecting edges.  h collects 1 - g^a over the
    loops at the unramified vertex.
    """
    verts = vg.graph.vertices
    ram = [v for v in verts if not vg.ramification[v].unramified]
    if len(verts) == 1 and not ram:
        (v,) = verts
        h = _loop_element(vg, v)
        g = phi_forward(h)
        if g.is_zero():
            raise SingularLaplacian("the Laplacian determinant vanishes")
        lam_s, mu_s = invariants_via_phi(g, vg.p)
        return IwasawaInvariants(2 * lam_s - 1, mu_s)
    if len(verts) == 2 and len(ram) == 1 and vg.ramification[ram[0]].depth == 0:
        w = ram[0]
        (v,) = [u for u in verts if u != w]
        c = sum(
            1 for _, a, b in vg.graph.edges if {a, b} == {v, w}
        )
        if c == 0:
            raise UnsupportedShape("the two vertices are not connected")
        h = _loop_element(vg, v)
        g = phi_forward(h) + c
        lam_s, mu_s = invariants_via_phi(g, vg.p)
        return IwasawaInvariants(2 * lam_s, mu_s)
    raise UnsupportedShape(
        "fast path needs a bouquet or an (unramified, totally ramified) pair"
    )


def _loop_element(vg: VoltageGraph, v: str) -> GroupRingElement:
    h = GroupRingElement.zero()
    for eid, a, b in vg.graph.edges:
        if a == v and b == v:
            h = h + (1 - GroupRingElement.gamma(vg.voltage[eid]))
    return h
