"""Multigraphs, voltage assignments with ramification data, derived covers.

Graphs are stored as geometric edges (unordered dart pairs with a chosen
orientation); darts are only materialized inside algorithms.  A voltage
graph carries a prime p, an integer voltage per geometric edge, and a
ramification datum per vertex; deriving at level n produces the quotiented
fiber product with vertex names ``v@r`` and edge ids ``e@c``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import EmptyGraph, InvalidParameter, SchemaError
from .groupring import require_prime


@dataclass(frozen=True)
class MultiGraph:
    vertices: tuple
    edges: tuple  # of (edge_id, from_vertex, to_vertex)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(
            self, "edges", tuple((str(e), str(u), str(v)) for e, u, v in self.edges)
        )
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise SchemaError("duplicate vertex names")
        ids = set()
        for e, u, v in self.edges:
            if e in ids:
                raise SchemaError(f"duplicate edge id {e!r}")
            ids.add(e)
            if u not in vs or v not in vs:
                raise SchemaError(f"edge {e!r} references a missing vertex")

    def adjacency(self) -> dict:
        adj = {v: [] for v in self.vertices}
        for _, u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def dart_degree(self, v: str) -> int:
        d = 0
        for _, u, w in self.edges:
            d += (u == v) + (w == v)
        return d


@dataclass(frozen=True)
class RamificationDatum:
    """Inertia datum at a vertex.

    ``depth=None`` means unramified (trivial inertia).  ``depth=d`` means
    inertia of index p^d, so d=0 is totally ramified.
    """

    depth: int | None = None

    def __post_init__(self):
        if self.depth is not None and self.depth < 0:
            raise InvalidParameter("ramification depth must be nonnegative")

    @property
    def unramified(self) -> bool:
        return self.depth is None

    @staticmethod
    def none() -> "RamificationDatum":
        return RamificationDatum(None)

    @staticmethod
    def total() -> "RamificationDatum":
        return RamificationDatum(0)


UNRAMIFIED = RamificationDatum.none()


@dataclass(frozen=True)
class VoltageGraph:
    graph: MultiGraph
    p: int
    voltage: dict  # edge id -> integer exponent
    ramification: dict = None  # vertex -> RamificationDatum

    def __post_init__(self):
        require_prime(self.p)
        object.__setattr__(self, "voltage", dict(self.voltage))
        ram = dict(self.ramification or {})
        for v in self.graph.vertices:
            ram.setdefault(v, UNRAMIFIED)
        object.__setattr__(self, "ramification", ram)
        for e, _, _ in self.graph.edges:
            if e not in self.voltage:
                raise SchemaError(f"edge {e!r} has no voltage")
        for e in self.voltage:
            if e not in {eid for eid, _, _ in self.graph.edges}:
                raise SchemaError(f"voltage for unknown edge {e!r}")
        for v in ram:
            if v not in self.graph.vertices:
                raise SchemaError(f"ramification for unknown vertex {v!r}")

    def ramified_vertices(self) -> list:
        return [v for v in self.graph.vertices if not self.ramification[v].unramified]

    def is_bouquet(self) -> bool:
        return len(self.graph.vertices) == 1

    def fiber_modulus(self, v: str, n: int) -> int:
        d = self.ramification[v].depth
        return self.p ** (n if d is None else min(n, d))


@dataclass(frozen=True)
class DerivedGraph:
    level: int
    graph: MultiGraph


def derived_graph(vg: VoltageGraph, n: int) -> DerivedGraph:
    """Level-n derived graph with vertex fibers quotiented by inertia.

    A base edge e with voltage a lifts, for each class c mod p^n, to an edge
    from (c mod m_s) over its source to (c + a mod p^n mod m_t) over its
    target, where m_v is the fiber modulus of the endpoint.
    """
    if n < 0:
        raise InvalidParameter("level must be nonnegative")
    p_n = vg.p**n
    moduli = {v: vg.fiber_modulus(v, n) for v in vg.graph.vertices}
    vertices = [f"{v}@{r}" for v in vg.graph.vertices for r in range(moduli[v])]
    edges = []
    for eid, u, v in vg.graph.edges:
        a = vg.voltage[eid]
        for c in range(p_n):
            src = f"{u}@{c % moduli[u]}"
            dst = f"{v}@{(c + a) % p_n % moduli[v]}"
            edges.append((f"{eid}@{c}", src, dst))
    return DerivedGraph(n, MultiGraph(tuple(vertices), tuple(edges)))


def is_connected(g: MultiGraph) -> bool:
    """Breadth-first connectivity; an empty vertex set is an error."""
    if not g.vertices:
        raise EmptyGraph("connectivity of the empty graph is undefined")
    adj = g.adjacency()
    seen = {g.vertices[0]}
    queue = deque(seen)
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(g.vertices)


def tower_is_connected(vg: VoltageGraph, up_to: int) -> tuple[bool, int | None]:
    """Whether every derived level <= up_to is connected.

    Returns ``(True, None)`` or ``(False, first_failing_level)``.  Two
    shortcut criteria certify the whole tower: a fully unramified bouquet is
    connected at every level iff some voltage is a unit mod p, and a
    connected base with a totally ramified vertex is always connected.
    """
    if up_to < 0:
        raise InvalidParameter("level bound must be nonnegative")
    if vg.is_bouquet() and not vg.ramified_vertices():
        if any(a % vg.p != 0 for a in vg.voltage.values()):
            return True, None
        return (True, None) if up_to == 0 else (False, 1)
    if is_connected(vg.graph) and any(
        vg.ramification[v].depth == 0 for v in vg.graph.vertices
    ):
        return True, None
    for n in range(up_to + 1):
        if not is_connected(derived_graph(vg, n).graph):
            return False, n
    return True, None
