"""Independent brute-force checkers on abstract (non-embedded) graphs.

Deliberately shares no code with the ribbon/tutte computation paths:
subset iteration, connectivity and the deletion-contraction recursion
are all reimplemented here, so agreement between the two sides of any
cross-check is evidence rather than tautology.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import SparsePoly, XY_VARS

__all__ = [
    "AbstractGraph",
    "underlying",
    "classical_tutte",
    "classical_tutte_statesum",
    "spanning_forest_count",
    "maximal_spanning_forest_count",
]

SUBSET_GUARD = 20  # refuse 2**e enumeration beyond this many edges


@dataclass(frozen=True)
class AbstractGraph:
    """Multigraph with loops; vertices are 0..n-1."""

    n: int
    edges: tuple[tuple[str, int, int], ...]

    def __post_init__(self):
        for lab, a, b in self.edges:
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ValueError(f"edge {lab!r} endpoint out of range")

    @property
    def num_edges(self) -> int:
        return len(self.edges)


def underlying(g) -> AbstractGraph:
    """Forget rotations and twists of a RibbonGraph."""
    pos = {}
    for vi, rot in enumerate(g.vertices):
        for lab, end in rot:
            pos[(lab, end)] = vi
    edges = tuple((e.label, pos[(e.label, 0)], pos[(e.label, 1)]) for e in g.edges)
    return AbstractGraph(g.num_vertices, edges)


def _components(n: int, edges) -> int:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for _, a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return sum(1 for v in range(n) if find(v) == v)


def _is_loop(g: AbstractGraph, i: int) -> bool:
    _, a, b = g.edges[i]
    return a == b


def _is_bridge(g: AbstractGraph, i: int) -> bool:
    rest = g.edges[:i] + g.edges[i + 1:]
    return _components(g.n, rest) > _components(g.n, g.edges)


def _delete(g: AbstractGraph, i: int) -> AbstractGraph:
    return AbstractGraph(g.n, g.edges[:i] + g.edges[i + 1:])


def _contract(g: AbstractGraph, i: int) -> AbstractGraph:
    _, u, v = g.edges[i]
    if u == v:
        raise ValueError("cannot contract a loop")
    keep, drop = (u, v) if u < v else (v, u)

    def move(x):
        if x == drop:
            return keep
        return x - 1 if x > drop else x

    edges = tuple((lab, move(a), move(b))
                  for j, (lab, a, b) in enumerate(g.edges) if j != i)
    return AbstractGraph(g.n - 1, edges)


def classical_tutte(g: AbstractGraph) -> SparsePoly:
    """Classical Tutte polynomial by deletion-contraction."""
    x = SparsePoly.variable(XY_VARS, "x")
    y = SparsePoly.variable(XY_VARS, "y")
    one = SparsePoly.constant(XY_VARS, 1)

    def rec(h: AbstractGraph) -> SparsePoly:
        if not h.edges:
            return one
        i = 0
        if _is_loop(h, i):
            return y * rec(_delete(h, i))
        if _is_bridge(h, i):
            return x * rec(_contract(h, i))
        return rec(_delete(h, i)) + rec(_contract(h, i))

    return rec(g)


def classical_tutte_statesum(g: AbstractGraph) -> SparsePoly:
    """The rank-nullity state sum; the well-definedness witness."""
    if g.num_edges > SUBSET_GUARD:
        raise ValueError(f"refusing 2**{g.num_edges} subsets (guard {SUBSET_GUARD})")
    xm1 = SparsePoly(XY_VARS, {(1, 0): 1, (0, 0): -1})
    ym1 = SparsePoly(XY_VARS, {(0, 1): 1, (0, 0): -1})
    r_full = g.n - _components(g.n, g.edges)
    total = SparsePoly(XY_VARS, {})
    for mask in range(1 << g.num_edges):
        sub = [e for i, e in enumerate(g.edges) if mask >> i & 1]
        r = g.n - _components(g.n, sub)
        total = total + (xm1 ** (r_full - r)) * (ym1 ** (len(sub) - r))
    return total


def _acyclic(g: AbstractGraph, sub) -> bool:
    # acyclic iff |A| == n - k(A) and no loops
    if any(a == b for _, a, b in sub):
        return False
    return len(sub) == g.n - _components(g.n, sub)


def spanning_forest_count(g: AbstractGraph) -> int:
    """Number of spanning forests: all acyclic edge subsets."""
    if g.num_edges > SUBSET_GUARD:
        raise ValueError(f"refusing 2**{g.num_edges} subsets (guard {SUBSET_GUARD})")
    count = 0
    for mask in range(1 << g.num_edges):
        sub = [e for i, e in enumerate(g.edges) if mask >> i & 1]
        if _acyclic(g, sub):
            count += 1
    return count


def maximal_spanning_forest_count(g: AbstractGraph) -> int:
    """Acyclic subsets with as many trees as the graph has components
    (spanning trees when the graph is connected)."""
    if g.num_edges > SUBSET_GUARD:
        raise ValueError(f"refusing 2**{g.num_edges} subsets (guard {SUBSET_GUARD})")
    k_full = _components(g.n, g.edges)
    count = 0
    for mask in range(1 << g.num_edges):
        sub = [e for i, e in enumerate(g.edges) if mask >> i & 1]
        if _acyclic(g, sub) and _components(g.n, sub) == k_full:
            count += 1
    return count
