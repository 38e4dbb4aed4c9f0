"""Spanning quasi-trees, boundary words and the quasi-tree expansion of Z.

A spanning quasi-tree of a connected ribbon graph is an edge subset A
with b(A) = 1.  Walking the single boundary circle of (V, A) through the
whole graph (ribbon links for A-edges, pass-over links at stubs of the
others) reads off each edge twice, giving a cyclic double-occurrence
word omega.  An edge gets a bar when its two visits disagree against a
fixed orientation of the edge's own boundary circle; combinatorially:

* an A-edge is barred iff its two ribbon sides are traversed in the
  same end-to-end direction;
* a non-A edge is barred iff its two pass-overs cross L-to-R / R-to-L
  equally when twisted, or unequally when untwisted.

An edge is live when it is not interlaced in omega with any
lower-ordered edge.  With ILO / ELO counting live unbarred edges inside
/ outside A, Z(G; u, v) equals
v * sum over quasi-trees of u^e(A) (1 + v/u)^ILO (1 + uv)^ELO,
which this module computes with the 1/u cleared symbolically.

The resolution tree realises the same expansion as a deletion-
contraction computation of Z in which bridges are only contracted and
trivial orientable loops only deleted; its leaves biject with the
spanning quasi-trees.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .poly import SparsePoly, Z_VARS
from .ribbon import RibbonGraph

__all__ = [
    "QuasiTreeRecord",
    "enumerate_quasi_trees",
    "boundary_word",
    "live_edges",
    "quasi_tree_records",
    "z_quasi_tree",
    "ResolutionNode",
    "resolution_tree",
    "omega_canonical",
]

Omega = tuple[tuple[str, bool], ...]


@dataclass(frozen=True)
class QuasiTreeRecord:
    edges: frozenset
    omega: Omega
    live_internal: frozenset
    live_external: frozenset
    ilo: int
    elo: int
    contribution: SparsePoly

    def __post_init__(self):
        counts: dict[str, int] = {}
        for lab, _ in self.omega:
            counts[lab] = counts.get(lab, 0) + 1
        assert all(n == 2 for n in counts.values())
        bars = {lab: b for lab, b in self.omega}
        assert self.ilo == sum(1 for l in self.live_internal if not bars[l])
        assert self.elo == sum(1 for l in self.live_external if not bars[l])


def _require_connected(g: RibbonGraph):
    if g._k_of_mask((1 << g.num_edges) - 1) != 1:
        raise ValueError("quasi-tree operations need a connected graph")


def enumerate_quasi_trees(g: RibbonGraph) -> list[frozenset]:
    """All A with b(A) = 1, ascending by size then lexicographically."""
    g._checked()
    _require_connected(g)
    labels = g.edge_labels()
    out = []
    for size in range(len(labels) + 1):
        for combo in combinations(sorted(labels), size):
            mask = g._mask_of(combo)
            if g._count_b(mask) == 1:
                out.append(frozenset(combo))
    return out


def omega_canonical(word: Sequence[tuple[str, bool]]) -> Omega:
    """Least rotation, preferring the unreversed reading on ties."""
    word = tuple(word)
    if not word:
        return word
    n = len(word)
    fwd = min(word[i:] + word[:i] for i in range(n))
    rev = tuple(reversed(word))
    bwd = min(rev[i:] + rev[:i] for i in range(n))
    return fwd if fwd <= bwd else bwd


def boundary_word(g: RibbonGraph, labels, canonical: bool = True) -> Omega:
    """The cyclic double-occurrence word of a quasi-tree, with bars."""
    g._checked()
    mask = g._mask_of(labels)
    if g._count_b(mask) != 1:
        raise ValueError("subset is not a quasi-tree: b(A) != 1")
    cycles, _ = g._word_walk(mask)
    if not cycles:  # single isolated vertex, empty word
        return ()
    assert len(cycles) == 1
    events = cycles[0]
    per_edge: dict[int, list] = {}
    for ev in events:
        per_edge.setdefault(ev[1], []).append(ev)
    barred: dict[int, bool] = {}
    for idx, evs in per_edge.items():
        kind = evs[0][0]
        if kind == "ribbon":
            barred[idx] = evs[0][3] == evs[1][3]
        else:
            by_end = {ev[2]: ev[3] for ev in evs}
            barred[idx] = (by_end[0] == by_end[1]) == g.edges[idx].twisted
    word = tuple((g.edges[ev[1]].label, barred[ev[1]]) for ev in events)
    return omega_canonical(word) if canonical else word


def live_edges(omega: Sequence[tuple[str, bool]], order: Sequence[str]) -> frozenset:
    """Labels not interlaced in omega with any lower-ordered label.

    Two labels are interlaced when they alternate cyclically,
    i .. j .. i .. j; bars are irrelevant here.
    """
    word = [lab for lab, _ in omega]
    pos: dict[str, list[int]] = {}
    for i, lab in enumerate(word):
        pos.setdefault(lab, []).append(i)
    rank = {lab: i for i, lab in enumerate(order)}

    def interlaced(a: str, b: str) -> bool:
        p1, p2 = pos[a]
        q = sum(1 for x in pos[b] if p1 < x < p2)
        return q == 1

    out = []
    for lab in pos:
        if not any(interlaced(lab, other) for other in pos
                   if rank[other] < rank[lab]):
            out.append(lab)
    return frozenset(out)


def quasi_tree_records(g: RibbonGraph, order: Sequence[str] | None = None) -> list[QuasiTreeRecord]:
    """One record per spanning quasi-tree; ``order`` defaults to the
    graph's edge order."""
    if order is None:
        order = g.edge_labels()
    u_plus_v = SparsePoly(Z_VARS, {(1, 0): 1, (0, 1): 1})
    one_plus_uv = SparsePoly(Z_VARS, {(0, 0): 1, (1, 1): 1})
    u = SparsePoly.variable(Z_VARS, "u")
    records = []
    for subset in enumerate_quasi_trees(g):
        omega = boundary_word(g, subset)
        live = live_edges(omega, order)
        bars = {lab: b for lab, b in omega}
        live_in = frozenset(l for l in live if l in subset)
        live_out = live - live_in
        ilo = sum(1 for l in live_in if not bars[l])
        elo = sum(1 for l in live_out if not bars[l])
        contribution = (u ** (len(subset) - ilo)) * (u_plus_v ** ilo) * (one_plus_uv ** elo)
        records.append(QuasiTreeRecord(subset, omega, live_in, live_out,
                                       ilo, elo, contribution))
    return records


def z_quasi_tree(g: RibbonGraph, order: Sequence[str] | None = None) -> SparsePoly:
    """Z via the quasi-tree expansion; independent of ``order``."""
    v = SparsePoly.variable(Z_VARS, "v")
    total = SparsePoly(Z_VARS, {})
    for rec in quasi_tree_records(g, order):
        total = total + rec.contribution
    return v * total


# -- resolution trees -----------------------------------------------------------


def _is_trivial_loop(g: RibbonGraph, label: str) -> bool:
    """A loop is trivial when no cycle interlaces it: no two edges of a
    cycle have stubs in the two different arcs its ends cut out of the
    vertex rotation."""
    if not g.is_loop(label):
        return False
    _, stub_vertex, _, _ = g._arr()
    i = g._index_of(label)
    x = stub_vertex[2 * i]
    rot = list(g.vertices[x])
    p1 = rot.index((label, 0))
    p2 = rot.index((label, 1))
    lo, hi = min(p1, p2), max(p1, p2)
    arc1 = rot[lo + 1:hi]
    arc2 = rot[hi + 1:] + rot[:lo]
    labs1 = [l for l, _ in arc1]
    labs2 = [l for l, _ in arc2]
    # another loop at x with one stub in each arc
    for l in set(labs1) & set(labs2):
        if g.is_loop(l):
            return False
    # two non-loop edges, one per arc, whose far ends connect avoiding x
    nv = g.num_vertices
    parent = list(range(nv))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for j, e in enumerate(g.edges):
        a, b = stub_vertex[2 * j], stub_vertex[2 * j + 1]
        if a != x and b != x:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

    def far_comp(labs):
        comps = set()
        for l in labs:
            j = g._index_of(l)
            a, b = stub_vertex[2 * j], stub_vertex[2 * j + 1]
            if a == x and b == x:
                continue  # loop at x, both stubs in one arc
            comps.add(find(b if a == x else a))
        return comps

    return not (far_comp(labs1) & far_comp(labs2))


@dataclass
class ResolutionNode:
    """Node of the Z resolution tree; ``children`` pairs a branch weight
    with the child node.  Leaves are single-vertex graphs."""

    graph: RibbonGraph
    height: int
    edge: str | None
    rule: str
    children: list[tuple[SparsePoly, "ResolutionNode"]]

    def leaves(self) -> list["ResolutionNode"]:
        if not self.children:
            return [self]
        out = []
        for _, child in self.children:
            out.extend(child.leaves())
        return out

    def branch_products(self) -> list[SparsePoly]:
        one = SparsePoly.constant(Z_VARS, 1)
        if not self.children:
            return [one]
        out = []
        for weight, child in self.children:
            out.extend(weight * p for p in child.branch_products())
        return out

    def leaf_subsets(self, _deleted: frozenset = frozenset()) -> list[frozenset]:
        """Quasi-tree per leaf: the edges NOT deleted along its branch."""
        if not self.children:
            root_edges = self._root_edges
            return [frozenset(root_edges) - _deleted]
        out = []
        for _, child in self.children:
            extra = ({self.edge} if child._came_from_delete else set())
            out.extend(child.leaf_subsets(_deleted | frozenset(extra)))
        return out

    def z_total(self) -> SparsePoly:
        v = SparsePoly.variable(Z_VARS, "v")
        total = SparsePoly(Z_VARS, {})
        for product, leaf in zip(self.branch_products(), self.leaves()):
            total = total + product * (v ** leaf.graph.num_vertices)
        return total


def resolution_tree(g: RibbonGraph, order: Sequence[str] | None = None) -> ResolutionNode:
    """Resolution tree of the Z deletion-contraction computation with
    bridges contracted under weight (u+v) and trivial orientable loops
    deleted under weight (1+uv); the processing order runs from the
    highest-ordered edge down."""
    g._checked()
    _require_connected(g)
    if order is None:
        order = g.edge_labels()
    order = list(order)
    if sorted(order) != sorted(g.edge_labels()):
        raise ValueError("order must be a permutation of the edge labels")
    u = SparsePoly.variable(Z_VARS, "u")
    one = SparsePoly.constant(Z_VARS, 1)
    u_plus_v = SparsePoly(Z_VARS, {(1, 0): 1, (0, 1): 1})
    one_plus_uv = SparsePoly(Z_VARS, {(0, 0): 1, (1, 1): 1})
    root_edges = frozenset(g.edge_labels())

    def build(h: RibbonGraph, height: int, came_delete: bool) -> ResolutionNode:
        if height == 0:
            node = ResolutionNode(h, 0, None, "leaf", [])
        else:
            e = order[height - 1]
            if h.is_bridge(e):
                child = build(h.contract(e), height - 1, False)
                node = ResolutionNode(h, height, e, "bridge", [(u_plus_v, child)])
            elif _is_trivial_loop(h, e) and not h.edge(e).twisted:
                child = build(h.delete(e), height - 1, True)
                node = ResolutionNode(h, height, e, "trivial_orientable_loop",
                                      [(one_plus_uv, child)])
            else:
                left = build(h.delete(e), height - 1, True)
                right = build(h.contract(e), height - 1, False)
                node = ResolutionNode(h, height, e, "split",
                                      [(one, left), (u, right)])
        node._came_from_delete = came_delete
        node._root_edges = root_edges
        return node

    return build(g, len(order), False)
