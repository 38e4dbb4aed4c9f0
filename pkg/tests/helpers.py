"""Corpus generators shared by the test modules.

The exhaustive corpus covers every rotation system with at most two
vertices and at most four edges, over all twist patterns, deduplicated
up to the admissible normalisations (rotation starts, vertex
reflections, end numbering, vertex order, edge relabelling); testing
two equal embedded graphs twice proves nothing and costs time.
"""

from __future__ import annotations

import random

from ribbonpoly.ribbon import RibbonGraph


def _perfect_matchings(items):
    if not items:
        yield []
        return
    first = items[0]
    for i in range(1, len(items)):
        rest = items[1:i] + items[i + 1:]
        for m in _perfect_matchings(rest):
            yield [(first, items[i])] + m


def _relabel_key(seq):
    """Encode a stub sequence with edges numbered by first appearance and
    the first occurrence of each edge treated as end 0."""
    order: dict[int, int] = {}
    first_end: dict[int, int] = {}
    out = []
    for edge, end in seq:
        if edge not in order:
            order[edge] = len(order)
            first_end[edge] = end
        out.append((order[edge], 0 if end == first_end[edge] else 1))
    return tuple(out)


def _min_rotation_key(seq):
    if not seq:
        return ()
    return min(_relabel_key(seq[i:] + seq[:i]) for i in range(len(seq)))


def _layouts(ne: int, nv: int):
    """Distinct stub layouts (rotation systems without twists), pruned to
    rotation-canonical representatives; exact dedup happens later."""
    positions = list(range(2 * ne))
    if ne == 0:
        yield [[] for _ in range(nv)]
        return
    splits = [2 * ne] if nv == 1 else range(0, 2 * ne + 1)
    for k in splits:
        if nv == 2 and k > 2 * ne - k:
            continue  # vertex swap covers the other half
        for matching in _perfect_matchings(positions):
            stub_at = {}
            for ei, (p, q) in enumerate(matching):
                stub_at[p] = (ei, 0)
                stub_at[q] = (ei, 1)
            v0 = [stub_at[p] for p in range(k)]
            v1 = [stub_at[p] for p in range(k, 2 * ne)]
            if _relabel_key(v0 + v1) != min(
                    _relabel_key(v0[i:] + v0[:i] + v1[j:] + v1[:j])
                    for i in range(max(1, len(v0)))
                    for j in range(max(1, len(v1)))):
                continue
            yield [v0, v1] if nv == 2 else [v0]


def exhaustive_corpus(max_v: int = 2, max_e: int = 4) -> list[RibbonGraph]:
    """All rotation systems with <= max_v vertices and <= max_e edges,
    every twist pattern, up to equality of embedded graphs."""
    seen = set()
    out = []
    for ne in range(max_e + 1):
        for nv in range(1, max_v + 1):
            for layout in _layouts(ne, nv):
                rots = [[(f"e{ei + 1}", end) for ei, end in rot] for rot in layout]
                for twist_mask in range(1 << ne):
                    g = RibbonGraph(
                        rots, [(f"e{i + 1}", bool(twist_mask >> i & 1))
                               for i in range(ne)])
                    key = g.canonical_key(labeled=False)
                    if key not in seen:
                        seen.add(key)
                        out.append(g)
    return out


def random_graph(rng: random.Random, max_edges: int = 8,
                 max_vertices: int = 5) -> RibbonGraph:
    ne = rng.randint(0, max_edges)
    nv = rng.randint(1, max_vertices)
    stubs = [(f"e{i + 1}", end) for i in range(ne) for end in (0, 1)]
    rng.shuffle(stubs)
    rots = [[] for _ in range(nv)]
    for s in stubs:
        rots[rng.randrange(nv)].append(s)
    edges = [(f"e{i + 1}", rng.random() < 0.4) for i in range(ne)]
    return RibbonGraph(rots, edges)


def random_connected_graph(rng: random.Random, max_edges: int = 8,
                           max_vertices: int = 4) -> RibbonGraph:
    while True:
        g = random_graph(rng, max_edges, max_vertices)
        if g.num_vertices and g._k_of_mask((1 << g.num_edges) - 1) == 1:
            return g


def random_corpus(n: int, seed: int, max_edges: int = 8) -> list[RibbonGraph]:
    rng = random.Random(seed)
    return [random_graph(rng, max_edges) for _ in range(n)]


def random_plane_graph(rng: random.Random, max_edges: int = 8) -> RibbonGraph:
    """A random genus-zero ribbon graph, built by plane-preserving moves:
    pendant edges, trivial loops, and parallel doublings along a face."""
    rots: list[list[tuple[str, int]]] = [[]]
    edges: list[tuple[str, bool]] = []
    target = rng.randint(1, max_edges)
    while len(edges) < target:
        lab = f"e{len(edges) + 1}"
        op = rng.choice(["pendant", "loop", "parallel"] if edges else ["pendant", "loop"])
        if op == "pendant":
            vi = rng.randrange(len(rots))
            gap = rng.randint(0, len(rots[vi]))
            rots[vi].insert(gap, (lab, 0))
            rots.append([(lab, 1)])
        elif op == "loop":
            vi = rng.randrange(len(rots))
            gap = rng.randint(0, len(rots[vi]))
            rots[vi][gap:gap] = [(lab, 0), (lab, 1)]
        else:
            base, _ = edges[rng.randrange(len(edges))]
            (vi, pi) = next((v, r.index((base, 0))) for v, r in enumerate(rots)
                            if (base, 0) in r)
            (vj, pj) = next((v, r.index((base, 1))) for v, r in enumerate(rots)
                            if (base, 1) in r)
            if vi == vj and pj < pi:
                rots[vi].insert(pi + 1, (lab, 0))
                rots[vj].insert(pj, (lab, 1))
            else:
                rots[vj].insert(pj, (lab, 1))
                rots[vi].insert(rots[vi].index((base, 0)) + 1, (lab, 0))
        edges.append((lab, False))
    g = RibbonGraph(rots, edges)
    st = g.stats()
    assert st.gamma == 0 and st.orientable, "plane generator produced genus > 0"
    return g


def random_plane_corpus(n: int, seed: int, max_edges: int = 8) -> list[RibbonGraph]:
    rng = random.Random(seed)
    return [random_plane_graph(rng, max_edges) for _ in range(n)]
