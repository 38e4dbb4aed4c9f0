"""Ribbon graphs as signed rotation systems.

A ribbon graph is stored as an ordered list of vertices, each carrying a
cyclic sequence of stubs (edge ends), plus one twist bit per edge.  A
stub is the pair ``(label, end)`` with ``end`` in {0, 1}.  That data
determines the embedded surface completely; every topological quantity
here is derived from one primitive, the boundary walk on flags.

A flag is a side of a stub: ``(stub, "L")`` or ``(stub, "R")``, four per
edge.  Boundary components of the spanning ribbon subgraph (V, A) are
the cycles of the union of two perfect matchings on flags:

* corner links tie ``(s, L)`` to ``(succ(s), R)`` where succ is the next
  A-stub in the vertex rotation (rotations are read counterclockwise);
* ribbon links tie the four flags of an edge across the ribbon,
  ``(s0,L)-(s1,R)`` and ``(s0,R)-(s1,L)`` when untwisted, or
  ``(s0,L)-(s1,L)`` and ``(s0,R)-(s1,R)`` when twisted.

Vertices with no stub in A contribute one boundary circle each.

The same walk, run over the full stub set with pass-over links
``(s,L)-(s,R)`` at stubs of edges outside A, yields the boundary words
used by the quasi-tree machinery, and (over A = E) the geometric dual.

Graphs are immutable; all operations return new values.  Equality is
equality of embedded structure: vertex order, rotation starting points,
vertex reflections (which toggle twists of non-loop incident edges) and
the arbitrary 0/1 numbering of edge ends are all normalised away by a
canonical flag encoding.  Edge labels are significant.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

__all__ = [
    "Edge",
    "RibbonGraph",
    "SubsetStats",
    "EdgeClass",
    "catalog",
    "CATALOG_NAMES",
]


@dataclass(frozen=True)
class Edge:
    label: str
    twisted: bool = False


class EdgeClass(Enum):
    BRIDGE = "bridge"
    ORDINARY = "ordinaryNonloop"
    ORIENTABLE_LOOP = "orientableLoop"
    NONORIENTABLE_LOOP = "nonorientableLoop"


@dataclass(frozen=True)
class SubsetStats:
    """Counting functions of a spanning ribbon subgraph (V, A).

    gamma is the Euler genus, fixed by Euler's formula
    v - e + b = 2k - gamma; twice_rho = 2r + gamma = e + v - b.
    """

    subset: frozenset
    v: int
    e: int
    k: int
    b: int
    r: int
    gamma: int
    twice_rho: int
    orientable: bool

    def __post_init__(self):
        # Euler consistency guard; a failure here means the boundary walk
        # and the connectivity count disagree.
        assert self.v - self.e + self.b == 2 * self.k - self.gamma
        assert self.twice_rho == 2 * self.r + self.gamma == self.e + self.v - self.b
        assert self.gamma >= 0
        assert not (self.orientable and self.gamma % 2)

    @property
    def genus(self) -> int:
        return self.gamma // 2 if self.orientable else self.gamma


class RibbonGraph:
    """Immutable ribbon graph; see the module docstring for semantics."""

    __slots__ = ("vertices", "edges", "_label_index", "_arrays", "_key", "_ukey")

    def __init__(self, rotations: Iterable[Iterable[tuple[str, int]]],
                 edges: Iterable[Edge | tuple[str, bool] | str]):
        vs = []
        for rot in rotations:
            vs.append(tuple((str(lab), int(end)) for lab, end in rot))
        object.__setattr__(self, "vertices", tuple(vs))
        es = []
        for e in edges:
            if isinstance(e, Edge):
                es.append(e)
            elif isinstance(e, str):
                es.append(Edge(e, False))
            else:
                lab, tw = e
                es.append(Edge(str(lab), bool(tw)))
        object.__setattr__(self, "edges", tuple(es))
        object.__setattr__(self, "_label_index",
                           {e.label: i for i, e in enumerate(self.edges)})
        object.__setattr__(self, "_arrays", None)
        object.__setattr__(self, "_key", None)
        object.__setattr__(self, "_ukey", None)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("RibbonGraph is immutable")

    # -- construction helpers -------------------------------------------

    @classmethod
    def from_rotations(cls, rotations: Sequence[Sequence[str]],
                       twisted: Iterable[str] = ()) -> "RibbonGraph":
        """Build from stub tokens like ``"a.0"``; edges in first-seen order."""
        twisted = set(twisted)
        seen: list[str] = []
        rots = []
        for rot in rotations:
            out = []
            for token in rot:
                lab, _, end = token.rpartition(".")
                if end not in ("0", "1") or not lab:
                    raise ValueError(f"bad stub token {token!r}")
                if lab not in seen:
                    seen.append(lab)
                out.append((lab, int(end)))
            rots.append(out)
        return cls(rots, [Edge(lab, lab in twisted) for lab in seen])

    # -- basic views ------------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge_labels(self) -> tuple[str, ...]:
        return tuple(e.label for e in self.edges)

    def edge(self, label: str) -> Edge:
        return self.edges[self._index_of(label)]

    def _index_of(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise KeyError(f"unknown edge label {label!r}") from None

    def __repr__(self):
        rots = ["(" + " ".join(f"{l}.{e}" for l, e in rot) + ")" for rot in self.vertices]
        tw = ",".join(e.label for e in self.edges if e.twisted)
        return f"RibbonGraph({' '.join(rots)}; twisted=[{tw}])"

    # -- validation -------------------------------------------------------

    def validate(self) -> list[str]:
        """Structural invariant violations, as human-readable strings."""
        problems = []
        labels = {e.label for e in self.edges}
        seen: set[str] = set()
        for e in self.edges:
            if e.label in seen:
                problems.append(f"duplicate-label: edge {e.label!r} declared more than once")
            seen.add(e.label)
        placed: dict[tuple[str, int], int] = {}
        for vi, rot in enumerate(self.vertices):
            for stub in rot:
                lab, end = stub
                if lab not in labels:
                    problems.append(f"dangling-stub: {lab}.{end} at vertex {vi} has no edge record")
                placed[stub] = placed.get(stub, 0) + 1
        for stub, n in sorted(placed.items()):
            if stub[0] in labels and n > 1:
                problems.append(f"duplicate-stub: {stub[0]}.{stub[1]} placed {n} times")
        for e in self.edges:
            missing = [end for end in (0, 1) if (e.label, end) not in placed]
            if missing:
                problems.append(
                    f"missing-end: edge {e.label!r} lacks stub(s) "
                    + ", ".join(f"{e.label}.{m}" for m in missing))
        return problems

    def _checked(self) -> "RibbonGraph":
        problems = self.validate()
        if problems:
            raise ValueError("invalid ribbon graph: " + "; ".join(problems))
        return self

    # -- integer-indexed arrays for the walks ------------------------------
    #
    # Stub ids: edge i owns stubs 2i (end 0) and 2i+1 (end 1).
    # Flag ids: stub s owns flags 2s (side L) and 2s+1 (side R).

    def _arr(self):
        arrs = self._arrays
        if arrs is None:
            ne = len(self.edges)
            rot_ids = []
            stub_vertex = [-1] * (2 * ne)
            for vi, rot in enumerate(self.vertices):
                ids = []
                for lab, end in rot:
                    s = 2 * self._index_of(lab) + end
                    ids.append(s)
                    stub_vertex[s] = vi
                rot_ids.append(ids)
            twist = [e.twisted for e in self.edges]
            mate = [0] * (4 * ne)
            for i in range(ne):
                f = 4 * i  # (2i, L)
                if twist[i]:
                    mate[f], mate[f + 2] = f + 2, f          # (s0,L)-(s1,L)
                    mate[f + 1], mate[f + 3] = f + 3, f + 1  # (s0,R)-(s1,R)
                else:
                    mate[f], mate[f + 3] = f + 3, f          # (s0,L)-(s1,R)
                    mate[f + 1], mate[f + 2] = f + 2, f + 1  # (s0,R)-(s1,L)
            arrs = (rot_ids, stub_vertex, twist, mate)
            object.__setattr__(self, "_arrays", arrs)
        return arrs

    def _ribbon_mate(self):
        """Ribbon-link involution on flag ids (cached)."""
        return self._arr()[3]

    def _mask_of(self, labels: Iterable[str] | None) -> int:
        if labels is None:
            return (1 << len(self.edges)) - 1
        mask = 0
        for lab in labels:
            mask |= 1 << self._index_of(lab)
        return mask

    def _count_b(self, mask: int) -> int:
        """Number of boundary components of (V, A); the hot path."""
        rot_ids, _, _, _ = self._arr()
        ne = len(self.edges)
        corner = [0] * (4 * ne)
        lonely = 0
        any_active = []
        for ids in rot_ids:
            first = -1
            prev = -1
            for s in ids:
                if mask >> (s >> 1) & 1:
                    if first < 0:
                        first = s
                    else:
                        corner[2 * prev] = 2 * s + 1
                        corner[2 * s + 1] = 2 * prev
                    prev = s
            if first < 0:
                lonely += 1
            else:
                corner[2 * prev] = 2 * first + 1
                corner[2 * first + 1] = 2 * prev
        ribbon = self._ribbon_mate()
        visited = bytearray(4 * ne)
        cycles = 0
        m = mask
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            for f0 in range(4 * i, 4 * i + 4):
                if visited[f0]:
                    continue
                cycles += 1
                cur = f0
                visited[cur] = 1
                while True:
                    cur = corner[cur]
                    visited[cur] = 1
                    cur = ribbon[cur]
                    if cur == f0:
                        break
                    visited[cur] = 1
        return cycles + lonely

    def _boundary_cycles(self, mask: int):
        """Cycles over A-flags, with per-ribbon-traversal records.

        Returns (cycles, lonely_vertices) where each cycle is a list of
        events ``(flag_id, edge_idx, direction)`` for ribbon traversals,
        direction 0 meaning end0 -> end1; flag_id is the flag the
        traversal departs from.  The full flag itinerary is kept too.
        """
        rot_ids, _, _, _ = self._arr()
        ne = len(self.edges)
        corner = [0] * (4 * ne)
        lonely = []
        for vi, ids in enumerate(rot_ids):
            first = -1
            prev = -1
            for s in ids:
                if mask >> (s >> 1) & 1:
                    if first < 0:
                        first = s
                    else:
                        corner[2 * prev] = 2 * s + 1
                        corner[2 * s + 1] = 2 * prev
                    prev = s
            if first < 0:
                lonely.append(vi)
            else:
                corner[2 * prev] = 2 * first + 1
                corner[2 * first + 1] = 2 * prev
        ribbon = self._ribbon_mate()
        visited = bytearray(4 * ne)
        cycles = []
        for i in range(ne):
            if not (mask >> i & 1):
                continue
            for f0 in range(4 * i, 4 * i + 4):
                if visited[f0]:
                    continue
                flags = []
                events = []
                cur = f0
                visited[cur] = 1
                flags.append(cur)
                while True:
                    cur = corner[cur]
                    visited[cur] = 1
                    flags.append(cur)
                    nxt = ribbon[cur]
                    events.append((cur, cur >> 2, (cur >> 1) & 1))
                    cur = nxt
                    if cur == f0:
                        break
                    visited[cur] = 1
                    flags.append(cur)
                cycles.append((flags, events))
        return cycles, lonely

    def _word_walk(self, mask: int):
        """Boundary walk of (V, A) over the full stub set of the graph.

        Stubs of edges outside A are passed over via the link
        ``(s,L)-(s,R)``.  Returns a list of cycles; each cycle is a list
        of events:

        * ``("ribbon", edge_idx, end_departed, direction)`` with
          direction 0 = end0 -> end1,
        * ``("pass", edge_idx, end, lr_direction)`` with lr_direction 0
          meaning the walk crossed the stub from side L to side R.
        """
        rot_ids, _, _, _ = self._arr()
        ne = len(self.edges)
        corner = [0] * (4 * ne)
        n_empty = 0
        for ids in rot_ids:
            if not ids:
                n_empty += 1
                continue
            prev = ids[-1]
            for s in ids:
                corner[2 * prev] = 2 * s + 1
                corner[2 * s + 1] = 2 * prev
                prev = s
        ribbon = self._ribbon_mate()
        visited = bytearray(4 * ne)
        cycles = []
        for f0 in range(4 * ne):
            if visited[f0]:
                continue
            events = []
            cur = f0
            visited[cur] = 1
            while True:
                cur = corner[cur]
                visited[cur] = 1
                stub = cur >> 1
                edge = stub >> 1
                if mask >> edge & 1:
                    # direction 0 = end0 -> end1, i.e. we depart from end 0
                    events.append(("ribbon", edge, stub & 1, stub & 1))
                    cur = ribbon[cur]
                else:
                    # pass over: flip side bit; L->R if we sat on L
                    events.append(("pass", edge, stub & 1, cur & 1))
                    cur = cur ^ 1
                if cur == f0:
                    break
                visited[cur] = 1
            cycles.append(events)
        return cycles, n_empty

    # -- public topology ---------------------------------------------------

    def boundary_components(self, labels: Iterable[str] | None = None):
        """Flag cycles of the spanning subgraph (V, A).

        Cycles are lists of flags ``((label, end), side)``; vertices with
        no A-stub contribute an empty cycle each.
        """
        self._checked()
        mask = self._mask_of(labels)
        raw, lonely = self._boundary_cycles(mask)
        out = []
        for flags, _ in raw:
            cyc = []
            for f in flags:
                stub = f >> 1
                side = "L" if f % 2 == 0 else "R"
                cyc.append(((self.edges[stub >> 1].label, stub & 1), side))
            out.append(cyc)
        out.extend([] for _ in lonely)
        return out

    def b(self, labels: Iterable[str] | None = None) -> int:
        self._checked()
        return self._count_b(self._mask_of(labels))

    def _k_of_mask(self, mask: int) -> int:
        nv = len(self.vertices)
        parent = list(range(nv))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        _, stub_vertex, _, _ = self._arr()
        m = mask
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            ra, rb = find(stub_vertex[2 * i]), find(stub_vertex[2 * i + 1])
            if ra != rb:
                parent[ra] = rb
        return sum(1 for v in range(nv) if find(v) == v)

    def _orientable_mask(self, mask: int) -> bool:
        """(V, A) is orientable iff no cycle carries odd twist parity."""
        _, stub_vertex, twist, _ = self._arr()
        nv = len(self.vertices)
        parent = list(range(nv))
        parity = [0] * nv

        def find(a):
            p = 0
            while parent[a] != a:
                p ^= parity[a]
                a = parent[a]
            return a, p

        m = mask
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            u, v = stub_vertex[2 * i], stub_vertex[2 * i + 1]
            if u == v:
                if twist[i]:
                    return False
                continue
            (ru, pu), (rv, pv) = find(u), find(v)
            need = pu ^ pv ^ (1 if twist[i] else 0)
            if ru == rv:
                if need:
                    return False
            else:
                parent[ru] = rv
                parity[ru] = need
        return True

    def stats(self, labels: Iterable[str] | None = None) -> SubsetStats:
        self._checked()
        mask = self._mask_of(labels)
        return self._stats_mask(mask,
                                frozenset(self.edge_labels()) if labels is None
                                else frozenset(labels))

    def _stats_mask(self, mask: int, subset: frozenset) -> SubsetStats:
        nv = len(self.vertices)
        e = bin(mask).count("1")
        b = self._count_b(mask)
        k = self._k_of_mask(mask)
        gamma = 2 * k - nv + e - b
        return SubsetStats(subset=subset, v=nv, e=e, k=k, b=b, r=nv - k,
                           gamma=gamma, twice_rho=e + nv - b,
                           orientable=self._orientable_mask(mask))

    # -- minors ------------------------------------------------------------

    def delete(self, label: str) -> "RibbonGraph":
        return self.delete_set([label])

    def delete_set(self, labels: Iterable[str]) -> "RibbonGraph":
        self._checked()
        doomed = {self.edges[self._index_of(l)].label for l in labels}
        rots = [[s for s in rot if s[0] not in doomed] for rot in self.vertices]
        return RibbonGraph(rots, [e for e in self.edges if e.label not in doomed])

    def _flip_vertex(self, vi: int) -> "RibbonGraph":
        """Reverse a rotation; toggles twists of non-loop incident edges."""
        rot = self.vertices[vi]
        at_v = {}
        for lab, _ in rot:
            at_v[lab] = at_v.get(lab, 0) + 1
        toggle = {lab for lab, n in at_v.items() if n == 1}
        rots = [list(r) for r in self.vertices]
        rots[vi] = list(reversed(rots[vi]))
        edges = [Edge(e.label, e.twisted ^ (e.label in toggle)) for e in self.edges]
        return RibbonGraph(rots, edges)

    def contract(self, label: str) -> "RibbonGraph":
        self._checked()
        i = self._index_of(label)
        _, stub_vertex, _, _ = self._arr()
        u, v = stub_vertex[2 * i], stub_vertex[2 * i + 1]
        if u == v:
            # Loop: contract through the dual, G/e = (G* \ e*)*.
            return self.dual().delete(label).dual()
        g = self
        if g.edges[i].twisted:
            g = g._flip_vertex(v)  # makes the contracted edge untwisted
        su, sv = (label, 0), (label, 1)  # su sits at u, sv at v
        u_rot = list(g.vertices[u])
        v_rot = list(g.vertices[v])
        j = v_rot.index(sv)
        spliced = v_rot[j + 1:] + v_rot[:j]
        pos = u_rot.index(su)
        new_u = u_rot[:pos] + spliced + u_rot[pos + 1:]
        rots = [new_u if vi == u else list(r)
                for vi, r in enumerate(g.vertices) if vi != v]
        return RibbonGraph(rots, [e for e in g.edges if e.label != label])

    def contract_set(self, labels: Iterable[str]) -> "RibbonGraph":
        g = self
        for lab in labels:
            g = g.contract(lab)
        return g

    # -- geometric dual ------------------------------------------------------

    def dual(self) -> "RibbonGraph":
        """Dual ribbon graph: one vertex per boundary component of (V, E).

        Each edge e yields e* with the same label; its stubs sit on the
        cycles traversing e's two ribbon sides, in traversal order, and
        e* is twisted iff both sides are run in the same end-to-end
        direction.
        """
        self._checked()
        full = (1 << len(self.edges)) - 1
        cycles, lonely = self._boundary_cycles(full)
        seen_ends: dict[int, int] = {}   # edge idx -> 0/1 sides already met
        directions: dict[int, list[int]] = {}
        rots = []
        for flags, events in cycles:
            rot = []
            for _, edge, direction in events:
                end = seen_ends.get(edge, 0)
                seen_ends[edge] = end + 1
                directions.setdefault(edge, []).append(direction)
                rot.append((self.edges[edge].label, end))
            rots.append(rot)
        rots.extend([] for _ in lonely)
        edges = []
        for e in self.edges:
            i = self._index_of(e.label)
            d = directions.get(i, [])
            edges.append(Edge(e.label, len(d) == 2 and d[0] == d[1]))
        return RibbonGraph(rots, edges)

    # -- edge classification ---------------------------------------------------

    def is_loop(self, label: str) -> bool:
        i = self._index_of(label)
        _, stub_vertex, _, _ = self._arr()
        return stub_vertex[2 * i] == stub_vertex[2 * i + 1]

    def is_bridge(self, label: str) -> bool:
        full = (1 << len(self.edges)) - 1
        i = self._index_of(label)
        return self._k_of_mask(full ^ (1 << i)) > self._k_of_mask(full)

    def classify_edge(self, label: str) -> EdgeClass:
        self._checked()
        e = self.edge(label)
        if self.is_loop(label):
            return EdgeClass.NONORIENTABLE_LOOP if e.twisted else EdgeClass.ORIENTABLE_LOOP
        return EdgeClass.BRIDGE if self.is_bridge(label) else EdgeClass.ORDINARY

    def co_class(self, label: str) -> EdgeClass:
        """Classification of e* in the dual, without materialising it.

        e* is a loop iff both ribbon sides of e lie on one boundary cycle
        of (V, E); then it is orientable iff the two traversals run in
        opposite end-to-end directions.
        """
        self._checked()
        i = self._index_of(label)
        full = (1 << len(self.edges)) - 1
        cycles, _ = self._boundary_cycles(full)
        for _, events in cycles:
            dirs = [d for _, edge, d in events if edge == i]
            if len(dirs) == 2:
                return (EdgeClass.NONORIENTABLE_LOOP if dirs[0] == dirs[1]
                        else EdgeClass.ORIENTABLE_LOOP)
            if len(dirs) == 1:
                break
        # e* is not a loop; it is a bridge in the dual iff contracting e
        # disconnects, since k(G*) = k(G) and G* \ e* = (G/e)*.
        k_now = self._k_of_mask(full)
        contracted = self.contract(label)
        k_contracted = contracted._k_of_mask((1 << len(contracted.edges)) - 1)
        return EdgeClass.BRIDGE if k_contracted > k_now else EdgeClass.ORDINARY

    # -- composition -------------------------------------------------------------

    def relabel(self, mapping: dict[str, str]) -> "RibbonGraph":
        rots = [[(mapping.get(l, l), end) for l, end in rot] for rot in self.vertices]
        return RibbonGraph(rots, [Edge(mapping.get(e.label, e.label), e.twisted)
                                  for e in self.edges])

    def disjoint_union(self, other: "RibbonGraph") -> "RibbonGraph":
        self._checked()
        other._checked()
        mine = set(self.edge_labels())
        clash = [l for l in other.edge_labels() if l in mine]
        if clash:
            taken = mine | set(other.edge_labels())
            mapping = {}
            for l in clash:
                n = 2
                while f"{l}_{n}" in taken:
                    n += 1
                mapping[l] = f"{l}_{n}"
                taken.add(mapping[l])
            other = other.relabel(mapping)
        return RibbonGraph(list(self.vertices) + list(other.vertices),
                           list(self.edges) + list(other.edges))

    def join(self, v1: int, pos1: int, other: "RibbonGraph", v2: int, pos2: int) -> "RibbonGraph":
        """One-vertex join: insert other's rotation at v2 (opened at gap
        pos2) into this graph's rotation at v1, at gap pos1."""
        self._checked()
        other._checked()
        if not (0 <= v1 < self.num_vertices and 0 <= v2 < other.num_vertices):
            raise IndexError("bad vertex index")
        if not (0 <= pos1 <= len(self.vertices[v1]) and 0 <= pos2 <= len(other.vertices[v2])):
            raise IndexError("bad gap index")
        combined = self.disjoint_union(other)
        # disjoint_union may have relabelled other's edges; recover them
        off = self.num_vertices
        rot1 = list(combined.vertices[v1])
        rot2 = list(combined.vertices[off + v2])
        merged = rot1[:pos1] + rot2[pos2:] + rot2[:pos2] + rot1[pos1:]
        rots = []
        for vi, rot in enumerate(combined.vertices):
            if vi == v1:
                rots.append(merged)
            elif vi == off + v2:
                continue
            else:
                rots.append(list(rot))
        return RibbonGraph(rots, combined.edges)

    # -- canonical form and equality ------------------------------------------
    #
    # The flag structure (stub mate, ribbon mate, corner mate, edge label)
    # determines the graph up to exactly the admissible normalisations:
    # rotation starting points, per-vertex reflections, edge end
    # numbering and vertex order.  A breadth-first encoding from every
    # possible start flag, minimised, is therefore a true canonical key.

    def canonical_key(self, labeled: bool = True):
        cached = self._key if labeled else self._ukey
        if cached is not None:
            return cached
        self._checked()
        ne = len(self.edges)
        rot_ids, _, _, _ = self._arr()
        nflags = 4 * ne
        corner = [0] * nflags
        for ids in rot_ids:
            if not ids:
                continue
            prev = ids[-1]
            for s in ids:
                corner[2 * prev] = 2 * s + 1
                corner[2 * s + 1] = 2 * prev
                prev = s
        ribbon = self._ribbon_mate()
        stubm = [f ^ 1 for f in range(nflags)]

        seen_component = bytearray(nflags)
        components = []
        for f0 in range(nflags):
            if seen_component[f0]:
                continue
            comp = [f0]
            seen_component[f0] = 1
            queue = [f0]
            while queue:
                f = queue.pop()
                for g in (stubm[f], ribbon[f], corner[f]):
                    if not seen_component[g]:
                        seen_component[g] = 1
                        comp.append(g)
                        queue.append(g)
            components.append(sorted(comp))

        def encode_from(start: int, comp: list[int]):
            order = {start: 0}
            bfs = [start]
            qi = 0
            while qi < len(bfs):
                f = bfs[qi]
                qi += 1
                for g in (stubm[f], ribbon[f], corner[f]):
                    if g not in order:
                        order[g] = len(bfs)
                        bfs.append(g)
            first_edge: dict[int, int] = {}
            code = []
            for f in bfs:
                edge = f >> 2
                if labeled:
                    tag = self.edges[edge].label
                else:
                    tag = first_edge.setdefault(edge, len(first_edge))
                code.append((order[stubm[f]], order[ribbon[f]], order[corner[f]], tag))
            return tuple(code)

        comp_keys = sorted(min(encode_from(f, comp) for f in comp) for comp in components)
        isolated = sum(1 for rot in self.vertices if not rot)
        key = (isolated, tuple(comp_keys))
        if labeled:
            object.__setattr__(self, "_key", key)
        else:
            object.__setattr__(self, "_ukey", key)
        return key

    def __eq__(self, other):
        if not isinstance(other, RibbonGraph):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self):
        return hash(self.canonical_key())


# -- named examples -------------------------------------------------------

CATALOG_NAMES = ("torus_bouquet", "rp2_cycle", "fig7", "fig12", "edgeless_n")


def catalog(name: str) -> RibbonGraph:
    """Named example graphs used throughout the test battery.

    ``edgeless_n`` takes a literal count, e.g. ``edgeless_3``.
    """
    if name == "torus_bouquet":
        return RibbonGraph.from_rotations([["a.0", "b.0", "a.1", "b.1"]])
    if name == "rp2_cycle":
        return RibbonGraph.from_rotations([["a.0", "b.0"], ["a.1", "b.1"]],
                                          twisted={"b"})
    if name == "fig7":
        return RibbonGraph.from_rotations(
            [["1.0", "3.0", "2.0", "3.1"], ["1.1", "4.0", "2.1", "4.1"]])
    if name == "fig12":
        return RibbonGraph.from_rotations(
            [["1.0", "2.0", "3.0", "2.1"], ["1.1", "3.1"]], twisted={"3"})
    if name.startswith("edgeless_"):
        try:
            n = int(name.removeprefix("edgeless_"))
        except ValueError:
            raise KeyError(f"unknown catalog name {name!r}") from None
        if n < 0:
            raise KeyError(f"unknown catalog name {name!r}")
        return RibbonGraph([[] for _ in range(n)], [])
    raise KeyError(f"unknown catalog name {name!r}")
