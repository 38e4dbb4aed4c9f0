"""Polynomial invariants of ribbon graphs, by several independent routes.

The dichromatic polynomial Z, the topological Tutte polynomial T (as a
polynomial in s = sqrt(x-1), t = sqrt(y-1)), and the Bollobas-Riordan
polynomial BR are each computed by state sums over edge subsets and by
deletion-contraction recursions.  The different routes are kept
algorithmically independent so that their agreement is a meaningful
check; ``verify_*`` functions package the identities the polynomial is
known to satisfy (duality, join laws, the Z-T change of variables, the
universal deletion-contraction invariant, convolution, point
evaluations, coefficient sums).

All exponent bookkeeping is integral: rho is carried as twice_rho, so
nonorientable graphs need no special casing anywhere.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Sequence

from .oracle import (maximal_spanning_forest_count, spanning_forest_count,
                     underlying)
from .poly import (BR_VARS, SparsePoly, T_VARS, UNIV_VARS, Z_VARS,
                   eval_tutte_exact, swap_st, tutte_to_xy, zero)
from .ribbon import EdgeClass, RibbonGraph

__all__ = [
    "z_state_sum",
    "z_del_con",
    "t_state_sum",
    "t_from_z",
    "t_del_con",
    "br_state_sum",
    "br_to_tutte",
    "universal_del_con",
    "universal_closed_form",
    "CheckResult",
    "verify_agreement",
    "verify_duality",
    "verify_join",
    "verify_tz",
    "verify_convolution",
    "verify_evaluations",
    "verify_coefficient_identities",
    "run_battery",
    "BATTERY_NAMES",
]


def _gray_masks(ne: int):
    """All subset masks in Gray-code order (single-bit steps)."""
    for i in range(1 << ne):
        yield i ^ (i >> 1)


# -- dichromatic polynomial -------------------------------------------------


def z_state_sum(g: RibbonGraph, jobs: int = 1) -> SparsePoly:
    """Z(G; u, v) = sum over A of u^|A| v^b(A).

    ``jobs`` partitions the subset range into contiguous chunks whose
    partial sums are combined in order, so output is identical for any
    worker count.
    """
    ne = g.num_edges
    if jobs <= 1 or ne < 4:
        return _z_chunk(g, 0, 1 << ne)
    g._arr()  # build shared tables before the workers start
    total = 1 << ne
    step = (total + jobs - 1) // jobs
    bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(lambda ab: _z_chunk(g, *ab), bounds))
    out = zero(Z_VARS)
    for p in parts:
        out = out + p
    return out


def _z_chunk(g: RibbonGraph, lo: int, hi: int) -> SparsePoly:
    terms: dict[tuple, int] = {}
    count_b = g._count_b
    for i in range(lo, hi):
        mask = i ^ (i >> 1)
        key = (bin(mask).count("1"), count_b(mask))
        terms[key] = terms.get(key, 0) + 1
    return SparsePoly(Z_VARS, terms)


def z_del_con(g: RibbonGraph) -> SparsePoly:
    """Z by the recursion Z(G) = Z(G\\e) + u Z(G/e), terminal v^v(G)."""
    u = SparsePoly.variable(Z_VARS, "u")

    def rec(h: RibbonGraph) -> SparsePoly:
        if not h.edges:
            return SparsePoly(Z_VARS, {(0, h.num_vertices): 1})
        e = h.edges[0].label
        return rec(h.delete(e)) + u * rec(h.contract(e))

    return rec(g)


# -- Tutte polynomial in (s, t) ----------------------------------------------


def t_state_sum(g: RibbonGraph) -> SparsePoly:
    """T as the topological-rank state sum (Definition 2).

    Term for A: s^(2 rho(E) - 2 rho(A)) * t^(2|A| - 2 rho(A)), using
    2 rho(A) = |A| + v - b(A).
    """
    ne, nv = g.num_edges, g.num_vertices
    tr_full = ne + nv - g._count_b((1 << ne) - 1)
    terms: dict[tuple, int] = {}
    count_b = g._count_b
    for mask in _gray_masks(ne):
        a = bin(mask).count("1")
        tr = a + nv - count_b(mask)
        key = (tr_full - tr, 2 * a - tr)
        assert key[0] >= 0 and key[1] >= 0
        terms[key] = terms.get(key, 0) + 1
    return SparsePoly(T_VARS, terms)


def t_from_z(g: RibbonGraph) -> SparsePoly:
    """T from Z by the monomial change of variables (Definition 1):
    u^j v^m maps to s^(e - b(E) - j + m) t^(j + m - v)."""
    z = z_state_sum(g)
    ne, nv = g.num_edges, g.num_vertices
    b_full = g.b()
    terms: dict[tuple, int] = {}
    for (j, m), coef in z.terms.items():
        key = (ne - b_full - j + m, j + m - nv)
        if key[0] < 0 or key[1] < 0:
            raise RuntimeError(f"negative exponent {key} in Z-to-T transform")
        terms[key] = terms.get(key, 0) + coef
    return SparsePoly(T_VARS, terms)


_F_COEF = {EdgeClass.ORIENTABLE_LOOP: (2, 0),      # s^2 = x - 1
           EdgeClass.NONORIENTABLE_LOOP: (1, 0)}   # s
_G_COEF = {EdgeClass.ORIENTABLE_LOOP: (0, 2),      # t^2 = y - 1
           EdgeClass.NONORIENTABLE_LOOP: (0, 1)}   # t


def t_del_con(g: RibbonGraph, order: Sequence[str] | None = None,
              memo: bool = False) -> SparsePoly:
    """T by deletion-contraction (Definition 3).

    T(G) = f(e) T(G\\e) + g(e) T(G/e) where f depends on whether e* is an
    orientable loop, nonorientable loop or non-loop in the dual, and g
    likewise for e itself; edgeless graphs give 1.  ``order`` fixes which
    edge is expanded first; the result is order-independent.  ``memo``
    enables canonical-form keyed caching.
    """
    rank = {lab: i for i, lab in enumerate(order)} if order is not None else None
    cache: dict | None = {} if memo else None

    def pick(h: RibbonGraph) -> str:
        labels = h.edge_labels()
        if rank is None:
            return labels[0]
        return min(labels, key=lambda l: rank.get(l, len(rank)))

    def rec(h: RibbonGraph) -> SparsePoly:
        if not h.edges:
            return SparsePoly.constant(T_VARS, 1)
        if cache is not None:
            key = h.canonical_key()
            hit = cache.get(key)
            if hit is not None:
                return hit
        e = pick(h)
        f_exp = _F_COEF.get(h.co_class(e), (0, 0))
        g_exp = _G_COEF.get(h.classify_edge(e), (0, 0))
        f = SparsePoly(T_VARS, {f_exp: 1})
        gg = SparsePoly(T_VARS, {g_exp: 1})
        out = f * rec(h.delete(e)) + gg * rec(h.contract(e))
        if cache is not None:
            cache[key] = out
        return out

    return rec(g)


# -- Bollobas-Riordan --------------------------------------------------------


def br_state_sum(g: RibbonGraph) -> SparsePoly:
    """BR(G; x, y, z, w) as a state sum over edge subsets.

    Variables: xm1 stands for x-1; the term for A is
    xm1^(r(E)-r(A)) y^(|A|-r(A)) z^(gamma(A)) w^(t(A)), with t(A) = 0
    iff (V, A) is orientable and the reduction w^2 = 1 applied eagerly.
    """
    ne, nv = g.num_edges, g.num_vertices
    labels = g.edge_labels()
    r_full = nv - g._k_of_mask((1 << ne) - 1)
    terms: dict[tuple, int] = {}
    for mask in _gray_masks(ne):
        st = g._stats_mask(mask, frozenset(l for i, l in enumerate(labels)
                                           if mask >> i & 1))
        key = (r_full - st.r, st.e - st.r, st.gamma, 0 if st.orientable else 1)
        terms[key] = terms.get(key, 0) + 1
    return SparsePoly(BR_VARS, terms, mod2=("w",))


def br_to_tutte(br: SparsePoly, gamma_full: int) -> SparsePoly:
    """Specialise BR to T: the 2-variable Bollobas-Riordan polynomial.

    (x-1)^(gamma(E)/2) BR(x, y-1, ((x-1)(y-1))^(-1/2), 1) carried out on
    monomials: a term with exponents (a, n, gz, _) becomes
    s^(2a + gamma(E) - gz) t^(2n - gz).
    """
    terms: dict[tuple, int] = {}
    for (a, n, gz, _w), coef in br.terms.items():
        key = (2 * a + gamma_full - gz, 2 * n - gz)
        if key[0] < 0 or key[1] < 0:
            raise RuntimeError(f"negative exponent {key} in BR-to-T transform")
        terms[key] = terms.get(key, 0) + coef
    return SparsePoly(T_VARS, terms)


# -- universal deletion-contraction invariant ---------------------------------


def universal_del_con(g: RibbonGraph) -> SparsePoly:
    """The universal invariant over Z[w, sa, sc, sastar, scstar].

    Recursion coefficients: deleting uses a* = sastar^2, b* =
    sastar*scstar or c* = scstar^2 by the dual class of the edge;
    contracting uses a = sa^2, b = sa*sc or c = sc^2 by its own class;
    edgeless graphs give w^v.
    """
    f_map = {EdgeClass.ORIENTABLE_LOOP: {"sastar": 2},
             EdgeClass.NONORIENTABLE_LOOP: {"sastar": 1, "scstar": 1}}
    g_map = {EdgeClass.ORIENTABLE_LOOP: {"sa": 2},
             EdgeClass.NONORIENTABLE_LOOP: {"sa": 1, "sc": 1}}
    unit = SparsePoly.constant(UNIV_VARS, 1)

    def coef(exps: dict[str, int]) -> SparsePoly:
        return unit.monomial(exps)

    def rec(h: RibbonGraph) -> SparsePoly:
        if not h.edges:
            return unit.monomial({"w": h.num_vertices})
        e = h.edges[0].label
        f = coef(f_map.get(h.co_class(e), {"scstar": 2}))
        gg = coef(g_map.get(h.classify_edge(e), {"sc": 2}))
        return f * rec(h.delete(e)) + gg * rec(h.contract(e))

    return rec(g)


def universal_closed_form(g: RibbonGraph, t_poly: SparsePoly | None = None) -> SparsePoly:
    """The closed form w^(v-rho) c^rho (c*)^(e-rho) T((wa*+c)/c, (wa+c*)/c*),
    with denominators cleared: every T-term s^i t^j contributes
    w^((2v - 2rho(E) + i + j)/2) sastar^i sc^(2rho(E)-i) sa^j scstar^(2e-2rho(E)-j).
    """
    if t_poly is None:
        t_poly = t_state_sum(g)
    ne, nv = g.num_edges, g.num_vertices
    tr = ne + nv - g.b()
    terms: dict[tuple, int] = {}
    for (i, j), coef in t_poly.terms.items():
        wexp2 = 2 * nv - tr + i + j
        if wexp2 % 2:
            raise RuntimeError("half-integer w exponent in closed form")
        key = (wexp2 // 2, j, tr - i, i, 2 * ne - tr - j)
        if min(key) < 0:
            raise RuntimeError(f"negative exponent {key} in closed form")
        terms[key] = terms.get(key, 0) + coef
    # variable order (w, sa, sc, sastar, scstar)
    return SparsePoly(UNIV_VARS, terms)


# -- verification battery ------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def __str__(self):
        mark = "PASS" if self.passed else "FAIL"
        return f"{mark} {self.name}" + (f": {self.detail}" if self.detail and not self.passed else "")


def _check(name: str, lhs, rhs) -> CheckResult:
    ok = lhs == rhs
    return CheckResult(name, ok, "" if ok else f"{lhs} != {rhs}")


def verify_agreement(g: RibbonGraph) -> list[CheckResult]:
    """All computation routes give the same polynomials."""
    t_ref = t_state_sum(g)
    z_ref = z_state_sum(g)
    out = [
        _check("t_from_z == t_state_sum", t_from_z(g), t_ref),
        _check("t_del_con == t_state_sum", t_del_con(g), t_ref),
        _check("br_to_tutte == t_state_sum",
               br_to_tutte(br_state_sum(g), g.stats().gamma), t_ref),
        _check("z_del_con == z_state_sum", z_del_con(g), z_ref),
    ]
    if g.num_vertices and g._k_of_mask((1 << g.num_edges) - 1) == 1:
        from .quasitree import z_quasi_tree
        out.append(_check("z_quasi_tree == z_state_sum", z_quasi_tree(g), z_ref))
    return out


def verify_duality(g: RibbonGraph) -> list[CheckResult]:
    """T(G*; x, y) = T(G; y, x)."""
    return [_check("T(dual) == T with x,y swapped",
                   t_state_sum(g.dual()), swap_st(t_state_sum(g)))]


def verify_join(g: RibbonGraph, h: RibbonGraph,
                v1: int = 0, pos1: int = 0, v2: int = 0, pos2: int = 0) -> list[CheckResult]:
    """Multiplicativity over disjoint union and one-vertex join."""
    if g.num_vertices == 0 or h.num_vertices == 0:
        raise ValueError("join needs a vertex on each side")
    du = g.disjoint_union(h)
    jn = g.join(v1, pos1, h, v2, pos2)
    t_g, t_h = t_state_sum(g), t_state_sum(h)
    z_g, z_h = z_state_sum(g), z_state_sum(h)
    v = SparsePoly.variable(Z_VARS, "v")
    return [
        _check("T(G|_|H) == T(G)T(H)", t_state_sum(du), t_g * t_h),
        _check("T(G v H) == T(G)T(H)", t_state_sum(jn), t_g * t_h),
        _check("Z(G|_|H) == Z(G)Z(H)", z_state_sum(du), z_g * z_h),
        _check("Z(G|_|H) == v*Z(G v H)", z_state_sum(du), v * z_state_sum(jn)),
    ]


def verify_tz(g: RibbonGraph) -> list[CheckResult]:
    """Z(G; u, v) = v^(v-rho) u^rho T(G; (v+u)/u, vu+1), cleared of
    denominators: each T-term s^i t^j maps to
    u^((2rho(E)+j-i)/2) v^((2v-2rho(E)+i+j)/2)."""
    ne, nv = g.num_edges, g.num_vertices
    tr = ne + nv - g.b()
    t_poly = t_state_sum(g)
    terms: dict[tuple, int] = {}
    for (i, j), coef in t_poly.terms.items():
        u2, v2 = tr + j - i, 2 * nv - tr + i + j
        if u2 % 2 or v2 % 2 or u2 < 0 or v2 < 0:
            return [CheckResult("Z == transformed T", False,
                                f"illegal exponent pair ({u2}/2, {v2}/2)")]
        key = (u2 // 2, v2 // 2)
        terms[key] = terms.get(key, 0) + coef
    return [_check("Z == transformed T", SparsePoly(Z_VARS, terms), z_state_sum(g))]


def verify_universality(g: RibbonGraph) -> list[CheckResult]:
    """Recursion and closed form agree in Z[w, sa, sc, sastar, scstar]."""
    return [_check("universal recursion == closed form",
                   universal_del_con(g), universal_closed_form(g))]


def verify_convolution(g: RibbonGraph) -> list[CheckResult]:
    """T(G; x, y) = sum over A of T(G\\(E-A); 0, y) T(G/A; x, 0),
    for orientable G (evaluation happens in the x,y basis)."""
    if not g.stats().orientable:
        raise ValueError("convolution formula applies to orientable graphs")
    labels = g.edge_labels()
    target = tutte_to_xy(t_state_sum(g))
    total = zero(("x", "y"))
    for mask in range(1 << len(labels)):
        inside = [l for i, l in enumerate(labels) if mask >> i & 1]
        outside = [l for i, l in enumerate(labels) if not mask >> i & 1]
        left = tutte_to_xy(t_state_sum(g.delete_set(outside))).set_to("x", 0)
        right = tutte_to_xy(t_state_sum(g.contract_set(inside))).set_to("y", 0)
        total = total + left._reframe(["x", "y"]) * right._reframe(["x", "y"])
    return [_check("convolution product formula", total, target)]


def verify_evaluations(g: RibbonGraph) -> list[CheckResult]:
    """Point evaluations against independent counts."""
    t_poly = t_state_sum(g)
    st = g.stats()
    gu = underlying(g)
    gh = underlying(g.dual())
    out = [
        _check("T(2,2) == 2^e", eval_tutte_exact(t_poly, 2, 2), 2 ** g.num_edges),
        _check("T(2,1) == forests of G", eval_tutte_exact(t_poly, 2, 1),
               spanning_forest_count(gu)),
        _check("T(1,2) == forests of dual's graph", eval_tutte_exact(t_poly, 1, 2),
               spanning_forest_count(gh)),
    ]
    t11 = eval_tutte_exact(t_poly, 1, 1)
    if st.gamma == 0:
        out.append(_check("T(1,1) == maximal forests (plane)", t11,
                          maximal_spanning_forest_count(gu)))
    else:
        out.append(_check("T(1,1) == 0 (non-plane)", t11, 0))
    t00 = eval_tutte_exact(t_poly, 0, 0)
    out.append(_check("T(0,0) == 1 iff edgeless else 0", t00,
                      1 if g.num_edges == 0 else 0))
    return out


def verify_coefficient_identities(g: RibbonGraph) -> list[CheckResult]:
    """Alternating-binomial sums of the (x, y) coefficients vanish for
    k < e and give (-1)^(e - rho(E)) at k = e; orientable graphs only."""
    st = g.stats()
    if not st.orientable:
        raise ValueError("coefficient identities apply to orientable graphs")
    pxy = tutte_to_xy(t_state_sum(g))
    b = {exp: c for exp, c in pxy.terms.items()}

    def ksum(k: int) -> int:
        total = 0
        for (i, j), coef in b.items():
            if i <= k and j <= k - i:
                total += (-1) ** j * comb(k - i, j) * coef
        return total

    e = g.num_edges
    rho = st.twice_rho // 2
    out = []
    for k in range(e):
        out.append(_check(f"coefficient sum k={k} == 0", ksum(k), 0))
    out.append(_check("coefficient sum k=e == (-1)^(e-rho)",
                      ksum(e), (-1) ** (e - rho)))
    return out


BATTERY_NAMES = ("agreement", "duality", "join", "tz", "universality",
                 "convolution", "evaluations", "coeffs")


def run_battery(g: RibbonGraph, which: str = "all",
                partner: RibbonGraph | None = None) -> list[CheckResult]:
    """Run named verification batteries on a graph.

    ``join`` needs a second graph; by default a relabelled one-vertex
    untwisted loop is used.  ``convolution`` and ``coeffs`` only apply to
    orientable graphs and are reported as skipped otherwise.
    """
    wanted = BATTERY_NAMES if which == "all" else (which,)
    out: list[CheckResult] = []
    orientable = g.stats().orientable
    for name in wanted:
        if name == "agreement":
            out.extend(verify_agreement(g))
        elif name == "duality":
            out.extend(verify_duality(g))
        elif name == "join":
            if g.num_vertices == 0:
                out.append(CheckResult("join laws", True, "skipped: no vertex"))
                continue
            h = partner if partner is not None else RibbonGraph(
                [[("j1", 0), ("j1", 1)]], [("j1", False)])
            out.extend(verify_join(g, h))
        elif name == "tz":
            out.extend(verify_tz(g))
        elif name == "universality":
            out.extend(verify_universality(g))
        elif name == "convolution":
            if orientable:
                out.extend(verify_convolution(g))
            else:
                out.append(CheckResult("convolution product formula", True,
                                       "skipped: nonorientable"))
        elif name == "evaluations":
            out.extend(verify_evaluations(g))
        elif name == "coeffs":
            if orientable:
                out.extend(verify_coefficient_identities(g))
            else:
                out.append(CheckResult("coefficient identities", True,
                                       "skipped: nonorientable"))
        else:
            raise ValueError(f"unknown battery {name!r}")
    return out
