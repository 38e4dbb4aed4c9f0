"""Ribbon graphs as signed rotation systems, with their topological
Tutte, dichromatic and Bollobas-Riordan polynomials computed by several
independent algorithms that are cross-checked against each other."""

from .poly import (SparsePoly, beta_invariant, eval_tutte_exact, swap_st,
                   tutte_to_xy, xy_to_tutte)
from .ribbon import Edge, EdgeClass, RibbonGraph, SubsetStats, catalog
from .oracle import (AbstractGraph, classical_tutte, classical_tutte_statesum,
                     maximal_spanning_forest_count, spanning_forest_count,
                     underlying)
from .tutte import (CheckResult, br_state_sum, br_to_tutte, run_battery,
                    t_del_con, t_from_z, t_state_sum, universal_closed_form,
                    universal_del_con, z_del_con, z_state_sum)
from .quasitree import (QuasiTreeRecord, ResolutionNode, boundary_word,
                        enumerate_quasi_trees, live_edges, omega_canonical,
                        quasi_tree_records, resolution_tree, z_quasi_tree)
from .cli import parse_rgfile, render_rgfile

__version__ = "0.1.0"

__all__ = [
    "RibbonGraph", "Edge", "EdgeClass", "SubsetStats", "catalog",
    "SparsePoly", "tutte_to_xy", "xy_to_tutte", "swap_st", "beta_invariant",
    "eval_tutte_exact",
    "AbstractGraph", "underlying", "classical_tutte", "classical_tutte_statesum",
    "spanning_forest_count", "maximal_spanning_forest_count",
    "z_state_sum", "z_del_con", "t_state_sum", "t_from_z", "t_del_con",
    "br_state_sum", "br_to_tutte", "universal_del_con", "universal_closed_form",
    "run_battery", "CheckResult",
    "enumerate_quasi_trees", "boundary_word", "live_edges", "quasi_tree_records",
    "z_quasi_tree", "resolution_tree", "ResolutionNode", "QuasiTreeRecord",
    "omega_canonical",
    "parse_rgfile", "render_rgfile",
]
