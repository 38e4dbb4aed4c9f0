"""Command-line interface and the RGFile text format.

RGFile is a line format for signed rotation systems:

    # comment
    vertex v0: a.0 b.0 a.1 b.1
    edge a
    edge b twisted

Each ``vertex`` line lists the stubs around that vertex in
counterclockwise rotation order; ``label.0`` and ``label.1`` are the two
ends of edge ``label``.  Every edge must be declared by exactly one
``edge`` line and have both its stubs placed exactly once.

Exit codes: 0 success, 1 verification failure, 2 usage or parse errors.
Every command accepts ``--json`` for machine-readable output; commands
that enumerate all 2^e edge subsets refuse graphs beyond ``--max-edges``
(default 20).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .poly import SparsePoly, eval_tutte_exact, tutte_to_xy
from .quasitree import quasi_tree_records, z_quasi_tree
from .ribbon import CATALOG_NAMES, RibbonGraph, catalog
from .tutte import (BATTERY_NAMES, br_state_sum, br_to_tutte, run_battery,
                    t_del_con, t_from_z, t_state_sum, z_del_con, z_state_sum)

__all__ = ["parse_rgfile", "render_rgfile", "RGFileError", "main"]


class RGFileError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_rgfile(text: str) -> RibbonGraph:
    """Parse RGFile text; raises RGFileError with a line number."""
    rotations: list[list[tuple[str, int]]] = []
    vertex_names: dict[str, int] = {}
    edge_order: list[str] = []
    twisted: dict[str, bool] = {}
    stub_lines: dict[tuple[str, int], int] = {}
    edge_lines: dict[str, int] = {}

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, _, rest = line.partition(" ")
        if head == "vertex":
            name_part, colon, stub_part = rest.partition(":")
            name = name_part.strip()
            if not colon:
                raise RGFileError(lineno, "vertex line needs 'vertex <name>: ...'")
            if not name:
                raise RGFileError(lineno, "vertex needs a name")
            if name in vertex_names:
                raise RGFileError(lineno, f"duplicate vertex name {name!r}")
            vertex_names[name] = len(rotations)
            rot = []
            for token in stub_part.split():
                lab, dot, end = token.rpartition(".")
                if not dot or end not in ("0", "1") or not lab:
                    raise RGFileError(lineno, f"malformed stub {token!r} (want label.0 or label.1)")
                stub = (lab, int(end))
                if stub in stub_lines:
                    raise RGFileError(
                        lineno, f"stub {token} already placed on line {stub_lines[stub]}")
                stub_lines[stub] = lineno
                rot.append(stub)
            rotations.append(rot)
        elif head == "edge":
            parts = rest.split()
            if not parts:
                raise RGFileError(lineno, "edge line needs a name")
            name = parts[0]
            if name in twisted:
                raise RGFileError(
                    lineno, f"edge {name!r} already declared on line {edge_lines[name]}")
            if len(parts) == 1:
                twisted[name] = False
            elif len(parts) == 2 and parts[1] == "twisted":
                twisted[name] = True
            else:
                raise RGFileError(lineno, f"malformed edge line {line!r}")
            edge_lines[name] = lineno
            edge_order.append(name)
        else:
            raise RGFileError(lineno, f"unrecognised line {line!r}")

    for (lab, end), lineno in sorted(stub_lines.items(), key=lambda kv: kv[1]):
        if lab not in twisted:
            raise RGFileError(lineno, f"stub {lab}.{end} references undeclared edge {lab!r}")
    for name in edge_order:
        for end in (0, 1):
            if (name, end) not in stub_lines:
                raise RGFileError(edge_lines[name],
                                  f"edge {name!r} declared but stub {name}.{end} never placed")
    return RibbonGraph(rotations, [(name, twisted[name]) for name in edge_order])


def render_rgfile(g: RibbonGraph) -> str:
    """RGFile text for a graph; parse(render(g)) == g."""
    lines = []
    for vi, rot in enumerate(g.vertices):
        stubs = " ".join(f"{lab}.{end}" for lab, end in rot)
        lines.append(f"vertex v{vi}:" + (" " + stubs if stubs else ""))
    for e in g.edges:
        lines.append(f"edge {e.label} twisted" if e.twisted else f"edge {e.label}")
    return "\n".join(lines) + "\n"


# -- command plumbing ---------------------------------------------------------


def _load_graph(source: str) -> RibbonGraph:
    if source.startswith("catalog:"):
        return catalog(source.removeprefix("catalog:"))
    if source == "-":
        text = sys.stdin.read()
    else:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    g = parse_rgfile(text)
    problems = g.validate()
    if problems:
        raise RGFileError(0, "; ".join(problems))
    return g


def _guard(g: RibbonGraph, max_edges: int):
    if g.num_edges > max_edges:
        raise SystemExit(_fail(
            f"graph has {g.num_edges} edges; subset enumeration refused "
            f"beyond --max-edges {max_edges}"))


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _emit(args, plain: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(plain)


def _poly_plain(p: SparsePoly) -> str:
    return str(p).replace("xm1", "(x-1)")


def cmd_info(args) -> int:
    g = _load_graph(args.file)
    st = g.stats()
    payload = {"v": st.v, "e": st.e, "k": st.k, "r": st.r, "b": st.b,
               "gamma": st.gamma, "genus": st.genus, "orientable": st.orientable}
    plain = "\n".join(f"{k}: {str(v).lower() if isinstance(v, bool) else v}"
                      for k, v in payload.items())
    _emit(args, plain, payload)
    return 0


def cmd_tutte(args) -> int:
    g = _load_graph(args.file)
    _guard(g, args.max_edges)
    algo = {"statesum": t_state_sum, "delcon": t_del_con, "viaz": t_from_z,
            "br": lambda h: br_to_tutte(br_state_sum(h), h.stats().gamma)}[args.algo]
    p = algo(g)
    if args.basis == "xy":
        try:
            p = tutte_to_xy(p)
        except ValueError as exc:
            return _fail(f"{exc}; the result lives in sqrt(x-1), sqrt(y-1): "
                         "use --basis st")
    _emit(args, str(p), {"algo": args.algo, "basis": args.basis, "poly": p.to_json()})
    return 0


def cmd_z(args) -> int:
    g = _load_graph(args.file)
    _guard(g, args.max_edges)
    algo = {"statesum": z_state_sum, "delcon": z_del_con, "quasitree": z_quasi_tree}[args.algo]
    p = algo(g)
    _emit(args, str(p), {"algo": args.algo, "poly": p.to_json()})
    return 0


def cmd_br(args) -> int:
    g = _load_graph(args.file)
    _guard(g, args.max_edges)
    p = br_state_sum(g)
    _emit(args, _poly_plain(p), {"poly": p.to_json()})
    return 0


def _emit_graph(args, g: RibbonGraph) -> int:
    text = render_rgfile(g)
    if args.json:
        print(json.dumps({"rgfile": text}, indent=2))
    else:
        print(text, end="")
    return 0


def cmd_dual(args) -> int:
    return _emit_graph(args, _load_graph(args.file).dual())


def cmd_delete(args) -> int:
    return _emit_graph(args, _load_graph(args.file).delete(args.edge))


def cmd_contract(args) -> int:
    return _emit_graph(args, _load_graph(args.file).contract(args.edge))


def cmd_quasitrees(args) -> int:
    g = _load_graph(args.file)
    _guard(g, args.max_edges)
    order = args.order.split(",") if args.order else None
    if order is not None and sorted(order) != sorted(g.edge_labels()):
        return _fail("--order must list every edge label exactly once")
    records = quasi_tree_records(g, order)
    rows = []
    payload = []
    for rec in records:
        omega = " ".join(lab + ("'" if barred else "") for lab, barred in rec.omega)
        rows.append("A={%s}  omega=%s  live_in={%s}  live_out={%s}  ilo=%d elo=%d" % (
            ",".join(sorted(rec.edges)), omega, ",".join(sorted(rec.live_internal)),
            ",".join(sorted(rec.live_external)), rec.ilo, rec.elo))
        payload.append({
            "edges": sorted(rec.edges),
            "omega": [{"edge": lab, "barred": barred} for lab, barred in rec.omega],
            "live_internal": sorted(rec.live_internal),
            "live_external": sorted(rec.live_external),
            "ilo": rec.ilo,
            "elo": rec.elo,
            "contribution": rec.contribution.to_json(),
        })
    _emit(args, "\n".join(rows), {"order": list(order or g.edge_labels()),
                                  "quasi_trees": payload})
    return 0


def cmd_eval(args) -> int:
    g = _load_graph(args.file)
    _guard(g, args.max_edges)
    try:
        x, y = Fraction(args.x), Fraction(args.y)
    except (ValueError, ZeroDivisionError):
        return _fail("x and y must be integers or fractions like 3/2")
    try:
        value = eval_tutte_exact(t_state_sum(g), x, y)
    except ValueError as exc:
        return _fail(str(exc))
    _emit(args, str(value), {"x": str(x), "y": str(y), "value": str(value)})
    return 0


def cmd_verify(args) -> int:
    g = _load_graph(args.file)
    _guard(g, args.max_edges)
    results = run_battery(g, args.battery)
    ok = all(r.passed for r in results)
    if args.json:
        print(json.dumps({
            "passed": ok,
            "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail}
                       for r in results],
        }, indent=2))
    else:
        for r in results:
            print(str(r))
    return 0 if ok else 1


def cmd_catalog(args) -> int:
    try:
        g = catalog(args.name)
    except KeyError as exc:
        return _fail(str(exc.args[0]))
    if args.json:
        print(json.dumps({"name": args.name, "rgfile": render_rgfile(g)}, indent=2))
    else:
        print(render_rgfile(g), end="")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-edges", type=int, default=20, metavar="N",
                        help="refuse 2^e subset enumeration beyond N edges (default 20)")

    p = argparse.ArgumentParser(
        prog="ribbonpoly",
        description="Topological Tutte, dichromatic and Bollobas-Riordan "
                    "polynomials of ribbon graphs. FILE may be a path, '-' "
                    "for stdin, or catalog:NAME.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("info", parents=[common], help="counting functions of the graph")
    sp.add_argument("file")
    sp.set_defaults(fn=cmd_info)

    sp = sub.add_parser("tutte", parents=[common], help="topological Tutte polynomial")
    sp.add_argument("file")
    sp.add_argument("--algo", choices=("statesum", "delcon", "viaz", "br"),
                    default="statesum")
    sp.add_argument("--basis", choices=("st", "xy"), default="st")
    sp.set_defaults(fn=cmd_tutte)

    sp = sub.add_parser("z", parents=[common], help="dichromatic polynomial")
    sp.add_argument("file")
    sp.add_argument("--algo", choices=("statesum", "delcon", "quasitree"),
                    default="statesum")
    sp.set_defaults(fn=cmd_z)

    sp = sub.add_parser("br", parents=[common], help="Bollobas-Riordan polynomial")
    sp.add_argument("file")
    sp.set_defaults(fn=cmd_br)

    sp = sub.add_parser("dual", parents=[common], help="geometric dual, as RGFile text")
    sp.add_argument("file")
    sp.set_defaults(fn=cmd_dual)

    sp = sub.add_parser("delete", parents=[common], help="delete an edge")
    sp.add_argument("file")
    sp.add_argument("edge")
    sp.set_defaults(fn=cmd_delete)

    sp = sub.add_parser("contract", parents=[common], help="contract an edge")
    sp.add_argument("file")
    sp.add_argument("edge")
    sp.set_defaults(fn=cmd_contract)

    sp = sub.add_parser("quasitrees", parents=[common],
                        help="spanning quasi-trees with boundary words")
    sp.add_argument("file")
    sp.add_argument("--order", help="comma-separated edge order")
    sp.set_defaults(fn=cmd_quasitrees)

    sp = sub.add_parser("eval", parents=[common], help="evaluate T(x, y) exactly")
    sp.add_argument("file")
    sp.add_argument("x")
    sp.add_argument("y")
    sp.set_defaults(fn=cmd_eval)

    sp = sub.add_parser("verify", parents=[common], help="run identity batteries")
    sp.add_argument("file")
    sp.add_argument("--battery", choices=("all",) + BATTERY_NAMES, default="all")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("catalog", parents=[common],
                        help=f"named example ({', '.join(CATALOG_NAMES)})")
    sp.add_argument("name")
    sp.set_defaults(fn=cmd_catalog)

    return p


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except RGFileError as exc:
        return _fail(str(exc))
    except FileNotFoundError as exc:
        return _fail(f"cannot read {exc.filename}")
    except (KeyError, ValueError) as exc:
        return _fail(str(exc.args[0]) if exc.args else str(exc))
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
