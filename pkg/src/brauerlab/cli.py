"""Command line interface.

Every command maps onto one library operation and prints JSON on stdout
(``--format text`` or ``dot`` where it makes sense).  Exit codes: 0 success,
1 domain error, 2 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import service
from .builder import assemble, build_sf_quiver, build_sf_relations
from .classify import algebra_class, is_special_biserial, is_special_multiserial, \
    is_special_quasi_biserial, is_symmetric_canonical
from .errors import BrauerLabError, FormatError
from .extraction import extract, roundtrip_check
from .jsonio import algebra_from_json, algebra_to_json, dumps, graph_from_json, \
    graph_to_dot, graph_to_json, is_graph_document, loewy_text, relation_to_json
from .kauer import KauerMove, OVER_PRED, OVER_SUCC, admissible_moves, apply_move, \
    compare_invariants
from .quiver import build_basis, cartan, projective, projective_dimensions
from .ribbon import BrauerGraph, is_brauer_tree, strip_labeled
from .tracks import generalized_tracks, symmetrize


def _load(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(dumps({"error": "IOError", "message": str(exc)}), end="")
        raise SystemExit(2)


def _emit(doc, fmt: str = "json", text: str | None = None):
    if fmt in ("text", "dot") and text is not None:
        print(text)
    else:
        print(dumps(doc), end="")


def _algebra_from_any(doc: dict):
    """Accept either a graph document (assembled first) or an algebra one."""
    if is_graph_document(doc):
        return assemble(graph_from_json(doc)).algebra
    quiver, rels, hint = algebra_from_json(doc)
    return build_basis(quiver, rels, nilpotency_hint=hint)


def build_report(g) -> dict:
    built = assemble(g)
    alg = built.algebra
    loewy = {}
    for v in alg.quiver.vertices:
        loewy[v] = projective(alg, v).loewy_diagram()
    report = algebra_class(alg)
    return {
        "quiver": algebra_to_json(alg.quiver, alg.relations, alg.nilpotency),
        "dims": {"P": projective_dimensions(alg), "total": alg.dimension},
        "loewy": loewy,
        "cartan": cartan(alg).to_json(),
        "classifications": report.to_json(),
        "provenance": dict(built.provenance(), relation_counts=built.relation_rules),
    }


def cmd_validate(args) -> int:
    g = graph_from_json(_load(args.graph))
    report = g.validate()
    _emit(report.to_json())
    return 0 if report.valid else 1


def cmd_build(args) -> int:
    g = graph_from_json(_load(args.graph))
    g.require_valid()
    if args.emit == "quiver":
        sq = build_sf_quiver(g)
        _emit(algebra_to_json(sq.quiver, []))
        return 0
    if args.emit == "relations":
        sq = build_sf_quiver(g)
        rels = build_sf_relations(g, sq)
        _emit([relation_to_json(r) for r in rels])
        return 0
    built = assemble(g)
    alg = built.algebra
    if args.emit == "dims":
        _emit({"P": projective_dimensions(alg), "total": alg.dimension})
    elif args.emit == "projectives":
        doc = {v: projective(alg, v).loewy_diagram() for v in alg.quiver.vertices}
        text = "\n\n".join(f"P_{v}:\n{loewy_text(rows)}" for v, rows in doc.items())
        _emit(doc, args.format, text)
    elif args.emit == "cartan":
        _emit(cartan(alg).to_json())
    else:
        _emit(build_report(g))
    return 0


PROPERTIES = {
    "symmetric": lambda alg: {"result": is_symmetric_canonical(alg)[0],
                              "gram": is_symmetric_canonical(alg)[1]},
    "sqb": lambda alg: _prop(is_special_quasi_biserial(alg)),
    "sb": lambda alg: _prop(is_special_biserial(alg)),
    "smulti": lambda alg: _prop(is_special_multiserial(alg)),
    "biserial": lambda alg: {"result": algebra_class(alg).biserial},
    "quasi-biserial": lambda alg: {"result": algebra_class(alg).quasi_biserial},
    "multiserial": lambda alg: {"result": algebra_class(alg).multiserial},
}


def _prop(pair):
    ok, witness = pair
    doc = {"result": ok}
    if witness is not None:
        doc["witness"] = witness.to_json()
    return doc


def cmd_check(args) -> int:
    alg = _algebra_from_any(_load(args.input))
    doc = PROPERTIES[args.property](alg)
    if args.format == "text":
        width = max(len(k) for k in doc)
        text = "\n".join(f"{k.ljust(width)}  {json.dumps(v, sort_keys=True)}"
                         for k, v in sorted(doc.items()))
        _emit(doc, "text", text)
    else:
        _emit(doc)
    return 0


def cmd_tracks(args) -> int:
    alg = _algebra_from_any(_load(args.algebra))
    tracks, omega = generalized_tracks(alg)
    _emit({"omega": omega, "tracks": [t.to_json() for t in tracks]})
    return 0


def cmd_symmetrize(args) -> int:
    alg = _algebra_from_any(_load(args.algebra))
    result = symmetrize(alg)
    _emit(result.to_json())
    return 0


def cmd_extract(args) -> int:
    alg = _algebra_from_any(_load(args.algebra))
    result = extract(alg)
    doc = graph_to_json(result.graph)
    doc["provenance"] = {"edge_of_vertex": result.edge_of_vertex,
                         "vertex_of_cycle": result.vertex_of_cycle}
    if result.note:
        doc["note"] = result.note
    _emit(doc, args.format, graph_to_dot(result.graph) if args.format == "dot" else None)
    return 0


def cmd_roundtrip(args) -> int:
    g = graph_from_json(_load(args.graph))
    _emit({"roundtrip": roundtrip_check(g)})
    return 0


def cmd_striplabels(args) -> int:
    g = graph_from_json(_load(args.graph))
    stripped = strip_labeled(g)
    from .ribbon import SfBrauerGraph
    out = SfBrauerGraph(stripped.graph, stripped.multiplicity, frozenset())
    _emit(graph_to_json(out), args.format,
          graph_to_dot(out) if args.format == "dot" else None)
    return 0


def cmd_brauertree(args) -> int:
    g = graph_from_json(_load(args.graph))
    if g.labeled:
        raise FormatError("graph has labeled edges; strip them first (striplabels)")
    _emit({"brauer_tree": is_brauer_tree(BrauerGraph(g.graph, dict(g.multiplicity)))})
    return 0


def cmd_kauer(args) -> int:
    g = graph_from_json(_load(args.graph))
    if args.script:
        moves = _load(args.script)
        for entry in moves:
            e = g.graph.edge_named(str(entry["edge"])) if isinstance(entry["edge"], str) \
                else tuple(entry["edge"])
            dirs = entry.get("directions") or [entry.get("dir", "succ")] * 2
            dirs = tuple(OVER_PRED if d.startswith("pred") else OVER_SUCC for d in dirs)
            g = apply_move(g, KauerMove(tuple(sorted(e)), dirs))
        _emit(graph_to_json(g))
        return 0
    if args.edge is None:
        raise FormatError("kauer needs --edge or --script")
    edge = g.graph.edge_named(args.edge)
    if args.list:
        _emit({"moves": [m.to_json() for m in admissible_moves(g, edge)]})
        return 0
    direction = OVER_PRED if args.dir == "pred" else OVER_SUCC
    moved = apply_move(g, KauerMove(edge, (direction, direction)))
    _emit(graph_to_json(moved), args.format,
          graph_to_dot(moved) if args.format == "dot" else None)
    return 0


def cmd_compare(args) -> int:
    a = graph_from_json(_load(args.left))
    b = graph_from_json(_load(args.right))
    _emit(compare_invariants(a, b))
    return 0


def cmd_serve(args) -> int:
    service.serve(port=args.port)
    return 0


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="brauerlab",
                                description="Brauer graph algebra workbench")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        sp = sub.add_parser(name, **kwargs)
        sp.set_defaults(fn=fn)
        sp.add_argument("--format", choices=["json", "text", "dot"], default="json")
        return sp

    add("validate", cmd_validate).add_argument("graph")
    sp = add("build", cmd_build)
    sp.add_argument("graph")
    sp.add_argument("--emit", choices=["all", "quiver", "relations", "projectives",
                                       "cartan", "dims"], default="all")
    sp = add("check", cmd_check)
    sp.add_argument("input")
    sp.add_argument("--property", required=True, choices=sorted(PROPERTIES))
    add("tracks", cmd_tracks).add_argument("algebra")
    add("symmetrize", cmd_symmetrize).add_argument("algebra")
    add("extract", cmd_extract).add_argument("algebra")
    add("roundtrip", cmd_roundtrip).add_argument("graph")
    add("striplabels", cmd_striplabels).add_argument("graph")
    add("brauertree", cmd_brauertree).add_argument("graph")
    sp = add("kauer", cmd_kauer)
    sp.add_argument("graph")
    sp.add_argument("--edge")
    sp.add_argument("--dir", choices=["pred", "succ"], default="pred")
    sp.add_argument("--script")
    sp.add_argument("--list", action="store_true", help="list admissible moves")
    sp = add("compare", cmd_compare)
    sp.add_argument("left")
    sp.add_argument("right")
    sp = add("serve", cmd_serve)
    sp.add_argument("--port", type=int,
                    default=int(os.environ.get("BRAUERLAB_PORT", "8642")))
    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.fn(args)
    except BrauerLabError as exc:
        print(dumps(exc.to_json()), end="")
        return 1
    except AssertionError as exc:
        print(dumps({"error": "InternalInvariant", "message": str(exc)}), end="")
        return 1


if __name__ == "__main__":
    sys.exit(main())
