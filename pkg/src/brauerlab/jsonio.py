"""Canonical JSON formats shared by the CLI and the HTTP service.

Graph format (fmt 1):
    {"fmt": 1,
     "vertices": [{"id": "v1", "multiplicity": 1}, ...],
     "cyclic_order": {"v1": ["h1", "h2"], ...},
     "edges": [["h1", "h1p"], ...],
     "labeled": [["h2", "h2p"], ...]}          # also accepts edge names/indices

Algebra format (fmt 1):
    {"fmt": 1,
     "vertices": ["1", "2"],
     "arrows": [{"id": "a1", "from": "1", "to": "2"}, ...],
     "relations": {"monomials": [["a2", "a1"], ...],       # written right-to-left
                   "binomials": [[[...], [...]], ...]},
     "nilpotency_hint": 6}                                  # optional

Serialization is deterministic: keys sorted, ids sorted, rotations start at
the lexicographically smallest half-edge.
"""

from __future__ import annotations

import json

from .errors import FormatError
from .quiver import Binomial, Monomial, Path, Quiver, Relation, path_from_written
from .ribbon import RibbonGraph, SfBrauerGraph, edge_key

FMT = 1


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def graph_to_json(g: SfBrauerGraph) -> dict:
    graph = g.graph
    return {
        "fmt": FMT,
        "vertices": [{"id": v, "multiplicity": g.multiplicity.get(v, 1)}
                     for v in graph.vertices],
        "cyclic_order": {v: list(graph.fan(v)) for v in graph.vertices},
        "edges": [list(e) for e in graph.edges()],
        "labeled": [list(e) for e in sorted(g.labeled)],
    }


def graph_from_json(doc: dict) -> SfBrauerGraph:
    try:
        vertices = doc["vertices"]
        cyclic = doc["cyclic_order"]
        edges = doc["edges"]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"graph document missing field: {exc}") from exc
    multiplicity = {}
    for entry in vertices:
        if isinstance(entry, str):
            multiplicity[entry] = 1
        else:
            multiplicity[entry["id"]] = int(entry.get("multiplicity", 1))
    unknown = set(cyclic) - set(multiplicity)
    if unknown:
        raise FormatError(f"cyclic_order mentions unknown vertices {sorted(unknown)}")
    try:
        graph = RibbonGraph.from_cyclic_orders(cyclic, edges)
    except Exception as exc:
        raise FormatError(f"bad graph structure: {exc}") from exc
    labeled = set()
    for item in doc.get("labeled", []):
        labeled.add(_resolve_edge(graph, edges, item))
    return SfBrauerGraph(graph, multiplicity, frozenset(labeled))


def _resolve_edge(graph: RibbonGraph, edges, item):
    if isinstance(item, int):
        try:
            pair = edges[item]
        except IndexError as exc:
            raise FormatError(f"labeled edge index {item} out of range") from exc
        return edge_key(*pair)
    if isinstance(item, (list, tuple)) and len(item) == 2:
        e = edge_key(*item)
        if e not in set(graph.edges()):
            raise FormatError(f"labeled entry {item} is not an edge")
        return e
    if isinstance(item, str):
        return graph.edge_named(item)
    raise FormatError(f"cannot interpret labeled entry {item!r}")


def relation_to_json(rel: Relation):
    if isinstance(rel, Monomial):
        return {"monomial": list(rel.path.written())}
    return {"binomial": [list(rel.left.written()), list(rel.right.written())]}


def algebra_to_json(quiver: Quiver, relations, nilpotency_hint: int | None = None) -> dict:
    doc = {
        "fmt": FMT,
        "vertices": list(quiver.vertices),
        "arrows": [{"id": a.name, "from": a.source, "to": a.target}
                   for a in quiver.arrows],
        "relations": {
            "monomials": [list(r.path.written()) for r in relations
                          if isinstance(r, Monomial)],
            "binomials": [[list(r.left.written()), list(r.right.written())]
                          for r in relations if isinstance(r, Binomial)],
        },
    }
    if nilpotency_hint is not None:
        doc["nilpotency_hint"] = nilpotency_hint
    return doc


def algebra_from_json(doc: dict) -> tuple[Quiver, list[Relation], int | None]:
    try:
        quiver = Quiver.make(doc["vertices"],
                             [(a["id"], a["from"], a["to"]) for a in doc["arrows"]])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"algebra document missing field: {exc}") from exc
    rels: list[Relation] = []
    spec = doc.get("relations", {})
    try:
        for word in spec.get("monomials", []):
            rels.append(Monomial(path_from_written(quiver, word)))
        for left, right in spec.get("binomials", []):
            rels.append(Binomial(path_from_written(quiver, left),
                                 path_from_written(quiver, right)))
    except Exception as exc:
        raise FormatError(f"bad relation: {exc}") from exc
    hint = doc.get("nilpotency_hint")
    return quiver, rels, int(hint) if hint is not None else None


def is_graph_document(doc: dict) -> bool:
    return "cyclic_order" in doc


def graph_to_dot(g: SfBrauerGraph) -> str:
    """One node per vertex annotated with its multiplicity, labeled edges
    dashed; the rotation order is recorded in ordering comments."""
    lines = ["graph ribbon {", "  graph [ordering=out];"]
    for v in g.graph.vertices:
        fan = " ".join(g.graph.fan(v))
        lines.append(f'  "{v}" [label="{v} (m={g.multiplicity.get(v, 1)})"];'
                     f'  // rho: {fan}')
    for e in g.graph.edges():
        h1, h2 = e
        v1, v2 = g.graph.vertex_of[h1], g.graph.vertex_of[h2]
        attrs = [f'taillabel="{h1}"', f'headlabel="{h2}"']
        if e in g.labeled:
            attrs.append("style=dashed")
        lines.append(f'  "{v1}" -- "{v2}" [{", ".join(attrs)}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def loewy_text(rows: list[list[str]]) -> str:
    """Stacked-layer rendering, widest row centered."""
    rendered = [" ".join(row) for row in rows]
    width = max(len(r) for r in rendered)
    return "\n".join(r.center(width).rstrip() for r in rendered)
