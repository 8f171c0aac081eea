"""Kauer moves on labeled ribbon graphs and derived-invariant comparison.

A move at an unlabeled edge relocates each of its half-edges over the
neighboring edge in the chosen rotation direction: for half-edge h at v, the
neighbor g is the first rho-iterate (forward for over-successor, backward
for over-predecessor) lying on another edge; h re-attaches at the far end of
g's edge, spliced next to iota(g).  Loops relocate each half independently,
and a half-edge at a valency-1 vertex relocates trivially.  Every edge
passed over must be unlabeled.

Applying the same direction again at the relocated edge undoes the move, so
a move is its own inverse up to isomorphism.

Derived equivalence itself is out of reach at desk scale; the stand-in
invariants are the dimension, the number of simples, and |det| of the Cartan
matrix, all computed exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .builder import assemble
from .errors import Inadmissible, NoSuchEdge
from .quiver import cartan
from .ribbon import Edge, RibbonGraph, SfBrauerGraph, edge_key, edge_name

OVER_PRED = "pred"
OVER_SUCC = "succ"


@dataclass(frozen=True)
class KauerMove:
    edge: Edge
    directions: tuple[str, str]      # per half-edge of the edge, sorted order

    def to_json(self) -> dict:
        return {"edge": list(self.edge), "directions": list(self.directions)}


@dataclass(frozen=True)
class DerivedInvariants:
    dimension: int
    simples: int
    cartan_det_abs: int

    def to_json(self) -> dict:
        return {"dimension": self.dimension, "simples": self.simples,
                "cartan_det_abs": self.cartan_det_abs}


def _edge_of(g: SfBrauerGraph, edge) -> Edge:
    if isinstance(edge, str):
        return g.graph.edge_named(edge)
    e = edge_key(*edge)
    if e not in set(g.graph.edges()):
        raise NoSuchEdge(f"edge {e} does not exist", edge=list(e))
    return e


def _neighbor(g: SfBrauerGraph, h: str, direction: str) -> str | None:
    """First rotation neighbor of h on a different edge; None at valency-1
    vertices or when the fan holds nothing but the moved edge."""
    graph = g.graph
    e = graph.edge_of(h)
    step = graph.successor if direction == OVER_SUCC else graph.predecessor
    cur = step(h)
    for _ in range(graph.val(graph.vertex_of[h])):
        if cur == h:
            return None
        if graph.edge_of(cur) != e:
            return cur
        cur = step(cur)
    return None


def admissible_moves(g: SfBrauerGraph, edge) -> list[KauerMove]:
    """Direction assignments whose passed-over edges are unlabeled and whose
    result is again a valid labeled ribbon graph (a relocation must not land
    inside a labeled fan and break labelability)."""
    g.require_valid()
    e = _edge_of(g, edge)
    if e in g.labeled:
        return []
    options: list[list[str]] = []
    for h in e:
        ok = []
        for direction in (OVER_PRED, OVER_SUCC):
            nb = _neighbor(g, h, direction)
            if nb is None or g.graph.edge_of(nb) not in g.labeled:
                ok.append(direction)
        options.append(ok)
    moves = []
    for d1 in options[0]:
        for d2 in options[1]:
            move = KauerMove(e, (d1, d2))
            try:
                apply_move(g, move)
            except Inadmissible:
                continue
            moves.append(move)
    return moves


def apply_move(g: SfBrauerGraph, move: KauerMove) -> SfBrauerGraph:
    """Relocate both half-edges of the moved edge; labels carry over."""
    g.require_valid()
    e = _edge_of(g, move.edge)
    if e in g.labeled:
        raise Inadmissible(f"edge {edge_name(e)} is labeled", edge=list(e))
    graph = g.graph

    relocations = []                 # (half, target vertex, anchor, side)
    for h, direction in zip(e, move.directions):
        if direction not in (OVER_PRED, OVER_SUCC):
            raise Inadmissible(f"unknown direction {direction!r}")
        nb = _neighbor(g, h, direction)
        if nb is None:
            continue                 # valency-1 endpoint: identity relocation
        if graph.edge_of(nb) in g.labeled:
            raise Inadmissible(
                f"move at {edge_name(e)} passes over labeled edge "
                f"{edge_name(graph.edge_of(nb))}", edge=list(e))
        mate = graph.pairing[nb]
        relocations.append((h, graph.vertex_of[mate], mate, direction))

    orders = {v: list(graph.fan(v)) for v in graph.vertices}
    for h, _, _, _ in relocations:
        orders[graph.vertex_of[h]].remove(h)
    for h, w, anchor, direction in relocations:
        fan = orders[w]
        at = fan.index(anchor)
        # over-successor lands right after iota(g), over-predecessor right
        # before it; this orientation reproduces both worked move pairs and
        # makes the flipped direction the inverse move
        fan.insert(at + 1 if direction == OVER_SUCC else at, h)
    orders = {v: fan for v, fan in orders.items() if fan}
    moved = RibbonGraph.from_cyclic_orders(orders, [list(p) for p in graph.edges()])
    mult = {v: g.multiplicity.get(v, 1) for v in moved.vertices}
    out = SfBrauerGraph(moved, mult, g.labeled)
    report = out.validate()
    if not report.valid:
        raise Inadmissible("move produced an invalid graph",
                           issues=[i.to_json() for i in report.issues])
    return out


def inverse_move(move: KauerMove) -> KauerMove:
    flip = {OVER_PRED: OVER_SUCC, OVER_SUCC: OVER_PRED}
    return KauerMove(move.edge, tuple(flip[d] for d in move.directions))


def apply_half_move(g: SfBrauerGraph, edge, half: str, direction: str) -> SfBrauerGraph:
    """Relocate a single endpoint only.  NON-CANONICAL: the mutation theory
    moves both half-edges at once; this exists for experimentation and its
    output carries no equivalence guarantee."""
    g.require_valid()
    e = _edge_of(g, edge)
    if half not in e:
        raise NoSuchEdge(f"half-edge {half} does not belong to edge {edge_name(e)}")
    if e in g.labeled:
        raise Inadmissible(f"edge {edge_name(e)} is labeled", edge=list(e))
    nb = _neighbor(g, half, direction)
    if nb is None:
        return g
    if g.graph.edge_of(nb) in g.labeled:
        raise Inadmissible("relocation passes over a labeled edge")
    graph = g.graph
    mate = graph.pairing[nb]
    orders = {v: list(graph.fan(v)) for v in graph.vertices}
    orders[graph.vertex_of[half]].remove(half)
    fan = orders[graph.vertex_of[mate]]
    at = fan.index(mate)
    fan.insert(at + 1 if direction == OVER_SUCC else at, half)
    moved = RibbonGraph.from_cyclic_orders({v: f for v, f in orders.items() if f},
                                           [list(p) for p in graph.edges()])
    out = SfBrauerGraph(moved, {v: g.multiplicity.get(v, 1) for v in moved.vertices},
                        g.labeled)
    report = out.validate()
    if not report.valid:
        raise Inadmissible("half-move produced an invalid graph",
                           issues=[i.to_json() for i in report.issues])
    return out


def invariants(g: SfBrauerGraph) -> DerivedInvariants:
    built = assemble(g)
    c = cartan(built.algebra)
    return DerivedInvariants(built.algebra.dimension,
                             len(built.algebra.quiver.vertices),
                             c.det_abs)


def compare_invariants(a: SfBrauerGraph, b: SfBrauerGraph) -> dict:
    ia, ib = invariants(a), invariants(b)
    return {"left": ia.to_json(), "right": ib.to_json(),
            "equal": ia == ib}
