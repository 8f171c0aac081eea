"""Recover a labeled Brauer graph from a symmetric special quasi-biserial
algebra, and the round-trip check.

Each quiver vertex h becomes an edge with two half-edges h.1, h.2 swapped by
iota.  The non-truncated graph vertices are the basic cycles; a cycle claims
one half-edge of every quiver vertex it visits (two when it visits twice, a
loop), rho follows the cycle's arrow order, and unclaimed half-edges become
truncated leaves of multiplicity 1.  An edge is labeled exactly when some
arrow starting there rides two distinct basic cycles.
"""

from __future__ import annotations

from dataclasses import dataclass

from .builder import assemble
from .classify import (
    BasicCycle,
    basic_cycles,
    is_special_quasi_biserial,
    is_symmetric_canonical,
)
from .errors import CycleCoverIncomplete, NotSQB, NotSymmetric, PostconditionFailed
from .quiver import BoundQuiverAlgebra, Path
from .ribbon import RibbonGraph, SfBrauerGraph, edge_key


@dataclass(frozen=True)
class ExtractionResult:
    graph: SfBrauerGraph
    edge_of_vertex: dict[str, str]    # quiver vertex -> edge name in the graph
    vertex_of_cycle: dict[str, str]   # written cycle -> graph vertex id
    arrow_map: dict[str, str]         # input arrow -> arrow name of the rebuilt quiver
    note: str | None = None


def _nakayama_cycle(algebra: BoundQuiverAlgebra) -> list[str] | None:
    """Arrow names of the unique cycle when the quiver is a crown."""
    q = algebra.quiver
    if any(len(q.arrows_from(v)) != 1 or len(q.arrows_into(v)) != 1 for v in q.vertices):
        return None
    start = q.vertices[0]
    order = []
    at = start
    for _ in range(len(q.vertices)):
        a = q.arrows_from(at)[0]
        order.append(a.name)
        at = a.target
    return order if at == start else None


def extract(algebra: BoundQuiverAlgebra) -> ExtractionResult:
    """Build the labeled Brauer graph whose algebra reproduces the input."""
    verdict, _ = is_symmetric_canonical(algebra)
    if verdict != "yes":
        raise NotSymmetric("extraction needs a canonically symmetric algebra")
    sqb, witness = is_special_quasi_biserial(algebra)
    if not sqb:
        raise NotSQB("extraction needs a special quasi-biserial algebra",
                     witness=witness.to_json() if witness else None)

    crown = _nakayama_cycle(algebra)
    if crown is not None:
        return _extract_nakayama(algebra, crown)

    cycles = basic_cycles(algebra)
    order = {c: i for i, c in enumerate(cycles)}
    cycle_ids = {c: f"w{i + 1}" for i, c in enumerate(cycles)}

    # occurrences of each quiver vertex as the source of a cycle arrow
    occurrences: dict[str, list[tuple[BasicCycle, int]]] = {v: [] for v in algebra.quiver.vertices}
    for c in cycles:
        at = c.path.source
        for k, name in enumerate(c.path.arrows):
            occurrences[at].append((c, k))
            at = algebra.quiver.arrow(name).target
    for v, occ in occurrences.items():
        if not occ:
            raise CycleCoverIncomplete(f"quiver vertex {v} lies on no basic cycle")
        if len(occ) > 2:
            raise CycleCoverIncomplete(f"quiver vertex {v} visited more than twice")

    half_of_slot: dict[tuple[str, int], str] = {}   # (cycle id, position) -> half-edge
    orders: dict[str, list[str]] = {}
    multiplicity: dict[str, int] = {}
    for v in algebra.quiver.vertices:
        occ = sorted(occurrences[v], key=lambda t: (order[t[0]], t[1]))
        halves = [f"{v}.1", f"{v}.2"]
        for half, (c, k) in zip(halves, occ):
            half_of_slot[(cycle_ids[c], k)] = half
        if len(occ) == 1:
            # the unused half-edge dangles from a fresh truncated leaf
            leaf = f"t:{v}"
            orders[leaf] = [halves[1]]
            multiplicity[leaf] = 1
    for c in cycles:
        cid = cycle_ids[c]
        orders[cid] = [half_of_slot[(cid, k)] for k in range(len(c.path.arrows))]
        multiplicity[cid] = c.multiplicity

    edges = [[f"{v}.1", f"{v}.2"] for v in algebra.quiver.vertices]
    graph = RibbonGraph.from_cyclic_orders(orders, edges)

    labeled = set()
    for a in algebra.quiver.arrows:
        owners = [c for c in cycles if a.name in c.path.arrows]
        if len(owners) >= 2:
            labeled.add(edge_key(f"{a.source}.1", f"{a.source}.2"))
    sf = SfBrauerGraph(graph, multiplicity, frozenset(labeled))
    report = sf.validate()
    if not report.valid:
        raise PostconditionFailed("extracted graph fails validation",
                                  issues=[i.to_json() for i in report.issues])

    arrow_map = _arrow_correspondence(algebra, cycles, cycle_ids, half_of_slot, sf)
    return ExtractionResult(
        graph=sf,
        edge_of_vertex={v: f"{v}.1" for v in algebra.quiver.vertices},
        vertex_of_cycle={"*".join(c.path.written()): cycle_ids[c] for c in cycles},
        arrow_map=arrow_map)


def _extract_nakayama(algebra: BoundQuiverAlgebra, crown: list[str]) -> ExtractionResult:
    """Symmetric Nakayama algebras come from a star with one weighted center."""
    e = len(crown)
    maxlen = algebra.nilpotency - 1
    if e == 0 or maxlen % e:
        raise PostconditionFailed("crown algebra is not symmetric Nakayama")
    m = maxlen // e
    q = algebra.quiver
    note = None
    if m < 1 or (m == 1 and e == 1):
        note = ("radical-square-zero case: the one-edge Brauer tree is returned "
                "but its algebra under this construction is semisimple")
        m = max(m, 1)
    center_fan = []
    orders: dict[str, list[str]] = {}
    multiplicity: dict[str, int] = {"c": m}
    at = q.arrow(crown[0]).source
    for name in crown:
        center_fan.append(f"{at}.1")
        orders[f"t:{at}"] = [f"{at}.2"]
        multiplicity[f"t:{at}"] = 1
        at = q.arrow(name).target
    orders["c"] = center_fan
    edges = [[f"{v}.1", f"{v}.2"] for v in q.vertices]
    graph = RibbonGraph.from_cyclic_orders(orders, edges)
    sf = SfBrauerGraph(graph, multiplicity, frozenset())
    arrow_map = {name: f"{q.arrow(name).source}.1" for name in crown}
    return ExtractionResult(
        graph=sf,
        edge_of_vertex={v: f"{v}.1" for v in q.vertices},
        vertex_of_cycle={"*".join(reversed(crown)): "c"},
        arrow_map=arrow_map,
        note=note)


def _arrow_correspondence(algebra, cycles, cycle_ids, half_of_slot,
                          sf: SfBrauerGraph) -> dict[str, str]:
    """Input arrow -> arrow of the quiver rebuilt from the extracted graph.

    The rebuilt arrow of a cycle slot is named by its half-edge; merged
    arrows (labeled edges) keep the smaller preimage name, matching the
    builder's convention.
    """
    from .builder import build_sf_quiver
    sq = build_sf_quiver(sf)
    out: dict[str, str] = {}
    for c in cycles:
        cid = cycle_ids[c]
        for k, name in enumerate(c.path.arrows):
            half = half_of_slot[(cid, k)]
            rebuilt = sq.pi[sq.base.arrow_of_half[half]]
            prev = out.get(name)
            assert prev is None or prev == rebuilt, \
                f"arrow {name} maps to two rebuilt arrows"
            out[name] = rebuilt
    return out


def roundtrip_check(g: SfBrauerGraph) -> bool:
    """assemble -> extract -> assemble; the nonzero path classes must agree
    under the extraction's arrow correspondence."""
    first = assemble(g)
    result = extract(first.algebra)
    second = assemble(result.graph)
    amap = result.arrow_map
    if set(amap) != {a.name for a in first.algebra.quiver.arrows}:
        return False

    def map_path(p: Path):
        if not p.arrows:
            return (result.edge_of_vertex.get(p.source, p.source), ())
        src = second.algebra.quiver.arrow(amap[p.arrows[0]]).source
        return (src, tuple(amap[a] for a in p.arrows))

    def partition(alg, mapper):
        return {tuple(sorted(mapper(m) for m in c.members)) for c in alg.classes}

    return (partition(first.algebra, map_path)
            == partition(second.algebra, lambda p: (p.source, p.arrows)))
