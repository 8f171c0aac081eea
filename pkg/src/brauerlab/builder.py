"""Quivers and relations of (labeled) Brauer graph algebras.

For a Brauer graph (Gamma, m): one quiver vertex per edge of Gamma, one arrow
a_h : edge(h) -> edge(rho(h)) per half-edge h at a non-truncated vertex, and
the permutation sigma(a_h) = a_{rho^-1(h)} whose orbits are the special
cycles C_a around the vertices.  The ideal is generated by

  (i)   C_a^m = C_b^m for the two cycles based at each edge with neither
        endpoint truncated,
  (ii)  C_{a_h}^m a_h = 0 for every active half-edge h,
  (iii) a b = 0 for composable arrows with sigma(a) != b.

For a labeled graph the two arrows leaving a labeled edge are identified
(labelability makes them parallel), relations are pushed through the
projection pi, rule (i) strips the common projected prefix and suffix, and
rule (iii) generalizes to paths whose inner arrows all leave labeled edges.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MergeTargetsDiffer, UnsupportedLabeling
from .quiver import (
    Arrow,
    Binomial,
    BoundQuiverAlgebra,
    Monomial,
    Path,
    Quiver,
    Relation,
    build_basis,
)
from .ribbon import BrauerGraph, Edge, SfBrauerGraph, edge_name


@dataclass(frozen=True)
class BrauerQuiver:
    """Quiver of a Brauer graph together with the half-edge bookkeeping."""

    quiver: Quiver
    arrow_of_half: dict[str, str]     # h in H' -> arrow name in Q_Gamma
    half_of_arrow: dict[str, str]
    edge_ids: dict[Edge, str]         # edge -> quiver vertex name
    note: str | None = None

    def sigma(self, graph, arrow: str) -> str:
        h = self.half_of_arrow[arrow]
        return self.arrow_of_half[graph.predecessor(h)]


def build_brauer_quiver(g: BrauerGraph) -> BrauerQuiver:
    """One vertex per edge, one arrow per active half-edge."""
    g.graph.require_valid()
    edges = g.graph.edges()
    edge_ids = {e: edge_name(e) for e in edges}
    active = g.active_half_edges()
    arrows = []
    arrow_of_half = {}
    for h in active:
        name = h  # arrows are in bijection with H'; keep the half-edge id
        src = edge_ids[g.graph.edge_of(h)]
        tgt = edge_ids[g.graph.edge_of(g.graph.successor(h))]
        arrows.append((name, src, tgt))
        arrow_of_half[h] = name
    quiver = Quiver.make(sorted(edge_ids.values()), sorted(arrows))
    note = None
    if not arrows:
        # every vertex truncated (the single-edge multiplicity-one graph):
        # the algebra is semisimple and the quiver has no arrows
        note = "all vertices truncated; empty quiver, semisimple algebra"
    return BrauerQuiver(quiver, arrow_of_half,
                        {a: h for h, a in arrow_of_half.items()}, edge_ids, note)


def special_cycle_halves(g: BrauerGraph, h: str) -> list[str]:
    """Half-edges of the sigma-orbit of a_h, in application order.

    The special cycle C_{a_h} is based at edge(rho(h)) and its first applied
    arrow is a_{rho(h)}; it walks once around the vertex s(h).
    """
    order = []
    cur = g.graph.successor(h)
    for _ in range(g.graph.val(g.graph.vertex_of[h])):
        order.append(cur)
        cur = g.graph.successor(cur)
    assert order[-1] == h
    return order


def _cycle_power(g: BrauerGraph, bq: BrauerQuiver, h: str, power: int) -> Path:
    halves = special_cycle_halves(g, h)
    arrows = tuple(bq.arrow_of_half[x] for x in halves) * power
    src = bq.edge_ids[g.graph.edge_of(halves[0])]
    return Path(src, arrows)


def build_brauer_relations(g: BrauerGraph, bq: BrauerQuiver | None = None) -> list[Relation]:
    if bq is None:
        bq = build_brauer_quiver(g)
    graph = g.graph
    active = set(g.active_half_edges())
    rels: list[Relation] = []
    # (i): both based cycles at an edge with non-truncated endpoints agree
    for e in g.active_edges():
        h1, h2 = e
        m1 = g.m(graph.vertex_of[h1])
        m2 = g.m(graph.vertex_of[h2])
        left = _cycle_power(g, bq, graph.predecessor(h1), m1)
        right = _cycle_power(g, bq, graph.predecessor(h2), m2)
        rels.append(Binomial(left, right))
    # (ii): one monomial per active half-edge
    for h in sorted(active):
        m = g.m(graph.vertex_of[h])
        cyc = _cycle_power(g, bq, h, m)
        first = bq.arrow_of_half[h]
        rels.append(Monomial(Path(bq.quiver.arrow(first).source, (first,) + cyc.arrows)))
    # (iii): compositions that do not follow sigma vanish
    for gh in sorted(active):
        nxt = graph.successor(gh)
        other = graph.pairing[nxt]
        if other in active:
            a, b = bq.arrow_of_half[other], bq.arrow_of_half[gh]
            src = bq.quiver.arrow(b).source
            rels.append(Monomial(Path(src, (b, a))))
    return rels


@dataclass(frozen=True)
class SfQuiver:
    """Quiver of a labeled Brauer graph plus the projection pi on arrows."""

    quiver: Quiver
    base: BrauerQuiver
    pi: dict[str, str]                  # Q_Gamma arrow -> merged arrow name
    merged_preimages: dict[str, tuple[str, ...]]

    def project(self, arrows) -> tuple[str, ...]:
        return tuple(self.pi[a] for a in arrows)


def build_sf_quiver(g: SfBrauerGraph) -> SfQuiver:
    """Identify the arrows leaving each labeled edge.

    Labelability forces the two candidates to share source and target, which
    is asserted; the merged arrow keeps the lexicographically smaller name.
    """
    g.require_valid()
    bq = build_brauer_quiver(g.brauer)
    pi = {a: a for a in bq.arrow_of_half.values()}
    preimages: dict[str, tuple[str, ...]] = {}
    for e in sorted(g.labeled):
        outgoing = sorted(bq.arrow_of_half[h] for h in e if h in bq.arrow_of_half)
        if len(outgoing) < 2:
            continue  # labeled edge at a truncated vertex: single arrow, nothing to merge
        a1, a2 = (bq.quiver.arrow(n) for n in outgoing)
        if (a1.source, a1.target) != (a2.source, a2.target):
            raise MergeTargetsDiffer(
                f"arrows {outgoing} from labeled edge {edge_name(e)} are not parallel",
                edge=edge_name(e))
        keep, drop = outgoing
        pi[drop] = keep
        preimages[keep] = tuple(outgoing)
    survivors = sorted(set(pi.values()))
    arrows = tuple(a for a in bq.quiver.arrows if a.name in set(survivors))
    quiver = Quiver(bq.quiver.vertices, arrows)
    return SfQuiver(quiver, bq, pi, preimages)


def _labeled_edge_set(g: SfBrauerGraph) -> set[str]:
    return {edge_name(e) for e in g.labeled}


def build_sf_relations(g: SfBrauerGraph, sq: SfQuiver | None = None) -> list[Relation]:
    return [rel for rel, _rule in build_sf_relations_tagged(g, sq)]


def build_sf_relations_tagged(g: SfBrauerGraph,
                              sq: SfQuiver | None = None) -> list[tuple[Relation, str]]:
    """Relations together with the generating rule ('i', 'ii', 'iii')."""
    if sq is None:
        sq = build_sf_quiver(g)
    bg = g.brauer
    graph = g.graph
    bq = sq.base
    labeled_ids = _labeled_edge_set(g)
    active = set(bg.active_half_edges())
    rels: list[tuple[Relation, str]] = []
    seen: set[tuple] = set()

    def emit(rel: Relation, rule: str):
        if isinstance(rel, Monomial):
            tag = ("m", rel.path.source, rel.path.arrows)
        else:
            tag = ("b", *sorted(((rel.left.source, rel.left.arrows),
                                 (rel.right.source, rel.right.arrows))))
        if tag not in seen:
            seen.add(tag)
            rels.append((rel, rule))

    # (i): project both cycle powers, strip the common prefix and suffix
    for e in bg.active_edges():
        h1, h2 = e
        u = sq.project(_cycle_power(bg, bq, graph.predecessor(h1),
                                    bg.m(graph.vertex_of[h1])).arrows)
        v = sq.project(_cycle_power(bg, bq, graph.predecessor(h2),
                                    bg.m(graph.vertex_of[h2])).arrows)
        if u == v:
            continue  # fully merged: the relation is vacuous
        l1 = 0
        while l1 < min(len(u), len(v)) and u[l1] == v[l1]:
            l1 += 1
        l2 = 0
        while (l2 < min(len(u), len(v)) - l1
               and u[len(u) - 1 - l2] == v[len(v) - 1 - l2]):
            l2 += 1
        cu, cv = u[l1:len(u) - l2], v[l1:len(v) - l2]
        if not cu or not cv:
            raise UnsupportedLabeling(
                f"rule (i) cores degenerate at edge {edge_name(e)}; "
                "labeling identifies cycle powers of different length",
                edge=edge_name(e))
        src = sq.quiver.arrow(cu[0]).source
        emit(Binomial(Path(src, cu), Path(src, cv)), "i")
    # (ii)
    for h in sorted(active):
        cyc = _cycle_power(bg, bq, h, bg.m(graph.vertex_of[h]))
        word = sq.project((bq.arrow_of_half[h],) + cyc.arrows)
        emit(Monomial(Path(sq.quiver.arrow(word[0]).source, word)), "ii")
    # (iii): paths whose inner arrows leave labeled edges and whose ends do
    # not, with sigma^(n-1)(a_n) != a_1.  From a labeled edge both arrows
    # point at the same edge, so the inner chain of edges is deterministic.
    sigma = {a: bq.sigma(graph, a) for a in bq.arrow_of_half.values()}
    out_of_edge: dict[str, list[str]] = {}
    for h, a in bq.arrow_of_half.items():
        out_of_edge.setdefault(bq.edge_ids[graph.edge_of(h)], []).append(a)
    for a1 in sorted(bq.arrow_of_half.values()):
        if bq.quiver.arrow(a1).source in labeled_ids:
            continue
        chain: list[str] = []  # merged inner arrows
        at = bq.quiver.arrow(a1).target
        visited: set[str] = set()
        while True:
            if at not in labeled_ids:
                for an in sorted(out_of_edge.get(at, ())):
                    n = len(chain) + 2
                    s_iter = an
                    for _ in range(n - 1):
                        s_iter = sigma[s_iter]
                    if s_iter != a1:
                        word = (sq.pi[a1],) + tuple(chain) + (sq.pi[an],)
                        src = sq.quiver.arrow(word[0]).source
                        emit(Monomial(Path(src, word)), "iii")
                break
            if at in visited:
                break  # closed chain of labeled edges: no exit, no relation
            visited.add(at)
            lanes = out_of_edge.get(at, ())
            if not lanes:
                break
            chain.append(sq.pi[lanes[0]])
            at = bq.quiver.arrow(lanes[0]).target
    return rels


@dataclass(frozen=True)
class AssembledAlgebra:
    algebra: BoundQuiverAlgebra
    sf: SfQuiver
    relation_rules: dict[str, int]      # per-rule counts
    rule_of_relation: tuple[str, ...]   # parallel to algebra.relations

    @property
    def quiver(self) -> Quiver:
        return self.algebra.quiver

    def provenance(self) -> dict:
        from .jsonio import relation_to_json
        return {
            "arrow_of_half_edge": dict(sorted(self.sf.base.arrow_of_half.items())),
            "merged_arrows": {k: list(v) for k, v in self.sf.merged_preimages.items()},
            "relations": [dict(relation_to_json(rel), rule=rule)
                          for rel, rule in zip(self.algebra.relations,
                                               self.rule_of_relation)],
        }


def nilpotency_hint(g: BrauerGraph) -> int:
    best = 0
    for h in g.active_half_edges():
        v = g.graph.vertex_of[h]
        best = max(best, g.m(v) * g.graph.val(v))
    return best + 1


def assemble(g: SfBrauerGraph | BrauerGraph) -> AssembledAlgebra:
    """Build the bound quiver algebra of a (labeled) Brauer graph."""
    if isinstance(g, BrauerGraph):
        g = SfBrauerGraph(g.graph, dict(g.multiplicity), frozenset())
    sq = build_sf_quiver(g)
    tagged = build_sf_relations_tagged(g, sq)
    rels = [rel for rel, _ in tagged]
    counts: dict[str, int] = {}
    for _, rule in tagged:
        counts[rule] = counts.get(rule, 0) + 1
    algebra = build_basis(sq.quiver, rels, nilpotency_hint=nilpotency_hint(g.brauer) + 1)
    # validate_relations drops vacuous duplicates, keeping the order; realign
    rules = _align_rules(algebra.relations, tagged)
    return AssembledAlgebra(algebra, sq, counts, rules)


def _align_rules(final_relations, tagged) -> tuple[str, ...]:
    remaining = list(tagged)
    rules = []
    for rel in final_relations:
        for k, (cand, rule) in enumerate(remaining):
            if cand == rel:
                rules.append(rule)
                del remaining[k]
                break
        else:
            rules.append("?")
    return tuple(rules)
