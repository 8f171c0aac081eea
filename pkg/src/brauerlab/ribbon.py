"""Ribbon graphs with vertex multiplicities and labeled edges.

A ribbon graph is stored as the tuple (V, H, s, iota, rho): a vertex set, a
half-edge set, the incidence map s, the fixed-point-free pairing involution
iota whose orbits are the edges, and the rotation rho whose cycles are the
half-edge fans H_v around each vertex.  All ids are opaque strings; edges are
canonically named by the lexicographically smaller half-edge of the pair.

Three decorated variants share the same underlying structure:

* ``BrauerGraph``       -- ribbon graph + multiplicity function m: V -> Z>0
* ``LabeledRibbonGraph``-- ribbon graph + a set L of labeled edges
* ``SfBrauerGraph``     -- both (the input datum of a symmetric fractional
  Brauer graph algebra)
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    DanglingId,
    Disconnected,
    EmptyResult,
    FixedPointInPairing,
    GraphInvalid,
    RotationOrbitMismatch,
    SizeLimit,
)

Edge = tuple[str, str]  # iota-orbit, stored as a sorted pair of half-edge ids


def edge_key(h1: str, h2: str) -> Edge:
    return (h1, h2) if h1 <= h2 else (h2, h1)


def edge_name(e: Edge) -> str:
    """Canonical printable name of an edge: its smaller half-edge id."""
    return e[0]


@dataclass(frozen=True)
class ValidationIssue:
    code: str
    message: str
    ids: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {"code": self.code, "message": self.message, "ids": list(self.ids)}


@dataclass(frozen=True)
class ValidationReport:
    issues: tuple[ValidationIssue, ...]
    warnings: tuple[ValidationIssue, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.issues

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "errors": [i.to_json() for i in self.issues],
            "warnings": [w.to_json() for w in self.warnings],
        }


@dataclass(frozen=True)
class RibbonGraph:
    """Immutable rotation system.  Build with ``from_cyclic_orders``."""

    vertices: tuple[str, ...]
    half_edges: tuple[str, ...]
    vertex_of: dict[str, str]       # s
    pairing: dict[str, str]         # iota
    rotation: dict[str, str]        # rho
    cyclic_orders: dict[str, tuple[str, ...]] = field(compare=False)

    @staticmethod
    def from_cyclic_orders(cyclic_orders: dict[str, list[str] | tuple[str, ...]],
                           edges: list[tuple[str, str]] | list[list[str]]) -> "RibbonGraph":
        """Assemble s, iota, rho from per-vertex rotation lists and edge pairs.

        The rotation list at a vertex is read cyclically (last wraps to
        first); loops list both half-edges at the same vertex.
        """
        vertex_of: dict[str, str] = {}
        rotation: dict[str, str] = {}
        orders: dict[str, tuple[str, ...]] = {}
        for v in sorted(cyclic_orders):
            fan = tuple(cyclic_orders[v])
            if not fan:
                raise DanglingId(f"vertex {v!r} has an empty rotation fan", vertex=v)
            orders[v] = _normalize_cycle(fan)
            for h in fan:
                if h in vertex_of:
                    raise DanglingId(f"half-edge {h!r} listed at two vertices", half_edge=h)
                vertex_of[h] = v
            for i, h in enumerate(fan):
                rotation[h] = fan[(i + 1) % len(fan)]
        pairing: dict[str, str] = {}
        for pair in edges:
            if len(pair) != 2:
                raise DanglingId(f"edge entry {pair!r} is not a pair")
            a, b = pair
            for h in (a, b):
                if h in pairing:
                    raise DanglingId(f"half-edge {h!r} occurs in two edges", half_edge=h)
            pairing[a] = b
            pairing[b] = a
        return RibbonGraph(
            vertices=tuple(sorted(cyclic_orders)),
            half_edges=tuple(sorted(vertex_of)),
            vertex_of=vertex_of,
            pairing=pairing,
            rotation=rotation,
            cyclic_orders=orders,
        )

    # -- basic accessors ---------------------------------------------------
    def fan(self, v: str) -> tuple[str, ...]:
        """H_v in rotation order, normalized to start at the smallest id."""
        return self.cyclic_orders[v]

    def val(self, v: str) -> int:
        return len(self.cyclic_orders[v])

    def successor(self, h: str) -> str:
        return self.rotation[h]

    def predecessor(self, h: str) -> str:
        return self._rotation_inverse()[h]

    def _rotation_inverse(self) -> dict[str, str]:
        inv = getattr(self, "_rho_inv", None)
        if inv is None:
            inv = {b: a for a, b in self.rotation.items()}
            object.__setattr__(self, "_rho_inv", inv)
        return inv

    def edge_of(self, h: str) -> Edge:
        return edge_key(h, self.pairing[h])

    def edges(self) -> tuple[Edge, ...]:
        seen: set[Edge] = set()
        for h in self.half_edges:
            seen.add(self.edge_of(h))
        return tuple(sorted(seen))

    def edge_named(self, name: str) -> Edge:
        for e in self.edges():
            if edge_name(e) == name or f"{e[0]}|{e[1]}" == name:
                return e
        raise GraphInvalid(f"no edge named {name!r}", edge=name)

    # -- validation --------------------------------------------------------
    def validate(self) -> ValidationReport:
        issues: list[ValidationIssue] = []
        hs = set(self.half_edges)
        for h in self.half_edges:
            if self.vertex_of.get(h) not in self.vertices:
                issues.append(ValidationIssue("DanglingId", f"half-edge {h} has no vertex", (h,)))
            mate = self.pairing.get(h)
            if mate is None or mate not in hs:
                issues.append(ValidationIssue("DanglingId", f"half-edge {h} is unpaired", (h,)))
            elif mate == h:
                issues.append(ValidationIssue("FixedPointInPairing", f"iota fixes {h}", (h,)))
            elif self.pairing.get(mate) != h:
                issues.append(ValidationIssue("DanglingId", f"pairing not involutive at {h}", (h, mate)))
        # rho cycles must be exactly the fans H_v
        for v in self.vertices:
            fan = set(self.cyclic_orders[v])
            expected = {h for h in self.half_edges if self.vertex_of.get(h) == v}
            if fan != expected:
                issues.append(ValidationIssue(
                    "RotationOrbitMismatch",
                    f"rotation cycle at {v} is not s^-1({v})",
                    tuple(sorted(fan ^ expected))))
        for h, nxt in self.rotation.items():
            if self.vertex_of.get(h) != self.vertex_of.get(nxt):
                issues.append(ValidationIssue(
                    "RotationOrbitMismatch", f"rho({h})={nxt} crosses vertices", (h, nxt)))
        if not issues and not self._connected():
            issues.append(ValidationIssue("Disconnected", "underlying graph is not connected",
                                          tuple(self.vertices)))
        return ValidationReport(tuple(issues))

    def require_valid(self) -> None:
        report = self.validate()
        if report.valid:
            return
        first = report.issues[0]
        cls = {
            "FixedPointInPairing": FixedPointInPairing,
            "RotationOrbitMismatch": RotationOrbitMismatch,
            "Disconnected": Disconnected,
            "DanglingId": DanglingId,
        }.get(first.code, GraphInvalid)
        raise cls(first.message, issues=[i.to_json() for i in report.issues])

    def _connected(self) -> bool:
        if not self.vertices:
            return False
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            v = stack.pop()
            for h in self.cyclic_orders[v]:
                w = self.vertex_of[self.pairing[h]]
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)


def _normalize_cycle(fan: tuple[str, ...]) -> tuple[str, ...]:
    # rotate so the lexicographically smallest half-edge comes first;
    # hashing and equality of graphs then ignore the arbitrary cut point
    k = fan.index(min(fan))
    return fan[k:] + fan[:k]


@dataclass(frozen=True)
class BrauerGraph:
    graph: RibbonGraph
    multiplicity: dict[str, int]

    def __post_init__(self):
        for v in self.graph.vertices:
            m = self.multiplicity.get(v, 1)
            if m < 1:
                raise GraphInvalid(f"multiplicity m({v})={m} must be >= 1", vertex=v)
            self.multiplicity.setdefault(v, 1)

    def m(self, v: str) -> int:
        return self.multiplicity[v]

    def truncated(self, v: str) -> bool:
        return self.m(v) == 1 and self.graph.val(v) == 1

    def truncated_vertices(self) -> tuple[str, ...]:
        return tuple(v for v in self.graph.vertices if self.truncated(v))

    def active_half_edges(self) -> tuple[str, ...]:
        """H' = half-edges whose vertex is not truncated."""
        return tuple(h for h in self.graph.half_edges
                     if not self.truncated(self.graph.vertex_of[h]))

    def active_edges(self) -> tuple[Edge, ...]:
        """E(Gamma)' = edges with neither endpoint truncated."""
        out = []
        for e in self.graph.edges():
            if all(not self.truncated(self.graph.vertex_of[h]) for h in e):
                out.append(e)
        return tuple(out)


@dataclass(frozen=True)
class LabeledRibbonGraph:
    graph: RibbonGraph
    labeled: frozenset[Edge]

    def validate(self) -> ValidationReport:
        base = self.graph.validate()
        issues = list(base.issues)
        warnings: list[ValidationIssue] = []
        if not base.valid:
            # the labeling conditions presuppose a structurally sound graph
            return ValidationReport(tuple(issues))
        edges = set(self.graph.edges())
        lab = labelable_edges(self.graph)
        for e in sorted(self.labeled):
            if e not in edges:
                issues.append(ValidationIssue("DanglingId", f"labeled edge {e} does not exist", e))
            elif e not in lab:
                issues.append(ValidationIssue(
                    "GraphInvalid", f"edge {edge_name(e)} is labeled but not labelable", e))
        for v in self.graph.vertices:
            if self.graph.val(v) < 2:
                continue
            free = [h for h in self.graph.fan(v) if self.graph.edge_of(h) not in self.labeled]
            if len(free) < 2:
                issues.append(ValidationIssue(
                    "GraphInvalid",
                    f"vertex {v} needs at least two half-edges on unlabeled edges",
                    (v,)))
        return ValidationReport(tuple(issues), tuple(warnings))


@dataclass(frozen=True)
class SfBrauerGraph:
    """Labeled ribbon graph with a multiplicity function."""

    graph: RibbonGraph
    multiplicity: dict[str, int]
    labeled: frozenset[Edge] = frozenset()

    @property
    def brauer(self) -> BrauerGraph:
        return BrauerGraph(self.graph, dict(self.multiplicity))

    @property
    def labeled_graph(self) -> LabeledRibbonGraph:
        return LabeledRibbonGraph(self.graph, self.labeled)

    def validate(self) -> ValidationReport:
        report = self.labeled_graph.validate()
        issues = list(report.issues)
        warnings = list(report.warnings)
        for v in self.graph.vertices:
            if self.multiplicity.get(v, 1) < 1:
                issues.append(ValidationIssue(
                    "GraphInvalid", f"multiplicity m({v}) must be >= 1", (v,)))
        if report.valid and not issues:
            bg = self.brauer
            for e in sorted(self.labeled):
                if any(bg.truncated(self.graph.vertex_of[h]) for h in e):
                    warnings.append(ValidationIssue(
                        "LabeledAtTruncatedVertex",
                        f"labeled edge {edge_name(e)} touches a truncated vertex",
                        e))
        return ValidationReport(tuple(issues), tuple(warnings))

    def require_valid(self) -> None:
        report = self.validate()
        if not report.valid:
            first = report.issues[0]
            raise GraphInvalid(first.message, issues=[i.to_json() for i in report.issues])


def validate(graph: RibbonGraph) -> ValidationReport:
    """Check the three structural invariants plus connectedness."""
    return graph.validate()


def labelable_edges(graph: RibbonGraph) -> set[Edge]:
    """Edges {h, iota(h)} satisfying iota(rho(h)) = rho(iota(h)).

    The defining identity is symmetric in h <-> iota(h); both directions are
    checked and must agree.
    """
    out: set[Edge] = set()
    for e in graph.edges():
        h1, h2 = e
        c1 = graph.pairing[graph.rotation[h1]] == graph.rotation[graph.pairing[h1]]
        c2 = graph.pairing[graph.rotation[h2]] == graph.rotation[graph.pairing[h2]]
        assert c1 == c2, f"labelable test asymmetric at edge {e}"
        if c1:
            out.add(e)
    return out


def strip_labeled(g: SfBrauerGraph) -> BrauerGraph:
    """Delete the labeled edges and short-circuit the rotation past them.

    rho'(h) is the first rho-iterate of h that does not lie on a labeled
    edge; multiplicities are unchanged.  Vertices that lose all half-edges
    are dropped.
    """
    g.require_valid()
    graph = g.graph
    keep = [h for h in graph.half_edges if graph.edge_of(h) not in g.labeled]
    if not keep:
        raise EmptyResult("all edges are labeled; nothing remains after stripping")
    keep_set = set(keep)
    orders: dict[str, list[str]] = {}
    for v in graph.vertices:
        fan = [h for h in graph.fan(v) if h in keep_set]
        if fan:
            orders[v] = fan
    edges = [list(e) for e in sorted({graph.edge_of(h) for h in keep})]
    stripped = RibbonGraph.from_cyclic_orders(orders, edges)
    stripped.require_valid()
    mult = {v: g.multiplicity.get(v, 1) for v in orders}
    return BrauerGraph(stripped, mult)


def is_brauer_tree(g: BrauerGraph) -> bool:
    """Tree with at most one vertex of multiplicity > 1."""
    g.graph.require_valid()
    n_edges = len(g.graph.edges())
    if n_edges != len(g.graph.vertices) - 1:
        return False
    exceptional = [v for v in g.graph.vertices if g.m(v) > 1]
    return len(exceptional) <= 1


GraphLike = RibbonGraph | BrauerGraph | LabeledRibbonGraph | SfBrauerGraph


def _unpack(g: GraphLike) -> tuple[RibbonGraph, dict[str, int] | None, frozenset[Edge] | None]:
    if isinstance(g, RibbonGraph):
        return g, None, None
    if isinstance(g, BrauerGraph):
        return g.graph, g.multiplicity, None
    if isinstance(g, LabeledRibbonGraph):
        return g.graph, None, g.labeled
    return g.graph, g.multiplicity, g.labeled


def are_isomorphic(a: GraphLike, b: GraphLike, size_cap: int = 4096) -> tuple[bool, dict[str, str] | None]:
    """Half-edge bijection commuting with iota and rho, compatible with s.

    Labels and multiplicities are preserved when both sides carry them.
    Since <rho, iota> acts transitively on the half-edges of a connected
    graph, fixing the image of one anchor half-edge determines the whole
    map; the search is linear per anchor candidate.
    """
    ga, ma, la = _unpack(a)
    gb, mb, lb = _unpack(b)
    if len(ga.half_edges) > size_cap or len(gb.half_edges) > size_cap:
        raise SizeLimit(f"graph exceeds isomorphism search cap {size_cap}")
    if len(ga.half_edges) != len(gb.half_edges) or len(ga.vertices) != len(gb.vertices):
        return False, None
    if not ga.half_edges:
        return True, {}
    anchor = ga.half_edges[0]
    for cand in gb.half_edges:
        mapping = _propagate(ga, gb, anchor, cand)
        if mapping is None:
            continue
        if not _vertex_compatible(ga, gb, mapping, ma, mb):
            continue
        if la is not None and lb is not None:
            image = {edge_key(mapping[e[0]], mapping[e[1]]) for e in la}
            if image != set(lb):
                continue
        elif (la or frozenset()) != frozenset() and lb is None:
            pass  # one side unlabeled: labels ignored by contract
        return True, mapping
    return False, None


def _propagate(ga: RibbonGraph, gb: RibbonGraph, h0: str, k0: str) -> dict[str, str] | None:
    mapping = {h0: k0}
    used = {k0}
    stack = [h0]
    while stack:
        h = stack.pop()
        k = mapping[h]
        for img_h, img_k in ((ga.pairing[h], gb.pairing[k]), (ga.rotation[h], gb.rotation[k])):
            if img_h in mapping:
                if mapping[img_h] != img_k:
                    return None
            else:
                if img_k in used:
                    return None
                mapping[img_h] = img_k
                used.add(img_k)
                stack.append(img_h)
    if len(mapping) != len(ga.half_edges):
        return None  # cannot happen for connected inputs
    return mapping


def _vertex_compatible(ga: RibbonGraph, gb: RibbonGraph, mapping: dict[str, str],
                       ma: dict[str, int] | None, mb: dict[str, int] | None) -> bool:
    vmap: dict[str, str] = {}
    for h, k in mapping.items():
        va, vb = ga.vertex_of[h], gb.vertex_of[k]
        if vmap.setdefault(va, vb) != vb:
            return False
    if len(set(vmap.values())) != len(vmap):
        return False
    if ma is not None and mb is not None:
        for va, vb in vmap.items():
            if ma.get(va, 1) != mb.get(vb, 1):
                return False
    return True
