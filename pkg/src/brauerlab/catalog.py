"""Named fixture graphs and algebras used by the test suite and shipped as
JSON under fixtures/.

Rotation systems of the mutation-pair fixtures (kauer_g1 .. kauer_g5) were
read off drawing coordinates: clockwise fans around each vertex, dashed
edges labeled.  Edges are named by their smaller half-edge id, so quiver
vertices come out as the plain edge numbers.
"""

from __future__ import annotations

from .quiver import Binomial, Monomial, Path, Quiver, Relation, path_from_written
from .ribbon import RibbonGraph, SfBrauerGraph, edge_key


def _graph(orders: dict[str, list[str]], edges: list[list[str]],
           multiplicity: dict[str, int] | None = None,
           labeled: list[tuple[str, str]] = ()) -> SfBrauerGraph:
    graph = RibbonGraph.from_cyclic_orders(orders, edges)
    mult = {v: 1 for v in graph.vertices}
    mult.update(multiplicity or {})
    g = SfBrauerGraph(graph, mult, frozenset(edge_key(*e) for e in labeled))
    g.require_valid()
    return g


def bga4() -> SfBrauerGraph:
    """Two vertices joined by four parallel edges, multiplicity one."""
    return _graph(
        {"v1": ["1", "2", "3", "4"], "v2": ["1b", "2b", "3b", "4b"]},
        [["1", "1b"], ["2", "2b"], ["3", "3b"], ["4", "4b"]])


def sf_example() -> SfBrauerGraph:
    """bga4 with edges 2 and 4 labeled."""
    return _graph(
        {"v1": ["1", "2", "3", "4"], "v2": ["1b", "2b", "3b", "4b"]},
        [["1", "1b"], ["2", "2b"], ["3", "3b"], ["4", "4b"]],
        labeled=[("2", "2b"), ("4", "4b")])


def as_surj() -> SfBrauerGraph:
    """bga4 with the single edge 2 labeled."""
    return _graph(
        {"v1": ["1", "2", "3", "4"], "v2": ["1b", "2b", "3b", "4b"]},
        [["1", "1b"], ["2", "2b"], ["3", "3b"], ["4", "4b"]],
        labeled=[("2", "2b")])


def rfs() -> SfBrauerGraph:
    """Two hubs carrying a triple edge (two strands labeled) plus one pendant
    each; the representation-finite example that is not a Brauer tree."""
    return _graph(
        {"vA": ["2", "4", "5", "1"], "vB": ["3", "4b", "5b", "1b"],
         "tC": ["3b"], "tD": ["2b"]},
        [["1", "1b"], ["2", "2b"], ["3", "3b"], ["4", "4b"], ["5", "5b"]],
        labeled=[("4", "4b"), ("5", "5b")])


def tri_star() -> SfBrauerGraph:
    return _graph(
        {"c": ["1", "2", "3"], "t1": ["1b"], "t2": ["2b"], "t3": ["3b"]},
        [["1", "1b"], ["2", "2b"], ["3", "3b"]])


def star_m2() -> SfBrauerGraph:
    """Three-edge star with an exceptional center of multiplicity 2."""
    return _graph(
        {"c": ["1", "2", "3"], "t1": ["1b"], "t2": ["2b"], "t3": ["3b"]},
        [["1", "1b"], ["2", "2b"], ["3", "3b"]],
        multiplicity={"c": 2})


def two_path() -> SfBrauerGraph:
    """Two edges sharing a valency-2 vertex, both far ends truncated."""
    return _graph(
        {"c": ["1", "2"], "t1": ["1b"], "t2": ["2b"]},
        [["1", "1b"], ["2", "2b"]])


def loop_single() -> SfBrauerGraph:
    """One edge, multiplicity 3 at one end, the other end truncated."""
    return _graph(
        {"v": ["1"], "t": ["1b"]}, [["1", "1b"]], multiplicity={"v": 3})


def loop_pendant() -> SfBrauerGraph:
    """A loop plus a pendant edge at the same vertex."""
    return _graph(
        {"v": ["l1", "l2", "p"], "t": ["pb"]},
        [["l1", "l2"], ["p", "pb"]])


def mixed_mult() -> SfBrauerGraph:
    """Single edge between multiplicity-2 and multiplicity-3 vertices; its
    algebra relation equates cycle powers of different lengths."""
    return _graph(
        {"v1": ["1"], "v2": ["1b"]}, [["1", "1b"]],
        multiplicity={"v1": 2, "v2": 3})


def semisimple_edge() -> SfBrauerGraph:
    """Single edge, both ends truncated: the empty quiver."""
    return _graph({"v1": ["1"], "v2": ["1b"]}, [["1", "1b"]])


def kauer_g1() -> SfBrauerGraph:
    return _graph(
        {"P": ["1"], "Q": ["3", "2", "1b"], "R": ["4", "6", "3b", "2b"],
         "S": ["4b", "5"], "T": ["5b"], "U": ["6b"]},
        [["1", "1b"], ["2", "2b"], ["3", "3b"], ["4", "4b"],
         ["5", "5b"], ["6", "6b"]],
        labeled=[("3", "3b")])


def kauer_g2() -> SfBrauerGraph:
    return _graph(
        {"P": ["1"], "Q": ["3", "2", "1b"], "R": ["4", "3b", "2b"],
         "S": ["5", "4b"], "T": ["6", "5b"], "U": ["6b"]},
        [["1", "1b"], ["2", "2b"], ["3", "3b"], ["4", "4b"],
         ["5", "5b"], ["6", "6b"]],
        labeled=[("3", "3b")])


def kauer_g3() -> SfBrauerGraph:
    return _graph(
        {"a": ["1", "2", "3", "4"], "b": ["1b", "2b", "4b"], "c": ["3b"]},
        [["1", "1b"], ["2", "2b"], ["3", "3b"], ["4", "4b"]],
        labeled=[("1", "1b")])


def kauer_g4() -> SfBrauerGraph:
    return _graph(
        {"a": ["1", "2", "4"], "b": ["1b", "2b", "4b", "3b"], "c": ["3"]},
        [["1", "1b"], ["2", "2b"], ["3", "3b"], ["4", "4b"]],
        labeled=[("1", "1b")])


def kauer_g5() -> SfBrauerGraph:
    """Two labeled strands between two hubs, a pendant at each hub, and an
    unlabeled bottom strand; the move at the left pendant edge is only
    admissible away from the labeled strands."""
    return _graph(
        {"a": ["1", "2", "4", "3b"], "b": ["1b", "2b", "4b", "5b"],
         "c": ["3"], "d": ["5"]},
        [["1", "1b"], ["2", "2b"], ["3", "3b"], ["4", "4b"], ["5", "5b"]],
        labeled=[("1", "1b"), ("2", "2b")])


GRAPHS = {
    "bga4": bga4,
    "sf_example": sf_example,
    "as_surj": as_surj,
    "rfs": rfs,
    "tri_star": tri_star,
    "star_m2": star_m2,
    "two_path": two_path,
    "loop_single": loop_single,
    "loop_pendant": loop_pendant,
    "mixed_mult": mixed_mult,
    "kauer_g1": kauer_g1,
    "kauer_g2": kauer_g2,
    "kauer_g3": kauer_g3,
    "kauer_g4": kauer_g4,
    "kauer_g5": kauer_g5,
}

# graphs whose assembled algebras round-trip through extraction (the
# semisimple edge has no quiver to extract from)
ROUNDTRIP_GRAPHS = tuple(sorted(GRAPHS))


# -- algebra fixtures ---------------------------------------------------------

def tracks_example() -> tuple[Quiver, list[Relation]]:
    """1 => 2 -> 3 => 4 with one middle arrow; three monomial relations."""
    quiver = Quiver.make(
        ["1", "2", "3", "4"],
        [("alpha", "1", "2"), ("beta", "1", "2"), ("gamma", "2", "3"),
         ("delta", "3", "4"), ("epsilon", "3", "4")])
    rels = [
        Monomial(path_from_written(quiver, ["epsilon", "gamma"])),
        Monomial(path_from_written(quiver, ["delta", "gamma", "beta"])),
        Monomial(path_from_written(quiver, ["delta", "gamma", "alpha"])),
    ]
    return quiver, rels


def b_isn_sb() -> tuple[Quiver, list[Relation]]:
    """Biserial but not special quasi-biserial: the double 2-cycle with a
    chained commutativity relation and two zero squares."""
    quiver = Quiver.make(
        ["1", "2"],
        [("x1", "1", "2"), ("y1", "1", "2"), ("x2", "2", "1"), ("y2", "2", "1")])

    def w(*names):
        return path_from_written(quiver, names)

    rels = [
        Binomial(w("x1", "y2"), w("y1", "x2")),
        Binomial(w("y1", "x2"), w("x1", "x2")),
        Binomial(w("x1", "x2"), w("y1", "y2")),
        Binomial(w("y2", "x1"), w("x2", "y1")),
        Monomial(w("x2", "x1")),
        Monomial(w("y2", "y1")),
    ]
    return quiver, rels


def almost_gentle() -> tuple[Quiver, list[Relation]]:
    """Path algebra of 1 <- 2 => 3: special multiserial, not special biserial."""
    quiver = Quiver.make(
        ["1", "2", "3"],
        [("a", "2", "1"), ("b", "2", "3"), ("c", "2", "3")])
    return quiver, []


def doubled_a3() -> tuple[Quiver, list[Relation]]:
    """Linear quiver with a doubled second arrow; symmetrization must attach
    closing arrows twice."""
    quiver = Quiver.make(
        ["1", "2", "3"],
        [("a", "1", "2"), ("b", "2", "3"), ("c", "2", "3")])
    return quiver, []


def eleven_arrow_quiver() -> Quiver:
    """Degree-two quiver whose only single arrows are a1 and a9."""
    return Quiver.make(
        [f"v{i}" for i in range(1, 11)],
        [("a1", "v1", "v2"), ("a2", "v2", "v3"),
         ("a3", "v4", "v5"), ("a4", "v4", "v6"),
         ("a5", "v7", "v3"), ("a6", "v6", "v7"), ("a7", "v8", "v7"),
         ("a8", "v7", "v9"), ("a9", "v10", "v8"),
         ("a10", "v9", "v10"), ("a11", "v9", "v10")])


ALGEBRAS = {
    "tracks_example": tracks_example,
    "b_isn_sb": b_isn_sb,
    "almost_gentle": almost_gentle,
    "doubled_a3": doubled_a3,
}


def write_fixtures(directory) -> list[str]:
    """Serialize every named fixture into <directory>/<name>.json."""
    import pathlib

    from .jsonio import algebra_to_json, dumps, graph_to_json
    out = pathlib.Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, make in sorted(GRAPHS.items()):
        (out / f"{name}.json").write_text(dumps(graph_to_json(make())))
        written.append(f"{name}.json")
    for name, make in sorted(ALGEBRAS.items()):
        quiver, rels = make()
        (out / f"{name}.json").write_text(dumps(algebra_to_json(quiver, rels)))
        written.append(f"{name}.json")
    return written


if __name__ == "__main__":
    import sys

    target = sys.argv[1] if len(sys.argv) > 1 else "fixtures"
    for fname in write_fixtures(target):
        print(fname)
