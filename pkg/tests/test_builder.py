from __future__ import annotations

import pytest

from brauerlab import catalog
from brauerlab.builder import (
    assemble,
    build_brauer_quiver,
    build_brauer_relations,
    build_sf_quiver,
    build_sf_relations,
)
from brauerlab.classify import is_special_biserial, is_special_quasi_biserial, \
    is_symmetric_canonical, non_single_arrows
from brauerlab.quiver import Binomial, Monomial, idempotent_subalgebra, \
    projective_dimensions
from brauerlab.ribbon import SfBrauerGraph, strip_labeled


def written(rel):
    if isinstance(rel, Monomial):
        return ("0", rel.path.written())
    return ("=", *sorted((rel.left.written(), rel.right.written())))


def test_bga4_quiver_shape():
    bq = build_brauer_quiver(catalog.bga4().brauer)
    assert len(bq.quiver.vertices) == 4
    assert len(bq.quiver.arrows) == 8
    # arrows are the half-edges; each goes edge(h) -> edge(rho(h))
    assert bq.quiver.arrow("1").source == "1" and bq.quiver.arrow("1").target == "2"
    assert bq.quiver.arrow("4b").target == "1"


def test_bga4_relations_match_displayed_ideal():
    g = catalog.bga4().brauer
    rels = build_brauer_relations(g)
    binomials = [r for r in rels if isinstance(r, Binomial)]
    monomials = [r for r in rels if isinstance(r, Monomial)]
    assert len(binomials) == 4 and len(monomials) == 16
    got = {written(r) for r in rels}
    assert ("=", ("4", "3", "2", "1"), ("4b", "3b", "2b", "1b")) in got
    assert ("0", ("1", "4", "3", "2", "1")) in got          # cycle overshoot
    assert ("0", ("1b", "4")) in got                        # lane-crossing pair


def test_single_loop_vertex():
    g = catalog.loop_single()
    bq = build_brauer_quiver(g.brauer)
    assert len(bq.quiver.vertices) == 1
    assert len(bq.quiver.arrows) == 1
    rels = build_brauer_relations(g.brauer, bq)
    assert {written(r) for r in rels} == {("0", ("1",) * 4)}  # gamma^(m+1) = 0, m = 3


def test_three_star_gives_three_cycle():
    bq = build_brauer_quiver(catalog.tri_star().brauer)
    assert len(bq.quiver.vertices) == 3 and len(bq.quiver.arrows) == 3
    targets = {a.source: a.target for a in bq.quiver.arrows}
    seen, at = set(), "1"
    for _ in range(3):
        seen.add(at)
        at = targets[at]
    assert at == "1" and len(seen) == 3


def test_two_path_has_only_overshoot_relations():
    g = catalog.two_path()
    rels = build_brauer_relations(g.brauer)
    assert all(isinstance(r, Monomial) for r in rels)
    assert len(rels) == 2


def test_sf_quiver_merges_labeled_arrows():
    sq = build_sf_quiver(catalog.sf_example())
    assert len(sq.quiver.arrows) == 6
    assert sq.pi["2b"] == "2" and sq.pi["4b"] == "4"
    assert sq.merged_preimages["2"] == ("2", "2b")
    # merging is the identity without labels
    sq0 = build_sf_quiver(SfBrauerGraph(catalog.bga4().graph,
                                        dict(catalog.bga4().multiplicity)))
    assert len(sq0.quiver.arrows) == 8
    assert all(sq0.pi[a] == a for a in sq0.pi)


def test_sf_relations_of_example_match_displayed_ideal():
    g = catalog.sf_example()
    rels = build_sf_relations(g)
    got = {written(r) for r in rels}
    expected = {
        # (i) stripped binomials
        ("=", ("1", "4", "3"), ("1b", "4", "3b")),
        ("=", ("3", "2", "1"), ("3b", "2", "1b")),
        # (iii) deviations through the labeled edges
        ("0", ("3b", "2", "1")),
        ("0", ("3", "2", "1b")),
        ("0", ("1b", "4", "3")),
        ("0", ("1", "4", "3b")),
        # (ii) cycle overshoots
        ("0", ("4", "3", "2", "1", "4")),
        ("0", ("3", "2", "1", "4", "3")),
        ("0", ("2", "1", "4", "3", "2")),
        ("0", ("1", "4", "3", "2", "1")),
        ("0", ("4", "3b", "2", "1b", "4")),
        ("0", ("3b", "2", "1b", "4", "3b")),
        ("0", ("2", "1b", "4", "3b", "2")),
        ("0", ("1b", "4", "3b", "2", "1b")),
    }
    assert got == expected


def test_sf_relations_rfs_match_displayed_ideal():
    g = catalog.rfs()
    sq = build_sf_quiver(g)
    assert len(sq.quiver.arrows) == 6
    rels = build_sf_relations(g, sq)
    got = {written(r) for r in rels}
    assert ("=", ("2", "1"), ("3", "1b")) in got            # alpha2 alpha1 = beta2 beta1
    assert ("0", ("1", "5", "4", "3")) in got               # alpha1 alpha4 alpha3 beta2
    assert ("0", ("1b", "5", "4", "2")) in got              # beta1 alpha4 alpha3 alpha2
    assert sum(1 for r in rels if isinstance(r, Binomial)) == 1
    assert sum(1 for r in rels if isinstance(r, Monomial)) == 10


def test_sf_reduces_to_brauer_without_labels():
    g = catalog.bga4()
    plain = build_brauer_relations(g.brauer)
    labeled = build_sf_relations(SfBrauerGraph(g.graph, dict(g.multiplicity)))
    assert {written(r) for r in plain} == {written(r) for r in labeled}


def test_assemble_dimensions():
    assert assemble(catalog.bga4()).algebra.dimension == 32
    assert assemble(catalog.sf_example()).algebra.dimension == 28
    alg = assemble(catalog.as_surj()).algebra
    assert projective_dimensions(alg) == {"1": 8, "2": 7, "3": 7, "4": 8}
    assert alg.dimension == 30


def test_semisimple_edge_has_empty_quiver():
    g = catalog.semisimple_edge()
    bq = build_brauer_quiver(g.brauer)
    assert bq.note is not None and not bq.quiver.arrows
    assert assemble(g).algebra.dimension == 1


@pytest.mark.parametrize("name", sorted(catalog.GRAPHS))
def test_every_built_algebra_is_symmetric_and_sqb(name):
    alg = assemble(catalog.GRAPHS[name]()).algebra
    assert is_symmetric_canonical(alg)[0] == "yes", name
    assert is_special_quasi_biserial(alg)[0], name
    for v in alg.quiver.vertices:
        assert len(alg.quiver.arrows_from(v)) <= 2
        assert len(alg.quiver.arrows_into(v)) <= 2


@pytest.mark.parametrize("name", ["bga4", "tri_star", "two_path", "loop_single",
                                  "loop_pendant", "mixed_mult", "star_m2"])
def test_unlabeled_builds_are_special_biserial(name):
    alg = assemble(catalog.GRAPHS[name]()).algebra
    assert is_special_biserial(alg)[0], name


@pytest.mark.parametrize("name", ["sf_example", "rfs", "as_surj", "kauer_g1",
                                  "kauer_g3", "kauer_g5"])
def test_single_arrows_start_at_labeled_or_truncated_edges(name):
    g = catalog.GRAPHS[name]()
    built = assemble(g)
    alg = built.algebra
    labeled = {e[0] for e in g.labeled}
    truncated_edges = set()
    bg = g.brauer
    for e in g.graph.edges():
        if any(bg.truncated(g.graph.vertex_of[h]) for h in e):
            truncated_edges.add(e[0])
    singles = set(a for a in (x.name for x in alg.quiver.arrows)) - non_single_arrows(alg.quiver)
    for a in singles:
        src = alg.quiver.arrow(a).source
        assert src in labeled | truncated_edges, (name, a)


def test_dimension_table_matches_stripped_graph(sf_alg):
    # unlabeled edges of the labeled graph span a copy of the stripped algebra
    for g in (catalog.sf_example(), catalog.rfs()):
        alg = assemble(g).algebra
        unlabeled = [e[0] for e in g.graph.edges() if e not in g.labeled]
        sub = idempotent_subalgebra(alg, unlabeled)
        stripped = assemble(strip_labeled(g)).algebra
        assert sub.dimension == stripped.dimension
        # per-pair dimension tables agree under the identity edge naming
        table = sub.dimension_table()
        other = {}
        for c in stripped.classes:
            other[(c.source, c.target)] = other.get((c.source, c.target), 0) + 1
        assert table == other


def test_assembled_bases_are_cycle_subpath_bases():
    # engine basis == subpaths of projected cycle powers + trivial paths,
    # and every such subpath is nonzero
    from brauerlab.builder import _cycle_power
    from brauerlab.quiver import Path
    for name in ("sf_example", "rfs", "bga4", "mixed_mult", "loop_pendant"):
        g = catalog.GRAPHS[name]()
        built = assemble(g)
        alg, sq = built.algebra, built.sf
        bg = g.brauer
        expected = {(v, ()) for v in alg.quiver.vertices}
        for h in bg.active_half_edges():
            power = _cycle_power(bg, sq.base, h, bg.m(g.graph.vertex_of[h]))
            word = sq.project(power.arrows)
            for i in range(len(word)):
                for j in range(i + 1, len(word) + 1):
                    sub = word[i:j]
                    src = alg.quiver.arrow(sub[0]).source
                    assert alg.class_of_path(Path(src, sub)) is not None, (name, sub)
                    expected.add((src, sub))
        assert expected == alg.nonzero_paths(), name


def test_provenance_maps_arrows_and_rules():
    built = assemble(catalog.sf_example())
    prov = built.provenance()
    assert prov["arrow_of_half_edge"]["1"] == "1"
    assert prov["merged_arrows"] == {"2": ["2", "2b"], "4": ["4", "4b"]}
    rules = [r["rule"] for r in prov["relations"]]
    assert rules.count("i") == 2 and rules.count("ii") == 8 and rules.count("iii") == 4
    assert "?" not in rules
