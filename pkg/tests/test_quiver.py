from __future__ import annotations

import random
from fractions import Fraction

import pytest

from brauerlab import catalog
from brauerlab.builder import assemble
from brauerlab.errors import InadmissibleRelation, NotFiniteDimensional, QuiverMismatch
from brauerlab.quiver import (
    Binomial,
    Monomial,
    Path,
    Quiver,
    associativity_check,
    bareiss_determinant,
    build_basis,
    cartan,
    idempotent_subalgebra,
    opposite_algebra,
    path_from_written,
    projective,
    projective_dimensions,
    quotient_check,
)
from brauerlab.ribbon import strip_labeled
from conftest import naive_of_relations


def test_one_vertex_no_arrows():
    alg = build_basis(Quiver.make(["1"], []), [])
    assert alg.dimension == 1
    assert projective(alg, "1").loewy_diagram() == [["1"]]
    assert cartan(alg).entries == ((1,),) and cartan(alg).det_abs == 1


def test_b_isn_sb_dimensions_match_oracle(b_isn_sb_alg):
    dims = projective_dimensions(b_isn_sb_alg)
    assert dims == {"1": 4, "2": 4}
    assert b_isn_sb_alg.dimension == 8
    naive, total, _ = naive_of_relations(b_isn_sb_alg.quiver, b_isn_sb_alg.relations, 6)
    assert naive == dims and total == 8


def test_sf_example_multiplication(sf_alg):
    # arrows: "1","1b": 1->2; merged "2": 2->3; "3","3b": 3->4; merged "4": 4->1
    a2 = sf_alg.arrow_class("2")
    b1 = sf_alg.arrow_class("1b")
    prod = sf_alg.multiply(a2, b1)
    assert prod is not None
    assert sf_alg.classes[prod].rep.arrows == ("1b", "2")
    b3 = sf_alg.arrow_class("3b")
    a2a1 = sf_alg.class_of_path(Path("1", ("1", "2")))
    assert a2a1 is not None
    assert sf_alg.multiply(b3, a2a1) is None  # relation (iii)


def test_trivial_idempotent_products(sf_alg):
    e1 = sf_alg.trivial_class("1")
    e2 = sf_alg.trivial_class("2")
    assert sf_alg.multiply(e1, e1) == e1
    assert sf_alg.multiply(e1, e2) is None


def test_multiplication_constant_on_classes(sf_alg):
    sf_alg.verify_multiplication_well_defined()


def test_associativity_exhaustive_on_small_fixtures():
    for name in ("mixed_mult", "two_path", "loop_pendant"):
        associativity_check(assemble(catalog.GRAPHS[name]()).algebra)


def test_cartan_parallel_edges(bga4_alg):
    c = cartan(bga4_alg)
    assert all(x == 2 for row in c.entries for x in row)
    assert c.det_abs == 0


def test_cartan_column_sums_give_projective_dims(sf_alg):
    c = cartan(sf_alg)
    for j, v in enumerate(c.vertices):
        assert sum(c.entries[i][j] for i in range(len(c.vertices))) == 7


def test_bga4_loewy(bga4_alg):
    assert projective(bga4_alg, "1").loewy_diagram() == [
        ["1"], ["2", "2"], ["3", "3"], ["4", "4"], ["1"]]
    assert projective_dimensions(bga4_alg) == {v: 8 for v in "1234"}


def test_rfs_dims(rfs_alg):
    assert projective_dimensions(rfs_alg) == {"1": 6, "2": 5, "3": 5, "4": 6, "5": 6}


def test_sum_of_projectives_is_dimension(sf_alg, rfs_alg, bga4_alg):
    for alg in (sf_alg, rfs_alg, bga4_alg):
        assert sum(projective_dimensions(alg).values()) == alg.dimension


def test_loewy_layer_one_is_nonzero_arrow_targets(sf_alg):
    for v in sf_alg.quiver.vertices:
        rows = projective(sf_alg, v).loewy_diagram()
        targets = sorted(a.target for a in sf_alg.quiver.arrows_from(v)
                         if sf_alg.class_of_path(Path(a.source, (a.name,))) is not None)
        assert rows[1] == targets


def test_idempotent_subalgebra_examples(sf_alg, rfs_alg):
    assert idempotent_subalgebra(sf_alg, ["1", "3"]).dimension == 8
    assert idempotent_subalgebra(sf_alg, sf_alg.quiver.vertices).dimension == 28
    eae = idempotent_subalgebra(rfs_alg, ["1", "2", "3"])
    stripped = assemble(strip_labeled(catalog.rfs())).algebra
    assert eae.dimension == stripped.dimension == 10


def test_unequal_length_binomial_fixture():
    alg = assemble(catalog.mixed_mult()).algebra
    assert alg.dimension == 5
    naive, total, _ = naive_of_relations(alg.quiver, alg.relations, 8)
    assert total == 5


def test_quotient_check_identity(sf_alg):
    assert quotient_check(sf_alg, [], [], sf_alg)


def test_quotient_check_vertex_mismatch(sf_alg, bga4_alg):
    q = Quiver.make(["1", "2"], [])
    small = build_basis(q, [])
    with pytest.raises(QuiverMismatch):
        quotient_check(sf_alg, [], [], small)


def test_determinism_of_build(sf_alg):
    again = assemble(catalog.sf_example()).algebra
    assert [c.rep for c in again.classes] == [c.rep for c in sf_alg.classes]
    assert again.nonzero_paths() == sf_alg.nonzero_paths()


def test_bareiss_matches_fraction_gauss():
    rng = random.Random(7)
    for n in (1, 2, 3, 4, 5):
        for _ in range(10):
            m = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
            assert bareiss_determinant(m) == _gauss_det(m)


def _gauss_det(m):
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for k in range(n):
        pivot = next((r for r in range(k, n) if a[r][k]), None)
        if pivot is None:
            return 0
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        for r in range(k + 1, n):
            f = a[r][k] / a[k][k]
            for c in range(k, n):
                a[r][c] -= f * a[k][c]
    assert det.denominator == 1
    return int(det)


def test_not_finite_dimensional_detected():
    q = Quiver.make(["1"], [("loop", "1", "1")])
    with pytest.raises(NotFiniteDimensional):
        build_basis(q, [], max_bound=32)


def test_inadmissible_relation_rejected():
    q = Quiver.make(["1"], [("loop", "1", "1")])
    with pytest.raises(InadmissibleRelation):
        build_basis(q, [Monomial(Path("1", ("loop",)))])
    with pytest.raises(InadmissibleRelation):
        build_basis(q, [Binomial(path_from_written(q, ["loop", "loop"]),
                                 path_from_written(q, ["loop"]))])


def test_opposite_algebra_preserves_dimension(sf_alg, rfs_alg):
    assert opposite_algebra(sf_alg).dimension == sf_alg.dimension
    assert opposite_algebra(rfs_alg).dimension == rfs_alg.dimension


def test_nilpotency_verified(sf_alg):
    # rad^N = 0 with N = 1 + max layer: no nonzero class reaches N
    assert all(c.layer < sf_alg.nilpotency for c in sf_alg.classes)
    top = max(c.layer for c in sf_alg.classes)
    assert top + 1 == sf_alg.nilpotency
