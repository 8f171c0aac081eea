"""brauerlab: build, classify, mutate, and round-trip Brauer graph algebras
and their labeled (symmetric fractional) generalizations."""

from .builder import assemble, build_brauer_quiver, build_brauer_relations, \
    build_sf_quiver, build_sf_relations
from .classify import algebra_class, arrow_kinds, basic_cycles, is_special_biserial, \
    is_special_multiserial, is_special_quasi_biserial, is_symmetric_canonical, \
    module_class
from .extraction import extract, roundtrip_check
from .kauer import KauerMove, admissible_moves, apply_move, compare_invariants, \
    inverse_move
from .quiver import Binomial, BoundQuiverAlgebra, Monomial, Path, Quiver, \
    build_basis, cartan, idempotent_subalgebra, projective, quotient_check
from .ribbon import BrauerGraph, LabeledRibbonGraph, RibbonGraph, SfBrauerGraph, \
    are_isomorphic, is_brauer_tree, labelable_edges, strip_labeled, validate
from .tracks import generalized_tracks, star, symmetrize

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
