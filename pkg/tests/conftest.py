from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for oracles.py

from brauerlab import assemble, build_basis
from brauerlab import catalog

REPO = Path(__file__).resolve().parent.parent


@pytest.fixture(scope="session")
def repo_root() -> Path:
    return REPO


def _built(name):
    return assemble(catalog.GRAPHS[name]()).algebra


@pytest.fixture(scope="session")
def bga4_alg():
    return _built("bga4")


@pytest.fixture(scope="session")
def sf_alg():
    return _built("sf_example")


@pytest.fixture(scope="session")
def rfs_alg():
    return _built("rfs")


@pytest.fixture(scope="session")
def as_surj_alg():
    return _built("as_surj")


@pytest.fixture(scope="session")
def tracks_alg():
    quiver, rels = catalog.tracks_example()
    return build_basis(quiver, rels)


@pytest.fixture(scope="session")
def b_isn_sb_alg():
    quiver, rels = catalog.b_isn_sb()
    return build_basis(quiver, rels)


def naive_of_relations(quiver, relations, maxlen):
    """Adapt engine-format inputs for the naive oracle (kept dumb on purpose)."""
    from brauerlab.quiver import Monomial
    arrows = {a.name: (a.source, a.target) for a in quiver.arrows}
    monomials = [r.path.arrows for r in relations if isinstance(r, Monomial)]
    binomials = [(r.left.arrows, r.right.arrows)
                 for r in relations if not isinstance(r, Monomial)]
    from oracles import naive_dimensions
    return naive_dimensions(list(quiver.vertices), arrows, monomials, binomials, maxlen)
