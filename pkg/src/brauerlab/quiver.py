"""Bound quiver algebras with monomial and coefficient-1 binomial relations.

Paths are written right to left: p = a_n ... a_1 starts with a_1.  Internally
a path stores its arrow ids in application order (a_1 first), plus its source
vertex so trivial paths work uniformly.  The ideal may be generated by
monomials (a zero path of length >= 2) and binomials p - q between parallel
paths, both of length >= 2 and with coefficient 1; this is the only relation
format accepted, and it makes all structure constants 0/1, so no coefficient
field ever materializes.

The basis is computed as a congruence on enumerated paths: any path
containing a monomial generator is zero, substituting one binomial side for
the other inside a path keeps its class, and any class touching zero is zero.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (
    IllFormedPath,
    InadmissibleRelation,
    NotFiniteDimensional,
    QuiverMismatch,
)


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise IllFormedPath("duplicate arrow ids in quiver")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise IllFormedPath(f"arrow {a.name} has endpoint outside the vertex set",
                                    arrow=a.name)

    @staticmethod
    def make(vertices, arrows) -> "Quiver":
        """arrows: iterable of (name, source, target)."""
        return Quiver(tuple(sorted(vertices)),
                      tuple(Arrow(*t) for t in arrows))

    def arrow(self, name: str) -> Arrow:
        return self._by_name()[name]

    def _by_name(self) -> dict[str, Arrow]:
        cache = getattr(self, "_names", None)
        if cache is None:
            cache = {a.name: a for a in self.arrows}
            object.__setattr__(self, "_names", cache)
        return cache

    def arrows_from(self, v: str) -> tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if a.source == v)

    def arrows_into(self, v: str) -> tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if a.target == v)

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices,
                      tuple(Arrow(a.name, a.target, a.source) for a in self.arrows))


@dataclass(frozen=True)
class Path:
    """p = a_n ... a_1 stored as (a_1, ..., a_n); source kept explicitly."""

    source: str
    arrows: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def trivial(self) -> bool:
        return not self.arrows

    def written(self) -> tuple[str, ...]:
        """Arrow ids left to right as the path is written (a_n first)."""
        return tuple(reversed(self.arrows))

    def key(self):
        # length first, then lex on the written form
        return (len(self.arrows), self.written(), self.source)

    def label(self) -> str:
        if self.trivial:
            return f"e_{self.source}"
        return "*".join(self.written())


def path_target(quiver: Quiver, p: Path) -> str:
    if p.trivial:
        return p.source
    return quiver.arrow(p.arrows[-1]).target


def check_path(quiver: Quiver, p: Path) -> Path:
    at = p.source
    for name in p.arrows:
        a = quiver._by_name().get(name)
        if a is None:
            raise IllFormedPath(f"unknown arrow {name!r}", arrow=name)
        if a.source != at:
            raise IllFormedPath(f"arrows do not compose at {name!r} (expected source {at})",
                                arrow=name)
        at = a.target
    return p


def compose(quiver: Quiver, left: Path, right: Path) -> Path | None:
    """left . right (right acts first); None when the endpoints mismatch."""
    if path_target(quiver, right) != left.source:
        return None
    return Path(right.source, right.arrows + left.arrows)


def path_from_written(quiver: Quiver, written) -> Path:
    """Build a path from ids listed in written (right-to-left) order."""
    arrows = tuple(reversed(tuple(written)))
    if not arrows:
        raise IllFormedPath("empty written path needs a vertex; use Path(v) directly")
    return check_path(quiver, Path(quiver.arrow(arrows[0]).source, arrows))


@dataclass(frozen=True)
class Monomial:
    path: Path


@dataclass(frozen=True)
class Binomial:
    left: Path
    right: Path


Relation = Monomial | Binomial


def validate_relations(quiver: Quiver, relations) -> tuple[Relation, ...]:
    out: list[Relation] = []
    seen = set()
    for rel in relations:
        if isinstance(rel, Monomial):
            check_path(quiver, rel.path)
            if len(rel.path) < 2:
                raise InadmissibleRelation(
                    f"monomial generator {rel.path.label()} has length < 2")
            tag = ("m", rel.path.arrows)
        elif isinstance(rel, Binomial):
            check_path(quiver, rel.left)
            check_path(quiver, rel.right)
            if len(rel.left) < 2 or len(rel.right) < 2:
                raise InadmissibleRelation(
                    f"binomial {rel.left.label()} = {rel.right.label()} has a side of length < 2")
            if (rel.left.source != rel.right.source
                    or path_target(quiver, rel.left) != path_target(quiver, rel.right)):
                raise InadmissibleRelation(
                    f"binomial sides {rel.left.label()}, {rel.right.label()} are not parallel")
            if rel.left == rel.right:
                continue  # vacuous
            tag = ("b", *sorted((rel.left.arrows, rel.right.arrows)))
        else:
            raise InadmissibleRelation(f"unsupported relation object {rel!r}")
        if tag not in seen:
            seen.add(tag)
            out.append(rel)
    return tuple(out)


@dataclass(frozen=True)
class PathClass:
    index: int
    members: tuple[Path, ...]   # sorted by Path.key()
    source: str
    target: str
    layer: int                  # max member length; spans rad^layer

    @property
    def rep(self) -> Path:
        return self.members[0]


class _UnionFind:
    def __init__(self):
        self.parent: dict[object, object] = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


_ZERO = "<zero>"


@dataclass
class BoundQuiverAlgebra:
    """Finite dimensional kQ/I with a path-class basis and 0/1 multiplication."""

    quiver: Quiver
    relations: tuple[Relation, ...]
    nilpotency: int
    classes: tuple[PathClass, ...]
    _class_of: dict[tuple[str, tuple[str, ...]], int] = field(repr=False)

    # -- queries -----------------------------------------------------------
    @property
    def dimension(self) -> int:
        return len(self.classes)

    def class_of_path(self, p: Path) -> int | None:
        """Index of the class of p, or None when p = 0 in the algebra."""
        idx = self._class_of.get((p.source, p.arrows))
        if idx is not None:
            return idx
        check_path(self.quiver, p)
        return None

    def trivial_class(self, v: str) -> int:
        idx = self.class_of_path(Path(v))
        assert idx is not None
        return idx

    def arrow_class(self, name: str) -> int:
        a = self.quiver.arrow(name)
        idx = self.class_of_path(Path(a.source, (name,)))
        assert idx is not None, "arrows are never zero under an admissible ideal"
        return idx

    def multiply(self, i: int, j: int) -> int | None:
        """Class of rep(i) . rep(j); None encodes zero."""
        a, b = self.classes[i], self.classes[j]
        if b.target != a.source:
            return None
        prod = compose(self.quiver, a.rep, b.rep)
        assert prod is not None
        return self.class_of_path(prod)

    def left_multiply_arrow(self, name: str, j: int) -> int | None:
        return self.multiply(self.arrow_class(name), j)

    def right_multiply_arrow(self, j: int, name: str) -> int | None:
        return self.multiply(j, self.arrow_class(name))

    def nonzero_paths(self) -> set[tuple[str, tuple[str, ...]]]:
        return set(self._class_of)

    def verify_multiplication_well_defined(self) -> None:
        """Concatenating any member pair lands in the class of the reps."""
        for a in self.classes:
            for b in self.classes:
                if b.target != a.source:
                    continue
                expected = self.multiply(a.index, b.index)
                for pa in a.members:
                    for pb in b.members:
                        prod = compose(self.quiver, pa, pb)
                        assert prod is not None
                        assert self.class_of_path(prod) == expected, (
                            f"multiplication not constant on classes: "
                            f"{pa.label()} . {pb.label()}")


def build_basis(quiver: Quiver, relations, max_bound: int = 256,
                nilpotency_hint: int | None = None) -> BoundQuiverAlgebra:
    """Enumerate path classes of kQ/I up to the discovered nilpotency bound.

    Starts from the hint (default 2|Q1|) and doubles until every frontier
    path is zero; a binomial substitution that would leave the current bound
    extends it, up to max_bound.
    """
    rels = validate_relations(quiver, relations)
    monomials = {r.path.arrows for r in rels if isinstance(r, Monomial)}
    binomials = [r for r in rels if isinstance(r, Binomial)]
    bound = nilpotency_hint or max(2 * len(quiver.arrows), 2)
    bound = min(bound, max_bound)
    while True:
        result = _attempt(quiver, rels, monomials, binomials, bound)
        if isinstance(result, BoundQuiverAlgebra):
            return result
        needed = result
        if bound >= max_bound:
            raise NotFiniteDimensional(
                f"nonzero classes persist at max_bound={max_bound}", bound=max_bound)
        bound = min(max(2 * bound, needed), max_bound)


def _contains_monomial(arrows: tuple[str, ...], monomials: set[tuple[str, ...]]) -> bool:
    n = len(arrows)
    for mono in monomials:
        k = len(mono)
        if k > n:
            continue
        for i in range(n - k + 1):
            if arrows[i:i + k] == mono:
                return True
    return False


def _attempt(quiver, rels, monomials, binomials, bound):
    out_arrows: dict[str, list[Arrow]] = {v: [] for v in quiver.vertices}
    for a in quiver.arrows:
        out_arrows[a.source].append(a)
    for v in out_arrows:
        out_arrows[v].sort(key=lambda a: a.name)

    # enumerate monomial-free paths up to the bound; any path containing a
    # monomial generator is zero outright and never needs a node
    paths: list[Path] = []
    for v in quiver.vertices:
        stack = [(v, ())]
        while stack:
            at, arrows = stack.pop()
            paths.append(Path(v, arrows))
            if len(arrows) >= bound:
                continue
            for a in out_arrows[at]:
                ext = arrows + (a.name,)
                tail_dead = any(ext[-len(m):] == m for m in monomials if len(m) <= len(ext))
                if not tail_dead:
                    stack.append((a.target, ext))

    uf = _UnionFind()
    uf.add(_ZERO)
    nodes = {}
    for p in paths:
        node = (p.source, p.arrows)
        nodes[node] = p
        uf.add(node)

    needed = 0
    for p in paths:
        arrows = p.arrows
        n = len(arrows)
        for rel in binomials:
            for pat, sub in ((rel.left.arrows, rel.right.arrows),
                             (rel.right.arrows, rel.left.arrows)):
                k = len(pat)
                if k > n:
                    continue
                for i in range(n - k + 1):
                    if arrows[i:i + k] != pat:
                        continue
                    new_arrows = arrows[:i] + sub + arrows[i + k:]
                    if _contains_monomial(new_arrows, monomials):
                        uf.union((p.source, arrows), _ZERO)
                    elif len(new_arrows) <= bound:
                        node = (p.source, new_arrows)
                        assert node in nodes, "substitution produced an unenumerated path"
                        uf.union((p.source, arrows), node)
                    else:
                        needed = max(needed, len(new_arrows))
    if needed:
        return needed

    # frontier: every path of maximal enumerated length must be zero
    zero_root = uf.find(_ZERO)
    frontier_alive = [p for p in paths
                      if len(p) == bound and uf.find((p.source, p.arrows)) != zero_root]
    if frontier_alive:
        return bound + 1  # ask for more room

    groups: dict[object, list[Path]] = {}
    for p in paths:
        root = uf.find((p.source, p.arrows))
        if root == zero_root:
            continue
        groups.setdefault(root, []).append(p)

    classes: list[PathClass] = []
    members_sorted = sorted(groups.values(), key=lambda ms: min(m.key() for m in ms))
    class_of: dict[tuple[str, tuple[str, ...]], int] = {}
    for idx, ms in enumerate(members_sorted):
        ms.sort(key=Path.key)
        src = {m.source for m in ms}
        tgt = {path_target(quiver, m) for m in ms}
        assert len(src) == 1 and len(tgt) == 1, "class members disagree on endpoints"
        cls = PathClass(idx, tuple(ms), src.pop(), tgt.pop(),
                        max(len(m) for m in ms))
        classes.append(cls)
        for m in ms:
            class_of[(m.source, m.arrows)] = idx

    nilpotency = 1 + max((c.layer for c in classes), default=0)
    return BoundQuiverAlgebra(quiver, rels, nilpotency, tuple(classes), class_of)


# -- projectives and Loewy structure ----------------------------------------

@dataclass(frozen=True)
class ProjectiveView:
    """Left projective A e_v on the class basis {p : s(p) = v}."""

    algebra: BoundQuiverAlgebra
    vertex: str
    classes: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.classes)

    def radical_layer(self, k: int) -> tuple[int, ...]:
        """Classes spanning rad^k (layer >= k)."""
        return tuple(i for i in self.classes if self.algebra.classes[i].layer >= k)

    def loewy_length(self) -> int:
        return 1 + max(self.algebra.classes[i].layer for i in self.classes)

    def loewy_diagram(self) -> list[list[str]]:
        """Row k lists the simple tops of rad^k/rad^(k+1), sorted."""
        rows: list[list[str]] = [[] for _ in range(self.loewy_length())]
        for i in self.classes:
            c = self.algebra.classes[i]
            rows[c.layer].append(c.target)
        return [sorted(row) for row in rows]

    def socle(self) -> tuple[int, ...]:
        """Classes annihilated by every arrow acting on the left."""
        alg = self.algebra
        out = []
        for i in self.classes:
            tgt = alg.classes[i].target
            if all(alg.left_multiply_arrow(a.name, i) is None
                   for a in alg.quiver.arrows_from(tgt)):
                out.append(i)
        return tuple(out)


def projective(algebra: BoundQuiverAlgebra, vertex: str) -> ProjectiveView:
    if vertex not in algebra.quiver.vertices:
        raise IllFormedPath(f"unknown vertex {vertex!r}", vertex=vertex)
    classes = tuple(c.index for c in algebra.classes if c.source == vertex)
    return ProjectiveView(algebra, vertex, classes)


def projective_dimensions(algebra: BoundQuiverAlgebra) -> dict[str, int]:
    return {v: projective(algebra, v).dimension for v in algebra.quiver.vertices}


# -- Cartan matrix -----------------------------------------------------------

@dataclass(frozen=True)
class CartanMatrix:
    vertices: tuple[str, ...]
    entries: tuple[tuple[int, ...], ...]  # entries[i][j] = dim e_i A e_j
    det_abs: int

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices),
                "matrix": [list(r) for r in self.entries],
                "det_abs": self.det_abs}


def bareiss_determinant(rows: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination; exact over the integers."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def cartan(algebra: BoundQuiverAlgebra) -> CartanMatrix:
    vs = algebra.quiver.vertices
    pos = {v: i for i, v in enumerate(vs)}
    entries = [[0] * len(vs) for _ in vs]
    for c in algebra.classes:
        entries[pos[c.target]][pos[c.source]] += 1  # C[i][j] = #classes j -> i
    det = bareiss_determinant(entries)
    return CartanMatrix(vs, tuple(tuple(r) for r in entries), abs(det))


def gram_matrix_nonsingular(rows: list[list[int]]) -> bool:
    return bareiss_determinant(rows) != 0


# -- idempotent subalgebras and quotients ------------------------------------

@dataclass(frozen=True)
class IdempotentSubalgebra:
    algebra: BoundQuiverAlgebra
    vertices: tuple[str, ...]
    classes: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.classes)

    def dimension_table(self) -> dict[tuple[str, str], int]:
        table: dict[tuple[str, str], int] = {}
        for i in self.classes:
            c = self.algebra.classes[i]
            key = (c.source, c.target)
            table[key] = table.get(key, 0) + 1
        return table

    def multiply(self, i: int, j: int) -> int | None:
        out = self.algebra.multiply(i, j)
        if out is not None:
            assert out in set(self.classes)
        return out


def idempotent_subalgebra(algebra: BoundQuiverAlgebra, vertices) -> IdempotentSubalgebra:
    subset = tuple(sorted(set(vertices)))
    if not subset:
        raise IllFormedPath("idempotent subalgebra needs a nonempty vertex subset")
    sset = set(subset)
    classes = tuple(c.index for c in algebra.classes
                    if c.source in sset and c.target in sset)
    return IdempotentSubalgebra(algebra, subset, classes)


def quotient_check(big: BoundQuiverAlgebra, kill_arrows, extra_relations,
                   small: BoundQuiverAlgebra) -> bool:
    """Does killing the given arrows (plus extra relations) collapse big onto
    small, in the sense of identical nonzero path-class sets?

    Relations of big that mention a killed arrow degenerate: monomials and
    two-sided binomials vanish, one-sided binomials leave the surviving side
    as a monomial.
    """
    kill = set(kill_arrows)
    if set(big.quiver.vertices) != set(small.quiver.vertices):
        raise QuiverMismatch("vertex sets differ")
    surviving = tuple(a for a in big.quiver.arrows if a.name not in kill)
    sub_quiver = Quiver(big.quiver.vertices, surviving)

    def hits(p: Path) -> bool:
        return any(a in kill for a in p.arrows)

    rebuilt: list[Relation] = []
    for rel in big.relations:
        if isinstance(rel, Monomial):
            if not hits(rel.path):
                rebuilt.append(rel)
        else:
            dead_l, dead_r = hits(rel.left), hits(rel.right)
            if dead_l and dead_r:
                continue
            if dead_l:
                rebuilt.append(Monomial(rel.right))
            elif dead_r:
                rebuilt.append(Monomial(rel.left))
            else:
                rebuilt.append(rel)
    rebuilt.extend(extra_relations)
    quotient = build_basis(sub_quiver, rebuilt, nilpotency_hint=big.nilpotency)
    if set(sub_quiver.arrows) != set(small.quiver.arrows):
        return False
    if quotient.nonzero_paths() != small.nonzero_paths():
        return False
    # same partition into classes
    def partition(alg):
        return {tuple(sorted((m.source, m.arrows) for m in c.members))
                for c in alg.classes}
    return partition(quotient) == partition(small)


def opposite_presentation(quiver: Quiver, relations) -> tuple[Quiver, list[Relation]]:
    """Transpose the quiver and reverse every relation word."""
    op = quiver.opposite()

    def rev(p: Path) -> Path:
        if p.trivial:
            return p
        return Path(path_target(quiver, p), tuple(reversed(p.arrows)))

    out: list[Relation] = []
    for rel in relations:
        if isinstance(rel, Monomial):
            out.append(Monomial(rev(rel.path)))
        else:
            out.append(Binomial(rev(rel.left), rev(rel.right)))
    return op, out


def opposite_algebra(algebra: BoundQuiverAlgebra) -> BoundQuiverAlgebra:
    op, rels = opposite_presentation(algebra.quiver, algebra.relations)
    return build_basis(op, rels, nilpotency_hint=algebra.nilpotency)


def associativity_check(algebra: BoundQuiverAlgebra) -> None:
    """(a.b).c == a.(b.c) exhaustively; zero is propagated as None."""
    n = algebra.dimension
    for i, j, k in itertools.product(range(n), repeat=3):
        ij = algebra.multiply(i, j)
        jk = algebra.multiply(j, k)
        left = algebra.multiply(ij, k) if ij is not None else None
        right = algebra.multiply(i, jk) if jk is not None else None
        assert left == right, f"associativity fails at ({i},{j},{k})"
