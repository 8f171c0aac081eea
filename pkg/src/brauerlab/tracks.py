"""Generalized tracks and the symmetrization of special quasi-biserial algebras.

A track packages the maximal nonzero route through an arrow: the subquiver it
spans, the induced relations, and the route path v itself, trimmed so that
every non-single arrow occurs exactly once, single arrows at most twice, and
no vertex more than twice.  Open (non-closed) tracks are glued by the star
product -- overlap-gluing along a shared run of single arrows, otherwise
plain concatenation -- and each gluing round either closes a composite into a
cycle or closes it by adjoining one new arrow with two guard relations.  Once
every track is closed, the symmetric relation set is regenerated from the
cycle structure alone:

  (1) monomials bridging non-single arrows of different cycles through runs
      of single arrows,
  (2) length-2 compositions that are not cyclic subpaths of any cycle,
  (3) overshoots of the socle cycle powers,
  (4) binomials equating based rotations of socle cycle powers at shared
      vertices, stripped of their common prefix and suffix.

Each cycle carries its own socle exponent: the least power that absorbs
every nonzero input path riding on it.  A single uniform exponent would
inflate cycles of smaller multiplicity and break the surjection onto the
input whenever multiplicities differ.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .classify import (
    arrow_kinds,
    cycle_rotation,
    is_special_quasi_biserial,
    is_symmetric_canonical,
)
from .errors import ClosureBudgetExceeded, Decomposable, NotSQB, PostconditionFailed
from .quiver import (
    Arrow,
    Binomial,
    BoundQuiverAlgebra,
    Monomial,
    Path,
    Quiver,
    Relation,
    build_basis,
    path_target,
    quotient_check,
)


@dataclass(frozen=True)
class GeneralizedTrack:
    representative: str              # arrow naming the track
    path: Path                       # v, the route
    arrows: frozenset[str]           # arrow set of the subquiver Q_v
    vertices: frozenset[str]
    relations: tuple[Relation, ...]  # I intersected with the subquiver
    closed: bool

    def to_json(self) -> dict:
        return {"representative": self.representative,
                "path": list(self.path.written()),
                "arrows": sorted(self.arrows),
                "closed": self.closed}


def _connected_quiver(quiver: Quiver) -> bool:
    if not quiver.vertices:
        return False
    adj: dict[str, set[str]] = {v: set() for v in quiver.vertices}
    for a in quiver.arrows:
        adj[a.source].add(a.target)
        adj[a.target].add(a.source)
    seen = {quiver.vertices[0]}
    stack = [quiver.vertices[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(quiver.vertices)


def _vertex_visits(quiver: Quiver, p: Path) -> dict[str, int]:
    counts: dict[str, int] = {p.source: 1}
    at = p.source
    for name in p.arrows:
        at = quiver.arrow(name).target
        counts[at] = counts.get(at, 0) + 1
    if p.arrows and at == p.source:
        counts[at] -= 1  # closed path: count the base point once
    return counts


def _track_bounds_ok(quiver: Quiver, p: Path, non_single: set[str],
                     single_cap: int = 2) -> bool:
    arrow_counts: dict[str, int] = {}
    for name in p.arrows:
        arrow_counts[name] = arrow_counts.get(name, 0) + 1
    for name, c in arrow_counts.items():
        if c > (1 if name in non_single else single_cap):
            return False
    return all(c <= 2 for c in _vertex_visits(quiver, p).values())


def _trim_to_track(algebra: BoundQuiverAlgebra, w: Path, anchor: str,
                   non_single: set[str], single_cap: int = 2) -> Path:
    """Maximal subpath of w through the anchor arrow obeying the track bounds.

    Non-single arrows may occur once; single arrows up to single_cap times
    (twice for tracks anchored at a non-single arrow, once for the leftover
    single-arrow tracks); no vertex more than twice.
    """
    arrows = w.arrows
    spans = []
    for i in range(len(arrows)):
        for j in range(i + 1, len(arrows) + 1):
            if anchor not in arrows[i:j]:
                continue
            src = w.source if i == 0 else algebra.quiver.arrow(arrows[i - 1]).target
            cand = Path(src, arrows[i:j])
            if _track_bounds_ok(algebra.quiver, cand, non_single, single_cap):
                spans.append(cand)
    assert spans, "anchor arrow lost while trimming"
    best_len = max(len(s) for s in spans)
    return min((s for s in spans if len(s) == best_len), key=Path.key)


def _maximal_path_through(algebra: BoundQuiverAlgebra, name: str) -> Path:
    """Grow the unique maximal nonzero path through an arrow.

    Each growth step must be unambiguous; for special quasi-biserial input
    that holds as soon as the path contains a non-single arrow, and a branch
    on an all-single path would mean two parallel arrows, which are not
    single.  Finite dimension bounds the growth.
    """
    a = algebra.quiver.arrow(name)
    p = Path(a.source, (name,))
    cap = algebra.nilpotency + 1
    changed = True
    while changed:
        assert len(p) <= cap, "maximal-path growth exceeded the nilpotency bound"
        changed = False
        tgt = path_target(algebra.quiver, p)
        lefts = [b.name for b in algebra.quiver.arrows_from(tgt)
                 if algebra.class_of_path(Path(p.source, p.arrows + (b.name,))) is not None]
        if len(lefts) > 1:
            raise NotSQB(f"two nonzero left extensions of {p.label()}: {sorted(lefts)}")
        if lefts:
            p = Path(p.source, p.arrows + (lefts[0],))
            changed = True
            continue
        rights = [b.name for b in algebra.quiver.arrows_into(p.source)
                  if algebra.class_of_path(
                      Path(algebra.quiver.arrow(b.name).source,
                           (b.name,) + p.arrows)) is not None]
        if len(rights) > 1:
            raise NotSQB(f"two nonzero right extensions of {p.label()}: {sorted(rights)}")
        if rights:
            b = algebra.quiver.arrow(rights[0])
            p = Path(b.source, (rights[0],) + p.arrows)
            changed = True
    return p


def _induced_relations(quiver: Quiver, relations, arrows: frozenset[str]) -> tuple[Relation, ...]:
    out = []
    for rel in relations:
        words = [rel.path] if isinstance(rel, Monomial) else [rel.left, rel.right]
        if all(set(w.arrows) <= arrows for w in words):
            out.append(rel)
    return tuple(out)


def generalized_tracks(algebra: BoundQuiverAlgebra) -> tuple[list[GeneralizedTrack], list[str]]:
    """Track decomposition and the representative set of arrows.

    Tracks are deduplicated by their subquiver together with its induced
    relations; every non-single arrow lands in exactly one track and every
    single arrow in at least one.
    """
    sqb, witness = is_special_quasi_biserial(algebra)
    if not sqb:
        raise NotSQB("algebra is not special quasi-biserial",
                     witness=witness.to_json() if witness else None)
    if not _connected_quiver(algebra.quiver):
        raise Decomposable("quiver is not connected")
    kinds = arrow_kinds(algebra.quiver)
    non_single = {n for n, k in kinds.items() if k == "non-single"}

    tracks: list[GeneralizedTrack] = []
    by_key: dict[tuple, str] = {}
    rep_of_arrow: dict[str, list[str]] = {}

    def record(rep: str, v_path: Path):
        arrows = frozenset(v_path.arrows)
        vertices = frozenset(_vertex_visits(algebra.quiver, v_path))
        induced = _induced_relations(algebra.quiver, algebra.relations, arrows)
        key = (arrows, vertices, tuple(sorted(
            (r.path.arrows,) if isinstance(r, Monomial)
            else tuple(sorted((r.left.arrows, r.right.arrows))) for r in induced)))
        if key in by_key:
            for a in arrows:
                rep_of_arrow.setdefault(a, []).append(by_key[key])
            return
        by_key[key] = rep
        closed = v_path.source == path_target(algebra.quiver, v_path)
        tracks.append(GeneralizedTrack(rep, v_path, arrows, vertices, induced, closed))
        for a in arrows:
            rep_of_arrow.setdefault(a, []).append(rep)

    for name in sorted(non_single):
        w = _maximal_path_through(algebra, name)
        v_path = _trim_to_track(algebra, w, name, non_single)
        record(name, v_path)
    for name in sorted(set(kinds) - set(rep_of_arrow)):
        # leftover single arrows: their maximal paths consist of single
        # arrows, and each arrow occurs exactly once in the trimmed route
        w = _maximal_path_through(algebra, name)
        v_path = _trim_to_track(algebra, w, name, non_single, single_cap=1)
        record(name, v_path)

    for name, kind in kinds.items():
        owners = {t.representative for t in tracks if name in t.arrows}
        assert owners, f"arrow {name} not covered by any track"
        if kind == "non-single":
            assert len(owners) == 1, f"non-single arrow {name} lies in several tracks"
    omega = sorted(t.representative for t in tracks)
    return tracks, omega


# -- star product --------------------------------------------------------------

def star(quiver: Quiver, v_a: Path, v_b: Path, single: set[str]) -> Path | None:
    """Overlap-glue v_a over v_b along a shared run of single arrows, else
    concatenate when s(v_a) = t(v_b), else zero (None)."""
    best_l = 0
    max_l = min(len(v_a), len(v_b))
    for l in range(1, max_l + 1):
        head = v_a.arrows[:l]
        tail = v_b.arrows[len(v_b) - l:]
        if head == tail and all(x in single for x in head):
            best_l = l
    if best_l:
        return Path(v_b.source, v_b.arrows + v_a.arrows[best_l:])
    if v_a.source == path_target(quiver, v_b):
        return Path(v_b.source, v_b.arrows + v_a.arrows)
    return None


# -- symmetrization --------------------------------------------------------------

@dataclass
class SymmetrizationStep:
    case: int                        # 1 = composite closed itself, 2 = new arrow
    merged: list[str]                # representatives of the glued tracks
    composite: list[str]             # written form
    added_arrow: str | None = None
    guards: list[list[str]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"case": self.case, "merged": self.merged, "composite": self.composite,
                "added_arrow": self.added_arrow, "guards": self.guards}


@dataclass
class SymmetrizationResult:
    algebra: BoundQuiverAlgebra
    quiver: Quiver
    added_arrows: list[str]
    cycles: list[Path]
    powers: list[int]                # socle exponent per cycle
    steps: list[SymmetrizationStep]
    relations_added: list[Relation]
    relations_removed: list[Relation]
    surjection: dict[str, str]       # original arrows map to themselves, added to 0

    def to_json(self) -> dict:
        from .jsonio import relation_to_json
        return {
            "added_arrows": self.added_arrows,
            "cycles": [list(c.written()) for c in self.cycles],
            "powers": self.powers,
            "dimension": self.algebra.dimension,
            "steps": [s.to_json() for s in self.steps],
            "relations": [relation_to_json(r) for r in self.algebra.relations],
            "surjection": self.surjection,
        }


def _closed(quiver: Quiver, p: Path) -> bool:
    return p.source == path_target(quiver, p)


def _composable_tuples(quiver: Quiver, open_tracks: list[GeneralizedTrack],
                       single: set[str]) -> list[tuple[tuple[str, ...], Path]]:
    """All maximal star-composable orderings of subsets of the open tracks."""
    paths = {t.representative: t.path for t in open_tracks}
    reps = sorted(paths)
    results: list[tuple[tuple[str, ...], Path]] = []

    def extendable(seq: tuple[str, ...], composite: Path) -> bool:
        for r in reps:
            if r in seq:
                continue
            if star(quiver, composite, paths[r], single) is not None:
                return True
            if star(quiver, paths[r], composite, single) is not None:
                return True
        return False

    def walk(seq: tuple[str, ...], composite: Path):
        grown = False
        for r in reps:
            if r in seq:
                continue
            nxt = star(quiver, paths[r], composite, single)
            if nxt is not None:
                walk(seq + (r,), nxt)
                grown = True
        if not grown and not extendable(seq, composite):
            results.append((seq, composite))

    for r in reps:
        walk((r,), paths[r])
    # deterministic order: shortest-then-lex canonical key of the composite
    dedup: dict[tuple, tuple[tuple[str, ...], Path]] = {}
    for seq, comp in results:
        dedup.setdefault((comp.key(), seq), (seq, comp))
    return [dedup[k] for k in sorted(dedup)]


def symmetrize(algebra: BoundQuiverAlgebra) -> SymmetrizationResult:
    """Produce a symmetric special quasi-biserial algebra surjecting onto the
    input, by closing every generalized track into a cycle and regenerating
    the relations from the cycle structure."""
    tracks, _ = generalized_tracks(algebra)
    kinds = arrow_kinds(algebra.quiver)
    if all(k == "single" for k in kinds.values()):
        raise NotSQB("Nakayama input: already a quotient of a symmetric "
                     "Nakayama (Brauer tree) algebra; nothing to do here")

    quiver = algebra.quiver
    single = {n for n, k in kinds.items() if k == "single"}
    closed: list[Path] = [t.path for t in tracks if t.closed]
    open_paths: list[GeneralizedTrack] = [t for t in tracks if not t.closed]
    steps: list[SymmetrizationStep] = []
    added: list[str] = []
    budget = 4 * len(quiver.arrows) + 4

    while open_paths:
        if len(steps) >= budget:
            raise ClosureBudgetExceeded(f"no closure after {budget} gluing steps")
        candidates = _composable_tuples(quiver, open_paths, single)
        assert candidates, "open tracks admit no maximal composable tuple"
        seq, composite = candidates[0]
        open_before = len(open_paths)
        if _closed(quiver, composite):
            closed.append(composite)
            steps.append(SymmetrizationStep(1, list(seq), list(composite.written())))
        else:
            src = path_target(quiver, composite)   # terminus t(composite)
            tgt = composite.source                 # source s(composite)
            for v, side in ((src, "out"), (tgt, "in")):
                existing = quiver.arrows_from(v) if side == "out" else quiver.arrows_into(v)
                if any(a.name not in set(added) for a in existing) or len(existing) > 1:
                    raise PostconditionFailed(
                        f"cannot attach a closing arrow at {v}; original arrows present")
            name = f"k{len(added) + 1}"
            quiver = Quiver(quiver.vertices, quiver.arrows + (Arrow(name, src, tgt),))
            added.append(name)
            guards: list[list[str]] = []
            # sigma.delta = 0 for the other arrow ending at t(composite),
            # epsilon.sigma = 0 for the other arrow starting at s(composite)
            last = composite.arrows[-1]
            for a in quiver.arrows_into(src):
                if a.name != last and a.name != name:
                    guards.append([name, a.name])      # written sigma*delta
            first = composite.arrows[0]
            for a in quiver.arrows_from(tgt):
                if a.name != first and a.name != name:
                    guards.append([a.name, name])      # written epsilon*sigma
            closed.append(Path(composite.source, composite.arrows + (name,)))
            steps.append(SymmetrizationStep(
                2, list(seq), list(composite.written()), name, guards))
        used = set(seq)
        open_paths = [t for t in open_paths if t.representative not in used]
        assert len(open_paths) < open_before, "gluing made no progress"
        # the new closed cycle must satisfy the track occurrence bounds
        non_single_now = {n for n, k in arrow_kinds(quiver).items() if k == "non-single"}
        assert _track_bounds_ok(quiver, closed[-1], non_single_now), \
            "glued composite violates track occurrence bounds"

    powers = _cover_powers(algebra, closed)
    relations = symmetric_relations(quiver, closed, powers)
    hint = max(len(c) * n for c, n in zip(closed, powers)) + 2
    a_s = build_basis(quiver, relations, nilpotency_hint=hint)

    verdict, gram = is_symmetric_canonical(a_s)
    if verdict != "yes":
        raise PostconditionFailed("symmetrized algebra is not canonically symmetric",
                                  gram=gram)
    sqb, witness = is_special_quasi_biserial(a_s)
    if not sqb:
        raise PostconditionFailed("symmetrized algebra is not special quasi-biserial",
                                  witness=witness.to_json() if witness else None)
    if not quotient_check(a_s, added, list(algebra.relations), algebra):
        raise PostconditionFailed("killing the added arrows does not recover the input")

    old = {("m", r.path.arrows) if isinstance(r, Monomial)
           else ("b", *sorted((r.left.arrows, r.right.arrows))) for r in algebra.relations}
    new = {("m", r.path.arrows) if isinstance(r, Monomial)
           else ("b", *sorted((r.left.arrows, r.right.arrows))) for r in relations}

    def keyed(rels, keys):
        out = []
        for r in rels:
            k = (("m", r.path.arrows) if isinstance(r, Monomial)
                 else ("b", *sorted((r.left.arrows, r.right.arrows))))
            if k in keys:
                out.append(r)
        return out

    surjection = {a.name: (a.name if a.name not in set(added) else "0")
                  for a in quiver.arrows}
    return SymmetrizationResult(
        algebra=a_s, quiver=quiver, added_arrows=added, cycles=closed, powers=powers,
        steps=steps,
        relations_added=keyed(relations, new - old),
        relations_removed=keyed(algebra.relations, old - new),
        surjection=surjection)


def _fits_cycle(word: tuple[str, ...], cycle: Path, n: int) -> bool:
    """Is the word a cyclic subpath of the n-th power of the cycle?"""
    if len(word) > len(cycle.arrows) * n:
        return False
    reps = cycle.arrows * (n + 1)
    return any(reps[i:i + len(word)] == word for i in range(len(cycle.arrows)))


def _cover_powers(algebra: BoundQuiverAlgebra, cycles: list[Path]) -> list[int]:
    """Per-cycle socle exponents: the least powers that absorb every nonzero
    input path.  A path riding several cycles constrains only the cheapest
    one that already works, so exponents are not inflated."""
    powers = [1] * len(cycles)
    for cls in algebra.classes:
        for p in cls.members:
            if not p.arrows:
                continue
            if any(_fits_cycle(p.arrows, c, powers[i]) for i, c in enumerate(cycles)):
                continue
            needs = []
            for i, c in enumerate(cycles):
                n = powers[i]
                while n <= algebra.nilpotency and not _fits_cycle(p.arrows, c, n):
                    n += 1
                if n <= algebra.nilpotency:
                    needs.append((n - powers[i], i, n))
            if not needs:
                raise PostconditionFailed(
                    f"nonzero path {p.label()} lies on no closed cycle")
            _, i, n = min(needs)
            powers[i] = n
    return powers


def symmetric_relations(quiver: Quiver, cycles: list[Path],
                        powers: list[int]) -> list[Relation]:
    """Regenerate the ideal from the closed-cycle structure (rules 1-4)."""
    kinds = arrow_kinds(quiver)
    single = {n for n, k in kinds.items() if k == "single"}
    owner: dict[str, set[int]] = {}
    for i, c in enumerate(cycles):
        for a in c.arrows:
            owner.setdefault(a, set()).add(i)

    cyclic_pairs: set[tuple[str, str]] = set()
    for c in cycles:
        arrs = c.arrows
        for k in range(len(arrs)):
            cyclic_pairs.add((arrs[k], arrs[(k + 1) % len(arrs)]))

    rels: list[Relation] = []
    seen: set[tuple] = set()

    def emit(rel: Relation):
        if isinstance(rel, Monomial):
            tag = ("m", rel.path.source, rel.path.arrows)
        else:
            tag = ("b", *sorted(((rel.left.source, rel.left.arrows),
                                 (rel.right.source, rel.right.arrows))))
        if tag not in seen:
            seen.add(tag)
            rels.append(rel)

    # (1) bridges between distinct cycles through single-arrow runs
    for first in sorted(kinds):
        if kinds[first] != "non-single":
            continue
        stack = [(first, (first,))]
        while stack:
            at_arrow, word = stack.pop()
            tgt = quiver.arrow(at_arrow).target
            for b in quiver.arrows_from(tgt):
                if b.name in single:
                    if len(word) < len(quiver.arrows) + 2:
                        stack.append((b.name, word + (b.name,)))
                elif kinds[b.name] == "non-single":
                    if owner.get(b.name, set()).isdisjoint(owner.get(first, set())):
                        src = quiver.arrow(word[0]).source
                        emit(Monomial(Path(src, word + (b.name,))))
    # (2) compositions that follow no cycle
    for a, b in itertools.product(quiver.arrows, repeat=2):
        if a.target != b.source:
            continue
        if (a.name, b.name) in cyclic_pairs:
            continue
        if a.name == b.name and a.source == a.target:
            continue  # loop squared: tolerated unless a cycle says otherwise
        emit(Monomial(Path(a.source, (a.name, b.name))))
    # (3) one overshoot generator per arrow occurrence in each cycle
    for c, n in zip(cycles, powers):
        arrs = c.arrows
        for k, name in enumerate(arrs):
            rot = cycle_rotation(quiver, c, (k + 1) % len(arrs))
            word = (name,) + rot.arrows * n
            emit(Monomial(Path(quiver.arrow(name).source, word)))
    # (4) based rotations of the cycle powers agree at shared vertices
    based: dict[str, list[Path]] = {}
    for c, n in zip(cycles, powers):
        for k in range(len(c.arrows)):
            rot = cycle_rotation(quiver, c, k)
            based.setdefault(rot.source, []).append(Path(rot.source, rot.arrows * n))
    for v in sorted(based):
        words = sorted({p.arrows for p in based[v]})
        for wa, wb in itertools.combinations(words, 2):
            l1 = 0
            while l1 < min(len(wa), len(wb)) and wa[l1] == wb[l1]:
                l1 += 1
            l2 = 0
            while (l2 < min(len(wa), len(wb)) - l1
                   and wa[len(wa) - 1 - l2] == wb[len(wb) - 1 - l2]):
                l2 += 1
            # keep both sides admissible (length >= 2)
            while min(len(wa), len(wb)) - l1 - l2 < 2 and (l1 or l2):
                if l2:
                    l2 -= 1
                else:
                    l1 -= 1
            ca, cb = wa[l1:len(wa) - l2], wb[l1:len(wb) - l2]
            src = quiver.arrow(ca[0]).source
            emit(Binomial(Path(src, ca), Path(src, cb)))
    return rels
