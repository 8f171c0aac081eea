"""Independent brute-force oracle for path-class dimensions.

Deliberately naive and engine-free: enumerate every composable arrow
sequence up to a length cap (including zero ones), close the equivalence
generated by single binomial substitutions, kill everything containing a
monomial subword, and count surviving classes.  Quadratic in everything;
only for desk-scale cross-checks.
"""

from __future__ import annotations


def naive_dimensions(vertices, arrows, monomials, binomials, maxlen):
    """arrows: {name: (src, tgt)}; monomials/binomials given as tuples of
    arrow names in application order (first applied first).  Returns
    (per-vertex projective dims, total, nonzero words)."""
    out = {v: [] for v in vertices}
    for name, (src, _tgt) in arrows.items():
        out[src].append(name)

    words = [("", v) for v in vertices]  # (comma-joined word, source vertex)
    frontier = [((), v) for v in vertices]
    all_words = {((), v) for v in vertices}
    level = [((), v) for v in vertices]
    for _ in range(maxlen):
        nxt = []
        for word, src in level:
            at = arrows[word[-1]][1] if word else src
            for name in out.get(at, ()):
                grown = word + (name,)
                nxt.append((grown, src))
                all_words.add((grown, src))
        level = nxt

    parent = {}

    def find(x):
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    ZERO = ("!", "!")
    parent[ZERO] = ZERO

    def contains(word, sub):
        k = len(sub)
        return any(word[i:i + k] == sub for i in range(len(word) - k + 1))

    for word, src in all_words:
        if any(contains(word, tuple(m)) for m in monomials):
            union((word, src), ZERO)
        for left, right in binomials:
            for pat, rep in ((tuple(left), tuple(right)), (tuple(right), tuple(left))):
                k = len(pat)
                for i in range(len(word) - k + 1):
                    if word[i:i + k] == pat:
                        new = word[:i] + rep + word[i + k:]
                        if len(new) <= maxlen:
                            union((word, src), (new, src))
                        # longer substitute: only sound if it dies; check
                        elif any(contains(new, tuple(m)) for m in monomials):
                            union((word, src), ZERO)

    classes = {}
    for node in all_words:
        root = find(node)
        if root == find(ZERO):
            continue
        classes.setdefault(root, []).append(node)
    dims = {v: 0 for v in vertices}
    for members in classes.values():
        dims[members[0][1]] += 1
    return dims, sum(dims.values()), classes
