"""Seeded random posets, maps and multimaps for the property suites.

Everything takes an explicit random.Random so corpora are reproducible
from a seed.  Generators either construct instances that satisfy a
hypothesis by design or propose-and-filter with the real checkers; the
test suites re-certify hypotheses before asserting conclusions.
"""

import random

from .complexes import barycentric_subdivision_space
from .maps import MultiMap, classify_continuity
from .poset import FinitePoset, PosetMap, build_poset, identity_map

__all__ = [
    "random_poset",
    "random_monotone_map",
    "random_endomorphism",
    "susc_acyclic_multimap",
    "usc_maxima_multimap",
    "vietoris_map_corpus",
]


def random_poset(rng, max_size, density=0.3):
    """Random poset on 1..max_size points: random DAG edges, closed up."""
    n = rng.randint(1, max_size)
    names = [f"p{i}" for i in range(n)]
    rels = [
        (names[i], names[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < density
    ]
    return build_poset(names, rels)


def random_monotone_map(rng, X, Y, attempts=200):
    """A random continuous map X -> Y, or None if sampling keeps failing.

    Samples greedily in a linear extension, choosing uniformly among the
    values compatible with the already-assigned strict predecessors.
    """
    order = X.linear_extension()
    preds = {x: [y for y in order[: order.index(x)] if X.lt(y, x)] for x in order}
    for _ in range(attempts):
        partial = {}
        for x in order:
            cands = [
                y
                for y in Y.elements
                if all(Y.leq(partial[p], y) for p in preds[x])
            ]
            if not cands:
                break
            partial[x] = rng.choice(cands)
        else:
            return PosetMap(X, Y, partial)
    return None


def random_endomorphism(rng, X, attempts=200):
    """A random continuous self-map (the identity always exists)."""
    f = random_monotone_map(rng, X, X, attempts)
    return f if f is not None else identity_map(X)


def susc_acyclic_multimap(rng, X):
    """A multimap with F(x1) contained in F(x2) whenever x1 <= x2 and
    every value acyclic: F(x) is the minimal open set of g(x) for a random
    continuous g, optionally fattened by a second map below it."""
    g = random_endomorphism(rng, X)
    values = {x: set(X.down_set(g(x))) for x in X.elements}
    return MultiMap(X, X, values)


def usc_maxima_multimap(rng, X, attempts=50):
    """A usc multimap whose every value has a maximum, or None.

    Proposes values {g(x)} plus a random part of the points below g(x)
    and keeps the first proposal that the usc checker accepts.
    """
    g = random_endomorphism(rng, X)
    for _ in range(attempts):
        values = {}
        for x in X.elements:
            below = sorted(X.strict_down_set(g(x)), key=X.index)
            extra = {y for y in below if rng.random() < 0.5}
            values[x] = {g(x)} | extra
        F = MultiMap(X, X, values)
        if classify_continuity(F).usc:
            return F
    return None


def vietoris_map_corpus(rng, count, max_size=4, density=0.4):
    """Maps that are Vietoris-like by construction.

    The corpus mixes identities, chain-maximum maps from one barycentric
    subdivision down to the space, and their compositions across two
    subdivision steps.  Callers should still certify each instance.
    """
    out = []
    while len(out) < count:
        X = random_poset(rng, max_size, density)
        kind = rng.randrange(3)
        if kind == 0:
            out.append(identity_map(X))
            continue
        X1 = barycentric_subdivision_space(X)
        h1 = PosetMap(X1, X, {c: X.maximum(set(c)) for c in X1.elements})
        if kind == 1 or len(X1) > 12:
            out.append(h1)
            continue
        X2 = barycentric_subdivision_space(X1)
        h2 = PosetMap(X2, X1, {c: X1.maximum(set(c)) for c in X2.elements})
        out.append(h2.then(h1))
    return out
