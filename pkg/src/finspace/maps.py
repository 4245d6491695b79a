"""Multivalued maps between finite spaces and Vietoris-like certification.

The graph of a multimap is itself a finite space (componentwise order on
pairs); everything homological about a multimap flows through its two
projections.
"""

from dataclasses import dataclass, field

import numpy as np

from . import intmat
from .errors import (
    BudgetExceeded,
    EmptyValue,
    NoMaximum,
    NotComposable,
    NotSurjective,
    NotUsc,
    ProjectionNotIso,
)
from .homology import (
    induced_map_of_poset_map,
    invert,
    poset_homology,
)
from .errors import NotInvertible
from .poset import FinitePoset, PosetMap, require_continuous


class MultiMap:
    """Total multivalued map: every point gets a non-empty image set."""

    __slots__ = ("source", "target", "values")

    def __init__(self, source, target, values):
        self.source = source
        self.target = target
        vals = {}
        for x in source.elements:
            if x not in values:
                raise EmptyValue(f"no image set for {x!r}")
            v = frozenset(values[x])
            if not v:
                raise EmptyValue(f"empty image set at {x!r}")
            for y in v:
                target.index(y)  # raises UnknownElement
            vals[x] = v
        self.values = vals

    def __call__(self, x):
        return self.values[x]

    def __eq__(self, other):
        if not isinstance(other, MultiMap):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.values == other.values
        )

    def __repr__(self):
        parts = ", ".join(
            f"{x!r}: {sorted(self.values[x], key=self.target.index)!r}"
            for x in self.source.elements
        )
        return f"MultiMap({{{parts}}})"


def as_multimap(f):
    """View a single-valued map as a multivalued one."""
    return MultiMap(f.source, f.target, {x: {f(x)} for x in f.source.elements})


class GraphSpace:
    """The graph of a multimap as a finite space with its two projections.

    Pairs are ordered componentwise: (x, y) <= (x', y') iff x <= x' and
    y <= y'.
    """

    __slots__ = ("space", "p", "q", "multimap")

    def __init__(self, F):
        X, Y = F.source, F.target
        pairs = [
            (x, y)
            for x in X.elements
            for y in sorted(F(x), key=Y.index)
        ]
        n = len(pairs)
        mat = np.zeros((n, n), dtype=bool)
        for i, (x1, y1) in enumerate(pairs):
            for j, (x2, y2) in enumerate(pairs):
                mat[i, j] = X.leq(x1, x2) and Y.leq(y1, y2)
        self.space = FinitePoset(pairs, mat)
        self.p = PosetMap(self.space, X, {pr: pr[0] for pr in pairs})
        self.q = PosetMap(self.space, Y, {pr: pr[1] for pr in pairs})
        self.multimap = F


def graph(F):
    return GraphSpace(F)


@dataclass
class ContinuityFlags:
    usc: bool
    lsc: bool
    susc: bool
    slsc: bool

    def as_dict(self):
        return {"usc": self.usc, "lsc": self.lsc, "susc": self.susc, "slsc": self.slsc}


def classify_continuity(F):
    """Order-theoretic (strong) upper/lower semicontinuity flags."""
    X, Y = F.source, F.target
    usc = lsc = susc = slsc = True
    for x1 in X.elements:
        for x2 in X.elements:
            if not X.leq(x1, x2):
                continue
            # x1 <= x2
            if not F(x1) <= F(x2):
                susc = False
            if not F(x2) <= F(x1):
                slsc = False
            if not all(any(Y.leq(y1, y2) for y2 in F(x2)) for y1 in F(x1)):
                usc = False
            if not all(any(Y.leq(y2, y1) for y1 in F(x1)) for y2 in F(x2)):
                lsc = False
    return ContinuityFlags(usc=usc, lsc=lsc, susc=susc, slsc=slsc)


@dataclass
class Certificate:
    """Outcome of a Vietoris-like check, with the first failure witness."""

    ok: bool
    failing_chain: tuple | None = None
    profile: object = None
    reason: str | None = None

    def as_dict(self):
        out = {"ok": self.ok}
        if not self.ok:
            out["failing_chain"] = list(self.failing_chain) if self.failing_chain else None
            if self.profile is not None:
                out.update(self.profile.summary())
            if self.reason:
                out["reason"] = self.reason
        return out


def is_vietoris_like_map(f):
    """Check that every union of fibers over a chain of the target is acyclic.

    All chains are enumerated (acyclicity over maximal chains does not
    imply it for subchains); fiber unions are memoized by their element
    set and reduced to their Stong core before homology, which leaves the
    Betti numbers and torsion of the union unchanged.  The first failing
    chain, in enumeration order, is reported.
    """
    require_continuous(f)
    X, Y = f.source, f.target
    fibers = {y: f.preimage(y) for y in Y.elements}
    cache = {}
    for chain in sorted(Y.all_chains(), key=lambda c: (len(c), tuple(map(Y.index, c)))):
        union = frozenset().union(*(fibers[y] for y in chain))
        if not union:
            return Certificate(
                ok=False, failing_chain=chain, reason="empty fiber union (f not surjective)"
            )
        if union not in cache:
            core = X.subposet(union).core()
            cache[union] = poset_homology(core) if len(core) > 1 else None
        hp = cache[union]
        if hp is not None and not hp.is_acyclic():
            return Certificate(ok=False, failing_chain=chain, profile=hp)
    return Certificate(ok=True)


def is_vietoris_like_multimap(F):
    """A multimap is Vietoris-like iff the first graph projection is."""
    return is_vietoris_like_map(graph(F).p)


def induced_multimap_homology(F, gs=None):
    """F_* = q_* o p_*^-1 on free homology, via the graph projections.

    The projections are restricted to the Stong core of the graph first:
    the core inclusion i induces isomorphisms, so (q o i)_* (p o i)_*^-1
    equals q_* p_*^-1 while the chain complexes stay small.
    """
    gs = gs or graph(F)
    p, q = gs.p, gs.q
    core = gs.space.core()
    if len(core) < len(gs.space):
        inc = PosetMap(core, gs.space, {x: x for x in core.elements})
        p, q = inc.then(p), inc.then(q)
    p_star = induced_map_of_poset_map(p)
    q_star = induced_map_of_poset_map(q)
    try:
        p_inv = invert(p_star)
    except NotInvertible as exc:
        raise ProjectionNotIso(
            "first projection does not induce homology isomorphisms"
        ) from exc
    return p_inv.then(q_star)


def compose_multimaps(F, G):
    """(G o F)(x) = union of G(y) over y in F(x)."""
    if F.target != G.source:
        raise NotComposable("target of F differs from source of G")
    return MultiMap(
        F.source,
        G.target,
        {x: frozenset().union(*(G(y) for y in F(x))) for x in F.source.elements},
    )


def compose_map_then_multimap(f, G):
    """(G o f)(x) = G(f(x)) for single-valued f."""
    return compose_multimaps(as_multimap(f), G)


def fiber_multimap(f):
    """F(y) = f^{-1}(y), a multimap from the target back to the source."""
    require_continuous(f)
    if not f.is_surjective():
        raise NotSurjective("fiber multimap needs a surjective map")
    return MultiMap(
        f.target, f.source, {y: f.preimage(y) for y in f.target.elements}
    )


def selector_from_maxima(F):
    """The selector x -> max F(x) for a usc multimap with maxima.

    Continuity is automatic; the dual (lsc with minima) is reached by
    passing the multimap between opposite posets.
    """
    flags = classify_continuity(F)
    if not flags.usc:
        raise NotUsc("multimap is not upper semicontinuous")
    assignment = {}
    for x in F.source.elements:
        m = F.target.maximum(F(x))
        if m is None:
            raise NoMaximum(f"image of {x!r} has no maximum", element=x)
        assignment[x] = m
    return require_continuous(PosetMap(F.source, F.target, assignment))


def enumerate_selectors(F, budget=None):
    """All continuous sections x -> y in F(x), by backtracking.

    Elements are processed in a linear extension of the source; only
    partial assignments that are already order-preserving are extended.
    """
    X, Y = F.source, F.target
    order = X.linear_extension()
    preds = {x: [y for y in order[: order.index(x)] if X.lt(y, x)] for x in order}
    out = []
    count = 0

    def rec(i, partial):
        nonlocal count
        if i == len(order):
            out.append(PosetMap(X, Y, dict(partial)))
            return
        x = order[i]
        for y in sorted(F(x), key=Y.index):
            count += 1
            if budget is not None and count > budget:
                raise BudgetExceeded("selector enumeration budget exhausted")
            if all(Y.leq(partial[p], y) for p in preds[x]):
                partial[x] = y
                rec(i + 1, partial)
                del partial[x]

    rec(0, {})
    return out
