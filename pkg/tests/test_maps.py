"""Multivalued maps, graphs, semicontinuity and Vietoris-like checks."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from finspace.errors import (
    BudgetExceeded,
    EmptyValue,
    NoMaximum,
    NotComposable,
    NotSurjective,
    NotUsc,
    ProjectionNotIso,
    UnknownElement,
)
from finspace.homology import lefschetz_number, poset_homology
from finspace.maps import (
    MultiMap,
    as_multimap,
    classify_continuity,
    compose_map_then_multimap,
    compose_multimaps,
    enumerate_selectors,
    fiber_multimap,
    graph,
    induced_multimap_homology,
    is_vietoris_like_map,
    is_vietoris_like_multimap,
    selector_from_maxima,
)
from finspace.poset import PosetMap, build_poset, constant_map, identity_map
from finspace.random_instances import (
    random_endomorphism,
    random_poset,
    susc_acyclic_multimap,
    usc_maxima_multimap,
)


@pytest.fixture
def circle():
    return build_poset("ABCD", [("C", "A"), ("D", "A"), ("C", "B"), ("D", "B")])


@pytest.fixture
def chain2():
    return build_poset("MN", [("M", "N")])


def test_multimap_validation(circle):
    with pytest.raises(EmptyValue):
        MultiMap(circle, circle, {"A": set()})
    with pytest.raises(UnknownElement):
        MultiMap(circle, circle, {x: {"zz"} for x in circle.elements})
    F = as_multimap(identity_map(circle))
    assert F("A") == frozenset({"A"})


def test_graph_uses_componentwise_order(circle):
    F = MultiMap(circle, circle, {x: circle.down_set(x) for x in circle.elements})
    gs = graph(F)
    assert gs.space.leq(("C", "C"), ("A", "C"))
    assert gs.space.leq(("C", "C"), ("A", "A"))
    assert not gs.space.leq(("A", "C"), ("C", "C"))
    assert gs.p(("A", "C")) == "A" and gs.q(("A", "C")) == "C"


def test_classify_continuity(chain2, circle):
    down = MultiMap(circle, circle, {x: circle.down_set(x) for x in circle.elements})
    flags = classify_continuity(down)
    assert flags.susc and flags.usc
    up = MultiMap(circle, circle, {x: circle.up_set(x) for x in circle.elements})
    flags = classify_continuity(up)
    assert flags.slsc and flags.lsc and not flags.susc


def test_vietoris_like_map_certificates(chain2):
    # sphere-model collapse: fails exactly on the full chain of the target
    sphere = build_poset(
        "ABCDEF",
        [("C", "A"), ("D", "A"), ("C", "B"), ("D", "B"),
         ("E", "C"), ("F", "C"), ("E", "D"), ("F", "D")],
    )
    f = PosetMap(sphere, chain2,
                 {"A": "N", "B": "N", "C": "N", "D": "M", "E": "M", "F": "M"})
    cert = is_vietoris_like_map(f)
    assert not cert.ok and cert.failing_chain == ("M", "N")
    assert cert.profile.betti_at(2) == 1
    assert is_vietoris_like_map(identity_map(sphere)).ok


def test_vietoris_like_needs_surjectivity(chain2):
    f = constant_map(chain2, chain2, "N")
    cert = is_vietoris_like_map(f)
    assert not cert.ok and "surjective" in cert.reason


def test_composition_lemmas(circle):
    # g o f with f continuous and G Vietoris-like stays Vietoris-like
    rng = random.Random(3)
    for _ in range(20):
        X = random_poset(rng, 5)
        f = random_endomorphism(rng, X)
        G = susc_acyclic_multimap(rng, X)
        assert is_vietoris_like_multimap(compose_map_then_multimap(f, G)).ok


def test_composition_of_multimaps_can_fail(circle):
    F = MultiMap(circle, circle, {
        "A": {"A", "C", "D"}, "B": {"B", "C", "D"}, "C": {"C"}, "D": {"D"}})
    G = MultiMap(circle, circle, {
        "A": {"A"}, "B": {"B"}, "C": {"C", "A", "B"}, "D": {"D", "A", "B"}})
    assert is_vietoris_like_multimap(F).ok
    assert is_vietoris_like_multimap(G).ok
    GF = compose_multimaps(F, G)
    assert GF("A") == frozenset(circle.elements)
    assert not is_vietoris_like_multimap(GF).ok
    with pytest.raises(NotComposable):
        compose_multimaps(F, MultiMap(build_poset("z", []), circle, {"z": {"A"}}))


def test_induced_multimap_homology(circle):
    ident = as_multimap(identity_map(circle))
    m = induced_multimap_homology(ident)
    assert m.matrix_at(1) == [[1]]
    assert lefschetz_number(m) == 0
    # non-invertible first projection surfaces as ProjectionNotIso
    bad = MultiMap(circle, circle, {x: {"C", "D"} for x in circle.elements})
    if not is_vietoris_like_multimap(bad).ok:
        with pytest.raises(ProjectionNotIso):
            induced_multimap_homology(bad)


def test_fiber_multimap(chain2):
    sub = build_poset("xyz", [("x", "y"), ("y", "z")])
    f = PosetMap(sub, chain2, {"x": "M", "y": "N", "z": "N"})
    F = fiber_multimap(f)
    assert F("N") == frozenset({"y", "z"})
    with pytest.raises(NotSurjective):
        fiber_multimap(constant_map(sub, chain2, "N"))


def test_selector_from_maxima(chain2):
    F = MultiMap(chain2, chain2, {"M": {"M"}, "N": {"M", "N"}})
    g = selector_from_maxima(F)
    assert g("N") == "N" and g("M") == "M"
    # lsc-with-minima dual via opposite posets
    no_max = MultiMap(chain2, build_poset("ab", []), {"M": {"a", "b"}, "N": {"a", "b"}})
    with pytest.raises(NoMaximum):
        selector_from_maxima(no_max)
    not_usc = MultiMap(chain2, chain2, {"M": {"N"}, "N": {"M"}})
    with pytest.raises(NotUsc):
        selector_from_maxima(not_usc)


def test_enumerate_selectors(chain2):
    # x -> down-set of x on the 2-chain admits exactly two selectors:
    # the identity and the constant map to the bottom
    F = MultiMap(chain2, chain2, {x: chain2.down_set(x) for x in chain2.elements})
    sels = enumerate_selectors(F)
    assert len(sels) == 2
    assignments = sorted(tuple(s(x) for x in chain2.elements) for s in sels)
    assert assignments == [("M", "M"), ("M", "N")]
    with pytest.raises(BudgetExceeded):
        enumerate_selectors(F, budget=1)


def test_selector_lambda_matches_induced(chain2):
    rng = random.Random(5)
    hits = 0
    for _ in range(30):
        X = random_poset(rng, 6)
        F = usc_maxima_multimap(rng, X)
        if F is None:
            continue
        hits += 1
        g = selector_from_maxima(F)
        lam_g = lefschetz_number(induced_multimap_homology(as_multimap(g)))
        lam_F = lefschetz_number(induced_multimap_homology(F))
        assert lam_g == lam_F
    assert hits > 10


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_graph_of_single_valued_map_is_homeomorphic_copy(seed):
    rng = random.Random(seed)
    X = random_poset(rng, 5)
    f = random_endomorphism(rng, X)
    gs = graph(as_multimap(f))
    assert len(gs.space) == len(X)
    # p is a bijection preserving and reflecting the order
    hp_x, hp_g = poset_homology(X), poset_homology(gs.space)
    assert hp_x.same_shape(hp_g)
