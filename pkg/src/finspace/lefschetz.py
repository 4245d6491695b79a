"""Coincidence and fixed-point theorems driven by Lefschetz numbers.

Each operation certifies its hypotheses, computes the relevant Lefschetz
number on free homology, and scans exhaustively for witnesses.  A zero
Lefschetz number is always reported as inconclusive, never as absence of
fixed points.
"""

from dataclasses import dataclass, field

from .errors import HypothesisFailed, NotComposable
from .homology import (
    induced_map_of_poset_map,
    invert,
    lefschetz_number,
    poset_homology,
)
from .maps import (
    as_multimap,
    compose_multimaps,
    enumerate_selectors,
    graph,
    induced_multimap_homology,
    is_vietoris_like_map,
    is_vietoris_like_multimap,
)
from .errors import NoSelector
from .poset import check_continuous, require_continuous


@dataclass
class TheoremReport:
    """Outcome of one theorem evaluation.

    conclusion_verified is True when the theorem's implication holds on
    this instance: either the Lefschetz number vanished (inconclusive) or
    a witness was found.  A False value with certified hypotheses means a
    falsification and is treated as a bug.
    """

    lambda_: int
    hypothesis_certificates: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    conclusion_verified: bool = False
    inconclusive: bool = False
    chi_fix: int | None = None
    details: dict = field(default_factory=dict)

    def as_dict(self):
        out = {
            "lambda": self.lambda_,
            "hypotheses": list(self.hypothesis_certificates),
            "witnesses": [repr(w) for w in self.witnesses],
            "conclusion_verified": self.conclusion_verified,
            "inconclusive": self.inconclusive,
        }
        if self.chi_fix is not None:
            out["chi_fix"] = self.chi_fix
        out.update(self.details)
        return out


def coincidence_points(f, g):
    """All x with f(x) = g(x), in element order."""
    if f.source != g.source or f.target != g.target:
        raise ValueError("maps must share source and target")
    return [x for x in f.source.elements if f(x) == g(x)]


def multimap_coincidence_points(F, G):
    """All x with F(x) and G(x) intersecting."""
    if F.source != G.source or F.target != G.target:
        raise ValueError("multimaps must share source and target")
    return [x for x in F.source.elements if F(x) & G(x)]


def _finish(lam, certs, witnesses, details=None):
    return TheoremReport(
        lambda_=lam,
        hypothesis_certificates=certs,
        witnesses=witnesses,
        conclusion_verified=(lam == 0) or bool(witnesses),
        inconclusive=(lam == 0),
        details=details or {},
    )


def theorem_A(f, g):
    """Coincidence theorem: f Vietoris-like, Lambda(g_* f_*^-1) != 0
    forces a point with f(x) = g(x)."""
    require_continuous(g)
    cert = is_vietoris_like_map(f)
    if not cert.ok:
        raise HypothesisFailed(f"f is not Vietoris-like: {cert.as_dict()}")
    f_star = induced_map_of_poset_map(f)
    g_star = induced_map_of_poset_map(g)
    lam = lefschetz_number(invert(f_star).then(g_star))
    return _finish(lam, ["f Vietoris-like"], coincidence_points(f, g))


def theorem_B(F):
    """Lefschetz fixed point theorem for Vietoris-like multimaps."""
    if F.source != F.target:
        raise ValueError("theorem needs an endo-multimap")
    gs = graph(F)
    cert = is_vietoris_like_map(gs.p)
    if not cert.ok:
        raise HypothesisFailed(f"F is not a Vietoris-like multimap: {cert.as_dict()}")
    lam = lefschetz_number(induced_multimap_homology(F, gs))
    witnesses = [x for x in F.source.elements if x in F(x)]
    return _finish(lam, ["F Vietoris-like multimap"], witnesses)


def theorem_C(chain):
    """Fixed point theorem for a composition of Vietoris-like multimaps.

    Lambda is the alternating-trace of the product of the individual
    induced maps; the witness scan runs over the composed multimap.
    """
    if not chain:
        raise NotComposable("empty composition")
    for i in range(len(chain) - 1):
        if chain[i].target != chain[i + 1].source:
            raise NotComposable(f"links {i} and {i + 1} do not compose")
    if chain[0].source != chain[-1].target:
        raise NotComposable("composition is not an endo-multimap")
    certs = []
    for i, G in enumerate(chain):
        cert = is_vietoris_like_multimap(G)
        if not cert.ok:
            raise HypothesisFailed(
                f"link {i} is not a Vietoris-like multimap: {cert.as_dict()}", index=i
            )
        certs.append(f"G{i} Vietoris-like multimap")
    induced = induced_multimap_homology(chain[0])
    for G in chain[1:]:
        induced = induced.then(induced_multimap_homology(G))
    lam = lefschetz_number(induced)
    F = chain[0]
    for G in chain[1:]:
        F = compose_multimaps(F, G)
    witnesses = [x for x in F.source.elements if x in F(x)]
    return _finish(lam, certs, witnesses, details={"composition": repr(F)})


def classical_lefschetz(f):
    """Lambda(f) for a continuous endomorphism equals chi(Fix(f))."""
    require_continuous(f)
    if f.source != f.target:
        raise ValueError("classical Lefschetz needs an endomorphism")
    lam = lefschetz_number(induced_map_of_poset_map(f))
    fix = f.fixed_points()
    chi_fix = f.source.subposet(fix).euler_characteristic() if fix else 0
    report = _finish(lam, ["f continuous endomorphism"], fix)
    report.chi_fix = chi_fix
    report.conclusion_verified = report.conclusion_verified and lam == chi_fix
    return report


def corollary_multimap_coincidence(f, F, mode):
    """Coincidence f(x) in F(x) between a map and a multimap.

    mode 1: f Vietoris-like, Lambda(F_* f_*^-1).
    mode 2: second graph projection of F Vietoris-like,
            Lambda(f_* F_*^-1) with F_*^-1 = p_* q_*^-1.
    """
    require_continuous(f)
    gs = graph(F)
    if mode == 1:
        cert = is_vietoris_like_map(f)
        if not cert.ok:
            raise HypothesisFailed(f"f is not Vietoris-like: {cert.as_dict()}")
        lam = lefschetz_number(
            invert(induced_map_of_poset_map(f)).then(induced_multimap_homology(F, gs))
        )
        certs = ["f Vietoris-like"]
    elif mode == 2:
        cert = is_vietoris_like_map(gs.q)
        if not cert.ok:
            raise HypothesisFailed(
                f"second projection is not Vietoris-like: {cert.as_dict()}"
            )
        p_star = induced_map_of_poset_map(gs.p)
        q_star = induced_map_of_poset_map(gs.q)
        F_inv = invert(q_star).then(p_star)  # F_*^-1 = p_* q_*^-1
        lam = lefschetz_number(F_inv.then(induced_map_of_poset_map(f)))
        certs = ["q Vietoris-like"]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    witnesses = [x for x in f.source.elements if f(x) in F(x)]
    return _finish(lam, certs, witnesses)


def _find_selector(G, vietoris_required, budget=None):
    for g in enumerate_selectors(G, budget=budget):
        if not vietoris_required or is_vietoris_like_map(g).ok:
            return g
    kind = "Vietoris-like selector" if vietoris_required else "continuous selector"
    raise NoSelector(f"no {kind} exists")


def theorem_310(F, G, case, budget=None):
    """Three-case coincidence theorem for two multimaps.

    case 1: F Vietoris-like multimap, G with a Vietoris-like selector g,
            Lambda(F_* g_*^-1).
    case 2: second projection of Gamma(F) Vietoris-like, G with any
            selector g, Lambda(g_* F_*^-1).
    case 3: G with a Vietoris-like selector g, F with any selector f,
            Lambda(f_* g_*^-1).
    """
    if F.source != G.source or F.target != G.target:
        raise ValueError("multimaps must share source and target")
    gs = graph(F)
    if case == 1:
        cert = is_vietoris_like_map(gs.p)
        if not cert.ok:
            raise HypothesisFailed(f"F is not a Vietoris-like multimap: {cert.as_dict()}")
        g = _find_selector(G, vietoris_required=True, budget=budget)
        lam = lefschetz_number(
            invert(induced_map_of_poset_map(g)).then(induced_multimap_homology(F, gs))
        )
        certs = ["F Vietoris-like multimap", "G has Vietoris-like selector"]
    elif case == 2:
        cert = is_vietoris_like_map(gs.q)
        if not cert.ok:
            raise HypothesisFailed(
                f"second projection of F is not Vietoris-like: {cert.as_dict()}"
            )
        g = _find_selector(G, vietoris_required=False, budget=budget)
        p_star = induced_map_of_poset_map(gs.p)
        q_star = induced_map_of_poset_map(gs.q)
        F_inv = invert(q_star).then(p_star)
        lam = lefschetz_number(F_inv.then(induced_map_of_poset_map(g)))
        certs = ["q of Gamma(F) Vietoris-like", "G has selector"]
    elif case == 3:
        g = _find_selector(G, vietoris_required=True, budget=budget)
        f = _find_selector(F, vietoris_required=False, budget=budget)
        lam = lefschetz_number(
            invert(induced_map_of_poset_map(g)).then(induced_map_of_poset_map(f))
        )
        certs = ["G has Vietoris-like selector", "F has selector"]
    else:
        raise ValueError(f"unknown case {case!r}")
    witnesses = multimap_coincidence_points(F, G)
    return _finish(lam, certs, witnesses)
