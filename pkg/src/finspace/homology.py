"""Exact integer simplicial homology and induced maps on free parts.

Everything runs over the integers through the Smith normal form, so
torsion is computed exactly.  Induced maps and Lefschetz numbers act on
the torsion-free part of homology, in the deterministic cycle basis
produced by the decomposition itself.
"""

import functools

from . import intmat
from .complexes import chain_map_of, induced_simplicial_map, order_complex
from .errors import (
    BasisSolveFailure,
    EmptySubspace,
    NotAChainMap,
    NotInvertible,
    ProfileMismatch,
)
from .intmat import smith_normal_form

__all__ = [
    "HomologyProfile",
    "InducedMap",
    "smith_normal_form",
    "homology",
    "poset_homology",
    "is_acyclic",
    "induced_on_homology",
    "induced_map_of_poset_map",
    "lefschetz_number",
    "invert",
]


class HomologyProfile:
    """Per-dimension Betti numbers, torsion and a free-part cycle basis.

    For each dimension i the profile keeps:
      * betti[i] and torsion[i] (invariant factors > 1, divisibility chain)
      * free_basis[i]: an n_i x betti[i] matrix of cycle representatives
      * a projection matrix sending any cycle to its free-part coordinates
    which is what induced maps are computed from.
    """

    def __init__(self, complex_, betti, torsion, free_basis, free_proj, boundaries):
        self.complex = complex_
        self.betti = betti
        self.torsion = torsion
        self.free_basis = free_basis
        self._free_proj = free_proj
        self.boundaries = boundaries

    def betti_at(self, dim):
        return self.betti[dim] if 0 <= dim < len(self.betti) else 0

    def torsion_at(self, dim):
        return self.torsion[dim] if 0 <= dim < len(self.torsion) else []

    def class_of(self, dim, cycle):
        """Free-part coordinates of a cycle given in chain coordinates."""
        if dim >= len(self.betti):
            if any(cycle):
                raise BasisSolveFailure("nonzero chain above the top dimension")
            return []
        bd = self.boundaries[dim]
        if intmat.shape(bd)[0] and any(intmat.matvec(bd, cycle)):
            raise BasisSolveFailure("chain is not a cycle")
        return intmat.matvec(self._free_proj[dim], cycle)

    def is_acyclic(self):
        if not self.betti:
            return False
        return (
            self.betti[0] == 1
            and all(b == 0 for b in self.betti[1:])
            and all(not t for t in self.torsion)
        )

    def euler_characteristic(self):
        return sum((-1) ** i * b for i, b in enumerate(self.betti))

    def summary(self):
        return {
            "betti": list(self.betti),
            "torsion": [list(t) for t in self.torsion],
        }

    def same_shape(self, other):
        pad = lambda xs, n: list(xs) + [0] * (n - len(xs))
        n = max(len(self.betti), len(other.betti))
        return pad(self.betti, n) == pad(other.betti, n) and [
            list(t) for t in self.torsion
        ] + [[]] * (n - len(self.torsion)) == [list(t) for t in other.torsion] + [
            []
        ] * (n - len(other.torsion))

    def __repr__(self):
        return f"HomologyProfile(betti={self.betti}, torsion={self.torsion})"


def homology(K):
    """Integral homology of a simplicial complex, with free-basis data.

    For each i the kernel of the boundary is read off the Smith form of
    d_i (the trailing columns of V span it integrally); the image of
    d_{i+1} is expressed in that kernel basis and a second Smith form
    splits the quotient into free part and torsion.
    """
    dims = len(K.simplices)
    betti, torsion, free_basis, free_proj, boundaries = [], [], [], [], []
    if dims == 0:
        return HomologyProfile(K, [], [], [], [], [])

    bmats = [K.boundary_matrix(d) for d in range(dims + 1)]
    # Smith form of each boundary (d_i: C_i -> C_{i-1})
    sfs = [smith_normal_form(bmats[d], ncols=K.n_simplices(d)) for d in range(dims + 1)]

    for i in range(dims):
        n_i = K.n_simplices(i)
        sf = sfs[i]
        r = sf.rank
        z = n_i - r  # kernel rank
        # kernel basis: last z columns of V; coordinates via rows of Vinv
        Z = intmat.hstack_cols(sf.V, list(range(r, n_i)))
        Kproj = intmat.stack_rows(sf.Vinv, list(range(r, n_i)))
        # boundaries from above, in kernel coordinates
        A = intmat.matmul(Kproj, bmats[i + 1]) if K.n_simplices(i + 1) else intmat.zeros(z, 0)
        sfa = smith_normal_form(A, ncols=intmat.shape(A)[1])
        s = sfa.rank
        d = sfa.invariant_factors
        betti.append(z - s)
        torsion.append([x for x in d if x > 1])
        Fproj = intmat.matmul(
            intmat.stack_rows(sfa.U, list(range(s, z))), Kproj
        )
        B = intmat.matmul(Z, intmat.hstack_cols(sfa.Uinv, list(range(s, z))))
        free_basis.append(B)
        free_proj.append(Fproj)
        boundaries.append(bmats[i])
    return HomologyProfile(K, betti, torsion, free_basis, free_proj, boundaries)


@functools.lru_cache(maxsize=4096)
def poset_homology(X):
    """Homology of the order complex of a poset (cached; posets are immutable)."""
    return homology(order_complex(X))


def is_acyclic(X):
    """Whether a poset (or subposet) has the integral homology of a point.

    The Stong core is a deformation retract, so homology is computed on
    the core; a singleton core short-circuits to True.
    """
    if len(X) == 0:
        raise EmptySubspace("the empty subspace is not acyclic")
    core = X.core()
    if len(core) == 1:
        return True
    return poset_homology(core).is_acyclic()


class InducedMap:
    """Per-dimension integer matrices on free parts of homology."""

    def __init__(self, source_profile, target_profile, matrices):
        self.source = source_profile
        self.target = target_profile
        self.matrices = matrices

    def matrix_at(self, dim):
        if 0 <= dim < len(self.matrices):
            return self.matrices[dim]
        return intmat.zeros(self.target.betti_at(dim), self.source.betti_at(dim))

    def then(self, other):
        """Composition other o self."""
        n = max(len(self.matrices), len(other.matrices))
        mats = [
            intmat.matmul(other.matrix_at(d), self.matrix_at(d)) for d in range(n)
        ]
        return InducedMap(self.source, other.target, mats)

    def __repr__(self):
        return f"InducedMap({self.matrices})"


def identity_induced(profile):
    mats = [intmat.identity(b) for b in profile.betti]
    return InducedMap(profile, profile, mats)


def induced_on_homology(chain_matrices, src, dst):
    """Induced map on free homology from per-dimension chain-map matrices.

    Verifies the chain-map condition against both boundary sequences, then
    pushes every source free-basis cycle through and reads its class in
    the destination basis.
    """
    dims = max(len(src.betti), len(dst.betti))

    def cmat(d):
        rows = dst.complex.n_simplices(d)
        cols = src.complex.n_simplices(d)
        if d < len(chain_matrices):
            M = chain_matrices[d]
            if intmat.shape(M) != (rows, cols):
                # tolerate empty placeholders for missing dimensions
                if rows == 0 or cols == 0:
                    return intmat.zeros(rows, cols)
                raise NotAChainMap(
                    f"chain matrix in dimension {d} has shape {intmat.shape(M)}, "
                    f"expected {(rows, cols)}"
                )
            return M
        return intmat.zeros(rows, cols)

    for d in range(1, dims):
        ns = src.complex.n_simplices(d)
        nd1 = dst.complex.n_simplices(d - 1)
        if ns == 0 or nd1 == 0:
            continue
        if dst.complex.n_simplices(d):
            lhs = intmat.matmul(dst.complex.boundary_matrix(d), cmat(d))
        else:
            lhs = intmat.zeros(nd1, ns)  # chain map is forced zero here
        rhs = intmat.matmul(cmat(d - 1), src.complex.boundary_matrix(d))
        if not intmat.eq(lhs, rhs):
            raise NotAChainMap(f"boundary does not commute in dimension {d}")

    mats = []
    for d in range(dims):
        bs = src.betti_at(d)
        bt = dst.betti_at(d)
        M = intmat.zeros(bt, bs)
        if bs and d < len(src.free_basis):
            images = intmat.matmul(cmat(d), src.free_basis[d])
            for j in range(bs):
                col = [images[i][j] for i in range(len(images))]
                coords = dst.class_of(d, col) if bt else []
                for i in range(bt):
                    M[i][j] = coords[i]
        mats.append(M)
    return InducedMap(src, dst, mats)


def induced_map_of_poset_map(f):
    """f_* on free homology, computed through K(f)."""
    src = poset_homology(f.source)
    dst = poset_homology(f.target)
    cm = chain_map_of(induced_simplicial_map(f))
    return induced_on_homology(cm, src, dst)


def lefschetz_number(m):
    """Alternating sum of the traces of an induced endo-map."""
    if not m.source.same_shape(m.target):
        raise ProfileMismatch("Lefschetz number needs matching profiles")
    total = 0
    for d in range(len(m.source.betti)):
        M = m.matrix_at(d)
        r, c = intmat.shape(M)
        if r != c:
            raise ProfileMismatch(f"non-square matrix in dimension {d}")
        total += (-1) ** d * sum(M[i][i] for i in range(r))
    return total


def invert(m):
    """Exact inverse of an induced map that is unimodular in every dimension.

    Raises NotInvertible otherwise, which for certified Vietoris-like maps
    signals an inconsistency upstream.
    """
    dims = max(len(m.source.betti), len(m.target.betti))
    mats = []
    for d in range(dims):
        M = m.matrix_at(d)
        r, c = m.target.betti_at(d), m.source.betti_at(d)
        if r != c:
            raise NotInvertible(
                f"betti numbers differ in dimension {d} ({c} vs {r})", dimension=d
            )
        try:
            mats.append(intmat.unimodular_inverse(M))
        except NotInvertible as exc:
            raise NotInvertible(
                f"induced matrix not unimodular in dimension {d}", dimension=d
            ) from exc
    return InducedMap(m.target, m.source, mats)
