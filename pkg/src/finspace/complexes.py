"""Order complexes, face posets, barycentric subdivision and chain maps.

The two functors at work: K sends a poset to the simplicial complex of
its chains, X sends a complex to the poset of its simplices under
inclusion.  Composing them either way gives barycentric subdivision.
"""

from . import intmat
from .errors import NotContinuous
from .poset import FinitePoset, PosetMap, require_continuous


class SimplicialComplex:
    """Abstract simplicial complex with a fixed global vertex order.

    Simplices are stored per dimension as tuples sorted by vertex position;
    that sorting is the orientation convention for all chain-level algebra.
    """

    __slots__ = ("vertices", "_vindex", "simplices", "_sindex")

    def __init__(self, vertices, simplices_by_dim):
        self.vertices = tuple(vertices)
        self._vindex = {v: i for i, v in enumerate(self.vertices)}
        if len(self._vindex) != len(self.vertices):
            raise ValueError("duplicate vertices")
        sims = []
        for dim, sl in enumerate(simplices_by_dim):
            canon = []
            seen = set()
            for s in sl:
                t = tuple(sorted(s, key=self._vindex.__getitem__))
                if len(set(t)) != dim + 1:
                    raise ValueError(f"bad {dim}-simplex {s!r}")
                if t in seen:
                    raise ValueError(f"duplicate simplex {t!r}")
                seen.add(t)
                canon.append(t)
            sims.append(tuple(canon))
        # closure under faces
        self.simplices = tuple(sims)
        self._sindex = [
            {s: i for i, s in enumerate(level)} for level in self.simplices
        ]
        for dim in range(1, len(self.simplices)):
            for s in self.simplices[dim]:
                for k in range(dim + 1):
                    face = s[:k] + s[k + 1:]
                    if face not in self._sindex[dim - 1]:
                        raise ValueError(f"missing face {face!r} of {s!r}")

    @classmethod
    def from_simplices(cls, simplices, vertices=None):
        """Close the given simplices under faces and build the complex."""
        closed = set()
        for s in simplices:
            s = tuple(s)
            for mask in range(1, 1 << len(s)):
                face = tuple(s[i] for i in range(len(s)) if mask >> i & 1)
                closed.add(frozenset(face))
        if vertices is None:
            vs = sorted({v for f in closed for v in f}, key=repr)
        else:
            vs = list(vertices)
        by_dim = []
        maxd = max((len(f) for f in closed), default=0)
        order = {v: i for i, v in enumerate(vs)}
        for d in range(maxd):
            level = sorted(
                (tuple(sorted(f, key=order.__getitem__)) for f in closed if len(f) == d + 1),
            )
            by_dim.append(level)
        return cls(vs, by_dim)

    @property
    def dimension(self):
        return len(self.simplices) - 1

    def n_simplices(self, dim):
        if 0 <= dim < len(self.simplices):
            return len(self.simplices[dim])
        return 0

    def all_simplices(self):
        return [s for level in self.simplices for s in level]

    def simplex_index(self, s):
        return self._sindex[len(s) - 1][s]

    def euler_characteristic(self):
        return sum(
            (-1) ** d * len(level) for d, level in enumerate(self.simplices)
        )

    def boundary_matrix(self, dim):
        """The matrix of the boundary operator C_dim -> C_{dim-1}.

        Columns index dim-simplices; the face omitting vertex k carries
        sign (-1)^k.  dim = 0 gives a matrix with zero rows.
        """
        cols = self.n_simplices(dim)
        rows = self.n_simplices(dim - 1) if dim > 0 else 0
        M = intmat.zeros(rows, cols)
        if dim <= 0 or dim >= len(self.simplices):
            return M
        for j, s in enumerate(self.simplices[dim]):
            for k in range(dim + 1):
                face = s[:k] + s[k + 1:]
                M[self._sindex[dim - 1][face]][j] += (-1) ** k
        return M

    def export_text(self):
        """One simplex per line, vertices space-separated, for cross-checks."""
        lines = []
        for level in self.simplices:
            for s in level:
                lines.append(" ".join(str(v) for v in s))
        return "\n".join(lines) + "\n"

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return (
            self.vertices == other.vertices and self.simplices == other.simplices
        )

    def __hash__(self):
        return hash((self.vertices, self.simplices))

    def __repr__(self):
        counts = [len(level) for level in self.simplices]
        return f"SimplicialComplex(f-vector {counts})"


class SimplicialMap:
    """Vertex assignment whose image of every simplex spans a simplex."""

    __slots__ = ("source", "target", "vertex_assignment")

    def __init__(self, source, target, vertex_assignment):
        self.source = source
        self.target = target
        self.vertex_assignment = dict(vertex_assignment)
        for v in source.vertices:
            if v not in self.vertex_assignment:
                raise ValueError(f"no image for vertex {v!r}")
        for level in source.simplices:
            for s in level:
                self.image_simplex(s)  # raises if not a simplex

    def __call__(self, v):
        return self.vertex_assignment[v]

    def image_simplex(self, s):
        """Sorted deduplicated image tuple; always a simplex of the target."""
        img = tuple(
            sorted(
                {self.vertex_assignment[v] for v in s},
                key=self.target._vindex.__getitem__,
            )
        )
        if img not in self.target._sindex[len(img) - 1]:
            raise ValueError(f"image of {s!r} is not a simplex of the target")
        return img

    def then(self, g):
        if g.source != self.target:
            raise ValueError("maps are not composable")
        return SimplicialMap(
            self.source,
            g.target,
            {v: g(self(v)) for v in self.source.vertices},
        )


def order_complex(X):
    """K(X): the complex whose i-simplices are the i-chains of X."""
    by_dim = {}
    for c in X.all_chains():
        by_dim.setdefault(len(c) - 1, []).append(c)
    maxd = max(by_dim, default=-1)
    levels = [by_dim.get(d, []) for d in range(maxd + 1)]
    return SimplicialComplex(X.elements, levels)


def face_poset(K):
    """X(K): simplices of K ordered by face inclusion."""
    els = K.all_simplices()
    rels = []
    for dim in range(1, len(K.simplices)):
        for s in K.simplices[dim]:
            for k in range(dim + 1):
                rels.append((s[:k] + s[k + 1:], s))
    from .poset import build_poset

    return build_poset(els, rels)


def barycentric_subdivision_space(X):
    """X' = X(K(X)): elements are the nonempty chains of X under inclusion."""
    return face_poset(order_complex(X))


def barycentric_subdivision_complex(K):
    """K' = K(X(K)): the barycentric subdivision of the complex."""
    return order_complex(face_poset(K))


def induced_simplicial_map(f):
    """K(f): sends the chain v0<...<vn to the chain of images, deduplicated."""
    require_continuous(f)
    return SimplicialMap(
        order_complex(f.source), order_complex(f.target), dict(f.assignment)
    )


def _perm_sign(seq):
    """Parity sign of the permutation sorting seq (seq has distinct keys)."""
    sign = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[j] < seq[i]:
                sign = -sign
    return sign


def chain_map_of(sm):
    """Per-dimension integer matrices of the chain map of a simplicial map.

    A simplex whose image degenerates maps to zero; otherwise the entry is
    the sign of the permutation that sorts the image vertices.
    """
    src, dst = sm.source, sm.target
    dims = len(src.simplices)
    mats = []
    for d in range(dims):
        rows = dst.n_simplices(d)
        cols = src.n_simplices(d)
        M = intmat.zeros(rows, cols)
        for j, s in enumerate(src.simplices[d]):
            images = [sm(v) for v in s]
            if len(set(images)) != len(images):
                continue  # degenerate: zero column
            keys = [dst._vindex[v] for v in images]
            sign = _perm_sign(keys)
            t = tuple(v for _, v in sorted(zip(keys, images)))
            M[dst.simplex_index(t)][j] = sign
        mats.append(M)
    return mats
