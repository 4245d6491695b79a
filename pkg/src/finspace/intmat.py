"""Exact integer matrix helpers and the Smith normal form.

Matrices are plain lists of lists of Python ints, so every computation is
arbitrary precision.  The sizes that show up here (boundary matrices of
order complexes of desk-sized posets) never justify anything fancier.
"""

from .errors import NotInvertible


def zeros(m, n):
    return [[0] * n for _ in range(m)]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def shape(M):
    return (len(M), len(M[0]) if M else 0)


def copy(M):
    return [row[:] for row in M]


def matmul(A, B):
    m, k = shape(A)
    k2, n = shape(B)
    if m == 0:
        return []
    assert k == k2 or k2 == 0 and all(len(r) == 0 for r in A), \
        f"shape mismatch {shape(A)} x {shape(B)}"
    if k == 0 or n == 0:
        return zeros(m, n)
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col) if a) for col in Bt] for row in A]


def matvec(A, v):
    return [sum(a * b for a, b in zip(row, v) if a) for row in A]


def transpose(M):
    m, n = shape(M)
    if m == 0:
        return zeros(n, 0)
    return [list(col) for col in zip(*M)]


def is_zero(M):
    return all(all(x == 0 for x in row) for row in M)


def eq(A, B):
    return shape(A) == shape(B) and all(ra == rb for ra, rb in zip(A, B))


def hstack_cols(M, cols):
    """Submatrix of the given columns."""
    return [[row[j] for j in cols] for row in M]


def stack_rows(M, rows):
    return [M[i][:] for i in rows]


class SmithForm:
    """Result of a Smith decomposition S = U * M * V.

    U and V are unimodular; Uinv and Vinv are their exact inverses.  The
    diagonal of S carries the invariant factors d1 | d2 | ... followed by
    zeros.
    """

    def __init__(self, S, U, V, Uinv, Vinv):
        self.S = S
        self.U = U
        self.V = V
        self.Uinv = Uinv
        self.Vinv = Vinv

    @property
    def rank(self):
        m, n = shape(self.S)
        return sum(1 for t in range(min(m, n)) if self.S[t][t] != 0)

    @property
    def invariant_factors(self):
        m, n = shape(self.S)
        return [self.S[t][t] for t in range(min(m, n)) if self.S[t][t] != 0]


def _row_swap(S, U, Ui, i, j):
    S[i], S[j] = S[j], S[i]
    U[i], U[j] = U[j], U[i]
    for r in Ui:
        r[i], r[j] = r[j], r[i]


def _col_swap(S, V, Vi, i, j):
    for r in S:
        r[i], r[j] = r[j], r[i]
    for r in V:
        r[i], r[j] = r[j], r[i]
    Vi[i], Vi[j] = Vi[j], Vi[i]


def _row_negate(S, U, Ui, i):
    S[i] = [-x for x in S[i]]
    U[i] = [-x for x in U[i]]
    for r in Ui:
        r[i] = -r[i]


def _row_addmul(S, U, Ui, i, j, k):
    # row i += k * row j
    S[i] = [a + k * b for a, b in zip(S[i], S[j])]
    U[i] = [a + k * b for a, b in zip(U[i], U[j])]
    for r in Ui:
        r[j] -= k * r[i]


def _col_addmul(S, V, Vi, j, i, k):
    # col j += k * col i
    for r in S:
        r[j] += k * r[i]
    for r in V:
        r[j] += k * r[i]
    Vi[i] = [a - k * b for a, b in zip(Vi[i], Vi[j])]


def smith_normal_form(M, ncols=None):
    """Diagonalize an integer matrix: returns SmithForm with S = U*M*V.

    Pivoting picks the smallest nonzero absolute value in the remaining
    block, which keeps entry growth tame at the scales we care about.
    `ncols` disambiguates the width of matrices with zero rows.
    """
    m, n = shape(M)
    if m == 0 and ncols is not None:
        n = ncols
    S = copy(M)
    U, Ui = identity(m), identity(m)
    V, Vi = identity(n), identity(n)

    t = 0
    while t < min(m, n):
        # locate smallest nonzero entry in S[t:, t:]
        pivot = None
        best = None
        for i in range(t, m):
            row = S[i]
            for j in range(t, n):
                x = row[j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    pivot = (i, j)
                    if best == 1:
                        break
            if best == 1:
                break
        if pivot is None:
            break
        i, j = pivot
        if i != t:
            _row_swap(S, U, Ui, t, i)
        if j != t:
            _col_swap(S, V, Vi, t, j)
        if S[t][t] < 0:
            _row_negate(S, U, Ui, t)

        # clear row and column t; remainders restart the elimination
        while True:
            dirty = False
            for i in range(t + 1, m):
                if S[i][t] != 0:
                    q = S[i][t] // S[t][t]
                    _row_addmul(S, U, Ui, i, t, -q)
                    if S[i][t] != 0:
                        _row_swap(S, U, Ui, t, i)
                        if S[t][t] < 0:
                            _row_negate(S, U, Ui, t)
                        dirty = True
            for j in range(t + 1, n):
                if S[t][j] != 0:
                    q = S[t][j] // S[t][t]
                    _col_addmul(S, V, Vi, j, t, -q)
                    if S[t][j] != 0:
                        _col_swap(S, V, Vi, t, j)
                        dirty = True
            if not dirty:
                break
        if S[t][t] < 0:
            _row_negate(S, U, Ui, t)

        # enforce the divisibility chain
        d = S[t][t]
        fix = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if S[i][j] % d != 0:
                    fix = i
                    break
            if fix is not None:
                break
        if fix is not None:
            _row_addmul(S, U, Ui, t, fix, 1)
            continue  # redo elimination at the same t
        t += 1

    return SmithForm(S, U, V, Ui, Vi)


def unimodular_inverse(M):
    """Exact inverse of a matrix that is invertible over the integers."""
    m, n = shape(M)
    if m != n:
        raise NotInvertible(f"matrix is {m}x{n}, not square")
    sf = smith_normal_form(M)
    if any(sf.S[i][i] not in (1, -1) for i in range(n)):
        raise NotInvertible("matrix is not unimodular")
    # S = U M V with S = I  =>  M^-1 = V U
    return matmul(sf.V, sf.U)
