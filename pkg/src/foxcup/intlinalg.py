"""Exact integer and rational linear algebra.

Matrices are plain lists of rows.  Integer entries are Python ints and
rational entries are :class:`fractions.Fraction`, so nothing ever rounds.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

IntMatrix = list[list[int]]
RatMatrix = list[list[Fraction]]


def identity(k: int) -> IntMatrix:
    return [[int(i == j) for j in range(k)] for i in range(k)]


def zeros(rows: int, cols: int) -> IntMatrix:
    return [[0] * cols for _ in range(rows)]


def copy(M: Sequence[Sequence]) -> list[list]:
    return [list(r) for r in M]


def shape(M: Sequence[Sequence], cols: int | None = None) -> tuple[int, int]:
    if M:
        return len(M), len(M[0])
    return 0, cols or 0


def matmul(A: Sequence[Sequence], B: Sequence[Sequence], inner: int | None = None) -> list[list]:
    if not A:
        return []
    cols = len(B[0]) if B else 0
    return [[sum(a * B[k][j] for k, a in enumerate(row) if a) for j in range(cols)] for row in A]


def transpose(M: Sequence[Sequence], cols: int = 0) -> list[list]:
    if not M:
        return [[] for _ in range(cols)]
    return [list(c) for c in zip(*M)]


def determinant(M: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    A = copy(M)
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k]:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def is_hermite(H: Sequence[Sequence[int]]) -> bool:
    last = -1
    seen_zero = False
    for i, row in enumerate(H):
        piv = next((j for j, x in enumerate(row) if x), None)
        if piv is None:
            seen_zero = True
            continue
        if seen_zero or piv <= last or row[piv] <= 0:
            return False
        if any(not 0 <= H[r][piv] < row[piv] for r in range(i)):
            return False
        last = piv
    return True


def hnf_with_transform(T: Sequence[Sequence[int]], cols: int | None = None) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form ``H`` and unimodular ``C`` with ``C @ T == H``.

    Pivots are positive and strictly move right, entries above a pivot lie
    in ``[0, pivot)``, zero rows come last.
    """
    H = copy(T)
    m = len(H)
    n = len(H[0]) if H else (cols or 0)
    C = identity(m)

    def swap(a, b):
        H[a], H[b] = H[b], H[a]
        C[a], C[b] = C[b], C[a]

    def addmul(dst, src, q):
        # row[dst] -= q * row[src]
        if q:
            H[dst] = [x - q * y for x, y in zip(H[dst], H[src])]
            C[dst] = [x - q * y for x, y in zip(C[dst], C[src])]

    r = 0
    for j in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i][j]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(H[i][j]))
            swap(r, p)
            done = True
            for i in range(r + 1, m):
                if H[i][j]:
                    addmul(i, r, H[i][j] // H[r][j])
                    if H[i][j]:
                        done = False
            if done:
                break
        if not H[r][j]:
            continue
        if H[r][j] < 0:
            H[r] = [-x for x in H[r]]
            C[r] = [-x for x in C[r]]
        for i in range(r):
            addmul(i, r, H[i][j] // H[r][j])
        r += 1
    return H, C


def _smith_diagonal(M: Sequence[Sequence[int]]) -> list[int]:
    A = copy(M)
    m = len(A)
    n = len(A[0]) if A else 0
    diag = []
    t = 0
    while t < min(m, n):
        entries = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        A[t], A[pi] = A[pi], A[t]
        for row in A:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                if A[i][t]:
                    clean = False
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    clean = False
            if clean:
                # pivot must divide the rest of the block
                bad = next(
                    ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                A[t] = [x + y for x, y in zip(A[t], A[bad[0]])]
                continue
            # move the smallest remaining entry of row/column t to the pivot
            cand = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
            cand += [(abs(A[t][j]), t, j) for j in range(t, n) if A[t][j]]
            _, pi, pj = min(cand)
            A[t], A[pi] = A[pi], A[t]
            for row in A:
                row[t], row[pj] = row[pj], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def snf_invariant_factors(M: Sequence[Sequence[int]]) -> list[int]:
    """Invariant factors d_1 | d_2 | ... | d_r of an integer matrix (r = rank)."""
    d = _smith_diagonal(M)
    for k, x in enumerate(d):
        if k and x % d[k - 1]:
            raise AssertionError(f"Smith diagonal not a divisor chain: {d}")
    return d


def rref(M: Sequence[Sequence], cols: int | None = None) -> tuple[RatMatrix, list[int]]:
    """Reduced row echelon form over Q and the pivot columns."""
    A = [[Fraction(x) for x in row] for row in M]
    m = len(A)
    n = len(A[0]) if A else (cols or 0)
    pivots = []
    r = 0
    for j in range(n):
        p = next((i for i in range(r, m) if A[i][j]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][j]
        A[r] = [x * inv for x in A[r]]
        for i in range(m):
            if i != r and A[i][j]:
                f = A[i][j]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(j)
        r += 1
        if r == m:
            break
    return A, pivots


def rational_rank(M: Sequence[Sequence]) -> int:
    return len(rref(M)[1])


def null_space_basis(M: Sequence[Sequence], cols: int | None = None) -> RatMatrix:
    """RREF basis (as rows) of ``{v : M v = 0}`` over Q.

    ``cols`` is needed only when ``M`` has no rows.
    """
    n = len(M[0]) if M else (cols or 0)
    R, pivots = rref(M, n)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -R[r][f]
        basis.append(v)
    return rref(basis, n)[0] if basis else []


def render_matrix(M: Sequence[Sequence]) -> str:
    if not M:
        return "(empty)"
    cells = [[str(x) for x in row] for row in M]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)
