"""Reference computations that share no code with the package internals."""
from fractions import Fraction
from itertools import combinations
from math import gcd

import sympy


def minors_gcd(M, k):
    rows, cols = len(M), len(M[0]) if M else 0
    g = 0
    for R in combinations(range(rows), k):
        for C in combinations(range(cols), k):
            g = gcd(g, int(sympy.Matrix([[M[i][j] for j in C] for i in R]).det()))
    return g


def invariant_factors_by_minors(M):
    """d_k = D_k / D_{k-1} with D_k the gcd of the k x k minors."""
    rows, cols = len(M), len(M[0]) if M else 0
    out, prev = [], 1
    for k in range(1, min(rows, cols) + 1):
        Dk = minors_gcd(M, k)
        if Dk == 0:
            break
        out.append(Dk // prev)
        prev = Dk
    return out


def sympy_rank(M):
    return sympy.Matrix(M).rank() if M and M[0] else 0


def fox_by_recursion(word, i):
    """Literal recursion d(l w) = d(l) + l d(w) over group-ring dicts (unreduced keys reduced at the end)."""
    def red(w):
        out = []
        for x in w:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        return tuple(out)

    def rec(w):
        if not w:
            return {}
        head, rest = w[0], w[1:]
        acc = {}
        if head == i:
            acc[()] = acc.get((), 0) + 1
        elif head == -i:
            acc[(head,)] = acc.get((head,), 0) - 1
        for u, c in rec(rest).items():
            key = red((head,) + u)
            acc[key] = acc.get(key, 0) + c
        return {k: v for k, v in acc.items() if v}

    return rec(tuple(word))


def random_unimodular(rng, k, steps=6):
    U = [[int(i == j) for j in range(k)] for i in range(k)]
    for _ in range(steps):
        if k < 2:
            if rng.random() < 0.5:
                U[0] = [-x for x in U[0]]
            continue
        a, b = rng.sample(range(k), 2)
        q = rng.randint(-2, 2)
        U[a] = [x + q * y for x, y in zip(U[a], U[b])]
        if rng.random() < 0.3:
            U[a], U[b] = U[b], U[a]
    return U


def random_invertible_rational(rng, k):
    while True:
        Q = [[Fraction(rng.randint(-3, 3)) for _ in range(k)] for _ in range(k)]
        if sympy.Matrix(Q).det() != 0:
            return Q


def cup_rank_cochain_level(P):
    """Rank of H^1 ^ H^1 -> H^2 computed on the original presentation.

    Cup cochains c_ij[k] = u_i^T E(r_k) u_j for a sympy null-space basis u of
    the Jacobian; the rank is taken modulo the coboundary image (columns of J).
    """
    n, m = P.n, len(P.relators)
    J = sympy.Matrix([[sum(1 if x == i else -1 for x in r if abs(x) == i) for i in range(1, n + 1)]
                      for r in P.relators]) if m else sympy.zeros(0, n)
    U = J.nullspace() if m else [sympy.eye(n)[:, i] for i in range(n)]
    b = len(U)
    mats = []
    for r in P.relators:
        E = sympy.zeros(n, n)
        counts = [0] * n
        for x in r:
            t = abs(x) - 1
            if x > 0:
                for s in range(n):
                    E[s, t] += counts[s]
                counts[t] += 1
            else:
                counts[t] -= 1
                for s in range(n):
                    E[s, t] -= counts[s]
        mats.append(E)
    cols = []
    for i, j in combinations(range(b), 2):
        cols.append([(U[i].T * E * U[j])[0, 0] for E in mats])
    if not cols or m == 0:
        return b, m - (n - b), 0
    cup = sympy.Matrix(cols).T
    rank_J = J.rank()
    return b, m - rank_J, J.row_join(cup).rank() - rank_J
