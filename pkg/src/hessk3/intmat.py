"""Exact integer / rational matrix algorithms on plain lists of lists."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list  # list[list[int | Fraction]]


def shape(M) -> tuple[int, int]:
    return len(M), (len(M[0]) if M else 0)


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(n: int, m: int | None = None) -> Matrix:
    return [[0] * (n if m is None else m) for _ in range(n)]


def transpose(M) -> Matrix:
    return [list(col) for col in zip(*M)]


def matmul(A, B) -> Matrix:
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A, v) -> list:
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def bilinear(G, u, v):
    return dot(u, matvec(G, v))


def block_diag(*blocks) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = zeros(n)
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return out


def submatrix(M, rows: Sequence[int], cols: Sequence[int] | None = None) -> Matrix:
    cols = rows if cols is None else cols
    return [[M[i][j] for j in cols] for i in rows]


def is_symmetric(M) -> bool:
    return all(M[i][j] == M[j][i] for i in range(len(M)) for j in range(i))


def det(M) -> int | Fraction:
    """Bareiss fraction-free elimination; exact for integer input."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = A[i][j] * A[k][k] - A[i][k] * A[k][j]
                A[i][j] = num // prev if isinstance(num, int) and isinstance(prev, int) else num / prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def row_echelon(M) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form over Q and pivot columns."""
    A = [[Fraction(x) for x in r] for r in M]
    rows, cols = shape(A)
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A, pivots


def rank(M) -> int:
    if not M:
        return 0
    return len(row_echelon(M)[1])


def inverse(M) -> Matrix:
    n = len(M)
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(M)]
    R, piv = row_echelon(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R]


def solve(M, b) -> list:
    return matvec(inverse(M), b)


def signature(G) -> tuple[int, int]:
    """(positive, negative) inertia of a symmetric rational matrix (LDL^T over Q)."""
    A = [[Fraction(x) for x in r] for r in G]
    n = len(A)
    pos = neg = 0
    i = 0
    while i < n:
        # find a nonzero diagonal pivot, else create one from an off-diagonal entry
        k = next((j for j in range(i, n) if A[j][j] != 0), None)
        if k is None:
            k2 = next(((a, b) for a in range(i, n) for b in range(a + 1, n) if A[a][b] != 0), None)
            if k2 is None:
                break
            a, b = k2
            # x_a <- x_a + x_b  gives diagonal 2*A[a][b] + A[b][b] = 2*A[a][b]
            for j in range(n):
                A[a][j] += A[b][j]
            for j in range(n):
                A[j][a] += A[j][b]
            k = a
        A[i], A[k] = A[k], A[i]
        for row in A:
            row[i], row[k] = row[k], row[i]
        d = A[i][i]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for r in range(i + 1, n):
            f = A[r][i] / d
            if f:
                for c in range(i, n):
                    A[r][c] -= f * A[i][c]
        for c in range(i + 1, n):
            A[i][c] = Fraction(0)
        for r in range(i + 1, n):
            A[r][i] = Fraction(0)
        i += 1
    return pos, neg


def _swap_rows(M, i, j):
    M[i], M[j] = M[j], M[i]


def _swap_cols(M, i, j):
    for row in M:
        row[i], row[j] = row[j], row[i]


def _add_row(M, src, dst, f):
    """row dst += f * row src"""
    if f:
        M[dst] = [a + f * b for a, b in zip(M[dst], M[src])]


def _add_col(M, src, dst, f):
    if f:
        for row in M:
            row[dst] += f * row[src]


def smith_normal_form(M) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, S, V)`` with ``U*M*V == S`` diagonal, ``d_i | d_{i+1}``, U and V unimodular."""
    S = [[int(x) for x in r] for r in M]
    n, m = shape(S)
    U = identity(n)
    V = identity(m)
    t = 0
    while t < min(n, m):
        # pivot: smallest nonzero |entry| in the remaining block
        entries = [(abs(S[i][j]), i, j) for i in range(t, n) for j in range(t, m) if S[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        _swap_rows(S, t, pi)
        _swap_rows(U, t, pi)
        _swap_cols(S, t, pj)
        _swap_cols(V, t, pj)
        while True:
            done = True
            for i in range(t + 1, n):
                if S[i][t]:
                    q = S[i][t] // S[t][t]
                    _add_row(S, t, i, -q)
                    _add_row(U, t, i, -q)
                    if S[i][t]:
                        _swap_rows(S, t, i)
                        _swap_rows(U, t, i)
                        done = False
            for j in range(t + 1, m):
                if S[t][j]:
                    q = S[t][j] // S[t][t]
                    _add_col(S, t, j, -q)
                    _add_col(V, t, j, -q)
                    if S[t][j]:
                        _swap_cols(S, t, j)
                        _swap_cols(V, t, j)
                        done = False
            if not done:
                continue
            # divisibility: pivot must divide the whole remaining block
            bad = next(((i, j) for i in range(t + 1, n) for j in range(t + 1, m)
                        if S[i][j] % S[t][t]), None)
            if bad is None:
                break
            _add_row(S, bad[0], t, 1)
            _add_row(U, bad[0], t, 1)
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return U, S, V


def invariant_factors(M) -> list[int]:
    _, S, _ = smith_normal_form(M)
    return [S[i][i] for i in range(min(shape(S))) if S[i][i]]


def integer_kernel(M) -> Matrix:
    """Basis (as rows) of the integer vectors v with ``M v = 0``."""
    U, S, V = smith_normal_form(M)
    n, m = shape(S)
    r = sum(1 for i in range(min(n, m)) if S[i][i])
    Vt = transpose(V)
    return [Vt[j] for j in range(r, m)]


def is_unimodular(M) -> bool:
    return abs(det(M)) == 1
