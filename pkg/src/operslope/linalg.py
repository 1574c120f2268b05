"""Exact linear algebra over the rationals.

Matrices are lists of rows of Fractions.  Everything here is dense and
O(n^3)-ish, which is fine for the adjoint representations we handle
(dimension at most a few hundred).
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]
Vector = list[Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def zeros(rows: int, cols: int) -> Matrix:
    return [[ZERO] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = ONE
    return m


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    out = zeros(n, m)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for j in range(k):
            aij = ai[j]
            if aij:
                bj = b[j]
                for c in range(m):
                    if bj[c]:
                        oi[c] += aij * bj[c]
    return out


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return [sum((row[j] * v[j] for j in range(len(v)) if v[j]), ZERO) for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), ZERO)


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (form, pivot column indices)."""
    m = [row[:] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def kernel_basis(a: Matrix) -> list[Vector]:
    """Basis of the right kernel of a."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if rows == 0:
        return [[ONE if i == j else ZERO for i in range(cols)] for j in range(cols)]
    form, pivots = rref(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * cols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -form[r][fc]
        basis.append(v)
    return basis


def rank(a: Matrix) -> int:
    return len(rref(a)[1])


def solve(a: Matrix, b: Vector) -> Vector:
    """Solve a x = b for square invertible a."""
    n = len(a)
    aug = [a[i][:] + [b[i]] for i in range(n)]
    form, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("singular matrix")
    return [form[i][n] for i in range(n)]


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [a[i][:] + identity(n)[i] for i in range(n)]
    form, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in form]


def char_poly(a: Matrix) -> list[Fraction]:
    """Characteristic polynomial det(T*I - a) via Faddeev-LeVerrier.

    Returns coefficients [c_0, ..., c_n] with c_n = 1, i.e.
    p(T) = sum c_k T^k.
    """
    n = len(a)
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    m = identity(n)
    for k in range(1, n + 1):
        m = mat_mul(a, m)
        c = -trace(m) / k
        coeffs[n - k] = c
        for i in range(n):
            m[i][i] += c
    return coeffs


def is_nilpotent_matrix(a: Matrix) -> bool:
    """True iff the characteristic polynomial is T^n."""
    return all(c == 0 for c in char_poly(a)[:-1])
