"""Exact linear algebra over Python integers and ``fractions.Fraction``.

Matrices are tuples of row tuples and vectors are plain tuples, so every
value is immutable and hashable.  Nothing in here ever touches a float.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotUnimodularError, ShapeError

Matrix = tuple  # tuple[tuple[int | Fraction, ...], ...]
Vector = tuple


def as_matrix(rows: Iterable[Iterable]) -> Matrix:
    m = tuple(tuple(r) for r in rows)
    if not m or not m[0]:
        raise ShapeError("matrix must have at least one row and one column")
    width = len(m[0])
    if any(len(r) != width for r in m):
        raise ShapeError("ragged matrix")
    return m


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), len(m[0])


def is_square(m: Matrix) -> bool:
    return len(m) == len(m[0])


def _require_square(m: Matrix) -> int:
    if not is_square(m):
        raise ShapeError(f"expected a square matrix, got {len(m)}x{len(m[0])}")
    return len(m)


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(rows: int, cols: int) -> Matrix:
    return tuple((0,) * cols for _ in range(rows))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    if shape(a) != shape(b):
        raise ShapeError("shape mismatch in addition")
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    if shape(a) != shape(b):
        raise ShapeError("shape mismatch in subtraction")
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, m: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in r) for r in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise ShapeError(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0])}")
    cols = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def mat_vec(m: Matrix, v: Sequence) -> Vector:
    if len(m[0]) != len(v):
        raise ShapeError("matrix/vector dimension mismatch")
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ShapeError("vector length mismatch")
    return sum(x * y for x, y in zip(u, v))


def bilinear(gram: Matrix, u: Sequence, v: Sequence):
    """``u^T gram v``."""
    return dot(u, mat_vec(gram, v))


def is_symmetric(m: Matrix) -> bool:
    return is_square(m) and all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(i))


def char_poly(m: Matrix) -> tuple:
    """Coefficients of ``det(xI - m)`` in ascending degree order.

    Berkowitz's algorithm: division free, so an integer matrix gives integer
    coefficients with no rounding and no intermediate fractions.
    """
    n = _require_square(m)
    poly = [1]  # descending coefficients of the current leading minor
    for r in range(n):
        a_rr = m[r][r]
        row = [m[r][j] for j in range(r)]
        col = [m[i][r] for i in range(r)]
        sub = [list(m[i][:r]) for i in range(r)]
        # Toeplitz column: 1, -a_rr, -row.col, -row.sub.col, ..., -row.sub^(r-1).col
        t = [1, -a_rr]
        vec = col
        for _ in range(r):
            t.append(-sum(x * y for x, y in zip(row, vec)))
            vec = [sum(x * y for x, y in zip(srow, vec)) for srow in sub]
        new = [0] * (r + 2)
        for i in range(r + 2):
            acc = 0
            for j in range(min(i, r) + 1):
                acc += t[i - j] * poly[j]
            new[i] = acc
        poly = new
    return tuple(reversed(poly))


def det(m: Matrix):
    n = _require_square(m)
    cp = char_poly(m)
    return cp[0] if n % 2 == 0 else -cp[0]


def _frac_rows(m: Matrix) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in m]


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form over the rationals and the pivot columns."""
    a = _frac_rows(m)
    rows, cols = len(a), len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        lead = a[r][c]
        a[r] = [x / lead for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in a), tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of the right kernel, echelon-normalized.

    The basis vectors are the rows of a reduced echelon matrix, so each one
    has leading coordinate 1 and the pivot positions increase strictly.
    """
    red, pivots = rref(m)
    cols = len(m[0])
    free = [c for c in range(cols) if c not in pivots]
    raw = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        raw.append(v)
    if not raw:
        return []
    basis, _ = rref(raw)
    return [tuple(row) for row in basis]


def signature(gram: Matrix) -> tuple[int, int, int]:
    """(n_plus, n_minus, n_zero) by symmetric congruence reduction over Q."""
    if not is_symmetric(gram):
        raise ShapeError("signature needs a symmetric matrix")
    s = _frac_rows(gram)
    n = len(s)
    alive = list(range(n))
    plus = minus = 0
    while alive:
        piv = next((i for i in alive if s[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in alive for j in alive if i != j and s[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # congruence by e_i -> e_i + e_j puts 2*s[i][j] on the diagonal
            for k in range(n):
                s[i][k] += s[j][k]
            for k in range(n):
                s[k][i] += s[k][j]
            piv = i
        d = s[piv][piv]
        if d > 0:
            plus += 1
        else:
            minus += 1
        alive.remove(piv)
        for j in alive:
            f = s[j][piv] / d
            if f:
                for k in alive:
                    s[j][k] -= f * s[piv][k]
        for j in alive:
            s[j][piv] = s[piv][j] = Fraction(0)
    return plus, minus, n - plus - minus


def inverse(m: Matrix) -> Matrix:
    """Rational inverse; raises ``ShapeError`` for singular input."""
    n = _require_square(m)
    aug = [list(row) + list(e) for row, e in zip(m, identity(n))]
    red, pivots = rref(aug)
    if pivots[:n] != tuple(range(n)):
        raise ShapeError("matrix is singular")
    return tuple(tuple(row[n:]) for row in red)


def integer_inverse(m: Matrix) -> Matrix:
    d = det(m)
    if d not in (1, -1):
        raise NotUnimodularError(f"determinant {d} is not a unit in Z")
    inv = inverse(m)
    return tuple(tuple(int(x) for x in row) for row in inv)


def mat_pow(m: Matrix, k: int) -> Matrix:
    n = _require_square(m)
    if k < 0:
        m = integer_inverse(m)
        k = -k
    result = identity(n)
    base = m
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def normalize_int(v: Sequence) -> Vector:
    """Fraction/int vector to the integer vector with gcd 1 on the same line.

    The sign of the input is kept; sign conventions belong to the caller.
    """
    from math import gcd, lcm

    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ShapeError("zero vector has no primitive representative")
    return tuple(x // g for x in ints)
