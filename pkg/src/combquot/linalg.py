"""Exact integer and rational linear algebra.

Matrices are tuples of integer row tuples.  Nothing in this module touches
floating point; rationals are :class:`fractions.Fraction`.

Hermite normal form convention: row style, ``U @ A = H`` with ``H`` in upper
row-echelon form, positive pivots, entries above each pivot reduced into
``[0, pivot)`` and zero rows at the bottom.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

Matrix = tuple[tuple[int, ...], ...]


class LinalgError(ValueError):
    pass


def as_matrix(rows: Iterable[Iterable[int]], ncols: int | None = None) -> Matrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    widths = {len(r) for r in m}
    if len(widths) > 1:
        raise LinalgError("ragged matrix rows")
    if not m and ncols is None:
        ncols = 0
    if ncols is not None and m and len(m[0]) != ncols:
        raise LinalgError(f"expected {ncols} columns, got {len(m[0])}")
    return m


def shape(A: Matrix, ncols: int = 0) -> tuple[int, int]:
    return (len(A), len(A[0]) if A else ncols)


def transpose(A: Sequence[Sequence[int]], ncols: int = 0) -> Matrix:
    if not A:
        return tuple(() for _ in range(ncols))
    return tuple(zip(*A))


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> tuple:
    Bt = list(zip(*B)) if B else []
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def matvec(A: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def kron(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    return tuple(
        tuple(a * b for a in arow for b in brow)
        for arow in A
        for brow in B
    )


def hstack(*blocks: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(x for blk in row for x in blk) for row in zip(*blocks))


def vstack(*blocks: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(r) for blk in blocks for r in blk)


def vector_gcd(v: Iterable[int]) -> int:
    return reduce(gcd, (abs(int(x)) for x in v), 0)


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its coordinates."""
    g = vector_gcd(v)
    if g == 0:
        raise LinalgError("primitive vector of the zero vector is undefined")
    return tuple(int(x) // g for x in v)


def primitive_rational(v: Sequence[Fraction | int]) -> tuple[int, ...]:
    """Scale a nonzero rational vector to the primitive integer vector on its ray."""
    den = 1
    for x in v:
        d = Fraction(x).denominator
        den = den * d // gcd(den, d)
    return primitive([int(Fraction(x) * den) for x in v])


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def hermite_normal_form(A: Sequence[Sequence[int]], ncols: int | None = None
                        ) -> tuple[Matrix, Matrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ A == H``.
    """
    H = [list(map(int, r)) for r in A]
    m = len(H)
    n = len(H[0]) if H else (ncols or 0)
    U = [[int(i == j) for j in range(m)] for i in range(m)]

    def combine(i, j, a, b, c, d):
        # rows (i, j) <- (a*row_i + b*row_j, c*row_i + d*row_j)
        for M in (H, U):
            ri, rj = M[i], M[j]
            M[i] = [a * x + b * y for x, y in zip(ri, rj)]
            M[j] = [c * x + d * y for x, y in zip(ri, rj)]

    r = 0
    for col in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            if H[i][col] == 0:
                continue
            a, b = H[r][col], H[i][col]
            g, x, y = _xgcd(a, b)
            combine(r, i, x, y, -b // g, a // g)
        if H[r][col] == 0:
            continue
        if H[r][col] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        p = H[r][col]
        for i in range(r):
            q = H[i][col] // p
            if q:
                H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                U[i] = [x - q * y for x, y in zip(U[i], U[r])]
        r += 1
    return tuple(map(tuple, H)), tuple(map(tuple, U))


def hnf(A: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    """Hermite normal form with zero rows removed (a canonical row-lattice basis)."""
    H, _ = hermite_normal_form(A, ncols)
    return tuple(r for r in H if any(r))


def rank(A: Sequence[Sequence]) -> int:
    rows = [[Fraction(x) for x in r] for r in A]
    if not rows:
        return 0
    n = len(rows[0])
    rk = 0
    for col in range(n):
        piv = next((i for i in range(rk, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        for i in range(rk + 1, len(rows)):
            if rows[i][col]:
                f = rows[i][col] / rows[rk][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rk])]
        rk += 1
        if rk == len(rows):
            break
    return rk


def determinant(A: Sequence[Sequence]) -> Fraction:
    rows = [[Fraction(x) for x in r] for r in A]
    n = len(rows)
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if rows[i][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        for i in range(col + 1, n):
            if rows[i][col]:
                f = rows[i][col] / rows[col][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[col])]
    return det


def inverse(A: Sequence[Sequence]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(A)
    M = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(A)]
    for col in range(n):
        piv = next((i for i in range(col, n) if M[i][col] != 0), None)
        if piv is None:
            raise LinalgError("singular matrix")
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [x / p for x in M[col]]
        for i in range(n):
            if i != col and M[i][col]:
                f = M[i][col]
                M[i] = [x - f * y for x, y in zip(M[i], M[col])]
    return tuple(tuple(r[n:]) for r in M)


def integer_inverse(U: Sequence[Sequence[int]]) -> Matrix:
    inv = inverse(U)
    if any(x.denominator != 1 for r in inv for x in r):
        raise LinalgError("matrix is not unimodular")
    return tuple(tuple(int(x) for x in r) for r in inv)


def is_unimodular(U: Sequence[Sequence[int]]) -> bool:
    return len(U) > 0 and all(len(r) == len(U) for r in U) and abs(determinant(U)) == 1


def integer_kernel(A: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    """Basis (as rows) of the saturated lattice ``{x in Z^n : A x = 0}``, in HNF."""
    n = len(A[0]) if A else (ncols or 0)
    if not A:
        return identity(n)
    H, U = hermite_normal_form(transpose(A))
    kernel = [U[i] for i in range(n) if not any(H[i])]
    if not kernel:
        return ()
    return hnf(kernel)


def transposed_gale_dual(weights: Sequence[Sequence[int]]) -> Matrix:
    """Saturated integer kernel basis of a weight matrix, as HNF-canonical rows."""
    mat = as_matrix(weights)
    if not mat:
        raise LinalgError("empty weight matrix")
    if rank(mat) != len(mat):
        raise LinalgError("weight matrix not of full rank")
    return integer_kernel(mat)


def same_row_lattice(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> bool:
    return hnf(A) == hnf(B)


def same_row_space(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> bool:
    """Equality of rational row spaces."""
    ra, rb = rank(A), rank(B)
    return ra == rb == rank(list(A) + list(B))


def smith_invariants(A: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Nonzero invariant factors of an integer matrix."""
    M = [list(map(int, r)) for r in A]
    out = []
    while M and M[0]:
        M = [r for r in M if any(r)]
        if not M:
            break
        cols = [j for j in range(len(M[0])) if any(r[j] for r in M)]
        M = [[r[j] for j in cols] for r in M]
        # bring the entry of least absolute value to (0, 0)
        while True:
            i0, j0 = min(((i, j) for i, r in enumerate(M) for j, x in enumerate(r) if x),
                         key=lambda ij: abs(M[ij[0]][ij[1]]))
            M[0], M[i0] = M[i0], M[0]
            for r in M:
                r[0], r[j0] = r[j0], r[0]
            p = M[0][0]
            dirty = False
            for i in range(1, len(M)):
                q = M[i][0] // p
                M[i] = [x - q * y for x, y in zip(M[i], M[0])]
                dirty |= M[i][0] != 0
            for j in range(1, len(M[0])):
                q = M[0][j] // p
                for r in M:
                    r[j] -= q * r[0]
                dirty |= M[0][j] != 0
            if dirty:
                continue
            bad = next(((i, j) for i in range(1, len(M)) for j in range(1, len(M[0]))
                        if M[i][j] % p), None)
            if bad is None:
                break
            M[0] = [x + y for x, y in zip(M[0], M[bad[0]])]
        out.append(abs(M[0][0]))
        M = [r[1:] for r in M[1:]]
    return tuple(out)


def unimodular_extension(v: Sequence[int]) -> Matrix:
    """A unimodular matrix whose first row is the primitive vector ``v``."""
    v = tuple(int(x) for x in v)
    if vector_gcd(v) != 1:
        raise LinalgError("vector is not primitive")
    H, U = hermite_normal_form([(x,) for x in v])
    # U v^T = e_1, so v^T is the first column of U^{-1}
    return transpose(integer_inverse(U))
