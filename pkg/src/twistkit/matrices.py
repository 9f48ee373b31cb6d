"""Small exact linear algebra over the rationals (tuples of tuples, Fraction entries)."""

from __future__ import annotations

from fractions import Fraction


def mat(rows):
    """Normalize to a tuple-of-tuples of Fractions."""
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def identity(n):
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def transpose(a):
    return tuple(zip(*a)) if a else ()


def mat_mul(a, b):
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def mat_det(rows) -> Fraction:
    """Determinant by fraction-free-ish Gaussian elimination (exact)."""
    a = [list(row) for row in mat(rows)]
    n = len(a)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in a):
        raise ValueError("determinant needs a square matrix")
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = Fraction(1) / a[col][col]
        for r in range(col + 1, n):
            factor = a[r][col] * inv
            if factor:
                for c in range(col, n):
                    a[r][c] -= factor * a[col][c]
    return det


def mat_inv(rows):
    """Exact inverse, or None if singular."""
    a = [list(row) for row in mat(rows)]
    n = len(a)
    aug = [row + list(identity(n)[i]) for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def mat_rank(rows) -> int:
    a = [list(row) for row in mat(rows)]
    if not a:
        return 0
    ncols = len(a[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(a)) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = Fraction(1) / a[rank][col]
        a[rank] = [x * inv for x in a[rank]]
        for r in range(len(a)):
            if r != rank and a[r][col]:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[rank])]
        rank += 1
        if rank == len(a):
            break
    return rank


def as_int_matrix(rows):
    """Return the matrix as tuples of ints, or None if any entry is non-integral."""
    out = []
    for row in rows:
        int_row = []
        for x in row:
            f = Fraction(x)
            if f.denominator != 1:
                return None
            int_row.append(f.numerator)
        out.append(tuple(int_row))
    return tuple(out)


def is_unimodular(rows) -> bool:
    ints = as_int_matrix(rows)
    if ints is None:
        return False
    return abs(mat_det(ints)) == 1
