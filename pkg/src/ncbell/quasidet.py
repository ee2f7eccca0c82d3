"""Quasideterminants: the Hessenberg polynomial case, Bell matrices, exact
numeric quasideterminants over Q, and determinants for the commutative side.

A matrix is a plain row-major list of lists. Hessenberg here means -1 just
below the diagonal and zeros further down; such a quasideterminant taken at
the top-right corner is a polynomial in the entries, computed by the P(n)
recursion with the empty-product seed P(0) = 1.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb

from .algebra import CPoly, NCPoly


def _entry_class(M):
    for row in M:
        for e in row:
            if isinstance(e, (NCPoly, CPoly)):
                return type(e)
    raise ValueError("matrix has no polynomial entries")


def check_hessenberg(M) -> None:
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    for i in range(n):
        for j in range(n):
            e = M[i][j]
            if i == j + 1:
                if not e == -1:
                    raise ValueError(f"subdiagonal entry ({i+1},{j+1}) is not -1")
            elif i > j + 1:
                if e:
                    raise ValueError(f"entry ({i+1},{j+1}) below the subdiagonal is nonzero")


def hessenberg_quasidet(M):
    """|M|_{1n} for a Hessenberg matrix with -1 subdiagonal, via
    P(j) = sum_{k=1}^{j} P(k-1) a_{k j}, P(0) = 1."""
    check_hessenberg(M)
    n = len(M)
    cls = _entry_class(M)
    P = [cls.one()]
    for j in range(1, n + 1):
        acc = cls.zero()
        for k in range(1, j + 1):
            acc = acc + P[k - 1] * M[k - 1][j - 1]
        P.append(acc)
    return P[n]


def hessenberg_quasidet_sum(M):
    """The same quasideterminant as the explicit sum over strictly increasing
    index chains: a_{1n} + sum a_{1 j_1} a_{j_1+1, j_2} ... a_{j_k+1, n}."""
    check_hessenberg(M)
    n = len(M)
    cls = _entry_class(M)
    out = cls.zero()
    for k in range(n):
        for chain in combinations(range(1, n), k):
            idx = list(chain) + [n]
            prod = M[0][idx[0] - 1]
            prev = idx[0]
            for j in idx[1:]:
                prod = prod * M[prev][j - 1]
                prev = j
            out = out + prod
    return out


def bell_matrix(n: int, variant: str = "nc"):
    """The n x n Hessenberg matrix with (i,j) entry binom(j-1, i-1) d_{j-i+1}
    on and above the diagonal, -1 on the subdiagonal."""
    if n < 1:
        raise ValueError("need n >= 1")
    cls = NCPoly if variant == "nc" else CPoly
    M = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if i <= j:
                row.append(cls.letter(j - i + 1, comb(j - 1, i - 1)))
            elif i == j + 1:
                row.append(-cls.one())
            else:
                row.append(cls.zero())
        M.append(row)
    return M


def bell_via_quasidet(n: int, variant: str = "nc"):
    """B_n as the top-right quasideterminant (nc) or the determinant (c) of
    the Bell matrix."""
    M = bell_matrix(n, variant)
    if variant == "nc":
        return hessenberg_quasidet(M)
    return det(M)


def det(M):
    """Exact determinant. Rational entries go through fraction-free Bareiss
    elimination; polynomial entries through first-row cofactor expansion
    with minors memoized by column set."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    if n == 0:
        return Fraction(1)
    if all(isinstance(e, (int, Fraction)) for row in M for e in row):
        return _det_bareiss([[Fraction(e) for e in row] for row in M])
    cls = _entry_class(M)

    memo: dict = {}

    def minor(row: int, cols: tuple):
        if not cols:
            return cls.one()
        key = (row, cols)
        if key in memo:
            return memo[key]
        acc = cls.zero()
        for pos, j in enumerate(cols):
            e = M[row][j]
            if e:
                sub = minor(row + 1, cols[:pos] + cols[pos + 1 :])
                term = e * sub
                acc = acc + (term if pos % 2 == 0 else -term)
        memo[key] = acc
        return acc

    return minor(0, tuple(range(n)))


def _det_bareiss(M) -> Fraction:
    n = len(M)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if not M[k][k]:
            for r in range(k + 1, n):
                if M[r][k]:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev
            M[i][k] = Fraction(0)
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def mat_inverse(M):
    """Exact inverse of a rational matrix by Gauss-Jordan elimination."""
    n = len(M)
    A = [[Fraction(M[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        A[col], A[piv] = A[piv], A[col]
        inv = 1 / A[col][col]
        A[col] = [x * inv for x in A[col]]
        for r in range(n):
            if r != col and A[r][col]:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [row[n:] for row in A]


def numeric_quasidet(A, p: int, q: int) -> Fraction:
    """|A|_{pq} = a_{pq} - r (A^{pq})^{-1} c over the rationals, where r is
    row p without column q and c is column q without row p. Indices are
    1-based. Raises ValueError when the minor is singular (the
    quasideterminant is undefined there)."""
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("matrix is not square")
    if not (1 <= p <= n and 1 <= q <= n):
        raise ValueError("position out of range")
    rows = [i for i in range(n) if i != p - 1]
    cols = [j for j in range(n) if j != q - 1]
    minor = [[Fraction(A[i][j]) for j in cols] for i in rows]
    try:
        inv = mat_inverse(minor)
    except ValueError:
        raise ValueError(f"minor A^{{{p}{q}}} is singular; quasideterminant undefined")
    r = [Fraction(A[p - 1][j]) for j in cols]
    c = [Fraction(A[i][q - 1]) for i in rows]
    acc = Fraction(A[p - 1][q - 1])
    for b in range(n - 1):
        for a in range(n - 1):
            acc -= r[b] * inv[b][a] * c[a]
    return acc
