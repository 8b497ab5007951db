"""Exact linear algebra over the rationals and over cyclotomic fields.

The elimination routines are duck-typed over any field whose elements
support +, -, *, / and truthiness testing (``Fraction`` and ``CycloNum``
both qualify).  There is no pivots-by-magnitude heuristic and no tolerance:
a pivot is any nonzero entry.

``certify_full_row_rank`` proves that a cyclotomic matrix has full row rank
by reducing it modulo a prime p == 1 (mod N), where zeta_N maps to an
element of order N in GF(p)*.  Full rank of a homomorphic image certifies
full rank exactly; if the certificate fails (which also happens for
genuinely rank-deficient input) the claim is settled by exact elimination.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .cyclotomics import CycloNum, euler_phi

__all__ = [
    "certify_full_row_rank",
    "in_row_span",
    "kernel_basis",
    "rank",
    "rref",
]


def rref(rows: Sequence[Sequence[object]]) -> tuple[list[list[object]], list[int]]:
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots: list[int] = []
    reduced: list[list[object]] = []
    row = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(row, len(work)):
            if work[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        work[row], work[pivot_row] = work[pivot_row], work[row]
        inv = 1 / work[row][col]  # one field inversion per pivot
        work[row] = [v * inv for v in work[row]]
        for r in range(len(work)):
            if r != row and work[r][col]:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[row])]
        pivots.append(col)
        row += 1
        if row == len(work):
            break
    reduced = work[:row]
    return reduced, pivots


def rank(rows: Sequence[Sequence[object]]) -> int:
    return len(rref(rows)[1])


def in_row_span(reduced: list[list[object]], pivots: list[int], vector: Sequence[object]) -> bool:
    """Membership of ``vector`` in the row span of an ``rref`` result."""
    residual = list(vector)
    for row, col in zip(reduced, pivots):
        factor = residual[col]
        if factor:
            residual = [a - factor * b for a, b in zip(residual, row)]
    return not any(residual)


def kernel_basis(matrix: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Basis of the right kernel {x : M x = 0} of a rational matrix.

    Deterministic: one basis vector per free column, unit in that column.
    """
    if not matrix:
        return []
    ncols = len(matrix[0])
    reduced, pivots = rref(matrix)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for free in free_cols:
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row, col in zip(reduced, pivots):
            vec[col] = -row[free]
        basis.append(vec)
    return basis


# -- modular full-rank certificate ---------------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _unity_root_mod(p: int, order: int) -> int | None:
    # An element of multiplicative order exactly `order` in GF(p), p == 1 mod order.
    if order == 1:
        return 1
    exponent = (p - 1) // order
    prime_factors = set()
    m = order
    q = 2
    while q * q <= m:
        if m % q == 0:
            prime_factors.add(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        prime_factors.add(m)
    for candidate in range(2, p):
        w = pow(candidate, exponent, p)
        if w == 1:
            continue
        if all(pow(w, order // q, p) != 1 for q in prime_factors):
            return w
    return None


def _cyclo_row_mod(row: Sequence[object], order: int, p: int, powers: list[int]) -> list[int] | None:
    out = []
    for entry in row:
        if isinstance(entry, CycloNum):
            acc = 0
            for k, f in enumerate(entry.coeffs):
                if f:
                    if f.denominator % p == 0:
                        return None
                    acc += f.numerator * pow(f.denominator, p - 2, p) % p * powers[k]
            out.append(acc % p)
        else:
            f = Fraction(entry)
            if f.denominator % p == 0:
                return None
            out.append(f.numerator * pow(f.denominator, p - 2, p) % p)
    return out


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    work = [list(r) for r in rows]
    ncols = len(work[0]) if work else 0
    rk = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(rk, len(work)):
            if work[r][col] % p:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        work[rk], work[pivot_row] = work[pivot_row], work[rk]
        inv = pow(work[rk][col], p - 2, p)
        work[rk] = [v * inv % p for v in work[rk]]
        for r in range(rk + 1, len(work)):
            f = work[r][col] % p
            if f:
                work[r] = [(a - f * b) % p for a, b in zip(work[r], work[rk])]
        rk += 1
        if rk == len(work):
            break
    return rk


def certify_full_row_rank(rows: Sequence[Sequence[object]], order: int, attempts: int = 3) -> bool:
    """True iff the rows (entries in Q(zeta_order) or rational) are linearly
    independent.  Fast modular certificates first, exact elimination last."""
    m = len(rows)
    if m == 0:
        return True
    if m > len(rows[0]):
        return False
    phi = euler_phi(order)
    p = 1_000_003
    p += (-(p - 1)) % order  # first candidate with p == 1 mod order
    tried = 0
    while tried < attempts:
        while not _is_prime(p):
            p += order
        w = _unity_root_mod(p, order)
        if w is not None:
            powers = [pow(w, k, p) for k in range(phi)]
            reduced_rows = []
            ok = True
            for row in rows:
                rr = _cyclo_row_mod(row, order, p, powers)
                if rr is None:
                    ok = False
                    break
                reduced_rows.append(rr)
            if ok and _rank_mod_p(reduced_rows, p) == m:
                return True
        tried += 1
        p += order
    embedded = [
        [e if isinstance(e, CycloNum) else CycloNum.rational(order, e) for e in row]
        for row in rows
    ]
    return rank(embedded) == m
