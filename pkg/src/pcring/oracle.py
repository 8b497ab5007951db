"""Brute-force realization of the ring as a structure-constants algebra.

The table is assembled directly from the module-theoretic product rules on
the 2s basis classes (s simples followed by s projective covers):

    [S_a] * [S_b]   = [S_(a+b)]
    [S_a] * [P_b]   = [P_(a+b)]       (and symmetrically on the right)
    [P_a] * [P_b]   = sum_u c_u [P_(a+u+b)]

with c_u the composition multiplicities of the canonical element.  Nothing
here touches the pair-ring multiplication or any cyclotomic arithmetic, so
agreement between the two is a genuine cross-check: products are compared
entry by entry, associativity is verified on all basis triples, and the
radical is recovered independently through the characteristic-zero trace
form criterion (the radical is the kernel of (x, y) |-> trace of left
multiplication by x*y), over exact rationals.

The associativity scan runs on integer-valued float64 tensors; a bound
check guarantees every intermediate stays below 2**53, where float64
arithmetic on integers is exact, and falls back to arbitrary-precision
loops otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg
from .cyclotomics import CycloNum, euler_phi
from .groups import AbelianGroup
from .pair_ring import PairElement, ProjectiveClassRing

__all__ = [
    "RadicalBasis",
    "StructureTable",
    "build_table",
    "matches_pair_ring",
    "radical_matches_spectral",
]


@dataclass(frozen=True)
class RadicalBasis:
    dimension: int
    vectors: tuple[tuple[Fraction, ...], ...]


class StructureTable:
    """Dense integer structure constants c_ijk with e_i * e_j = sum_k c_ijk e_k."""

    def __init__(self, group: AbelianGroup, constants: np.ndarray):
        dim = 2 * group.size
        if constants.shape != (dim, dim, dim):
            raise ValueError(f"expected constants of shape {(dim, dim, dim)}")
        self.group = group
        self.constants = constants
        self.dim = dim
        self._associative: bool | None = None

    def labels(self) -> list[tuple[str, tuple[int, ...]]]:
        elements = self.group.elements()
        return [("simple", a) for a in elements] + [("projective", a) for a in elements]

    def product(self, i: int, j: int) -> np.ndarray:
        return self.constants[i, j]

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.constants, self.constants.transpose(1, 0, 2)))

    def is_associative(self) -> bool:
        """Check (e_i e_j) e_k == e_i (e_j e_k) for all 8 s^3 basis triples.

        The result is cached; constants are treated as frozen once any
        check has run.
        """
        if self._associative is None:
            self._associative = self._scan_associativity()
        return self._associative

    def _scan_associativity(self) -> bool:
        c = self.constants
        d = self.dim
        bound = d * int(c.max()) ** 2
        if bound >= 2**53:
            return self._is_associative_exact()
        cf = c.astype(np.float64)
        flat_right = cf.reshape(d, d * d)    # m -> (k, l)
        flat_left = cf.reshape(d * d, d)     # (j, k) -> m
        for i in range(d):
            left = (cf[i] @ flat_right).reshape(d, d, d)       # sum_m c[i,j,m] c[m,k,l]
            right = (flat_left @ cf[i]).reshape(d, d, d)       # sum_m c[j,k,m] c[i,m,l]
            if not np.array_equal(left, right):
                return False
        return True

    def _is_associative_exact(self) -> bool:
        c = self.constants.tolist()
        d = self.dim
        for i in range(d):
            for j in range(d):
                row_ij = c[i][j]
                for k in range(d):
                    left = [0] * d
                    for m in range(d):
                        cm = row_ij[m]
                        if cm:
                            rm = c[m][k]
                            for l in range(d):
                                left[l] += cm * rm[l]
                    right = [0] * d
                    for m in range(d):
                        cm = c[j][k][m]
                        if cm:
                            rm = c[i][m]
                            for l in range(d):
                                right[l] += cm * rm[l]
                    if left != right:
                        return False
        return True

    def trace_form(self) -> np.ndarray:
        """Gram matrix T[i,j] = trace of left multiplication by e_i * e_j."""
        traces = np.einsum("kll->k", self.constants)
        return np.tensordot(self.constants, traces, axes=([2], [0]))

    def radical(self) -> RadicalBasis:
        """Exact rational kernel of the trace form; in characteristic zero
        this is the radical of the algebra.  Requires an associative table."""
        if not self.is_associative():
            raise ValueError("table not associative")
        gram = self.trace_form()
        matrix = [[Fraction(int(v)) for v in row] for row in gram]
        vectors = linalg.kernel_basis(matrix)
        return RadicalBasis(
            dimension=len(vectors), vectors=tuple(tuple(v) for v in vectors)
        )


def build_table(ring: ProjectiveClassRing) -> StructureTable:
    """Assemble the structure constants from the module product rules."""
    group = ring.group
    s = group.size
    d = 2 * s
    elements = group.elements()
    idx = {a: i for i, a in enumerate(elements)}
    constants = np.zeros((d, d, d), dtype=np.int64)
    canonical = list(ring.canonical.items())
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            k = idx[group.mul(a, b)]
            constants[i, j, k] = 1                # simple * simple
            constants[i, s + j, s + k] = 1        # simple * projective
            constants[s + i, j, s + k] = 1        # projective * simple
            ab = group.mul(a, b)
            for u, cu in canonical:
                constants[s + i, s + j, s + idx[group.mul(ab, u)]] += cu
    return StructureTable(group, constants)


def matches_pair_ring(table: StructureTable, ring: ProjectiveClassRing) -> bool:
    """Compare every basis product of the table with the pair-ring product
    of the corresponding classes (4 s^2 comparisons)."""
    group = ring.group
    if table.group != group:
        return False
    s = group.size
    elements = group.elements()
    basis = [ring.simple_class(a) for a in elements] + [
        ring.projective_class(a) for a in elements
    ]
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            expected = ring.mul(x, y).coefficient_vector()
            if [int(v) for v in table.constants[i, j]] != expected:
                return False
    return True


def radical_matches_spectral(radical: RadicalBasis, nilpotents: list[PairElement]) -> bool:
    """True iff the trace-form kernel and the closed-form nilradical basis
    span the same space, established by mutual membership.

    Kernel vectors are rational; a transform-coordinate vector lies in their
    complex span iff each of its power-basis slices does, so one direction
    reduces to rational solves.  The other direction solves each kernel
    vector against the nilpotent basis over the cyclotomic field.
    """
    if radical.dimension != len(nilpotents):
        return False
    if not nilpotents:
        return True
    group = nilpotents[0].group
    order = group.conductor
    phi = euler_phi(order)
    s = group.size

    # Both bases live inside the projective component: the nilpotents by
    # construction, the kernel vectors necessarily (anything else means the
    # spans differ).  Work in those s coordinates only.
    kernel_rows = []
    for v in radical.vectors:
        if any(v[:s]):
            return False
        kernel_rows.append(list(v[s:]))
    reduced_k, pivots_k = linalg.rref(kernel_rows)
    nil_vectors = []
    for pair in nilpotents:
        if not pair.s_part.is_zero():
            return False
        vec = [
            v if isinstance(v, CycloNum) else CycloNum.rational(order, v)
            for v in pair.coefficient_vector()[s:]
        ]
        nil_vectors.append(vec)
        for k in range(phi):
            piece = [entry.coeffs[k] for entry in vec]
            if not linalg.in_row_span(reduced_k, pivots_k, piece):
                return False

    reduced_n, pivots_n = linalg.rref(nil_vectors)
    for row in kernel_rows:
        embedded = [CycloNum.rational(order, f) for f in row]
        if not linalg.in_row_span(reduced_n, pivots_n, embedded):
            return False
    return True
