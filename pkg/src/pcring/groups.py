"""Finite abelian groups, their group rings, and the character transform.

A group is a product of cyclic factors of orders (n_1, ..., n_t); elements
are exponent tuples a = (a_1, ..., a_t) with 0 <= a_i < n_i.  Characters are
indexed by the group itself: the value of the character labelled b on the
element a is zeta_N^(sum_i (N/n_i) * a_i * b_i), where N = lcm(n_i) is the
conductor.  Evaluating every character at once is the Fourier transform
CG -> C^G, a ring isomorphism carrying convolution to pointwise product.

Group ring elements are sparse coefficient maps with no stored zeros, so
structural equality coincides with mathematical equality.  The coefficient
domain is whatever supports ring arithmetic; in practice ``int``,
``Fraction`` or :class:`~pcring.cyclotomics.CycloNum`.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .cyclotomics import CycloNum, root_of_unity

__all__ = [
    "AbelianGroup",
    "GroupElement",
    "GroupRingElement",
    "augmentation",
    "character_value",
    "fourier",
    "inverse_fourier",
    "pairing",
    "trace_element",
]

GroupElement = tuple[int, ...]


class AbelianGroup:
    """A product of cyclic groups given by its tuple of factor orders."""

    __slots__ = ("_orders", "_size", "_conductor", "_elements", "_index")

    def __init__(self, orders: Iterable[int]):
        orders = tuple(orders)
        if not orders:
            raise ValueError("a group needs at least one cyclic factor")
        if any(n < 1 for n in orders):
            raise ValueError(f"cyclic factor orders must be >= 1, got {orders}")
        self._orders = orders
        self._size = math.prod(orders)
        self._conductor = math.lcm(*orders)
        self._elements: tuple[GroupElement, ...] | None = None
        self._index: dict[GroupElement, int] | None = None

    @property
    def orders(self) -> tuple[int, ...]:
        return self._orders

    @property
    def size(self) -> int:
        return self._size

    @property
    def conductor(self) -> int:
        return self._conductor

    @property
    def identity(self) -> GroupElement:
        return (0,) * len(self._orders)

    def elements(self) -> tuple[GroupElement, ...]:
        """All elements in lexicographic order, identity first."""
        if self._elements is None:
            self._elements = tuple(itertools.product(*(range(n) for n in self._orders)))
        return self._elements

    def index(self, a: GroupElement) -> int:
        if self._index is None:
            self._index = {e: i for i, e in enumerate(self.elements())}
        return self._index[a]

    def element(self, exponents: Iterable[int]) -> GroupElement:
        """Validate an exponent tuple; out-of-range entries are rejected."""
        exps = tuple(exponents)
        if len(exps) != len(self._orders):
            raise ValueError(
                f"expected {len(self._orders)} exponents, got {len(exps)}"
            )
        for e, n in zip(exps, self._orders):
            if not isinstance(e, int) or not 0 <= e < n:
                raise ValueError(f"exponent {e} out of range for cyclic factor of order {n}")
        return exps

    def mul(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return tuple((x + y) % n for x, y, n in zip(a, b, self._orders))

    def inv(self, a: GroupElement) -> GroupElement:
        return tuple((-x) % n for x, n in zip(a, self._orders))

    def pairing_exponent(self, a: GroupElement, b: GroupElement) -> int:
        """Exponent of zeta_N in the duality pairing of a with b."""
        n = self._conductor
        return sum((n // ni) * x * y for x, y, ni in zip(a, b, self._orders)) % n

    def __eq__(self, other: object) -> bool:
        return isinstance(other, AbelianGroup) and self._orders == other._orders

    def __hash__(self) -> int:
        return hash(self._orders)

    def __repr__(self) -> str:
        return f"AbelianGroup{self._orders}"


class GroupRingElement:
    """Finitely supported coefficient map on a fixed abelian group.

    Multiplication is convolution; addition and scalar multiple are
    coefficientwise.  Zero coefficients are never stored.
    """

    __slots__ = ("_group", "_coeffs")

    def __init__(self, group: AbelianGroup, coeffs: Mapping[GroupElement, object] | None = None,
                 *, _trusted: bool = False):
        self._group = group
        if coeffs is None:
            self._coeffs = {}
        elif _trusted:
            self._coeffs = {k: v for k, v in coeffs.items() if v}
        else:
            self._coeffs = {
                group.element(k): v for k, v in coeffs.items() if v
            }

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, group: AbelianGroup) -> "GroupRingElement":
        return cls(group, None)

    @classmethod
    def delta(cls, group: AbelianGroup, exponents: Iterable[int], coeff: object = 1) -> "GroupRingElement":
        """The Dirac mass at one group element."""
        return cls(group, {group.element(exponents): coeff})

    # -- inspection ------------------------------------------------------------

    @property
    def group(self) -> AbelianGroup:
        return self._group

    def coefficient(self, a: GroupElement):
        return self._coeffs.get(a, 0)

    def support(self) -> tuple[GroupElement, ...]:
        return tuple(sorted(self._coeffs))

    def sorted_terms(self) -> list[tuple[GroupElement, object]]:
        return sorted(self._coeffs.items())

    def items(self) -> Iterator[tuple[GroupElement, object]]:
        return iter(self._coeffs.items())

    def __len__(self) -> int:
        return len(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    # -- arithmetic --------------------------------------------------------------

    def _check_same_group(self, other: "GroupRingElement") -> None:
        if other._group != self._group:
            raise ValueError("mixed-group operands")

    def __add__(self, other: object) -> "GroupRingElement":
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        self._check_same_group(other)
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            cur = out.get(k)
            out[k] = v if cur is None else cur + v
        return GroupRingElement(self._group, out, _trusted=True)

    def __sub__(self, other: object) -> "GroupRingElement":
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(
            self._group, {k: -v for k, v in self._coeffs.items()}, _trusted=True
        )

    def __mul__(self, other: object) -> "GroupRingElement":
        if isinstance(other, GroupRingElement):
            self._check_same_group(other)
            orders = self._group._orders
            out: dict[GroupElement, object] = {}
            get = out.get
            for a, ca in self._coeffs.items():
                for b, cb in other._coeffs.items():
                    key = tuple((x + y) % n for x, y, n in zip(a, b, orders))
                    v = ca * cb
                    cur = get(key)
                    out[key] = v if cur is None else cur + v
            return GroupRingElement(self._group, out, _trusted=True)
        if isinstance(other, (int, Fraction, CycloNum)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: object) -> "GroupRingElement":
        if isinstance(other, (int, Fraction, CycloNum)):
            return self.scale(other)
        return NotImplemented

    def scale(self, scalar: object) -> "GroupRingElement":
        return GroupRingElement(
            self._group, {k: v * scalar for k, v in self._coeffs.items()}, _trusted=True
        )

    def map_coefficients(self, fn) -> "GroupRingElement":
        return GroupRingElement(
            self._group, {k: fn(v) for k, v in self._coeffs.items()}, _trusted=True
        )

    def augmentation(self):
        """Sum of all coefficients; a ring homomorphism onto the coefficient
        domain.  The zero element maps to the integer 0."""
        total = 0
        for v in self._coeffs.values():
            total = v + total
        return total

    # -- comparisons and rendering --------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self._group == other._group and self._coeffs == other._coeffs

    def __repr__(self) -> str:
        if not self._coeffs:
            return f"GroupRingElement({self._group!r}, 0)"
        terms = " + ".join(f"{v}*K{list(k)}" for k, v in self.sorted_terms())
        return f"GroupRingElement({self._group!r}, {terms})"

    # -- serialization -----------------------------------------------------------

    def to_json(self, approx: bool = False) -> dict:
        terms = []
        for exp, coeff in self.sorted_terms():
            if isinstance(coeff, CycloNum):
                val: object = coeff.to_json(approx=approx)
            elif isinstance(coeff, Fraction):
                val = [coeff.numerator, coeff.denominator]
            else:
                val = coeff
            terms.append({"exp": list(exp), "coeff": val})
        return {"group": list(self._group.orders), "terms": terms}


def trace_element(group: AbelianGroup) -> GroupRingElement:
    """The sum of all group elements, with integer coefficient 1 each."""
    return GroupRingElement(group, {a: 1 for a in group.elements()}, _trusted=True)


def augmentation(x: GroupRingElement):
    return x.augmentation()


def pairing(group: AbelianGroup, a: GroupElement, b: GroupElement) -> CycloNum:
    """The bilinear duality pairing of two group elements, a root of unity."""
    a, b = group.element(a), group.element(b)
    return root_of_unity(group.conductor, group.pairing_exponent(a, b))


def character_value(group: AbelianGroup, label: GroupElement, x: GroupRingElement) -> CycloNum:
    """Evaluate the character labelled ``label`` on a group ring element."""
    if x.group != group:
        raise ValueError("mixed-group operands")
    label = group.element(label)
    n = group.conductor
    acc = CycloNum.zero(n)
    for a, coeff in x.items():
        acc = acc + root_of_unity(n, group.pairing_exponent(a, label)) * coeff
    return acc


def fourier(group: AbelianGroup, x: GroupRingElement) -> list[CycloNum]:
    """All character values of ``x`` in canonical label order.

    This is the ring isomorphism onto functions: convolution goes to
    pointwise product, the Dirac mass at the identity to the all-ones vector.
    """
    return [character_value(group, b, x) for b in group.elements()]


def inverse_fourier(group: AbelianGroup, values: list[CycloNum]) -> GroupRingElement:
    """Recover the group ring element with the given character values."""
    s = group.size
    if len(values) != s:
        raise ValueError(f"expected {s} character values, got {len(values)}")
    n = group.conductor
    inv_s = Fraction(1, s)
    coeffs: dict[GroupElement, CycloNum] = {}
    elements = group.elements()
    for a in elements:
        acc = CycloNum.zero(n)
        for b, v in zip(elements, values):
            if v:
                acc = acc + root_of_unity(n, -group.pairing_exponent(a, b)) * v
        coeffs[a] = acc * inv_s
    return GroupRingElement(group, coeffs, _trusted=True)
