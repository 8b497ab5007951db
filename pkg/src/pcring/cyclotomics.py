"""Exact arithmetic in the cyclotomic field Q(zeta_N).

A value is a residue modulo the N-th cyclotomic polynomial Phi_N, stored in
the power basis 1, zeta, ..., zeta^(phi(N)-1) with rational coefficients.
Phi_N is the minimal polynomial of zeta_N over Q, so the reduced coefficient
vector is unique: equality and zero-testing are exact componentwise checks
with no tolerance anywhere.  This matters because the whole analysis hinges
on deciding whether character sums vanish; floating point would misclassify
them.

Internally a value keeps an integer numerator vector and a single positive
denominator with gcd(den, *nums) == 1, so the hot path (multiply, then fold
the high powers back with an integer reduction table) stays in plain integer
arithmetic.  ``fractions.Fraction`` objects are materialised only at the API
boundary.

One conductor is fixed per analysis session: arithmetic between values of
different orders is rejected rather than coerced.  Plain ``int`` and
``Fraction`` operands are embedded into the operand's field on the fly.
"""

from __future__ import annotations

import cmath
import functools
import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "CycloNum",
    "cyclotomic_polynomial",
    "euler_phi",
    "root_of_unity",
]

Rational = Union[int, Fraction]


def euler_phi(n: int) -> int:
    """Euler's totient of a positive integer."""
    if n < 1:
        raise ValueError("totient is defined for positive integers")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_divmod_monic(num: Sequence[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    """Long division of integer polynomials; ``den`` must be monic."""
    if not den or den[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(num)
    dd = len(den) - 1
    q = [0] * max(len(rem) - dd, 0)
    for k in range(len(rem) - 1, dd - 1, -1):
        coef = rem[k]
        if coef:
            q[k - dd] = coef
            for j in range(dd + 1):
                rem[k - dd + j] -= coef * den[j]
    return q, _poly_trim(rem)


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, constant term first, leading coefficient 1.

    Computed by dividing x^n - 1 by the product of Phi_d over the proper
    divisors d of n; every intermediate division is exact over the integers.
    """
    if n < 1:
        raise ValueError("cyclotomic polynomials are indexed by positive integers")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_monic(poly, cyclotomic_polynomial(d))
            if rem:
                raise AssertionError("cyclotomic division left a remainder")
    return tuple(poly)


@functools.lru_cache(maxsize=None)
def _reduction_rows(order: int) -> tuple[tuple[int, ...], ...]:
    # Row k-phi holds x^k mod Phi_order for k in phi .. 2*phi-2, the degrees a
    # product of two reduced residues can reach.
    phi = euler_phi(order)
    cyc = cyclotomic_polynomial(order)
    rows: list[tuple[int, ...]] = []
    cur = [-c for c in cyc[:phi]]  # x^phi = -(lower part of Phi)
    for _ in range(phi, 2 * phi - 1):
        rows.append(tuple(cur))
        top = cur[-1]
        nxt = [0] + cur[:-1]
        if top:
            base = rows[0]
            for i in range(phi):
                nxt[i] += top * base[i]
        cur = nxt
    return tuple(rows)


@functools.lru_cache(maxsize=None)
def _power_residues(order: int) -> tuple[tuple[int, ...], ...]:
    # x^k mod Phi_order for every k in 0 .. order-1.
    phi = euler_phi(order)
    rows: list[tuple[int, ...]] = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(order):
        rows.append(tuple(cur))
        top = cur[-1]
        nxt = [0] + cur[:-1]
        if top:
            fold = _reduction_rows(order)
            if fold:
                base = fold[0]
                for i in range(phi):
                    nxt[i] += top * base[i]
            else:  # phi == 1: x == Phi + root, fold by the single residue
                nxt[0] += top * (-cyclotomic_polynomial(order)[0])
        cur = nxt
    return tuple(rows)


class CycloNum:
    """An element of Q(zeta_N), reduced modulo Phi_N.

    Instances are immutable; arithmetic returns fresh values.  Mixing two
    different orders raises, mixing with ``int`` or ``Fraction`` embeds the
    rational into the field.
    """

    __slots__ = ("_order", "_nums", "_den")

    def __init__(self, order: int, coeffs: Iterable[Rational] = ()):
        if order < 1:
            raise ValueError("order must be a positive integer")
        phi = euler_phi(order)
        fracs = [Fraction(c) for c in coeffs]
        if len(fracs) > phi:
            # Reduce arbitrary-degree input modulo Phi_N.
            fracs = _reduce_fraction_poly(fracs, order)
        fracs += [Fraction(0)] * (phi - len(fracs))
        den = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
        nums = [int(f * den) for f in fracs]
        self._order = order
        self._nums, self._den = _normalized(nums, den)

    # -- construction helpers ------------------------------------------------

    @classmethod
    def _raw(cls, order: int, nums: list[int], den: int) -> "CycloNum":
        self = object.__new__(cls)
        self._order = order
        self._nums, self._den = _normalized(nums, den)
        return self

    @classmethod
    def rational(cls, order: int, value: Rational) -> "CycloNum":
        """Embed a rational number into Q(zeta_order)."""
        f = Fraction(value)
        phi = euler_phi(order)
        return cls._raw(order, [f.numerator] + [0] * (phi - 1), f.denominator)

    @classmethod
    def zero(cls, order: int) -> "CycloNum":
        return cls.rational(order, 0)

    @classmethod
    def one(cls, order: int) -> "CycloNum":
        return cls.rational(order, 1)

    # -- inspection ----------------------------------------------------------

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Power-basis coordinates as reduced fractions, length phi(order)."""
        d = self._den
        return tuple(Fraction(n, d) for n in self._nums)

    def is_zero(self) -> bool:
        return not any(self._nums)

    def is_rational(self) -> bool:
        return not any(self._nums[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self._nums[0], self._den)

    def approx(self) -> complex:
        """Floating-point image under zeta |-> exp(2*pi*i/order).

        Display convenience only; never used to decide anything.
        """
        z = cmath.exp(2j * cmath.pi / self._order)
        acc = 0j
        for k, n in enumerate(self._nums):
            if n:
                acc += n * z**k
        return acc / self._den

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other: object) -> "CycloNum | None":
        if isinstance(other, CycloNum):
            if other._order != self._order:
                raise ValueError(
                    f"cyclotomic order mismatch: {self._order} vs {other._order}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum.rational(self._order, other)
        return None

    def __add__(self, other: object) -> "CycloNum":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        d1, d2 = self._den, rhs._den
        g = math.gcd(d1, d2)
        m1, m2 = d2 // g, d1 // g
        nums = [a * m1 + b * m2 for a, b in zip(self._nums, rhs._nums)]
        return CycloNum._raw(self._order, nums, d1 * m1)

    __radd__ = __add__

    def __neg__(self) -> "CycloNum":
        return CycloNum._raw(self._order, [-n for n in self._nums], self._den)

    def __sub__(self, other: object) -> "CycloNum":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "CycloNum":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other: object) -> "CycloNum":
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            nums = [n * f.numerator for n in self._nums]
            return CycloNum._raw(self._order, nums, self._den * f.denominator)
        if not isinstance(other, CycloNum):
            return NotImplemented
        if other._order != self._order:
            raise ValueError(
                f"cyclotomic order mismatch: {self._order} vs {other._order}"
            )
        a, b = self._nums, other._nums
        phi = len(a)
        if phi == 1:
            return CycloNum._raw(self._order, [a[0] * b[0]], self._den * other._den)
        conv = [0] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        nums = conv[:phi]
        rows = _reduction_rows(self._order)
        for k in range(phi, 2 * phi - 1):
            t = conv[k]
            if t:
                row = rows[k - phi]
                for i in range(phi):
                    r = row[i]
                    if r:
                        nums[i] += t * r
        return CycloNum._raw(self._order, nums, self._den * other._den)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        """Multiplicative inverse, via the extended Euclidean algorithm
        against Phi_N over Q."""
        if self.is_zero():
            raise ZeroDivisionError("division by zero in cyclotomic field")
        if self.is_rational():
            return CycloNum.rational(self._order, 1 / self.as_fraction())
        phi_poly = [Fraction(c) for c in cyclotomic_polynomial(self._order)]
        a = list(self.coeffs)
        old_r, r = a, phi_poly
        old_s, s = [Fraction(1)], [Fraction(0)]
        while any(r):
            q = _fraction_poly_div(old_r, r)
            old_r, r = r, _fraction_poly_sub(old_r, _fraction_poly_mul(q, r))
            old_s, s = s, _fraction_poly_sub(old_s, _fraction_poly_mul(q, s))
        # Phi_N is irreducible and self is a nonzero residue, so the gcd is a
        # nonzero constant.
        if len(_trim_fraction_poly(old_r)) != 1:
            raise AssertionError("gcd with the cyclotomic polynomial is not constant")
        unit = old_r[0]
        return CycloNum(self._order, [c / unit for c in old_s])

    def __truediv__(self, other: object) -> "CycloNum":
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            if f == 0:
                raise ZeroDivisionError("division by zero in cyclotomic field")
            return self * (1 / f)
        if isinstance(other, CycloNum):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other: object) -> "CycloNum":
        if isinstance(other, (int, Fraction)):
            return CycloNum.rational(self._order, other) * self.inverse()
        return NotImplemented

    def __pow__(self, exponent: int) -> "CycloNum":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        e = abs(exponent)
        acc = CycloNum.one(self._order)
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    # -- comparisons, hashing, rendering --------------------------------------

    def __bool__(self) -> bool:
        return any(self._nums)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycloNum):
            return (
                self._order == other._order
                and self._den == other._den
                and self._nums == other._nums
            )
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return (
                self.is_rational()
                and self._den == f.denominator
                and self._nums[0] == f.numerator
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._order, self._nums, self._den))

    def __repr__(self) -> str:
        return f"CycloNum({self._order}, {self!s})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, f in enumerate(self.coeffs):
            if f == 0:
                continue
            mono = "1" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if k == 0:
                parts.append(str(f))
            elif abs(f) == 1:
                parts.append(mono if f > 0 else f"-{mono}")
            else:
                parts.append(f"{f}*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    # -- serialization ---------------------------------------------------------

    def to_json(self, approx: bool = False) -> dict:
        """Power-basis serialization; set ``approx`` to append a decimal
        rendering tagged display_only."""
        doc: dict = {
            "order": self._order,
            "coeffs": [[f.numerator, f.denominator] for f in self.coeffs],
        }
        if approx:
            doc["display_only"] = _display_string(self.approx())
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "CycloNum":
        return cls(doc["order"], [Fraction(n, d) for n, d in doc["coeffs"]])


def root_of_unity(order: int, k: int) -> CycloNum:
    """zeta_order^k as a reduced residue; k is taken modulo order."""
    if order < 1:
        raise ValueError("order must be a positive integer")
    return _cached_root(order, k % order)


@functools.lru_cache(maxsize=None)
def _cached_root(order: int, k: int) -> CycloNum:
    return CycloNum._raw(order, list(_power_residues(order)[k]), 1)


def _normalized(nums: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den == 0:
        raise ZeroDivisionError("division by zero in cyclotomic field")
    if not any(nums):
        return tuple(0 for _ in nums), 1
    if den < 0:
        den = -den
        nums = [-n for n in nums]
    g = den
    for n in nums:
        if n:
            g = math.gcd(g, n)
            if g == 1:
                break
    if g > 1:
        nums = [n // g for n in nums]
        den //= g
    return tuple(nums), den


def _reduce_fraction_poly(coeffs: list[Fraction], order: int) -> list[Fraction]:
    cyc = [Fraction(c) for c in cyclotomic_polynomial(order)]
    rem = list(coeffs)
    dd = len(cyc) - 1
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if c:
            for j in range(dd + 1):
                rem[k - dd + j] -= c * cyc[j]
    return rem[:dd]


def _trim_fraction_poly(p: list[Fraction]) -> list[Fraction]:
    end = len(p)
    while end and p[end - 1] == 0:
        end -= 1
    return p[:end]


def _fraction_poly_div(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    num = _trim_fraction_poly(list(num))
    den = _trim_fraction_poly(list(den))
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    lead = den[-1]
    while len(num) >= len(den):
        c = num[-1] / lead
        d = len(num) - len(den)
        q[d] = c
        for j, dj in enumerate(den):
            num[d + j] -= c * dj
        num = _trim_fraction_poly(num)
        if not num:
            break
    return q


def _fraction_poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _fraction_poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] -= bi
    return out


def _display_string(z: complex) -> str:
    re = round(z.real, 12)
    im = round(z.imag, 12)
    re += 0.0  # normalise -0.0
    im += 0.0
    if im == 0:
        return repr(re)
    sign = "+" if im > 0 else "-"
    return f"{re!r}{sign}{abs(im)!r}i"
