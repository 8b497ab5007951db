"""The projective class ring as a ring of pairs over the structure group.

An element is a pair (s, t) of group ring elements: s collects classes of
simple modules, t collects multiplicities of indecomposable projective
covers.  Multiplication is

    (s1, t1) * (s2, t2) = (s1*s2, s1*t2 + t1*s2 + t1*c*t2)

where c is the canonical element recording the composition factors of the
projective cover of the trivial module.  The unit is (delta_identity, 0)
and the pairs with vanishing first component form a two-sided ideal.

The canonical element is validated on construction: nonnegative integer
multiplicities, trivial factor present, and total dimension at least two
(dimension one would mean the algebra is semisimple, in which case the ring
is just the integral group ring and no pair structure exists).
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import AbelianGroup, GroupElement, GroupRingElement

__all__ = [
    "CanonicalElementError",
    "PairElement",
    "ProjectiveClassRing",
    "validate_canonical_element",
]


class CanonicalElementError(ValueError):
    """A candidate canonical element violates a validation invariant.

    ``invariant`` carries the name of the violated invariant and is also the
    exception message: one of "invalid multiplicity", "missing trivial
    factor", "semisimple input".
    """

    def __init__(self, invariant: str):
        super().__init__(invariant)
        self.invariant = invariant


def validate_canonical_element(group: AbelianGroup, element: GroupRingElement) -> GroupRingElement:
    """Check the composition-multiplicity invariants; returns the element."""
    if element.group != group:
        raise ValueError("mixed-group operands")
    for _, coeff in element.items():
        if not isinstance(coeff, int) or coeff < 0:
            raise CanonicalElementError("invalid multiplicity")
    if element.coefficient(group.identity) < 1:
        raise CanonicalElementError("missing trivial factor")
    if element.augmentation() == 1:
        raise CanonicalElementError("semisimple input")
    return element


@dataclass(frozen=True)
class PairElement:
    """A pair (s_part, t_part) in the simple/projective basis split."""

    s_part: GroupRingElement
    t_part: GroupRingElement

    def __post_init__(self):
        if self.s_part.group != self.t_part.group:
            raise ValueError("pair components live over different groups")

    @property
    def group(self) -> AbelianGroup:
        return self.s_part.group

    def __add__(self, other: "PairElement") -> "PairElement":
        return PairElement(self.s_part + other.s_part, self.t_part + other.t_part)

    def __sub__(self, other: "PairElement") -> "PairElement":
        return PairElement(self.s_part - other.s_part, self.t_part - other.t_part)

    def __neg__(self) -> "PairElement":
        return PairElement(-self.s_part, -self.t_part)

    def scale(self, scalar: object) -> "PairElement":
        return PairElement(self.s_part.scale(scalar), self.t_part.scale(scalar))

    def is_zero(self) -> bool:
        return self.s_part.is_zero() and self.t_part.is_zero()

    def coefficient_vector(self) -> list:
        """Coordinates in the basis (simple classes, then projective classes),
        both blocks in canonical element order; length 2 * group size."""
        elements = self.group.elements()
        return [self.s_part.coefficient(a) for a in elements] + [
            self.t_part.coefficient(a) for a in elements
        ]

    def to_json(self, approx: bool = False) -> dict:
        return {"s": self.s_part.to_json(approx=approx), "t": self.t_part.to_json(approx=approx)}


class ProjectiveClassRing:
    """The pair ring attached to a structure group and canonical element."""

    __slots__ = ("_group", "_canonical")

    def __init__(self, group: AbelianGroup, canonical: GroupRingElement):
        self._group = group
        self._canonical = validate_canonical_element(group, canonical)

    @property
    def group(self) -> AbelianGroup:
        return self._group

    @property
    def canonical(self) -> GroupRingElement:
        return self._canonical

    def zero(self) -> PairElement:
        z = GroupRingElement.zero(self._group)
        return PairElement(z, z)

    def one(self) -> PairElement:
        return self.simple_class(self._group.identity)

    def simple_class(self, element: GroupElement) -> PairElement:
        """The class of the one-dimensional simple module labelled by a
        group element."""
        return PairElement(
            GroupRingElement.delta(self._group, element),
            GroupRingElement.zero(self._group),
        )

    def projective_class(self, element: GroupElement) -> PairElement:
        """The class of the indecomposable projective cover of a simple."""
        return PairElement(
            GroupRingElement.zero(self._group),
            GroupRingElement.delta(self._group, element),
        )

    def mul(self, x: PairElement, y: PairElement) -> PairElement:
        if x.group != self._group or y.group != self._group:
            raise ValueError("mixed-group operands")
        s = x.s_part * y.s_part
        t = x.s_part * y.t_part + x.t_part * y.s_part + x.t_part * self._canonical * y.t_part
        return PairElement(s, t)

    def dimension_vector(self, x: PairElement) -> GroupRingElement:
        """The composition-factor count of a class: s_part + t_part * c.

        A surjective ring homomorphism onto the integral group ring; it sends
        each projective class to the translate of the canonical element by
        its label.
        """
        return x.s_part + x.t_part * self._canonical

    def __repr__(self) -> str:
        return f"ProjectiveClassRing({self._group!r}, c={self._canonical!r})"
