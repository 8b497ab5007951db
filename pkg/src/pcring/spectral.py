"""Complexified structure of the pair ring: support, idempotents, nilradical.

Under the character transform the complexified ring becomes, character by
character, a two-dimensional algebra on pairs (x, y) with product
(x1*x2, x1*y2 + y1*x2 + lambda*y1*y2), where lambda is the transform of the
canonical element at that character.  For lambda != 0 the block splits into
two one-dimensional factors; for lambda == 0 it is the dual numbers.  With
r the number of nonvanishing characters and s the group order this yields
the decomposition C^(2r) x C[eps]^(s-r).

Everything here is computed in transform coordinates, where the block
formulas are literal, and pulled back to group ring coordinates through the
inverse transform.  The returned idempotents carry explicit 1/lambda
factors, so they are valid in the caller's original coordinates without any
silent rescaling of the canonical element; ``normalize_structure`` exhibits
the rescaling separately as a central unit certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .cyclotomics import CycloNum, root_of_unity
from .groups import AbelianGroup, GroupElement, GroupRingElement, fourier
from .pair_ring import PairElement, ProjectiveClassRing

__all__ = [
    "Decomposition",
    "NormalizedStructure",
    "Spectrum",
    "SpectralReport",
    "complexified_basis_audit",
    "decomposition",
    "idempotent_system",
    "nilradical_basis",
    "normalize_structure",
    "spectral_report",
    "spectrum",
]


@dataclass(frozen=True)
class Spectrum:
    """Character transform of the canonical element and its support."""

    values: tuple[CycloNum, ...]       # one value per character, canonical order
    support: tuple[GroupElement, ...]  # labels of the nonvanishing characters
    group_order: int

    @property
    def support_size(self) -> int:
        return len(self.support)


@dataclass(frozen=True)
class Decomposition:
    """Shape of the complexified ring: split character blocks contribute a
    pair of one-dimensional factors each, the rest contribute dual numbers."""

    split_characters: int
    dual_characters: int

    def render(self) -> str:
        return f"C^{2 * self.split_characters} x C[eps]^{self.dual_characters}"

    @property
    def total_dimension(self) -> int:
        return 2 * self.split_characters + 2 * self.dual_characters

    def __str__(self) -> str:
        return self.render()

    @classmethod
    def from_spectrum(cls, spec: Spectrum) -> "Decomposition":
        r = spec.support_size
        return cls(split_characters=r, dual_characters=spec.group_order - r)


@dataclass(frozen=True)
class NormalizedStructure:
    """Canonical multiplicative structure and the unit relating it to c.

    ``element`` is the inverse transform of the indicator of the support:
    the representative with transform values in {0, 1}.  ``unit`` is the
    central unit with transform values ``unit_values`` (the original value on
    the support, 1 elsewhere), so that c = unit * element in the group ring.
    The support set itself is the complete isomorphism invariant.
    """

    element: GroupRingElement
    unit: GroupRingElement
    unit_values: tuple[CycloNum, ...]


@dataclass(frozen=True)
class SpectralReport:
    """Everything the complexified analysis produces for one ring."""

    spectrum: Spectrum
    decomposition: Decomposition
    idempotents: tuple[PairElement, ...]
    nilpotents: tuple[PairElement, ...]
    normalized: NormalizedStructure

    def to_json(self, include_idempotents: bool = True, include_nilradical: bool = True,
                approx: bool = False) -> dict:
        doc: dict = {
            "s": self.spectrum.group_order,
            "r": self.spectrum.support_size,
            "decomposition": self.decomposition.render(),
            "support_F": [list(label) for label in self.spectrum.support],
            "fourier_c": [v.to_json(approx=approx) for v in self.spectrum.values],
        }
        if include_idempotents:
            doc["idempotents"] = [e.to_json(approx=approx) for e in self.idempotents]
        if include_nilradical:
            doc["nilradical"] = [n.to_json(approx=approx) for n in self.nilpotents]
        doc["normalized_c"] = {
            "element": self.normalized.element.to_json(approx=approx),
            "unit": self.normalized.unit.to_json(approx=approx),
            "unit_fourier": [v.to_json(approx=approx) for v in self.normalized.unit_values],
        }
        return doc


def spectrum(ring: ProjectiveClassRing) -> Spectrum:
    """Transform the canonical element and record where it does not vanish.

    The support is never empty: the trivial character evaluates to the
    augmentation, which is at least 2 for a valid canonical element.
    """
    group = ring.group
    values = fourier(group, ring.canonical)
    support = tuple(b for b, v in zip(group.elements(), values) if v)
    if not support:
        raise AssertionError("transform of a valid canonical element cannot vanish everywhere")
    return Spectrum(values=tuple(values), support=support, group_order=group.size)


def decomposition(ring: ProjectiveClassRing) -> Decomposition:
    return Decomposition.from_spectrum(spectrum(ring))


def _dirac_pullbacks(group: AbelianGroup) -> dict[GroupElement, GroupRingElement]:
    # Inverse transform of every Dirac mass: row b has coefficient
    # zeta^(-<a,b>)/s at a.  Built in one sweep instead of s separate
    # inverse transforms.
    n = group.conductor
    s = group.size
    inv_s = Fraction(1, s)
    elements = group.elements()
    rows: dict[GroupElement, GroupRingElement] = {}
    for b in elements:
        coeffs = {
            a: root_of_unity(n, -group.pairing_exponent(a, b)) * inv_s for a in elements
        }
        rows[b] = GroupRingElement(group, coeffs, _trusted=True)
    return rows


def idempotent_system(ring: ProjectiveClassRing) -> list[PairElement]:
    """A complete system of primitive orthogonal idempotents.

    In transform coordinates: one idempotent (delta_b, 0) per vanishing
    character b, and the pair (delta_b, -delta_b/lambda), (0, delta_b/lambda)
    per nonvanishing character with value lambda.  Each is pulled back to
    group ring coordinates componentwise.  The list has s + r entries,
    ordered by character; it sums to the ring unit.
    """
    spec = spectrum(ring)
    return _idempotents_from(ring, spec)


def _idempotents_from(ring: ProjectiveClassRing, spec: Spectrum) -> list[PairElement]:
    group = ring.group
    rows = _dirac_pullbacks(group)
    zero = GroupRingElement.zero(group)
    out: list[PairElement] = []
    for b, lam in zip(group.elements(), spec.values):
        row = rows[b]
        if lam:
            inv = lam.inverse()
            scaled = row.scale(inv)
            out.append(PairElement(row, -scaled))
            out.append(PairElement(zero, scaled))
        else:
            out.append(PairElement(row, zero))
    return out


def nilradical_basis(ring: ProjectiveClassRing) -> list[PairElement]:
    """A basis of the nilradical of the complexified ring.

    One element (0, pullback of delta_b) per vanishing character b: these
    span the orthogonal complement of the support inside the projective
    ideal, each squares to zero, and mutual products vanish.
    """
    spec = spectrum(ring)
    return _nilpotents_from(ring, spec)


def _nilpotents_from(ring: ProjectiveClassRing, spec: Spectrum) -> list[PairElement]:
    group = ring.group
    rows = _dirac_pullbacks(group)
    zero = GroupRingElement.zero(group)
    return [
        PairElement(zero, rows[b])
        for b, lam in zip(group.elements(), spec.values)
        if not lam
    ]


def normalize_structure(ring: ProjectiveClassRing) -> NormalizedStructure:
    """Canonical representative of the multiplicative structure plus the
    central unit carrying the original transform values on the support."""
    spec = spectrum(ring)
    return _normalized_from(ring, spec)


def _normalized_from(ring: ProjectiveClassRing, spec: Spectrum) -> NormalizedStructure:
    group = ring.group
    one = CycloNum.one(group.conductor)
    rows = _dirac_pullbacks(group)
    element = GroupRingElement.zero(group)
    unit = GroupRingElement.zero(group)
    unit_values: list[CycloNum] = []
    for b, lam in zip(group.elements(), spec.values):
        if lam:
            element = element + rows[b]
            unit = unit + rows[b].scale(lam)
            unit_values.append(lam)
        else:
            unit = unit + rows[b]
            unit_values.append(one)
    return NormalizedStructure(element=element, unit=unit, unit_values=tuple(unit_values))


def spectral_report(ring: ProjectiveClassRing) -> SpectralReport:
    """Run the whole complexified analysis once, sharing the spectrum."""
    spec = spectrum(ring)
    return SpectralReport(
        spectrum=spec,
        decomposition=Decomposition.from_spectrum(spec),
        idempotents=tuple(_idempotents_from(ring, spec)),
        nilpotents=tuple(_nilpotents_from(ring, spec)),
        normalized=_normalized_from(ring, spec),
    )


def complexified_basis_audit(ring: ProjectiveClassRing,
                             idempotents: list[PairElement],
                             nilpotents: list[PairElement]) -> bool:
    """True iff idempotents and nilpotents together form a basis of the
    complexified ring, i.e. the 2s coefficient vectors have full rank."""
    group = ring.group
    if len(idempotents) + len(nilpotents) != 2 * group.size:
        return False
    rows = [e.coefficient_vector() for e in idempotents]
    rows += [nil.coefficient_vector() for nil in nilpotents]
    return linalg.certify_full_row_rank(rows, group.conductor)
