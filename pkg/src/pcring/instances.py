"""Generators for named ring instances and the validated custom entry point."""

from __future__ import annotations

from dataclasses import dataclass

from .groups import AbelianGroup, GroupRingElement, trace_element
from .pair_ring import validate_canonical_element

__all__ = [
    "InstanceDescriptor",
    "custom",
    "dual_group_algebra",
    "uq_sl2",
]


@dataclass(frozen=True)
class InstanceDescriptor:
    """A ready-to-analyze instance, optionally with golden expectations."""

    name: str
    group: AbelianGroup
    canonical: GroupRingElement | None
    semisimple: bool = False
    expected_support_size: int | None = None
    expected_decomposition: str | None = None


def uq_sl2(n: int) -> InstanceDescriptor:
    """The half-quantum group of sl2 at an n-th root of unity: cyclic
    structure group of order n, canonical element the trace element."""
    if n < 2:
        raise ValueError(f"root-of-unity order must be at least 2, got {n}")
    group = AbelianGroup((n,))
    return InstanceDescriptor(
        name=f"uq-sl2({n})",
        group=group,
        canonical=trace_element(group),
        expected_support_size=1,
        expected_decomposition=f"C^2 x C[eps]^{n - 1}",
    )


def dual_group_algebra(orders: tuple[int, ...]) -> InstanceDescriptor:
    """The algebra of functions on a finite abelian group: semisimple, so
    the class ring is just the integral group ring and there is no pair
    structure to analyze."""
    group = AbelianGroup(orders)
    return InstanceDescriptor(
        name=f"dual-group({','.join(str(n) for n in orders)})",
        group=group,
        canonical=None,
        semisimple=True,
    )


def custom(orders: tuple[int, ...], coeffs: dict[tuple[int, ...], int],
           name: str = "custom") -> InstanceDescriptor:
    """A user-supplied instance; the canonical element is validated here."""
    group = AbelianGroup(orders)
    element = GroupRingElement(group, coeffs)
    validate_canonical_element(group, element)
    return InstanceDescriptor(name=name, group=group, canonical=element)
