"""Tests for the structure-constants oracle and its cross-checks."""

import numpy as np
import pytest

from pcring import (
    AbelianGroup,
    GroupRingElement,
    ProjectiveClassRing,
    StructureTable,
    build_table,
    matches_pair_ring,
    nilradical_basis,
    radical_matches_spectral,
    spectrum,
    trace_element,
)


def make_ring(orders, coeffs) -> ProjectiveClassRing:
    g = AbelianGroup(orders)
    return ProjectiveClassRing(g, GroupRingElement(g, coeffs))


def trace_ring(n) -> ProjectiveClassRing:
    g = AbelianGroup((n,))
    return ProjectiveClassRing(g, trace_element(g))


RINGS = [
    make_ring((2,), {(0,): 1, (1,): 1}),
    make_ring((2,), {(0,): 2}),
    trace_ring(3),
    make_ring((4,), {(0,): 1, (2,): 2, (3,): 1}),
    make_ring((2, 3), {(0, 0): 2, (1, 1): 3, (0, 2): 1}),
]

IDS = [str(r.group.orders) + "/" + str(sorted(r.canonical.items())) for r in RINGS]


class TestBuildTable:
    def test_projective_square_order_two(self):
        ring = make_ring((2,), {(0,): 1, (1,): 1})
        table = build_table(ring)
        # indices: 0,1 simples; 2,3 projectives
        assert list(table.product(2, 2)) == [0, 0, 1, 1]

    def test_unit_row_and_column(self):
        for ring in RINGS:
            table = build_table(ring)
            d = table.dim
            for j in range(d):
                expected = [1 if k == j else 0 for k in range(d)]
                assert list(table.product(0, j)) == expected
                assert list(table.product(j, 0)) == expected

    def test_trace_absorbs_projective_products(self):
        table = build_table(trace_ring(3))
        # [P_K] * [P_K^2]: indices 3 + 1 and 3 + 2
        assert list(table.product(4, 5)) == [0, 0, 0, 1, 1, 1]

    def test_labels(self):
        table = build_table(make_ring((2,), {(0,): 1, (1,): 1}))
        assert table.labels() == [
            ("simple", (0,)),
            ("simple", (1,)),
            ("projective", (0,)),
            ("projective", (1,)),
        ]


class TestAgreementWithPairRing:
    @pytest.mark.parametrize("ring", RINGS, ids=IDS)
    def test_all_basis_products_agree(self, ring):
        assert matches_pair_ring(build_table(ring), ring)

    def test_perturbed_constant_detected(self):
        ring = trace_ring(3)
        table = build_table(ring)
        broken = StructureTable(ring.group, table.constants.copy())
        broken.constants[1, 2, 0] += 1
        assert not matches_pair_ring(broken, ring)

    @pytest.mark.parametrize("ring", RINGS, ids=IDS)
    def test_commutative_and_associative(self, ring):
        table = build_table(ring)
        assert table.is_commutative()
        assert table.is_associative()

    def test_broken_table_fails_associativity(self):
        ring = trace_ring(3)
        table = build_table(ring)
        broken = StructureTable(ring.group, table.constants.copy())
        broken.constants[4, 5, 0] += 1
        assert not broken.is_associative()
        with pytest.raises(ValueError, match="table not associative"):
            broken.radical()

    def test_exact_fallback_agrees_with_fast_path(self):
        for ring in RINGS[:3]:
            table = build_table(ring)
            assert table._is_associative_exact() == table.is_associative()


class TestRadical:
    def test_order_two_dimension_one(self):
        assert build_table(make_ring((2,), {(0,): 1, (1,): 1})).radical().dimension == 1

    def test_full_support_dimension_zero(self):
        assert build_table(make_ring((2,), {(0,): 2})).radical().dimension == 0

    @pytest.mark.parametrize("n", range(2, 7))
    def test_trace_ring_dimension(self, n):
        assert build_table(trace_ring(n)).radical().dimension == n - 1

    @pytest.mark.parametrize("ring", RINGS, ids=IDS)
    def test_dimension_matches_spectral_count(self, ring):
        spec = spectrum(ring)
        radical = build_table(ring).radical()
        assert radical.dimension == ring.group.size - spec.support_size

    @pytest.mark.parametrize("ring", RINGS, ids=IDS)
    def test_kernel_vectors_annihilate_the_trace_form(self, ring):
        table = build_table(ring)
        gram = table.trace_form()
        for vec in table.radical().vectors:
            residual = [
                sum(int(gram[i][j]) * vec[j] for j in range(table.dim))
                for i in range(table.dim)
            ]
            assert not any(residual)

    @pytest.mark.parametrize("ring", RINGS, ids=IDS)
    def test_span_agreement_with_spectral(self, ring):
        radical = build_table(ring).radical()
        assert radical_matches_spectral(radical, nilradical_basis(ring))

    def test_dimension_mismatch_rejected(self):
        ring = make_ring((2,), {(0,): 1, (1,): 1})
        radical = build_table(ring).radical()
        assert not radical_matches_spectral(radical, [])

    def test_wrong_span_rejected(self):
        ring = make_ring((2,), {(0,): 1, (1,): 1})
        radical = build_table(ring).radical()
        impostor = [ring.projective_class((0,))]
        assert not radical_matches_spectral(radical, impostor)


class TestTensorShapes:
    def test_shape_validation(self):
        g = AbelianGroup((2,))
        with pytest.raises(ValueError):
            StructureTable(g, np.zeros((2, 2, 2), dtype=np.int64))

    def test_constants_are_nonnegative(self):
        for ring in RINGS:
            assert int(build_table(ring).constants.min()) >= 0
