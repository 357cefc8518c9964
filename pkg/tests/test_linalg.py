from fractions import Fraction

import pytest
from hypothesis import given

from leibnil.fields import GF, QQ
from leibnil.linalg import (
    Vector,
    contains,
    full_subspace,
    is_subspace_of,
    span,
    subspace_intersect,
    subspace_sum,
    vector,
    zero_subspace,
)

from .strategies import paired_subspaces, subspaces, vectors


def qvec(*coords):
    return vector(QQ, coords)


class TestSpan:
    def test_standard_basis_spans_everything(self):
        s = span([qvec(1, 0), qvec(0, 1)], 2)
        assert s == full_subspace(QQ, 2)
        assert s.dim == 2

    def test_dependent_vectors_collapse(self):
        # hand row-reduction: (2,4) and (1,2) are proportional
        s = span([qvec(2, 4), qvec(1, 2)], 2)
        assert s.dim == 1
        assert s.basis == ((Fraction(1), Fraction(2)),)

    def test_empty_span_is_zero(self):
        s = span([], 2, QQ)
        assert s.is_zero() and s.dim == 0

    def test_empty_span_without_field_rejected(self):
        with pytest.raises(ValueError):
            span([], 2)

    def test_mixed_fields_rejected(self):
        with pytest.raises(ValueError):
            span([qvec(1, 0), vector(GF(3), [1, 0])], 2)

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            span([qvec(1, 0, 0)], 2)


class TestSumIntersect:
    def test_sum_with_zero_is_identity(self):
        u = span([qvec(1, 2)], 2)
        assert subspace_sum(u, zero_subspace(QQ, 2)) == u

    def test_lines_sum_to_plane(self):
        s = subspace_sum(span([qvec(1, 0)], 2), span([qvec(0, 1)], 2))
        assert s == full_subspace(QQ, 2)

    def test_sum_dim_three(self):
        # row-reduce the union: (1,1,0), (1,0,0) are independent
        s = subspace_sum(span([qvec(1, 1, 0)], 3), span([qvec(1, 0, 0)], 3))
        assert s.dim == 2

    def test_intersect_idempotent(self):
        u = span([qvec(1, 2), qvec(0, 1)], 2)
        assert subspace_intersect(u, u) == u

    def test_orthogonal_lines_intersect_trivially(self):
        s = subspace_intersect(span([qvec(1, 0)], 2), span([qvec(0, 1)], 2))
        assert s.is_zero()

    def test_intersect_containment(self):
        u = span([qvec(1, 1), qvec(1, 0)], 2)
        v = span([qvec(1, 1)], 2)
        assert subspace_intersect(u, v) == v

    def test_ambient_mismatch_rejected(self):
        with pytest.raises(ValueError):
            subspace_sum(span([qvec(1, 0)], 2), span([qvec(1, 0, 0)], 3))
        with pytest.raises(ValueError):
            subspace_intersect(span([qvec(1, 0)], 2), span([vector(GF(3), [1, 0])], 2))


class TestContains:
    def test_zero_vector_always_contained(self):
        assert contains(zero_subspace(QQ, 2), qvec(0, 0))
        assert contains(span([qvec(1, 2)], 2), qvec(0, 0))

    def test_scalar_multiple_contained(self):
        assert contains(span([qvec(1, 2)], 2), qvec(2, 4))

    def test_nonmember_rejected(self):
        assert not contains(span([qvec(1, 2)], 2), qvec(1, 0))

    def test_ambient_mismatch_rejected(self):
        with pytest.raises(ValueError):
            contains(span([qvec(1, 0)], 2), qvec(1, 0, 0))


@given(paired_subspaces())
def test_dimension_formula(pair):
    u, v = pair
    total = subspace_sum(u, v).dim + subspace_intersect(u, v).dim
    assert total == u.dim + v.dim


@given(subspaces())
def test_span_is_canonical(u):
    assert span(u.basis_vectors(), u.ambient_dim, u.field) == u


@given(paired_subspaces())
def test_intersection_inside_both(pair):
    u, v = pair
    w = subspace_intersect(u, v)
    assert is_subspace_of(w, u) and is_subspace_of(w, v)


@given(paired_subspaces())
def test_sum_contains_both(pair):
    u, v = pair
    s = subspace_sum(u, v)
    assert is_subspace_of(u, s) and is_subspace_of(v, s)


@given(subspaces(), vectors())
def test_contains_iff_sum_dim_unchanged(u, v):
    if v.field != u.field or len(v.coords) != u.ambient_dim:
        return
    grown = subspace_sum(u, span([v], u.ambient_dim, u.field))
    assert contains(u, v) == (grown.dim == u.dim)


@given(subspaces())
def test_echelon_shape(u):
    # pivots 1, strictly increasing pivot columns, zeros above and below
    zero, one = u.field.zero, u.field.one
    pivot_cols = []
    for row in u.basis:
        col = next(i for i, a in enumerate(row) if a != zero)
        assert row[col] == one
        pivot_cols.append(col)
    assert pivot_cols == sorted(set(pivot_cols))
    for r, row in enumerate(u.basis):
        for r2, other in enumerate(u.basis):
            if r2 != r:
                assert other[pivot_cols[r]] == zero
