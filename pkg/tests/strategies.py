"""Shared hypothesis strategies: scalars, vectors, subspaces, product trees."""

from hypothesis import strategies as st

from leibnil.fields import GF, QQ, PrimeField
from leibnil.linalg import Vector, span
from leibnil.terms import Leaf, Node

small_fields = st.sampled_from([QQ, GF(3), GF(5)])


def scalars(field):
    if isinstance(field, PrimeField):
        return st.integers(min_value=0, max_value=field.p - 1)
    return st.fractions(min_value=-4, max_value=4, max_denominator=4)


@st.composite
def vectors(draw, field=None, dim=None):
    f = field if field is not None else draw(small_fields)
    d = dim if dim is not None else draw(st.integers(min_value=1, max_value=4))
    coords = draw(st.lists(scalars(f), min_size=d, max_size=d))
    return Vector(f, tuple(coords))


@st.composite
def subspaces(draw, field=None, dim=None):
    f = field if field is not None else draw(small_fields)
    d = dim if dim is not None else draw(st.integers(min_value=1, max_value=4))
    count = draw(st.integers(min_value=0, max_value=d + 1))
    vs = [draw(vectors(field=f, dim=d)) for _ in range(count)]
    return span(vs, d, f)


@st.composite
def paired_subspaces(draw):
    """Two subspaces of one ambient space, for sum/intersection laws."""
    f = draw(small_fields)
    d = draw(st.integers(min_value=1, max_value=4))
    return draw(subspaces(field=f, dim=d)), draw(subspaces(field=f, dim=d))


leaf_names = st.sampled_from(list("abcxy"))
leaves_st = st.builds(Leaf, name=leaf_names, in_b=st.booleans())


def trees(max_leaves=6):
    return st.recursive(leaves_st,
                        lambda children: st.builds(Node, children, children),
                        max_leaves=max_leaves)
