from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from tubular.errors import ZeroVector
from tubular.lattice import (
    RationalLine,
    Vec,
    bezout_partner,
    canonical_direction,
    det,
    floor,
    frac,
    intersection_number,
    intersection_number_set,
    is_primitive,
    parallel,
    primitive_decomposition,
    vec,
)

ints = st.integers(-50, 50)
vecs = st.builds(Vec, ints, ints)
nonzero = vecs.filter(lambda v: v != (0, 0))
rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 100)


@pytest.mark.parametrize("a,b,want", [((1, 0), (0, 1), 1), ((1, 0), (1, 0), 0), ((1, 2), (2, 1), -3)])
def test_det_examples(a, b, want):
    assert det(a, b) == want


@pytest.mark.parametrize("a,b,want", [((1, 0), (1, 1), 1), ((1, 0), (2, 2), 2), ((1, 2), (2, 1), 3)])
def test_intersection_number_examples(a, b, want):
    assert intersection_number(a, b) == want


@pytest.mark.parametrize("a,bs,want", [
    ((1, 0), [(1, 1), (1, -1)], 2),
    ((1, 0), [], 0),
    ((1, 0), [(1, 2), (2, 1)], 3),
])
def test_intersection_number_set_examples(a, bs, want):
    assert intersection_number_set(a, bs) == want


@pytest.mark.parametrize("a,want", [((2, 2), (2, (1, 1))), ((1, -1), (1, (1, -1))), ((-4, 6), (2, (-2, 3)))])
def test_primitive_decomposition_examples(a, want):
    assert primitive_decomposition(a) == want


def test_primitive_decomposition_zero():
    with pytest.raises(ZeroVector):
        primitive_decomposition((0, 0))


def test_big_integers_are_exact():
    big = 10**40
    assert det((big, 1), (1, big)) == big * big - 1


def test_vec_rejects_non_integers():
    with pytest.raises(TypeError):
        vec((1.0, 2))
    with pytest.raises(TypeError):
        vec((True, 2))


@given(vecs, vecs)
def test_det_matches_sympy(a, b):
    assert det(a, b) == sympy.Matrix([list(a), list(b)]).det()


@given(vecs, vecs)
def test_intersection_symmetric(a, b):
    assert intersection_number(a, b) == intersection_number(b, a)


@given(vecs, vecs, st.integers(1, 20))
def test_intersection_scaling(a, b, n):
    assert intersection_number(a.scale(n), b) == n * intersection_number(a, b)


@given(vecs, vecs)
def test_zero_iff_parallel(a, b):
    dependent = sympy.Matrix([list(a), list(b)]).rank() < 2
    assert (intersection_number(a, b) == 0) == dependent == parallel(a, b)


@given(st.lists(vecs, max_size=6), vecs)
def test_set_sum_order_independent(bs, a):
    assert intersection_number_set(a, bs) == intersection_number_set(a, list(reversed(bs)))


@given(nonzero)
def test_primitive_decomposition_properties(a):
    n, a0 = primitive_decomposition(a)
    assert a0.scale(n) == a
    assert is_primitive(a0)
    assert primitive_decomposition(a0) == (1, a0)


@given(nonzero)
def test_canonical_direction(a):
    d, s = canonical_direction(a)
    _, a0 = primitive_decomposition(a)
    assert a0 == d.scale(s)
    assert d.x > 0 or (d.x == 0 and d.y > 0)


@given(nonzero.filter(is_primitive))
def test_bezout_partner(a):
    assert det(a, bezout_partner(a)) == 1


@given(rationals)
def test_floor_and_frac(q):
    assert floor(q) == sympy.floor(sympy.Rational(q.numerator, q.denominator))
    assert 0 <= frac(q) < 1
    assert floor(q) + frac(q) == q


@given(nonzero, rationals, st.integers(1, 5))
def test_line_normalisation(d, level, n):
    a = RationalLine.make(d, level)
    b = RationalLine.make(d.scale(n), level * n)
    c = RationalLine.make(-d, -level)
    assert a == b == c
    assert is_primitive(a.direction)


@given(nonzero, nonzero, rationals, rationals)
def test_line_intersection(d1, d2, l1, l2):
    if parallel(d1, d2):
        return
    a, b = RationalLine.make(d1, l1), RationalLine.make(d2, l2)
    p = a.intersection(b)
    assert a.contains(p) and b.contains(p)


def test_line_value_sign():
    line = RationalLine.make((1, 0), Fraction(1, 2))
    assert line.value((0, 1)) == Fraction(1, 2)
    assert line.value((0, 0)) == Fraction(-1, 2)
