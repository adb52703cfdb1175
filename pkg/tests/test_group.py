from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bsgroup.errors import ContextMismatch
from bsgroup.group import (
    BsElement,
    RationalMatrix2,
    conjugate,
    element,
    from_matrix,
    gen_a,
    gen_t,
    identity,
    inverse,
    matrix_rep,
    multiply,
    power,
)
from bsgroup.oracles import SearchBounds, power_by_repetition, random_element
from bsgroup.ring import make_context

from conftest import MODULI, elem


def test_multiply_examples(ctx2):
    assert multiply(gen_t(ctx2), gen_a(ctx2)) == element(ctx2, 2, 1)
    assert multiply(gen_a(ctx2, Fraction(1, 2)), gen_a(ctx2, Fraction(1, 2))) == gen_a(ctx2)
    assert multiply(identity(ctx2), gen_t(ctx2)) == gen_t(ctx2)


def test_inverse_power_examples(ctx2):
    assert inverse(elem("a^2 t^-3", ctx2)) == element(ctx2, -16, 3)
    assert inverse(gen_a(ctx2)) == gen_a(ctx2, -1)
    assert power(elem("a t", ctx2), 2) == element(ctx2, 3, 2)
    assert power(elem("a t", ctx2), -1) == element(ctx2, Fraction(-1, 2), -1)
    assert power(gen_a(ctx2, 3), 0).is_identity()


def test_conjugate_is_left(ctx2):
    # h g h^-1
    assert conjugate(gen_a(ctx2), gen_t(ctx2)) == gen_a(ctx2, 2)
    assert conjugate(gen_a(ctx2), gen_t(ctx2, -1)) == gen_a(ctx2, Fraction(1, 2))


def test_matrix_examples(ctx2):
    assert matrix_rep(gen_a(ctx2)) == RationalMatrix2.of(1, 1, 0, 1)
    assert matrix_rep(identity(ctx2)) == RationalMatrix2.eye()
    assert matrix_rep(gen_a(ctx2, Fraction(1, 2))) == RationalMatrix2.of(1, Fraction(1, 2), 0, 1)
    T = RationalMatrix2.of(2, 0, 0, 1)
    A = RationalMatrix2.of(1, 1, 0, 1)
    assert T.inv() @ A @ T == matrix_rep(gen_a(ctx2, Fraction(1, 2)))


def test_from_matrix_rejects_non_image(ctx2):
    with pytest.raises(ValueError):
        from_matrix(RationalMatrix2.of(3, 0, 0, 1), ctx2)
    with pytest.raises(ValueError):
        from_matrix(RationalMatrix2.of(1, Fraction(1, 3), 0, 1), ctx2)


def test_mixed_contexts_rejected():
    with pytest.raises(ContextMismatch):
        multiply(gen_a(make_context(2)), gen_a(make_context(3)))


def test_operators(ctx2):
    g, h = elem("a t^2", ctx2), elem("a^(1/2) t^-1", ctx2)
    assert g * h == multiply(g, h)
    assert ~g == inverse(g)
    assert g ** 3 == power(g, 3)
    assert str(g) == "a t^2"


@pytest.mark.parametrize("n", MODULI)
def test_power_agrees_with_repetition_small(n):
    ctx = make_context(n)
    for s in range(50):
        g = random_element(ctx, SearchBounds(20, 4), s)
        for r in range(-5, 6):
            assert power(g, r) == power_by_repetition(g, r)


elements = st.builds(
    lambda n, k, p, c: element(make_context(n), Fraction(k, abs(n) ** p), c),
    st.just(2), st.integers(-10 ** 6, 10 ** 6), st.integers(0, 8), st.integers(-8, 8),
)


@settings(max_examples=200)
@given(st.sampled_from(MODULI), st.integers(0, 2 ** 32))
def test_group_axioms(n, seed):
    ctx = make_context(n)
    b = SearchBounds(10 ** 6, 8)
    g, h, k = (random_element(ctx, b, seed * 3 + i) for i in range(3))
    assert (g * h) * k == g * (h * k)
    assert g * identity(ctx) == g == identity(ctx) * g
    assert (g * ~g).is_identity() and (~g * g).is_identity()
    assert matrix_rep(g * h) == matrix_rep(g) @ matrix_rep(h)
    assert (g * h).c == g.c + h.c
    assert from_matrix(matrix_rep(g), ctx) == g
    assert (matrix_rep(g) == RationalMatrix2.eye()) == g.is_identity()


def test_element_is_canonical(ctx2):
    g = BsElement(ctx2.number(2, 4), -1)
    assert g == element(ctx2, Fraction(1, 2), -1)
    assert hash(g) == hash(element(ctx2, Fraction(1, 2), -1))
