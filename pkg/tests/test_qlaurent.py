from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from qzeta import DivisionByZero, ExactDivisionError, QLaurent
from qzeta.qcombinat import q_int_sym


def test_difference_of_squares():
    a = QLaurent({1: 1, -1: -1})
    b = QLaurent({1: 1, -1: 1})
    assert a * b == QLaurent({2: 1, -2: -1})


def test_q2_squared():
    two = q_int_sym(2)
    assert two * two == QLaurent({2: 1, 0: 2, -2: 1})


def test_additive_identity():
    x = QLaurent({3: 2, -1: F(1, 2)})
    assert x + QLaurent() == x
    assert QLaurent() + x == x


def test_invert_q():
    assert QLaurent({2: 1, 0: 1}).invert_q() == QLaurent({-2: 1, 0: 1})


def test_q_power_substitute():
    assert q_int_sym(2).q_power_substitute(3) == QLaurent({3: 1, -3: 1})
    with pytest.raises(ValueError):
        q_int_sym(2).q_power_substitute(0)


def test_eval_at():
    assert q_int_sym(3).eval_at(F(2)) == F(21, 4)
    assert QLaurent({0: 5}).eval_at(F(0)) == 5
    with pytest.raises(DivisionByZero):
        QLaurent({-1: 1}).eval_at(F(0))


def test_parts():
    x = QLaurent({2: 1, 0: -3, -1: 1})
    assert x.parts("strictly_positive") == QLaurent({2: 1})
    assert x.parts("zero") == QLaurent({0: -3})
    assert x.parts("strictly_negative") == QLaurent({-1: 1})
    assert q_int_sym(3).parts("non_negative") == QLaurent({2: 1, 0: 1})
    with pytest.raises(ValueError):
        x.parts("bogus")


def test_parts_reconstruct():
    x = QLaurent({5: 2, 1: -1, 0: 7, -2: F(3, 4), F(-7, 2): 1})
    total = (
        x.parts("strictly_positive") + x.parts("zero") + x.parts("strictly_negative")
    )
    assert total == x


def test_exact_div():
    num = QLaurent({2: 1, -2: -1})          # q^2 - q^-2
    den = QLaurent({1: 1, -1: -1})          # q - q^-1
    assert num.exact_div(den) == QLaurent({1: 1, -1: 1})
    with pytest.raises(ExactDivisionError):
        QLaurent({1: 1, 0: 1}).exact_div(QLaurent({1: 1, -1: -1}))


def test_half_integer_exponents():
    x = QLaurent({F(1, 2): 1, F(-1, 2): 1})
    assert (x * x) == QLaurent({1: 1, 0: 2, -1: 1})
    assert x.invert_q() == x


def test_primitive_content():
    x = QLaurent({3: -4, 1: -6})
    v, g = x.monomial_content()
    assert (v, g) == (1, -2)
    assert x.primitive() == QLaurent({2: 2, 0: 3})


def test_pow_and_str():
    x = QLaurent({1: 1, -1: -1})
    assert x**2 == x * x
    assert str(QLaurent({F(-3, 2): 1})) == "q^-3/2"
    assert str(QLaurent()) == "0"


coeffs = st.integers(min_value=-9, max_value=9)
exps = st.integers(min_value=-6, max_value=6)
laurents = st.dictionaries(exps, coeffs, max_size=5).map(QLaurent)


@given(laurents, laurents)
def test_eval_is_ring_homomorphism(a, b):
    q = F(3, 2)
    assert (a * b).eval_at(q) == a.eval_at(q) * b.eval_at(q)
    assert (a + b).eval_at(q) == a.eval_at(q) + b.eval_at(q)


@given(laurents, laurents, laurents)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a


@given(laurents)
def test_parts_partition(a):
    parts = [a.parts(w) for w in ("strictly_positive", "zero", "strictly_negative")]
    assert parts[0] + parts[1] + parts[2] == a
