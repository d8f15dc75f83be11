import random
from fractions import Fraction as F

import pytest

from qzeta import FactoredRatQT, QLaurent, QTPoly
from qzeta.qcombinat import q_int_sym
from qzeta.qtpoly import tpoly_divmod, tpoly_gcd, tpoly_mul


def test_expand_cn2():
    f = FactoredRatQT(QTPoly.one(), [((1, 1), 1), ((-1, 1), 1)])
    got = f.expand(2)
    assert got.coeff(0) == QLaurent({0: 1})
    assert got.coeff(1) == q_int_sym(2)
    assert got.coeff(2) == q_int_sym(3)


def test_expand_single_point():
    f = FactoredRatQT(QTPoly.one(), [((0, 1), 1)])
    assert f.expand(1).coeffs() == [QLaurent({0: 1}), QLaurent({0: 1})]


def test_expand_three_factor():
    f = FactoredRatQT(QTPoly.one(), [((2, 1), 1), ((0, 1), 1), ((-2, 1), 1)])
    assert f.expand(1).coeff(1) == QLaurent({2: 1, 0: 1, -2: 1})


def test_expand_matches_factorwise_product():
    rng = random.Random(11)
    for _ in range(8):
        n_factors = rng.randrange(1, 4)
        factors = [((rng.randrange(-3, 4), rng.randrange(1, 3)), rng.randrange(1, 3))
                   for _ in range(n_factors)]
        num = QTPoly({(rng.randrange(-2, 3), rng.randrange(0, 3)): rng.randrange(-3, 4)
                      for _ in range(3)})
        if num.is_zero:
            num = QTPoly.one()
        order = rng.randrange(2, 20)
        f = FactoredRatQT(num, factors)
        direct = f.expand(order)
        stepwise = num.to_tseries(order)
        for (a, b), mult in f.factors:
            single = FactoredRatQT(QTPoly.one(), [((a, b), 1)]).expand(order)
            for _ in range(mult):
                stepwise = stepwise * single
        assert direct == stepwise


def test_factored_equality_cross_multiplication():
    lhs = FactoredRatQT(QTPoly.one(), [((0, 1), 1)])                       # 1/(1-t)
    rhs = FactoredRatQT(QTPoly({(0, 0): 1, (0, 1): 1}), [((0, 2), 1)])     # (1+t)/(1-t^2)
    assert lhs == rhs
    assert not (lhs == FactoredRatQT(QTPoly.one(), [((0, 2), 1)]))


def test_qtpoly_invert_q_and_eval():
    p = QTPoly({(2, 1): 1, (0, 0): 1})
    assert p.invert_q() == QTPoly({(-2, 1): 1, (0, 0): 1})
    assert p.eval_t(F(1)) == QLaurent({2: 1, 0: 1})
    assert p.eval_t(F(-1)) == QLaurent({2: -1, 0: 1})


def test_qtpoly_negative_t_rejected():
    with pytest.raises(ValueError):
        QTPoly({(0, -1): 1})


def test_t_coeff_list():
    p = QTPoly({(1, 0): 2, (0, 2): 1})
    lst = p.t_coeff_list()
    assert lst[0] == QLaurent({1: 2})
    assert lst[1] == QLaurent()
    assert lst[2] == QLaurent({0: 1})


def test_tpoly_helpers():
    prod = tpoly_mul([F(1), F(1)], [F(1), F(-1)])
    assert prod == [F(1), F(0), F(-1)]
    q, r = tpoly_divmod([F(1), F(0), F(-1)], [F(1), F(1)])
    assert q == [F(1), F(-1)] and r == []
    assert tpoly_gcd([F(1), F(0), F(-1)], [F(1), F(1)]) == [F(1), F(1)]
    assert tpoly_gcd([F(1), F(1)], [F(1), F(-1)]) == [F(1)]
