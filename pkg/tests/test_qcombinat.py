from fractions import Fraction as F
from math import comb

import pytest

from qzeta import PartitionTable, QLaurent, bounded_partitions, q_binom_sym, q_int_sym, t_bracket
from qzeta.qtpoly import QTPoly


def test_q_int_values():
    assert q_int_sym(0) == QLaurent()
    assert q_int_sym(1) == QLaurent({0: 1})
    assert q_int_sym(3) == QLaurent({2: 1, 0: 1, -2: 1})
    with pytest.raises(ValueError):
        q_int_sym(-1)


def test_q_binom_values():
    assert q_binom_sym(3, 1) == q_int_sym(3)
    # frozen from (4)_q (3)_q / (2)_q expanded by hand
    assert q_binom_sym(4, 2) == QLaurent({4: 1, 2: 1, 0: 2, -2: 1, -4: 1})
    assert q_binom_sym(7, 0) == QLaurent({0: 1})
    with pytest.raises(ValueError):
        q_binom_sym(3, 4)


def test_q_binom_palindromic_and_classical_limit():
    for n in range(9):
        for k in range(n + 1):
            b = q_binom_sym(n, k)
            assert b == b.invert_q()
            assert b == q_binom_sym(n, n - k)
            assert b.eval_at(F(1)) == comb(n, k)


def test_t_bracket():
    assert t_bracket(1) == QTPoly({(0, 0): 1})
    assert t_bracket(2) == QTPoly({(0, 0): 1, (0, 1): 1})
    assert t_bracket(3) == QTPoly({(0, 0): 1, (0, 1): 1, (0, 2): 1})
    with pytest.raises(ValueError):
        t_bracket(0)


def test_bounded_partitions_basics():
    assert bounded_partitions(-1, 3, 3) == 0
    assert bounded_partitions(0, 0, 0) == 1
    assert bounded_partitions(2, 2, 2) == 2     # {2}, {1,1}
    assert bounded_partitions(3, 2, 2) == 1     # {2,1}
    assert bounded_partitions(5, 2, 2) == 0


def test_bounded_partitions_total_count():
    for j in range(7):
        for m in range(7):
            total = sum(bounded_partitions(r, j, m) for r in range(j * m + 1))
            assert total == comb(j + m, m)


def test_grassmannian_coefficient():
    # p(r, j, m) is the coefficient of q^(jm - 2r) in (j+m choose m)_q
    for j in range(9):
        for m in range(9):
            b = q_binom_sym(j + m, m)
            for r in range(j * m + 1):
                assert bounded_partitions(r, j, m) == b.coeff(j * m - 2 * r), (r, j, m)


def test_multiplicity_monotonicity():
    for j in range(8):
        for m in range(8):
            for r in range(j * m // 2 + 1):
                diff = bounded_partitions(r, j, m) - bounded_partitions(r - 1, j, m)
                assert diff >= 0, (r, j, m)


def test_private_table_reuse():
    table = PartitionTable()
    assert table.count(4, 3, 3) == bounded_partitions(4, 3, 3)
    assert bounded_partitions(4, 3, 3, table=table) == table.count(4, 3, 3)
