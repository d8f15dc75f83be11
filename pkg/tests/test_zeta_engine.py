from fractions import Fraction as F

import pytest

from qzeta import (
    CmSeries,
    GHPair,
    QLaurent,
    QTPoly,
    QZetaError,
    Sl2Decomposition,
    cm_from_zeta,
    cm_recursion_step,
    cm_series_cs,
    eta_m,
    fit_gh,
    q_int_sym,
    verify_functional_eq,
    zeta_direct_sum,
    zeta_finite_set,
    zeta_from_cm,
    zeta_vm_closed,
)
from qzeta.qtpoly import FactoredRatQT
from qzeta.refdata import reference_cm_closed, reference_gh


def test_zeta_vm_closed_structure():
    assert zeta_vm_closed(1).factors == (((-1, 1), 1), ((1, 1), 1))
    assert zeta_vm_closed(0).factors == (((0, 1), 1),)
    assert zeta_vm_closed(3).factors == (((-3, 1), 1), ((-1, 1), 1), ((1, 1), 1), ((3, 1), 1))


def test_cm_series_low_cases():
    c1 = cm_series_cs(1, 5)
    assert all(c1.coeff(j) == QLaurent({j: 1}) for j in range(6))
    c2 = cm_series_cs(2, 2)
    assert c2.coeff(0) == QLaurent({0: 1})
    assert c2.coeff(1) == QLaurent({2: 1})
    assert c2.coeff(2) == QLaurent({4: 1, 0: 1})
    c0 = cm_series_cs(0, 4)
    assert all(c0.coeff(j) == QLaurent({0: 1}) for j in range(5))


def test_zeta_from_cm():
    z1 = zeta_from_cm(cm_series_cs(1, 6))
    assert all(z1.coeff(j) == q_int_sym(j + 1) for j in range(7))
    z0 = zeta_from_cm(cm_series_cs(0, 4))
    assert all(z0.coeff(j) == QLaurent({0: 1}) for j in range(5))
    assert zeta_from_cm(cm_series_cs(2, 20)) == zeta_vm_closed(2).expand(20)


def test_cm_from_zeta():
    got = cm_from_zeta(1, zeta_vm_closed(1).expand(3))
    assert [got.coeff(j) for j in range(4)] == [QLaurent({j: 1}) for j in range(4)]
    got0 = cm_from_zeta(0, zeta_vm_closed(0).expand(5))
    assert all(got0.coeff(j) == QLaurent({0: 1}) for j in range(6))
    assert cm_from_zeta(2, zeta_vm_closed(2).expand(12)) == cm_series_cs(2, 12)


def test_cm_validation():
    with pytest.raises(QZetaError):
        CmSeries(2, 1, [QLaurent({0: 1}), QLaurent({1: 1})])      # parity violation
    with pytest.raises(QZetaError):
        CmSeries(2, 1, [QLaurent({0: 1}), QLaurent({2: F(1, 2)})])  # non-integer
    with pytest.raises(QZetaError):
        CmSeries(1, 1, [QLaurent({0: 1}), QLaurent({3: 1})])      # support too wide


def test_recursion_steps():
    for m in (2, 3, 4, 5, 6):
        prev = cm_series_cs(m - 2, 10)
        assert cm_recursion_step(m, prev, 10) == cm_series_cs(m, 10), m
    with pytest.raises(QZetaError):
        cm_recursion_step(4, cm_series_cs(2, 5), 10)
    with pytest.raises(ValueError):
        cm_recursion_step(4, cm_series_cs(1, 10), 10)


def test_eta_m():
    assert eta_m(4) == QTPoly({(0, 0): 1, (2, 1): -1, (4, 1): -1, (6, 2): 1})
    q1 = QTPoly({(0, 0): 1, (1, 1): -1})
    q3 = QTPoly({(0, 0): 1, (3, 1): -1})
    q5 = QTPoly({(0, 0): 1, (5, 1): -1})
    assert eta_m(5) == q1 * q3 * q5
    assert eta_m(0) == QTPoly.one()


def test_functional_equation_cases():
    one = QTPoly.one()
    assert verify_functional_eq(1, GHPair(1, one, one))
    assert verify_functional_eq(2, GHPair(2, one, QTPoly({(0, 0): 1, (0, 2): -1})))
    gh5 = reference_gh(5)
    assert verify_functional_eq(5, gh5)
    perturbed = GHPair(5, gh5.g + QTPoly({(2, 3): 1}), gh5.h)
    assert not verify_functional_eq(5, perturbed)


def test_fit_small():
    gh3 = fit_gh(3)
    assert gh3.g == QTPoly({(0, 0): 1, (1, 1): -1, (2, 2): 1})
    assert gh3.h == QTPoly({(0, 0): 1, (0, 4): -1})
    gh2 = fit_gh(2)
    assert gh2.g == QTPoly.one()
    assert gh2.h == QTPoly({(0, 0): 1, (0, 2): -1})


def test_fit_matches_reference():
    gh5 = fit_gh(5)
    ref = reference_gh(5)
    assert gh5.g == ref.g and gh5.h == ref.h


def test_reference_closed_forms_match_series():
    for m in (3, 4):
        assert reference_cm_closed(m).expand(14) == cm_series_cs(m, 14).to_tseries()


def test_finite_set():
    plain = zeta_finite_set(3)
    assert isinstance(plain, FactoredRatQT)
    assert plain.factors == (((0, 1), 3),)
    regular = zeta_finite_set(3, regular=True)
    assert regular == QTPoly({(0, 0): 1, (0, 1): 3, (0, 2): 3, (0, 3): 1})
    assert zeta_finite_set(0) == FactoredRatQT(QTPoly.one())
    assert zeta_finite_set(0, regular=True) == QTPoly.one()


def test_direct_sum():
    v0 = Sl2Decomposition({0: 1})
    assert zeta_direct_sum([v0], 3) == zeta_vm_closed(0).expand(3)
    v1v1 = zeta_direct_sum([Sl2Decomposition({1: 2})], 4)
    single = zeta_vm_closed(1).expand(4)
    assert v1v1 == single * single
    mixed = zeta_direct_sum([Sl2Decomposition({0: 1}), Sl2Decomposition({2: 1})], 1)
    assert mixed.coeff(1) == QLaurent({0: 1}) + q_int_sym(3)


def test_lambda_ring_spot():
    a = Sl2Decomposition({1: 1, 3: 1})
    b = Sl2Decomposition({2: 1})
    assert zeta_direct_sum([a, b], 6) == zeta_direct_sum([a], 6) * zeta_direct_sum([b], 6)
