from math import comb

import pytest

from qzeta import (
    BraidedSet,
    BudgetExceeded,
    QLaurent,
    check_braid_relation,
    fk_reference_series,
    flip_set,
    from_conjugacy_class,
    hilbert_dims,
    hilbert_dims_quadratic,
    invariant_dims,
    symmetrizer_rank,
    transposition_class,
)
from qzeta.braided import symmetrizer_matrix_bruteforce, symmetrizer_matrix_recursive


def test_conjugacy_class_sizes():
    assert transposition_class(3).size == 3
    assert transposition_class(4).size == comb(4, 2)
    assert transposition_class(5).size == comb(5, 2)


def test_flip_set_involutive():
    f = flip_set(3)
    assert f.is_involutive()
    assert f.sign == 1
    for x in range(3):
        for y in range(3):
            assert f.apply(x, y) == (y, x)


def test_transposition_class_not_involutive():
    assert not transposition_class(3).is_involutive()
    assert transposition_class(3).sign == -1


def test_check_braid_relation():
    x3 = transposition_class(3)
    assert check_braid_relation((x3.left, x3.right))
    f = flip_set(2)
    assert check_braid_relation((f.left, f.right))
    # non-bijective table: send both (0,1) and (1,1) to (1,1)
    left = [[0, 1], [1, 1]]
    right = [[0, 1], [1, 1]]
    assert not check_braid_relation((left, right))
    with pytest.raises(ValueError):
        BraidedSet(left, right)


def test_symmetrizer_rank_examples():
    assert symmetrizer_rank(flip_set(2), 2) == 3
    assert symmetrizer_rank(transposition_class(3), 2) == 4
    assert symmetrizer_rank(transposition_class(4), 2) == 19


def test_hilbert_dims_x2_x3_x5():
    assert list(hilbert_dims(transposition_class(2), 3)) == [1, 1, 0, 0]
    assert list(hilbert_dims(transposition_class(3), 4)) == [1, 3, 4, 3, 1]
    assert list(hilbert_dims(transposition_class(5), 3)) == [1, 10, 55, 220]


def test_invariant_dims():
    for n in (2, 3):
        f = flip_set(n)
        for j in range(5):
            assert invariant_dims(f, j) == comb(n + j - 1, j)
    x = transposition_class(3)
    assert invariant_dims(x, 1) == 3
    assert invariant_dims(x, 0) == 1


def test_flip_symmetrizer_equals_invariants():
    for n in (2, 3):
        f = flip_set(n)
        for j in range(5):
            assert symmetrizer_rank(f, j) == invariant_dims(f, j)


def test_budget_and_partial_results():
    x5 = transposition_class(5)
    with pytest.raises(BudgetExceeded):
        symmetrizer_rank(x5, 3, budget=50)
    partial = hilbert_dims(x5, 6, budget=1100)
    assert not partial.complete
    assert partial.achieved_degree == 3
    assert list(partial) == [1, 10, 55, 220]
    with pytest.raises(BudgetExceeded):
        invariant_dims(x5, 3, budget=50)


def test_recursion_equals_bruteforce():
    pool = [flip_set(2), flip_set(3), transposition_class(3),
            from_conjugacy_class(3, (2, 3, 1)), from_conjugacy_class(4, (2, 1, 4, 3))]
    for x in pool:
        for j in (2, 3):
            assert symmetrizer_matrix_recursive(x, j) == symmetrizer_matrix_bruteforce(x, j)


def test_degree_one_generation_bound():
    for x in (transposition_class(3), transposition_class(4)):
        dims = list(hilbert_dims(x, 4))
        for j in range(1, 5):
            assert dims[j] <= x.size * dims[j - 1]


def test_palindromic_ranges():
    assert list(hilbert_dims(transposition_class(3), 4)) == [1, 3, 4, 3, 1]
    x4 = list(hilbert_dims(transposition_class(4), 6))
    ref = [1, 6, 19, 42, 71, 96, 106]
    assert x4 == ref


def test_quadratic_variant_agreement():
    x3 = transposition_class(3)
    assert list(hilbert_dims_quadratic(x3, 5)) == list(hilbert_dims(x3, 5))
    f3 = flip_set(3)
    assert list(hilbert_dims_quadratic(f3, 4)) == [comb(3 + j - 1, j) for j in range(5)]


def test_fk_reference_series():
    r3 = fk_reference_series(3)
    assert r3.t_coeff_list() == [QLaurent({0: c}) for c in (1, 3, 4, 3, 1)]
    assert fk_reference_series(4).t_coeff(6) == QLaurent({0: 106})
    r2 = fk_reference_series(2)
    assert r2.t_coeff_list() == [QLaurent({0: 1}), QLaurent({0: 1})]
    with pytest.raises(ValueError):
        fk_reference_series(6)


def test_json_round_trip():
    x = transposition_class(3)
    text = x.to_json()
    again = BraidedSet.from_json(text)
    assert again.to_json() == text
    assert again.sign == -1
    assert again.size == 3


def test_conjugacy_class_input_validation():
    with pytest.raises(ValueError):
        from_conjugacy_class(1, (1,))
    with pytest.raises(ValueError):
        from_conjugacy_class(3, (1, 1, 2))
