"""A-series root data and the quantum Weyl dimension formula.

Positive roots of A_{n-1} are the intervals [i..k] of simple roots, so the
inner products against a dominant weight need no Killing-form matrix:
(alpha_[i..k], Lambda + rho) = sum_{l=i..k} (lambda_l + 1) and
(alpha_[i..k], rho) = k - i + 1 (the height).
"""

from __future__ import annotations

from .qcombinat import q_binom_sym, q_int_sym
from .qlaurent import QLaurent
from .qtpoly import FactoredRatQT, QTPoly
from .tseries import TSeries


class DominantWeightA:
    """Dominant integral weight of sl_n in the fundamental-weight basis."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs):
        if n < 2:
            raise ValueError("rank parameter n must be >= 2")
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != n - 1:
            raise ValueError(f"expected {n - 1} coefficients for sl_{n}")
        if any(c < 0 for c in coeffs):
            raise ValueError("dominant weight needs non-negative coefficients")
        self.n = n
        self.coeffs = coeffs

    @classmethod
    def j_omega1(cls, n: int, j: int):
        return cls(n, [j] + [0] * (n - 2))

    def __repr__(self):
        return f"DominantWeightA(n={self.n}, {self.coeffs})"


def weyl_qdim_prime(w: DominantWeightA) -> QLaurent:
    """Multiplicative braided dimension of V(Lambda) by the q-Weyl product.

    Product over positive roots of ((alpha, Lambda+rho))_q / ((alpha, rho))_q,
    computed as one exact Laurent division of the two factor products.
    """
    num = QLaurent.one()
    den = QLaurent.one()
    n = w.n
    for i in range(1, n):
        for k in range(i, n):
            pairing = sum(w.coeffs[l - 1] + 1 for l in range(i, k + 1))
            num = num * q_int_sym(pairing)
            den = den * q_int_sym(k - i + 1)
    return num.exact_div(den)


def zeta_cn_closed(n: int) -> FactoredRatQT:
    """Closed form of the braided zeta of n points: prod 1/(1 - q^j t), j = -(n-1)..(n-1) step 2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return FactoredRatQT(QTPoly.one(), [((j, 1), 1) for j in range(-(n - 1), n, 2)])


def zeta_cn_series(n: int, order: int) -> TSeries:
    """Series route: coefficient of t^j is the symmetric q-binomial (n+j-1 choose j)_q."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if order < 0:
        raise ValueError("order must be non-negative")
    return TSeries(order, [q_binom_sym(n + j - 1, j) for j in range(order + 1)])
