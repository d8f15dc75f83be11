"""Truncated power series in t with QLaurent coefficients.

A series carries its truncation order explicitly.  Binary operations
truncate to the minimum order of the operands, and reading a coefficient
beyond the stored order is an error rather than a silent zero.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotAUnit
from .qlaurent import QLaurent


class TSeries:
    """Power series in t known through t^order, coefficients QLaurent."""

    __slots__ = ("order", "_coeffs")

    def __init__(self, order: int, coeffs=None):
        if order < 0:
            raise ValueError("order must be non-negative")
        self.order = order
        if coeffs is None:
            self._coeffs = [QLaurent() for _ in range(order + 1)]
        else:
            coeffs = list(coeffs)
            if len(coeffs) != order + 1:
                raise ValueError("coefficient list must have length order+1")
            self._coeffs = [c if isinstance(c, QLaurent) else QLaurent({0: c}) for c in coeffs]

    @classmethod
    def one(cls, order: int) -> "TSeries":
        s = cls(order)
        s._coeffs[0] = QLaurent.one()
        return s

    @classmethod
    def from_coeffs(cls, coeffs) -> "TSeries":
        coeffs = list(coeffs)
        return cls(len(coeffs) - 1, coeffs)

    def coeff(self, j: int) -> QLaurent:
        if j < 0:
            return QLaurent()
        if j > self.order:
            raise IndexError(f"coefficient t^{j} beyond stored order {self.order}")
        return self._coeffs[j]

    def coeffs(self):
        return list(self._coeffs)

    def truncate(self, order: int) -> "TSeries":
        if order > self.order:
            raise IndexError(f"cannot extend order {self.order} to {order}")
        return TSeries(order, self._coeffs[: order + 1])

    def __add__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TSeries(n, [self._coeffs[j] + other._coeffs[j] for j in range(n + 1)])

    def __sub__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TSeries(n, [self._coeffs[j] - other._coeffs[j] for j in range(n + 1)])

    def __neg__(self):
        return TSeries(self.order, [-c for c in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QLaurent)):
            return TSeries(self.order, [c * other for c in self._coeffs])
        if not isinstance(other, TSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = [QLaurent() for _ in range(n + 1)]
        for i in range(min(self.order, n) + 1):
            a = self._coeffs[i]
            if a.is_zero:
                continue
            for k in range(min(other.order, n - i) + 1):
                b = other._coeffs[k]
                if not b.is_zero:
                    out[i + k] = out[i + k] + a * b
        return TSeries(n, out)

    __rmul__ = __mul__

    def shift_t(self, k: int, qfactor: QLaurent | None = None) -> "TSeries":
        """Multiply by t^k (and optionally a QLaurent), keeping the same order."""
        out = [QLaurent() for _ in range(self.order + 1)]
        for j, c in enumerate(self._coeffs):
            if j + k <= self.order and not c.is_zero:
                out[j + k] = c if qfactor is None else c * qfactor
        return TSeries(self.order, out)

    def invert_unit(self) -> "TSeries":
        """Invert a series whose constant term is a QLaurent monomial.

        Writes s = c0 (1 + r) and inverts (1 + r) by the geometric recursion.
        """
        c0 = self._coeffs[0]
        if c0.is_zero or not c0.is_monomial():
            raise NotAUnit("constant coefficient is not an invertible monomial")
        (e, c), = c0.items()
        c0_inv = QLaurent({-e: Fraction(1, 1) / c})
        # u = 1 + r  with  r = c0_inv * (s - c0)
        n = self.order
        r = [QLaurent()] + [c0_inv * cc for cc in self._coeffs[1:]]
        # inv[j] satisfies inv[0]=1, inv[j] = -sum_{i=1..j} r[i] * inv[j-i]
        inv = [QLaurent.one()]
        for j in range(1, n + 1):
            acc = QLaurent()
            for i in range(1, j + 1):
                if not r[i].is_zero:
                    acc = acc + r[i] * inv[j - i]
            inv.append(-acc)
        return TSeries(n, [c * c0_inv for c in inv])

    def __eq__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.order == other.order and self._coeffs == other._coeffs

    def __str__(self):
        bits = []
        for j, c in enumerate(self._coeffs):
            if c.is_zero:
                continue
            cs = str(c)
            if j == 0:
                bits.append(cs)
            else:
                ts = "t" if j == 1 else f"t^{j}"
                bits.append(ts if cs == "1" else f"({cs}) {ts}")
        return " + ".join(bits) if bits else "0"

    def __repr__(self):
        return f"TSeries(order={self.order}, {self})"


def geometric_series(qexp, order: int, texp: int = 1) -> TSeries:
    """Expansion of 1/(1 - q^qexp * t^texp) through t^order."""
    out = [QLaurent() for _ in range(order + 1)]
    k = 0
    while k * texp <= order:
        out[k * texp] = QLaurent({qexp * k: 1})
        k += 1
    return TSeries(order, out)
