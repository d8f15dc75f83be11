"""Laurent polynomials in q with exact rational coefficients and exponents.

The coefficient type used everywhere else in the library.  Exponents are
exact rationals, not just integers: braided dimensions of odd-weight sl2
modules involve q^(-j(j+2)/2), which is half-integral.  Values are stored
as a finitely supported map exponent -> coefficient with no zero entries.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, ExactDivisionError

Exp = int | Fraction
Coeff = int | Fraction


def _norm_num(x):
    """Collapse integral Fractions to int (canonical dict keys/values)."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


class QLaurent:
    """Immutable Laurent polynomial in q over the rationals."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                if c == 0:
                    continue
                e = _norm_num(e if isinstance(e, (int, Fraction)) else Fraction(e))
                clean[e] = clean.get(e, 0) + c
                if clean[e] == 0:
                    del clean[e]
        self._terms = {e: _norm_num(c) for e, c in clean.items() if c != 0}

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "QLaurent":
        return cls()

    @classmethod
    def one(cls) -> "QLaurent":
        return cls({0: 1})

    @classmethod
    def constant(cls, c: Coeff) -> "QLaurent":
        return cls({0: c})

    @classmethod
    def q_power(cls, e: Exp, c: Coeff = 1) -> "QLaurent":
        return cls({e: c})

    # -- inspection ---------------------------------------------------

    def items(self):
        return self._terms.items()

    def coeff(self, e: Exp) -> Coeff:
        return self._terms.get(_norm_num(e), 0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def degree(self) -> Exp:
        """Largest exponent; raises on the zero polynomial."""
        if not self._terms:
            raise ValueError("degree of zero polynomial")
        return max(self._terms)

    def valuation(self) -> Exp:
        if not self._terms:
            raise ValueError("valuation of zero polynomial")
        return min(self._terms)

    def support(self):
        return sorted(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QLaurent({0: other})
        if not isinstance(other, QLaurent):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        res = QLaurent.__new__(QLaurent)
        res._terms = {e: _norm_num(c) for e, c in out.items()}
        return res

    __radd__ = __add__

    def __neg__(self):
        res = QLaurent.__new__(QLaurent)
        res._terms = {e: -c for e, c in self._terms.items()}
        return res

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QLaurent({0: other})
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return QLaurent()
            res = QLaurent.__new__(QLaurent)
            res._terms = {e: _norm_num(c * other) for e, c in self._terms.items()}
            return res
        if not isinstance(other, QLaurent):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                elif e in out:
                    del out[e]
        res = QLaurent.__new__(QLaurent)
        res._terms = {_norm_num(e): _norm_num(c) for e, c in out.items() if c}
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers: use exact_div against one()")
        out = QLaurent.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QLaurent({0: other})
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- substitutions ------------------------------------------------

    def invert_q(self) -> "QLaurent":
        """q -> q^-1: negate all exponents."""
        res = QLaurent.__new__(QLaurent)
        res._terms = {_norm_num(-e): c for e, c in self._terms.items()}
        return res

    def q_power_substitute(self, k: Exp) -> "QLaurent":
        """q -> q^k: multiply all exponents by k (k may be rational, nonzero)."""
        if k == 0:
            raise ValueError("q -> q^0 collapses the variable")
        return QLaurent({e * k: c for e, c in self._terms.items()})

    def eval_at(self, r: Fraction) -> Fraction:
        """Exact evaluation at a nonzero rational (integer exponents only)."""
        r = Fraction(r)
        if r == 0:
            if any(e < 0 for e in self._terms):
                raise DivisionByZero("evaluation at q=0 with negative exponents")
            return Fraction(self._terms.get(0, 0))
        total = Fraction(0)
        for e, c in self._terms.items():
            if isinstance(e, Fraction):
                raise ValueError("cannot evaluate fractional exponent at a rational")
            total += c * r**e
        return total

    # -- support restriction -------------------------------------------

    def parts(self, which: str) -> "QLaurent":
        """Restrict support: strictly_positive | non_negative | zero | strictly_negative."""
        preds = {
            "strictly_positive": lambda e: e > 0,
            "non_negative": lambda e: e >= 0,
            "zero": lambda e: e == 0,
            "strictly_negative": lambda e: e < 0,
        }
        try:
            pred = preds[which]
        except KeyError:
            raise ValueError(f"unknown part {which!r}") from None
        res = QLaurent.__new__(QLaurent)
        res._terms = {e: c for e, c in self._terms.items() if pred(e)}
        return res

    # -- exact division -------------------------------------------------

    def exact_div(self, other: "QLaurent") -> "QLaurent":
        """Exact Laurent division; raises ExactDivisionError on nonzero remainder."""
        if other.is_zero:
            raise DivisionByZero("division by zero QLaurent")
        if self.is_zero:
            return QLaurent()
        vb, db = other.valuation(), other.degree()
        blow = other._terms[vb]
        rem = dict(self._terms)
        quot = {}
        # divide from the lowest exponent upwards; quotient exponents are
        # bounded by deg(self) - deg(other), which bounds the loop.
        max_qexp = self.degree() - db
        while rem:
            e_low = min(rem)
            qe = e_low - vb
            if qe > max_qexp:
                raise ExactDivisionError("nonzero remainder in exact_div")
            qc = Fraction(rem[e_low]) / blow
            quot[qe] = _norm_num(qc)
            for e2, c2 in other._terms.items():
                e = qe + e2
                v = rem.get(e, 0) - qc * c2
                if v:
                    rem[e] = v
                elif e in rem:
                    del rem[e]
        res = QLaurent.__new__(QLaurent)
        res._terms = {_norm_num(e): c for e, c in quot.items() if c}
        return res

    def monomial_content(self):
        """(exponent, coefficient) of the common monomial factor, for a != 0.

        The coefficient is the positive gcd of all coefficients (as a
        Fraction), signed by the lowest term; the exponent is the valuation.
        """
        if self.is_zero:
            raise ValueError("content of zero")
        v = self.valuation()
        num_gcd = 0
        den_lcm = 1
        for c in self._terms.values():
            f = Fraction(c)
            num_gcd = _gcd(num_gcd, abs(f.numerator))
            den_lcm = _lcm(den_lcm, f.denominator)
        g = Fraction(num_gcd, den_lcm)
        if self._terms[v] < 0:
            g = -g
        return v, g

    def primitive(self) -> "QLaurent":
        """Divide out the monomial content: lowest term becomes positive, exponent 0."""
        v, g = self.monomial_content()
        res = QLaurent.__new__(QLaurent)
        res._terms = {_norm_num(e - v): _norm_num(Fraction(c) / g) for e, c in self._terms.items()}
        return res

    # -- rendering ------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        bits = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            if e == 0:
                term = str(c)
            else:
                qs = "q" if e == 1 else f"q^{e}"
                if c == 1:
                    term = qs
                elif c == -1:
                    term = f"-{qs}"
                else:
                    term = f"{c}*{qs}"
            bits.append(term)
        out = bits[0]
        for term in bits[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self):
        return f"QLaurent({self._terms!r})"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _lcm(a, b):
    return a * b // _gcd(a, b) if a and b else a or b
