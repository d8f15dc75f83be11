"""Regularized quantum-sphere zeta coefficients.

The Peter-Weyl index s runs over an infinite sum of irreducibles; each
coefficient of zeta_t(C_q[S^2]) is obtained by merging the summands over s
into a single expression first and only then summing the geometric tails
formally.  This module hard-codes exactly that grouping (the proof's
"minimal prescription") and exposes no general re-grouping API: combining
divergent series differently gives different answers.

Summands live in SExpr: finite combinations coeff(q) * s^d * q^(a s) with
d <= 2.  Infinite sums reject any s-independent term with a nonzero
coefficient instead of assigning it a value.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivergentSum, QZetaError
from .qlaurent import QLaurent
from .qrational import QRational
from .qtpoly import FactoredRatQT
from .zeta_engine import zeta_vm_closed

MAX_S_DEGREE = 2


def _qr(num_terms, den_terms=None) -> QRational:
    den = QLaurent(den_terms) if den_terms else QLaurent.one()
    return QRational(QLaurent(num_terms), den)


class SExpr:
    """Merged summand: finite sum of coeff * s^d * q^(a s) terms, d in 0..2."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        merged: dict[tuple[int, int], QRational] = {}
        for coeff, d, a in terms:
            if not isinstance(coeff, QRational):
                coeff = QRational.from_laurent(coeff) if isinstance(coeff, QLaurent) else QRational.from_scalar(coeff)
            if d < 0 or d > MAX_S_DEGREE:
                raise QZetaError(f"s-degree {d} outside the supported range 0..{MAX_S_DEGREE}")
            key = (int(d), int(a))
            merged[key] = merged.get(key, QRational.zero()) + coeff
        self.terms = tuple(
            (coeff, d, a) for (d, a), coeff in sorted(merged.items()) if not coeff.is_zero
        )

    @classmethod
    def zero(cls):
        return cls()

    def __add__(self, other):
        if not isinstance(other, SExpr):
            return NotImplemented
        return SExpr(self.terms + other.terms)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QLaurent, QRational)):
            return SExpr([(c * other, d, a) for c, d, a in self.terms])
        if not isinstance(other, SExpr):
            return NotImplemented
        out = []
        for c1, d1, a1 in self.terms:
            for c2, d2, a2 in other.terms:
                if d1 + d2 > MAX_S_DEGREE:
                    raise QZetaError(f"s-degree {d1 + d2} exceeds cap {MAX_S_DEGREE}")
                out.append((c1 * c2, d1 + d2, a1 + a2))
        return SExpr(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SExpr):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        bits = [f"({c}) s^{d} q^({a}s)" for c, d, a in self.terms]
        return "SExpr[" + " + ".join(bits) + "]" if bits else "SExpr[0]"


def q_int_sym_sexpr(slope: int, shift: int) -> SExpr:
    """(slope*s + shift)_q as an SExpr in s: (q^(slope s + shift) - q^-(...))/(q - q^-1)."""
    inv_qmq = _qr({0: 1}, {1: 1, -1: -1})
    return SExpr([
        (inv_qmq * QLaurent({shift: 1}), 0, slope),
        (inv_qmq * QLaurent({-shift: -1}), 0, -slope),
    ])


# geometric sums G_r(x) = sum_{k>=1} k^r x^k
def _geom_k(r: int, a: int) -> QRational:
    x = QRational.from_laurent(QLaurent({a: 1}))
    one = QRational.one()
    if r == 0:
        return x / (one - x)
    if r == 1:
        return x / ((one - x) * (one - x))
    if r == 2:
        return x * (one + x) / ((one - x) * (one - x) * (one - x))
    raise QZetaError(f"unsupported s-degree {r}")


def _binom(n, k):
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def _sum_inf(expr: SExpr) -> QRational:
    """Formal sum over s >= 0; s-independent terms with nonzero coefficient diverge."""
    total = QRational.zero()
    for coeff, d, a in expr.terms:
        if a == 0:
            raise DivergentSum(f"s-independent term survives the merge: ({coeff}) s^{d}")
        total = total + coeff * (_geom_k(d, a) + (QRational.one() if d == 0 else QRational.zero()))
    return total


def _tail_from_splus1(expr: SExpr) -> SExpr:
    """sum_{i=s+1}^inf of each term, as an SExpr in the outer s.

    sum_{i>s} i^d x^i = x^s * sum_e C(d,e) s^e G_{d-e}(x).
    """
    out = []
    for coeff, d, a in expr.terms:
        if a == 0:
            raise DivergentSum(f"infinite tail of s-independent term ({coeff}) s^{d}")
        for e in range(d + 1):
            out.append((coeff * _binom(d, e) * _geom_k(d - e, a), e, a))
    return SExpr(out)


def _faulhaber(d: int):
    """sum_{i=0}^{s} i^d as polynomial coefficients in s (degree d+1)."""
    if d == 0:
        return {0: Fraction(1), 1: Fraction(1)}                       # s + 1
    if d == 1:
        return {1: Fraction(1, 2), 2: Fraction(1, 2)}                  # s(s+1)/2
    if d == 2:
        return {1: Fraction(1, 6), 2: Fraction(1, 2), 3: Fraction(1, 3)}
    raise QZetaError(f"unsupported s-degree {d}")


def _finite_0_to_s(expr: SExpr) -> SExpr:
    """sum_{i=0}^{s}: algebraic identity full - tail for a != 0; Faulhaber for a = 0."""
    out = []
    for coeff, d, a in expr.terms:
        if a == 0:
            for e, frac in _faulhaber(d).items():
                if e > MAX_S_DEGREE:
                    raise QZetaError(f"s-degree {e} exceeds cap {MAX_S_DEGREE}")
                out.append((coeff * frac, e, 0))
            continue
        full = _geom_k(d, a) + (QRational.one() if d == 0 else QRational.zero())
        out.append((coeff * full, 0, 0))
        for e in range(d + 1):
            out.append((coeff * _binom(d, e) * _geom_k(d - e, a) * Fraction(-1), e, a))
    return SExpr(out)


def _finite_0_to_sminus1(expr: SExpr) -> SExpr:
    """sum_{i=0}^{s-1} = sum_{i=0}^{s} minus the i = s term; empty at s = 0."""
    upper = _finite_0_to_s(expr)
    minus_at_s = SExpr([(c * Fraction(-1), d, a) for c, d, a in expr.terms])
    return upper + minus_at_s


def partial_sum(expr: SExpr, summation_range: str):
    """Closed-form summation of an SExpr over the stated range.

    Finite ranges return an SExpr in the outer variable; all_s_from_0
    returns the QRational value of the formal sum.
    """
    ranges = {
        "from_0_to_s": _finite_0_to_s,
        "from_splus1_to_inf": _tail_from_splus1,
        "from_0_to_sminus1": _finite_0_to_sminus1,
        "all_s_from_0": _sum_inf,
    }
    try:
        fn = ranges[summation_range]
    except KeyError:
        raise ValueError(f"unknown summation range {summation_range!r}") from None
    return fn(expr)


# -- the sphere computations ---------------------------------------------------


def sphere_dims() -> tuple[QRational, QRational]:
    """(dim, dim') of the quantum sphere as rational functions of q.

    dim' is summed symbolically from the Peter-Weyl decomposition
    sum_s (2s+1)_q; dim involves quadratic exponents q^(-2s(s+1)) and is
    returned as its closed form 1/(1 - q^-2), certified numerically by
    verify_dim_numeric.
    """
    dim_prime = _sum_inf(q_int_sym_sexpr(2, 1))
    dim = _qr({0: 1}, {0: 1, -2: -1})
    return dim, dim_prime


def even_part_zeta_at_pm1(m: int) -> QRational:
    """(zeta_1(V_m) + zeta_-1(V_m))/2 for odd m, as an exact rational function of q.

    Odd m keeps t = +-1 off every pole: all closed-form factors are
    1 - q^(odd) t.
    """
    if m % 2 == 0:
        raise ValueError("even-part evaluation applies to odd m only")
    closed = zeta_vm_closed(m)
    total = QRational.zero()
    for tval in (Fraction(1), Fraction(-1)):
        num = QRational.from_laurent(closed.numerator.eval_t(tval))
        den = QRational.one()
        for (a, b), mult in closed.factors:
            factor = QLaurent({0: 1}) - QLaurent({a: tval**b})
            if factor.is_zero:
                raise QZetaError(f"pole of zeta(V_{m}) at t = {tval}")
            for _ in range(mult):
                den = den * QRational.from_laurent(factor)
        total = total + num / den
    return total * Fraction(1, 2)


def sphere_zeta_coeff(k: int) -> QRational:
    """Coefficient of t^k in the regularized zeta of the quantum sphere, k <= 3.

    Groupings follow the merge-then-sum prescription: within each k all
    summands over the middle Peter-Weyl index s are combined into one SExpr
    before the infinite sum is taken.
    """
    if not 0 <= k <= 3:
        raise ValueError("coefficients are computed for k = 0..3 only")
    if k == 0:
        return QRational.one()
    two_s = q_int_sym_sexpr(2, 1)      # (2s+1)_q, also used for s' and s'' sums
    if k == 1:
        return _sum_inf(two_s)
    four_i = q_int_sym_sexpr(4, 1)     # (4i+1)_q as summand over i
    sym_sq = _finite_0_to_s(four_i)    # dim' S^2(V_2s) = sum_{i<=s} (4i+1)_q
    if k == 2:
        pairs = two_s * _tail_from_splus1(two_s)
        return _sum_inf(sym_sq + pairs)
    # k == 3: S^3 splits into S^3(V_2s) terms, S^2(V_2s) (x) V_2s' with
    # s' != s, and strictly increasing triples with middle index s.
    pure_cubes = even_part_zeta_at_pm1(3)
    other = _finite_0_to_sminus1(two_s) + _tail_from_splus1(two_s)
    mixed = sym_sq * other
    triples = two_s * _finite_0_to_sminus1(two_s) * _tail_from_splus1(two_s)
    return pure_cubes + _sum_inf(mixed + triples)


# -- numeric certificates -------------------------------------------------------


def verify_dim_numeric(q: Fraction, n_terms: int = 200, tol: Fraction = Fraction(1, 10**12)):
    """Certify dim(C_q[S^2]) = 1/(1-q^-2) at a rational q > 1 by exact partial sums.

    Returns (gap, tail_bound); the check passes when gap <= tail_bound < tol.
    The summand q^(-2s(s+1)) (2s+1)_q is bounded for s >= S by
    q^(-2s^2)/(1-q^-2), so the tail after S terms is at most
    q^(-2S^2) / ((1-q^-2)(1-q^-4S)).
    """
    q = Fraction(q)
    if q <= 1:
        raise ValueError("certificate requires q > 1")
    partial = Fraction(0)
    for s in range(n_terms):
        qint = (q ** (2 * s + 1) - q ** (-2 * s - 1)) / (q - 1 / q)
        partial += q ** (-2 * s * (s + 1)) * qint
    closed = 1 / (1 - q ** (-2))
    s0 = n_terms
    tail_bound = q ** (-2 * s0 * s0) / ((1 - q ** (-2)) * (1 - q ** (-4 * s0)))
    gap = abs(closed - partial)
    if gap > tail_bound:
        raise QZetaError(f"numeric certificate failed at q={q}: gap {float(gap)} > bound")
    if tail_bound >= tol:
        raise QZetaError(f"tail bound {float(tail_bound)} not below tolerance at q={q}")
    return gap, tail_bound


def verify_term_numeric(coeff: QRational, d: int, a: int, q: Fraction,
                        n_terms: int = 200, tol: Fraction = Fraction(1, 10**12)):
    """Certify the formal geometric sum of one SExpr term at a rational q.

    Terms whose ratio |q^a| exceeds 1 at the chosen q are checked at q^-1
    instead (the engine's formulas are exactly equivariant under q -> q^-1),
    which is the only sense in which a formally summed divergent tail admits
    a numeric certificate.  Returns (gap, tail_bound).
    """
    q = Fraction(q)
    if q <= 0 or q == 1:
        raise ValueError("need a positive rational q != 1")
    if a == 0:
        raise ValueError("s-independent terms have no geometric certificate")
    if q**a > 1:
        q = 1 / q
        coeff = coeff.invert_q()
        # same slope at the inverted point: ratio becomes q^-|a| < 1
    ratio = q**a
    cval = coeff.eval_at(q)
    partial = sum(cval * Fraction(s) ** d * ratio**s for s in range(n_terms))
    symbolic = coeff * (_geom_k(d, a) + (QRational.one() if d == 0 else QRational.zero()))
    closed = symbolic.eval_at(q)
    s0 = Fraction(n_terms)
    k_factor = [1 / (1 - ratio),
                1 / (1 - ratio) ** 2,
                (1 + ratio) / (1 - ratio) ** 3][d]
    tail_bound = abs(cval) * s0**d * ratio**n_terms * k_factor
    gap = abs(closed - partial)
    if gap > tail_bound:
        raise QZetaError(f"geometric certificate failed: gap {float(gap)} > bound {float(tail_bound)}")
    if tail_bound >= tol:
        raise QZetaError(f"tail bound {float(tail_bound)} not below tolerance")
    return gap, tail_bound


def verify_sexpr_numeric(expr: SExpr, q: Fraction, n_terms: int = 200,
                         tol: Fraction = Fraction(1, 10**12)) -> bool:
    """Run the per-term geometric certificate over a whole merged summand."""
    for coeff, d, a in expr.terms:
        if a == 0:
            continue
        verify_term_numeric(coeff, d, a, q, n_terms=n_terms, tol=tol)
    return True
