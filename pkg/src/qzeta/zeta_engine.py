"""Generating-function machinery for symmetric powers of sl2 modules.

c_m(t, q) collects the multiplicities of V_p inside S^j(V_m) as the
coefficient of t^j q^p.  Three independent routes produce it (the
Cayley-Sylvester formula, positive-part extraction from the zeta closed
form, and the two-step recursion in m), and the (g, h) functional-equation
form is fitted from the series by exact linear algebra.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ExactDivisionError, FitFailed, NoSolution, QZetaError
from .linalg import solve_linear
from .qlaurent import QLaurent
from .qtpoly import FactoredRatQT, QTPoly, tpoly_divmod, tpoly_gcd, tpoly_trim
from .sl2 import Sl2Decomposition, cs_sym_power
from .tseries import TSeries, geometric_series
from .weyl import zeta_cn_closed

_Q = QLaurent({1: 1})
_QINV = QLaurent({-1: 1})
_Q_MINUS_QINV = QLaurent({1: 1, -1: -1})


class CmSeries:
    """Truncated expansion of c_m(t, q); t^j coefficient is sum_p c_m^j_p q^p.

    Construction validates the support constraints that make the positive
    -part extraction sound: at t^j the q-exponents are integers in [0, jm]
    of parity jm mod 2, with positive integer coefficients.
    """

    __slots__ = ("m", "order", "table")

    def __init__(self, m: int, order: int, table):
        self.m = m
        self.order = order
        self.table = list(table)
        if len(self.table) != order + 1:
            raise ValueError("table length must be order + 1")
        for j, ql in enumerate(self.table):
            for e, c in ql.items():
                if not isinstance(e, int) or e < 0 or e > j * m or (j * m - e) % 2:
                    raise QZetaError(
                        f"invalid CmSeries: t^{j} has q-exponent {e} outside the CS support"
                    )
                if c != int(c) or c <= 0:
                    raise QZetaError(f"invalid CmSeries: t^{j} q^{e} multiplicity {c}")

    def coeff(self, j: int) -> QLaurent:
        return self.table[j]

    def multiplicity(self, j: int, p: int) -> int:
        return int(self.table[j].coeff(p))

    def to_tseries(self) -> TSeries:
        return TSeries(self.order, list(self.table))

    def truncate(self, order: int) -> "CmSeries":
        if order > self.order:
            raise IndexError("cannot extend a CmSeries")
        return CmSeries(self.m, order, self.table[: order + 1])

    def __eq__(self, other):
        if not isinstance(other, CmSeries):
            return NotImplemented
        return (self.m, self.order, self.table) == (other.m, other.order, other.table)

    def __repr__(self):
        return f"CmSeries(m={self.m}, order={self.order})"


class GHPair:
    """The (g_m, h_m) pair of the functional-equation form c_m = g/(h eta_m)."""

    __slots__ = ("m", "g", "h")

    def __init__(self, m: int, g: QTPoly, h: QTPoly):
        if g.t_coeff(0) != QLaurent.one():
            raise ValueError("g must have value 1 at t = 0")
        if h.t_coeff(0) != QLaurent.one() or any(a != 0 for (a, _b), _c in h.items()):
            raise ValueError("h must be a polynomial in t alone with h(0) = 1")
        self.m = m
        self.g = g
        self.h = h

    def h_coeffs(self):
        return [Fraction(self.h.coeff(0, b)) for b in range(self.h.t_degree() + 1)]

    def __eq__(self, other):
        if not isinstance(other, GHPair):
            return NotImplemented
        return (self.m, self.g, self.h) == (other.m, other.g, other.h)

    def __repr__(self):
        return f"GHPair(m={self.m}, g={self.g}, h={self.h})"


# -- closed forms and series routes -----------------------------------------


def zeta_vm_closed(m: int) -> FactoredRatQT:
    """Zeta of the m+1 dimensional irreducible: same product as for m+1 braided points."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return zeta_cn_closed(m + 1)


def cm_series_cs(m: int, order: int) -> CmSeries:
    """c_m(t, q) assembled degreewise from the Cayley-Sylvester decomposition."""
    table = []
    for j in range(order + 1):
        dec = cs_sym_power(m, j)
        table.append(QLaurent({p: mult for p, mult in dec.parts.items()}))
    return CmSeries(m, order, table)


def zeta_from_cm(c: CmSeries) -> TSeries:
    """(q c_m(t,q) - q^-1 c_m(t,q^-1)) / (q - q^-1), coefficientwise in t."""
    out = []
    for ql in c.table:
        num = _Q * ql - _QINV * ql.invert_q()
        try:
            out.append(num.exact_div(_Q_MINUS_QINV))
        except ExactDivisionError as exc:
            raise QZetaError("invalid CmSeries: coefficient not divisible by q - q^-1") from exc
    return TSeries(c.order, out)


def cm_from_zeta(m: int, z: TSeries) -> CmSeries:
    """Recover c_m from a zeta expansion by positive-part extraction.

    Per t-degree: multiply by (q - q^-1); the q^0 part must cancel exactly
    (the two numerator terms have disjoint strictly-positive/negative
    support); the strictly positive part divided by q is the coefficient.
    """
    table = []
    for j in range(z.order + 1):
        w = _Q_MINUS_QINV * z.coeff(j)
        if not w.parts("zero").is_zero:
            raise QZetaError(f"q^0 part of (q - q^-1) zeta_{j} does not vanish")
        pos = w.parts("strictly_positive")
        table.append(pos * _QINV)
    c = CmSeries(m, z.order, table)
    if zeta_from_cm(c) != z:
        raise QZetaError("round-trip mismatch: extracted c_m does not reproduce the zeta series")
    return c


def cm_recursion_step(m: int, prev: CmSeries, order: int) -> CmSeries:
    """One step of the two-step recursion: c_m from c_{m-2}.

    All rational functions in t are expanded as truncated power series:
      c_m = c_{m-2}/((1-q^m t)(1-q^-m t))
            - 1/(1-t^2) [ q^-m t/(1-q^-m t) sum_p c_{m-2}(t)_p q^p (q^-m t)^floor(p/m)
                        + q^-2/(1-q^m t)   sum_p c_{m-2}(t)_p q^-p (q^m t)^ceil((p+2)/m) ].
    """
    if m < 2:
        raise ValueError("recursion needs m >= 2")
    if prev.m != m - 2:
        raise ValueError(f"prev must be a CmSeries for m-2 = {m - 2}")
    if prev.order < order:
        raise QZetaError(f"prev order {prev.order} insufficient for requested order {order}")

    geom_plus = geometric_series(m, order)
    geom_minus = geometric_series(-m, order)
    prev_s = TSeries(order, prev.table[: order + 1])
    t1 = prev_s * geom_plus * geom_minus

    # transpose prev into per-exponent t-series
    by_p: dict[int, list] = {}
    for j, ql in enumerate(prev.table[: order + 1]):
        for p, coeff in ql.items():
            by_p.setdefault(p, [0] * (order + 1))[j] = coeff

    s2 = TSeries(order)
    s3 = TSeries(order)
    for p, coeffs in by_p.items():
        ser = TSeries(order, [QLaurent({0: c}) if c else QLaurent() for c in coeffs])
        fl = p // m
        s2 = s2 + ser.shift_t(fl, QLaurent({p - m * fl: 1}))
        ce = -((-(p + 2)) // m)
        s3 = s3 + ser.shift_t(ce, QLaurent({-p + m * ce: 1}))

    inv_1mt2 = TSeries(order, [QLaurent.one() if j % 2 == 0 else QLaurent() for j in range(order + 1)])
    t2 = (s2 * geom_minus).shift_t(1, _QINV.q_power_substitute(m)) * inv_1mt2
    t3 = (s3 * geom_plus) * QLaurent({-2: 1}) * inv_1mt2

    result = t1 - t2 - t3
    return CmSeries(m, order, result.coeffs())


# -- functional equation form -------------------------------------------------


def eta_m(m: int) -> QTPoly:
    """prod (1 - q^{2i} t) over i = 1..m/2 (even m) or (1 - q^{2i+1} t) over i = 0..(m-1)/2 (odd)."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if m % 2 == 0:
        exps = [2 * i for i in range(1, m // 2 + 1)]
    else:
        exps = [2 * i + 1 for i in range((m - 1) // 2 + 1)]
    acc = QTPoly.one()
    for e in exps:
        acc = acc * QTPoly({(0, 0): 1, (e, 1): -1})
    return acc


def verify_functional_eq(m: int, gh: GHPair) -> bool:
    """Check q g(t,q) eta(t,q^-1) - q^-1 g(t,q^-1) eta(t,q) = (q - q^-1) h(t) [1/(1-t) if m even].

    Verified as an exact polynomial identity, multiplying through by (1 - t)
    in the even case.
    """
    eta = eta_m(m)
    qq = QTPoly({(1, 0): 1})
    qq_inv = QTPoly({(-1, 0): 1})
    lhs = qq * gh.g * eta.invert_q() - qq_inv * gh.g.invert_q() * eta
    rhs = (qq - qq_inv) * gh.h
    if m % 2 == 0:
        lhs = lhs * QTPoly({(0, 0): 1, (0, 1): -1})
    return lhs == rhs


def fit_gh(m: int, c: CmSeries | None = None, max_h_degree: int = 40) -> GHPair:
    """Fit the (g_m, h_m) pair of Lemma-form c_m = g/(h eta_m) from the series.

    deg_t(h) is searched upward; for each candidate the t-degree of g is
    forced by the rational t-degree -(m+1), h is solved from the linear
    system requiring (c eta h) to vanish beyond deg_t(g), and the candidate
    is accepted only if the q-degree claim, the functional equation, and a
    round-trip series comparison all hold.
    """
    if m < 2:
        raise ValueError("fit_gh applies for m >= 2")
    eta = eta_m(m)
    deg_eta_t = eta.t_degree() if not eta.is_zero else 0
    deg_eta_q = eta.q_degree()
    attempted = []
    for dh in range(1, max_h_degree + 1):
        dg = dh + deg_eta_t - (m + 1)
        if dg < 0:
            continue
        order = dg + dh + 6
        if c is not None and c.order < order:
            attempted.append((dh, dg))
            continue
        cm = c.truncate(order) if c is not None else cm_series_cs(m, order)
        ceta = cm.to_tseries() * eta.to_tseries(order)
        attempted.append((dh, dg))
        h = _solve_h(ceta, dh, dg, order)
        if h is None:
            continue
        # g = (c eta h) truncated at dg; tail vanishing beyond order is
        # implied by the equations, re-checked here.
        g_coeffs = []
        ok = True
        for j in range(order + 1):
            acc = QLaurent()
            for k in range(min(dh, j) + 1):
                if h[k]:
                    acc = acc + ceta.coeff(j - k) * h[k]
            if j <= dg:
                g_coeffs.append(acc)
            elif not acc.is_zero:
                ok = False
                break
        if not ok:
            continue
        g = QTPoly.from_qlaurent_t_coeffs(g_coeffs)
        if g.is_zero or g.q_degree() != deg_eta_q - 2:
            continue
        g, h = _strip_common_t_factor(g, h)
        gh = GHPair(m, g, QTPoly.from_t_coeffs(h))
        if not verify_functional_eq(m, gh):
            continue
        if not _roundtrip_ok(gh, cm):
            continue
        return gh
    raise FitFailed(f"no (g, h) found for m={m}; attempted (deg h, deg g) bounds: {attempted}")


def _solve_h(ceta: TSeries, dh: int, dg: int, order: int):
    """Solve sum_k h_k (c eta)_{j-k} = 0 for dg < j <= order, h_0 = 1."""
    rows = []
    rhs = []
    for j in range(dg + 1, order + 1):
        support = set()
        for k in range(min(dh, j) + 1):
            support.update(e for e, _ in ceta.coeff(j - k).items())
        for e in sorted(support):
            rows.append([ceta.coeff(j - k).coeff(e) if j - k >= 0 else 0 for k in range(1, dh + 1)])
            rhs.append(-ceta.coeff(j).coeff(e))
    try:
        sol = solve_linear(rows, rhs)
    except NoSolution:
        return None
    if not sol.unique:
        return None
    return [Fraction(1)] + list(sol.values)


def _strip_common_t_factor(g: QTPoly, h):
    """Divide out any common t-polynomial factor of h and all q-slices of g."""
    q_exps = sorted({a for (a, _b), _c in g.items()})
    common = tpoly_trim([Fraction(x) for x in h])
    for e in q_exps:
        slice_coeffs = [Fraction(g.coeff(e, b)) for b in range(g.t_degree() + 1)]
        common = tpoly_gcd(common, slice_coeffs)
        if len(common) <= 1:
            return g, h
    quot_h, rem = tpoly_divmod([Fraction(x) for x in h], common)
    assert not rem
    # renormalize so h(0) = 1; the same rescaling applies inversely to g
    scale = quot_h[0]
    quot_h = [x / scale for x in quot_h]
    new_g_terms = {}
    for e in q_exps:
        slice_coeffs = [Fraction(g.coeff(e, b)) for b in range(g.t_degree() + 1)]
        q_slice, rem = tpoly_divmod(slice_coeffs, common)
        assert not rem
        for b, coeff in enumerate(q_slice):
            if coeff:
                new_g_terms[(e, b)] = coeff / scale
    return QTPoly(new_g_terms), quot_h


def _roundtrip_ok(gh: GHPair, cm: CmSeries) -> bool:
    """Series check: g/(h eta) reproduces the input c_m expansion."""
    order = cm.order
    denom = (gh.h * eta_m(gh.m)).to_tseries(order)
    series = gh.g.to_tseries(order) * denom.invert_unit()
    return series == cm.to_tseries()


# -- finite sets and direct sums ----------------------------------------------


def zeta_finite_set(n: int, regular: bool = False):
    """Zeta of n classical points: (1/(1-t))^n, or the regular-orbit variant (1+t)^n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if regular:
        acc = QTPoly.one()
        for _ in range(n):
            acc = acc * QTPoly({(0, 0): 1, (0, 1): 1})
        return acc
    if n == 0:
        return FactoredRatQT(QTPoly.one())
    return FactoredRatQT(QTPoly.one(), [((0, 1), n)])


def zeta_direct_sum(parts, order: int) -> TSeries:
    """Zeta of a direct sum is the product of the summands' zetas."""
    acc = TSeries.one(order)
    for part in parts:
        if isinstance(part, int):
            part = Sl2Decomposition.irreducible(part)
        for m, mult in part.parts.items():
            factor = zeta_vm_closed(m).expand(order)
            for _ in range(mult):
                acc = acc * factor
    return acc
