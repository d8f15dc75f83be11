"""sl2 module combinatorics: symmetric powers three independent ways.

S^j(V_m) decomposes with multiplicities given by the Cayley-Sylvester
partition-count differences; a weight-counting oracle and a Newton-identity
route on characters provide two independent cross-checks.  Only
multiplicities are tracked, never explicit module maps.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BudgetExceeded
from .qcombinat import bounded_partitions
from .qlaurent import QLaurent

DEFAULT_WEIGHT_BUDGET = 200


class Sl2Decomposition:
    """Finite direct sum of irreducibles: map highest weight -> multiplicity."""

    __slots__ = ("parts",)

    def __init__(self, parts=None):
        clean = {}
        if parts:
            items = parts.items() if isinstance(parts, dict) else parts
            for m, mult in items:
                if mult < 0:
                    raise ValueError(f"negative multiplicity for V_{m}")
                if mult:
                    clean[int(m)] = clean.get(int(m), 0) + mult
        self.parts = dict(sorted(clean.items()))

    @classmethod
    def irreducible(cls, m: int, mult: int = 1):
        return cls({m: mult})

    def total_dimension(self) -> int:
        return sum(mult * (m + 1) for m, mult in self.parts.items())

    def __add__(self, other):
        out = dict(self.parts)
        for m, mult in other.parts.items():
            out[m] = out.get(m, 0) + mult
        return Sl2Decomposition(out)

    def __eq__(self, other):
        if not isinstance(other, Sl2Decomposition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(tuple(self.parts.items()))

    def __str__(self):
        if not self.parts:
            return "0"
        return " + ".join(
            f"V_{m}" if mult == 1 else f"{mult}*V_{m}" for m, mult in self.parts.items()
        )

    def __repr__(self):
        return f"Sl2Decomposition({self})"


def character(d: Sl2Decomposition) -> QLaurent:
    """Formal character: V_m contributes q^m + q^(m-2) + ... + q^-m = (m+1)_q."""
    acc = QLaurent()
    for m, mult in d.parts.items():
        acc = acc + QLaurent({m - 2 * i: mult for i in range(m + 1)})
    return acc


def peel_character(chi: QLaurent) -> Sl2Decomposition:
    """Decompose a character into highest weights, asserting non-negativity."""
    parts = {}
    rem = chi
    while not rem.is_zero:
        top = rem.degree()
        mult = rem.coeff(top)
        if not isinstance(top, int) or top < 0 or mult < 0 or mult != int(mult):
            raise ValueError(f"not a genuine sl2 character: top term {mult} q^{top}")
        mult = int(mult)
        parts[top] = mult
        rem = rem - QLaurent({top - 2 * i: mult for i in range(top + 1)})
    return Sl2Decomposition(parts)


def cs_sym_power(m: int, j: int) -> Sl2Decomposition:
    """S^j(V_m) via Cayley-Sylvester: V_{jm-2r} with multiplicity p(r,j,m) - p(r-1,j,m)."""
    if m < 0 or j < 0:
        raise ValueError("m, j must be non-negative")
    parts = {}
    for r in range(j * m // 2 + 1):
        mult = bounded_partitions(r, j, m) - bounded_partitions(r - 1, j, m)
        if mult < 0:
            raise AssertionError(f"negative CS multiplicity at (m={m}, j={j}, r={r})")
        if mult:
            parts[j * m - 2 * r] = mult
    if not parts and j * m == 0:
        parts[0] = 1
    return Sl2Decomposition(parts)


def sym_power_weight_oracle(m: int, j: int, budget: int = DEFAULT_WEIGHT_BUDGET) -> Sl2Decomposition:
    """Independent oracle: count weight multiplicities of S^j(V_m), then peel.

    N(w) = number of size-j multisets of the weights {m, m-2, ..., -m}
    summing to w; mult(V_p) = N(p) - N(p+2).
    """
    if m < 0 or j < 0:
        raise ValueError("m, j must be non-negative")
    if m * j > budget:
        raise BudgetExceeded(f"weight oracle budget: jm = {m * j} > {budget}")
    # DP over the m+1 weights, choosing a non-increasing count profile is
    # equivalent to plain multiset counting: iterate weights, add any number
    # of copies of each.  State: (#chosen, total weight).
    counts = {(0, 0): 1}
    for w in range(m, -m - 1, -2):
        new = {}
        for (cnt, tot), ways in counts.items():
            k = 0
            while cnt + k <= j:
                key = (cnt + k, tot + k * w)
                new[key] = new.get(key, 0) + ways
                k += 1
        counts = new
    weight_mult = {}
    for (cnt, tot), ways in counts.items():
        if cnt == j:
            weight_mult[tot] = weight_mult.get(tot, 0) + ways
    parts = {}
    for p in sorted(weight_mult, reverse=True):
        if p < 0:
            continue
        mult = weight_mult.get(p, 0) - weight_mult.get(p + 2, 0)
        if mult < 0:
            raise AssertionError(f"negative peel at weight {p}: weight DP is broken")
        if mult:
            parts[p] = mult
    return Sl2Decomposition(parts)


def adams_sym_power(m: int, j: int) -> Sl2Decomposition:
    """Third route: Newton's identity on the character ring.

    With psi^i(chi)(q) = chi(q^i), the complete symmetric characters obey
    j*h_j = sum_{i=1..j} psi^i(chi) h_{j-i}; h_j is then peeled into
    highest weights.
    """
    if m < 0 or j < 0:
        raise ValueError("m, j must be non-negative")
    chi = character(Sl2Decomposition.irreducible(m))
    psi = [None] + [chi.q_power_substitute(i) if i > 1 else chi for i in range(1, j + 1)]
    h = [QLaurent.one()]
    for jj in range(1, j + 1):
        acc = QLaurent()
        for i in range(1, jj + 1):
            acc = acc + psi[i] * h[jj - i]
        h.append(acc * Fraction(1, jj))
    return peel_character(h[j])


def tensor_decompose(a: Sl2Decomposition, b: Sl2Decomposition) -> Sl2Decomposition:
    """Clebsch-Gordan: V_a (x) V_b = V_|a-b| + V_{|a-b|+2} + ... + V_{a+b}."""
    parts = {}
    for ma, mult_a in a.parts.items():
        for mb, mult_b in b.parts.items():
            for c in range(abs(ma - mb), ma + mb + 1, 2):
                parts[c] = parts.get(c, 0) + mult_a * mult_b
    return Sl2Decomposition(parts)


def dimq_prime(d: Sl2Decomposition) -> QLaurent:
    """Multiplicative braided dimension: V_m contributes (m+1)_q."""
    return character(d)


def dimq(d: Sl2Decomposition) -> QLaurent:
    """Braided dimension: V_m contributes q^(-m(m+2)/2) (m+1)_q (half-integer exponents for odd m)."""
    acc = QLaurent()
    for m, mult in d.parts.items():
        twist = Fraction(-m * (m + 2), 2)
        acc = acc + QLaurent({twist + (m - 2 * i): mult for i in range(m + 1)})
    return acc
