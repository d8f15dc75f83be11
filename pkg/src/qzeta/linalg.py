"""Exact linear algebra over the rationals and over the rational-function field of q.

Rank of integer/rational matrices uses fraction-free (Bareiss-style)
elimination; q-generic matrices are eliminated classically with QRational
pivots.  Pivot choice is always the first nonzero entry in column order,
trading speed for deterministic reproducibility.

A streaming sparse kernel handles the large braided-symmetrizer matrices:
rows enter one at a time as {column: integer} dicts, are reduced against
the current echelon basis with cross-multiplication and gcd stripping, and
the indices of rows that extended the rank are reported back.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import NoSolution
from .qlaurent import QLaurent
from .qrational import QRational


class ExactMatrix:
    """Dense matrix with exact entries (int/Fraction, or QRational for q-generic)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        self.entries = [list(row) for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.rows else 0
        if any(len(row) != self.cols for row in self.entries):
            raise ValueError("ragged rows")

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == k else 0 for k in range(n)] for i in range(n)])

    def is_q_generic(self) -> bool:
        return any(isinstance(x, (QRational, QLaurent)) for row in self.entries for x in row)


def exact_rank(m: ExactMatrix | list) -> int:
    """Rank over the rationals (or over Q(q) for QRational/QLaurent entries)."""
    if not isinstance(m, ExactMatrix):
        m = ExactMatrix(m)
    if m.rows == 0 or m.cols == 0:
        return 0
    if m.is_q_generic():
        return _rank_qgeneric(m)
    return _rank_bareiss(m)


def _rank_bareiss(m: ExactMatrix) -> int:
    """Fraction-free elimination; denominators cleared up front."""
    a = []
    for row in m.entries:
        den = 1
        for x in row:
            f = Fraction(x)
            den = den * f.denominator // gcd(den, f.denominator)
        a.append([int(Fraction(x) * den) for x in row])
    rows, cols = m.rows, m.cols
    rank = 0
    prev = 1
    for c in range(cols):
        sel = None
        for r in range(rank, rows):
            if a[r][c] != 0:
                sel = r
                break
        if sel is None:
            continue
        a[rank], a[sel] = a[sel], a[rank]
        piv = a[rank][c]
        for r in range(rank + 1, rows):
            arc = a[r][c]
            row_r, row_p = a[r], a[rank]
            for k in range(c, cols):
                row_r[k] = (piv * row_r[k] - arc * row_p[k]) // prev
        prev = piv
        rank += 1
        if rank == rows:
            break
    return rank


def _rank_qgeneric(m: ExactMatrix) -> int:
    """Classical elimination with QRational pivots."""
    def lift(x):
        if isinstance(x, QRational):
            return x
        if isinstance(x, QLaurent):
            return QRational.from_laurent(x)
        return QRational.from_scalar(x)

    a = [[lift(x) for x in row] for row in m.entries]
    rows, cols = m.rows, m.cols
    rank = 0
    for c in range(cols):
        sel = None
        for r in range(rank, rows):
            if not a[r][c].is_zero:
                sel = r
                break
        if sel is None:
            continue
        a[rank], a[sel] = a[sel], a[rank]
        piv = a[rank][c]
        for r in range(rank + 1, rows):
            if a[r][c].is_zero:
                continue
            f = a[r][c] / piv
            for k in range(c, cols):
                a[r][k] = a[r][k] - f * a[rank][k]
        rank += 1
        if rank == rows:
            break
    return rank


class LinearSolution:
    """Solution of an exact linear system, with the affine solution-set dimension."""

    __slots__ = ("values", "free_dim")

    def __init__(self, values, free_dim):
        self.values = values
        self.free_dim = free_dim

    @property
    def unique(self):
        return self.free_dim == 0


def solve_linear(m: ExactMatrix | list, rhs) -> LinearSolution:
    """Solve m x = rhs exactly over the rationals.

    Returns one solution (free variables set to 0) plus the dimension of the
    affine solution set; raises NoSolution if inconsistent.
    """
    if not isinstance(m, ExactMatrix):
        m = ExactMatrix(m)
    rows, cols = m.rows, m.cols
    if len(rhs) != rows:
        raise ValueError("rhs length mismatch")
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(m.entries)]
    piv_cols = []
    rank = 0
    for c in range(cols):
        sel = None
        for r in range(rank, rows):
            if a[r][c] != 0:
                sel = r
                break
        if sel is None:
            continue
        a[rank], a[sel] = a[sel], a[rank]
        pv = a[rank][c]
        a[rank] = [x / pv for x in a[rank]]
        for r in range(rows):
            if r != rank and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        piv_cols.append(c)
        rank += 1
    for r in range(rank, rows):
        if a[r][cols] != 0:
            raise NoSolution("inconsistent linear system")
    values = [Fraction(0)] * cols
    for i, c in enumerate(piv_cols):
        values[c] = a[i][cols]
    return LinearSolution(values, cols - rank)


# -- streaming sparse kernels ------------------------------------------------


def _strip_gcd(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def sparse_int_rank(rows, collect_kept: bool = False):
    """Streaming rank of sparse integer rows ({column: value} dicts).

    Each incoming row is reduced against the echelon basis by fraction-free
    cross-multiplication (with gcd stripping to control entry growth); rows
    that survive create a new pivot.  Returns (rank, kept) where kept lists
    the original rows that extended the rank (empty unless collect_kept).
    """
    echelon: dict[int, dict] = {}
    kept = []
    rank = 0
    for row in rows:
        out = {c: v for c, v in row.items() if v}
        while out:
            p = min(out)
            piv = echelon.get(p)
            if piv is None:
                echelon[p] = _strip_gcd(out)
                rank += 1
                if collect_kept:
                    kept.append(row)
                break
            a, b = piv[p], out[p]
            new = {c: a * v for c, v in out.items()}
            for c, v in piv.items():
                w = new.get(c, 0) - b * v
                if w:
                    new[c] = w
                elif c in new:
                    del new[c]
            out = _strip_gcd(new) if new else new
    return rank, kept


def sparse_qlaurent_rank(rows) -> int:
    """Streaming rank for sparse rows with QLaurent values, over Q(q).

    Fraction-free cross-multiplication; rows are kept primitive by stripping
    the common monomial-and-rational content after each combination.
    """
    def strip(row: dict) -> dict:
        # common monomial content only; full polynomial gcds are not needed
        # at the sizes this kernel sees.
        it = iter(row.values())
        first = next(it)
        v, g = first.monomial_content()
        for x in it:
            v2, g2 = x.monomial_content()
            v = min(v, v2)
            ga = Fraction(g)
            gb = Fraction(g2)
            num = gcd(abs(ga.numerator), abs(gb.numerator))
            den = (ga.denominator * gb.denominator) // gcd(ga.denominator, gb.denominator)
            g = Fraction(num, den)
        if v == 0 and g == 1:
            return row
        mono = QLaurent({-v: Fraction(1) / g})
        return {c: x * mono for c, x in row.items()}

    echelon: dict[int, dict] = {}
    rank = 0
    for row in rows:
        out = {c: v for c, v in row.items() if not v.is_zero}
        while out:
            p = min(out)
            piv = echelon.get(p)
            if piv is None:
                echelon[p] = strip(out)
                rank += 1
                break
            a, b = piv[p], out[p]
            new = {c: v * a for c, v in out.items()}
            for c, v in piv.items():
                w = new.get(c, QLaurent()) - v * b
                if w.is_zero:
                    new.pop(c, None)
                else:
                    new[c] = w
            out = strip(new) if new else new
    return rank
