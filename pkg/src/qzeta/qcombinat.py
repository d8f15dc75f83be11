"""Symmetric q-integers, q-binomials, t-brackets, and bounded partition counts.

Conventions: (n)_q = (q^n - q^-n)/(q - q^-1) = q^(n-1) + q^(n-3) + ... + q^(1-n),
so everything here is palindromic under q <-> q^-1.
"""

from __future__ import annotations

import threading

from .qlaurent import QLaurent
from .qtpoly import QTPoly


def q_int_sym(n: int) -> QLaurent:
    """Symmetric q-integer (n)_q; (0)_q = 0."""
    if n < 0:
        raise ValueError("q_int_sym requires n >= 0")
    return QLaurent({n - 1 - 2 * i: 1 for i in range(n)})


def q_binom_sym(n: int, k: int) -> QLaurent:
    """Symmetric q-binomial (n choose k)_q by exact Laurent division.

    Computed as prod_{i=1..k} (n-k+i)_q / (i)_q, dividing after each factor
    so intermediate results stay polynomial; a nonzero remainder anywhere
    would raise, catching arithmetic bugs immediately.
    """
    if not 0 <= k <= n:
        raise ValueError(f"q_binom_sym requires 0 <= k <= n, got ({n}, {k})")
    out = QLaurent.one()
    for i in range(1, k + 1):
        out = (out * q_int_sym(n - k + i)).exact_div(q_int_sym(i))
    return out


def t_bracket(m: int) -> QTPoly:
    """[m]_t = (1 - t^m)/(1 - t) = 1 + t + ... + t^(m-1)."""
    if m < 1:
        raise ValueError("t_bracket requires m >= 1")
    return QTPoly({(0, i): 1 for i in range(m)})


class PartitionTable:
    """Memoized count p(r, j, m) of partitions of r into at most j parts, each <= m.

    Uses the recursion p(r, j, m) = p(r - j, j, m - 1) + p(r, j - 1, m):
    split by whether all j parts are positive (subtract 1 from each) or at
    most j - 1 parts are used.
    """

    def __init__(self):
        self._memo = {}
        self._lock = threading.Lock()

    def count(self, r: int, j: int, m: int) -> int:
        if j < 0 or m < 0:
            raise ValueError("j and m must be non-negative")
        return self._count(r, j, m)

    def _count(self, r, j, m):
        if r < 0:
            return 0
        if r == 0:
            return 1
        if j == 0 or m == 0:
            return 0
        key = (r, j, m)
        memo = self._memo
        got = memo.get(key)
        if got is not None:
            return got
        # iterative expansion to keep recursion depth independent of r
        stack = [key]
        while stack:
            kr, kj, km = stack[-1]
            if (kr, kj, km) in memo:
                stack.pop()
                continue
            deps = []
            for sub in ((kr - kj, kj, km - 1), (kr, kj - 1, km)):
                sr, sj, sm = sub
                if sr < 0 or sr == 0 or sj == 0 or sm == 0:
                    continue
                if sub not in memo:
                    deps.append(sub)
            if deps:
                stack.extend(deps)
                continue
            stack.pop()
            total = 0
            for sub in ((kr - kj, kj, km - 1), (kr, kj - 1, km)):
                sr, sj, sm = sub
                if sr < 0:
                    continue
                if sr == 0:
                    total += 1
                elif sj == 0 or sm == 0:
                    continue
                else:
                    total += memo[sub]
            memo[(kr, kj, km)] = total
        return memo[key]


_shared_table = PartitionTable()


def bounded_partitions(r: int, j: int, m: int, table: PartitionTable | None = None) -> int:
    """p(r, j, m): partitions of r into at most j parts each at most m."""
    t = table if table is not None else _shared_table
    if table is None:
        with _shared_table._lock:
            return t.count(r, j, m)
    return t.count(r, j, m)
