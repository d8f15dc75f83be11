"""Set-theoretic braidings, braided symmetrizers, and Hilbert series.

A braided set is a finite set with a bijection Psi on ordered pairs obeying
the braid relation.  Conjugacy classes of a finite group braid by
Psi(x, y) = (x y x^-1, x); their linearization carries the sign -1 (the
exterior-type normalization under which the quadratic relations reproduce
the Fomin-Kirillov algebras), while plain flip sets linearize with sign +1
and recover classical symmetric algebras.

The braided symmetrizer S_j on n^j tensor factors is never materialized:
S_j = (S_{j-1} (x) id) P_j with P_j = id + Psi_{j-1} + Psi_{j-1}Psi_{j-2}
+ ... + Psi_{j-1}...Psi_1, so a full-rank set of rows of S_{j-1} yields the
candidate rows of S_j directly, and ranks are taken by streaming sparse
elimination.  Degree-by-degree dimensions of the quadratic variant
BS^quad(A) = TA / <ker S_2> are computed the same way from the recursion
I_j = ker(S_2) (x) V^{j-2} + V (x) I_{j-1}.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from math import gcd

from .errors import BudgetExceeded
from .qcombinat import t_bracket
from .qtpoly import QTPoly
from .linalg import sparse_int_rank

DEFAULT_BUDGET = 100_000


class BraidedSet:
    """Finite set with a braiding table; both invariants verified at construction.

    left[x][y], right[x][y] give Psi(x, y) = (left, right) on 0-based
    indices; sign is the scalar carried by the linearization on C X.
    """

    __slots__ = ("size", "left", "right", "sign", "label")

    def __init__(self, left, right, sign: int = 1, label: str = ""):
        self.left = tuple(tuple(row) for row in left)
        self.right = tuple(tuple(row) for row in right)
        self.size = len(self.left)
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        self.sign = sign
        self.label = label or f"braided set on {self.size} elements"
        if not check_braid_relation((self.left, self.right)):
            raise ValueError("table is not a bijective solution of the braid relation")

    def apply(self, x: int, y: int) -> tuple[int, int]:
        return self.left[x][y], self.right[x][y]

    def is_involutive(self) -> bool:
        n = self.size
        for x in range(n):
            for y in range(n):
                a, b = self.apply(x, y)
                if self.apply(a, b) != (x, y):
                    return False
        return True

    def to_json(self) -> str:
        """Plain JSON table: size plus the two 0-based index matrices."""
        return json.dumps(
            {
                "size": self.size,
                "left": [list(row) for row in self.left],
                "right": [list(row) for row in self.right],
                "sign": self.sign,
                "label": self.label,
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "BraidedSet":
        data = json.loads(text)
        return cls(data["left"], data["right"], data.get("sign", 1), data.get("label", ""))

    def __repr__(self):
        return f"BraidedSet({self.label}, n={self.size}, sign={self.sign:+d})"


def check_braid_relation(tables) -> bool:
    """True iff the pair map is a bijection and Psi1 Psi2 Psi1 = Psi2 Psi1 Psi2 on all triples."""
    left, right = tables
    n = len(left)
    seen = set()
    for x in range(n):
        for y in range(n):
            seen.add((left[x][y], right[x][y]))
    if len(seen) != n * n:
        return False

    def psi1(t):
        x, y, z = t
        return left[x][y], right[x][y], z

    def psi2(t):
        x, y, z = t
        return x, left[y][z], right[y][z]

    for t in itertools.product(range(n), repeat=3):
        if psi1(psi2(psi1(t))) != psi2(psi1(psi2(t))):
            return False
    return True


# -- constructions ---------------------------------------------------------


def _compose(a, b):
    return tuple(a[b[i]] for i in range(len(a)))


def _inverse(a):
    out = [0] * len(a)
    for i, ai in enumerate(a):
        out[ai] = i
    return tuple(out)


def from_conjugacy_class(k: int, representative) -> BraidedSet:
    """Braided set on the conjugacy class of a permutation in S_k.

    representative: tuple of 1-based images.  Elements are indexed
    lexicographically by image tuples; the braiding is conjugation,
    Psi(x, y) = (x y x^-1, x), and the linearization sign is -1.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    rep = tuple(int(i) - 1 for i in representative)
    if sorted(rep) != list(range(k)):
        raise ValueError("representative must be a permutation of 1..k")
    cls = {rep}
    frontier = [rep]
    transpositions = [tuple(range(i)) + (i + 1, i) + tuple(range(i + 2, k)) for i in range(k - 1)]
    while frontier:
        x = frontier.pop()
        for g in transpositions:
            y = _compose(_compose(g, x), _inverse(g))
            if y not in cls:
                cls.add(y)
                frontier.append(y)
    elems = sorted(cls)
    index = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    left = [[0] * n for _ in range(n)]
    right = [[0] * n for _ in range(n)]
    for i, x in enumerate(elems):
        xinv = _inverse(x)
        for j, y in enumerate(elems):
            left[i][j] = index[_compose(_compose(x, y), xinv)]
            right[i][j] = i
    return BraidedSet(left, right, sign=-1, label=f"conjugacy class in S_{k}, size {n}")


def transposition_class(k: int) -> BraidedSet:
    """The class of 2-cycles in S_k (the Fomin-Kirillov braided set X_k)."""
    return from_conjugacy_class(k, (2, 1) + tuple(range(3, k + 1)))


def flip_set(n: int) -> BraidedSet:
    """The trivial braiding Psi(x, y) = (y, x) on n points."""
    if n < 1:
        raise ValueError("n must be >= 1")
    left = [[y for y in range(n)] for _ in range(n)]
    right = [[x for _ in range(n)] for x in range(n)]
    return BraidedSet(left, right, sign=1, label=f"flip on {n} points")


# -- symmetrizer machinery ---------------------------------------------------


class GradedDims:
    """Degreewise dimensions d_0, d_1, ..., possibly partial on budget exhaustion."""

    __slots__ = ("dims", "requested_degree")

    def __init__(self, dims, requested_degree):
        self.dims = list(dims)
        self.requested_degree = requested_degree
        if self.dims[0] != 1:
            raise ValueError("d_0 must be 1")

    @property
    def achieved_degree(self):
        return len(self.dims) - 1

    @property
    def complete(self):
        return self.achieved_degree >= self.requested_degree

    def __eq__(self, other):
        if isinstance(other, list):
            return self.dims == other
        if not isinstance(other, GradedDims):
            return NotImplemented
        return self.dims == other.dims

    def __iter__(self):
        return iter(self.dims)

    def __repr__(self):
        suffix = "" if self.complete else f" (partial, requested {self.requested_degree})"
        return f"GradedDims({self.dims}{suffix})"


class SymmetrizerLadder:
    """Incremental row bases of the braided symmetrizers S_1, S_2, ...

    Level j keeps a maximal independent set of rows of S_j (sparse integer
    dicts over n^j columns, entries bounded by j!), obtained by streaming
    the rows of (A_{j-1} (x) id) P_j through exact elimination.
    """

    def __init__(self, x: BraidedSet, budget: int = DEFAULT_BUDGET):
        self.x = x
        self.budget = budget
        self.dims = [1, x.size]
        self._basis = [{i: 1} for i in range(x.size)]

    @property
    def level(self) -> int:
        return len(self.dims) - 1

    def _word_inverse_perms(self, j: int):
        """Inverse permutation arrays for the words Psi_{j-1}..Psi_k, k = j-1..1."""
        n = self.x.size
        left, right = self.x.left, self.x.right
        big = n ** j
        out = []
        for k in range(j - 1, 0, -1):
            pi = [0] * big
            for c in range(big):
                digits = []
                cc = c
                for _ in range(j):
                    digits.append(cc % n)
                    cc //= n
                digits.reverse()
                for pos in range(k - 1, j - 1):
                    a, b = digits[pos], digits[pos + 1]
                    digits[pos], digits[pos + 1] = left[a][b], right[a][b]
                val = 0
                for d in digits:
                    val = val * n + d
                pi[c] = val
            inv = [0] * big
            for c, pc in enumerate(pi):
                inv[pc] = c
            out.append((j - k, inv))
        return out

    def extend(self):
        """Build the next level and record its dimension."""
        j = self.level + 1
        n = self.x.size
        if n ** j > self.budget:
            raise BudgetExceeded(f"n^j = {n}^{j} = {n ** j} exceeds budget {self.budget}")
        sign = self.x.sign
        inv_words = self._word_inverse_perms(j)

        def candidate_rows():
            for prev_row in self._basis:
                for i in range(n):
                    x0 = {u * n + i: v for u, v in prev_row.items()}
                    out = dict(x0)
                    for length, inv in inv_words:
                        sgn = sign ** length
                        for idx, v in x0.items():
                            c = inv[idx]
                            w = out.get(c, 0) + sgn * v
                            if w:
                                out[c] = w
                            elif c in out:
                                del out[c]
                    yield out

        rank, kept = sparse_int_rank(candidate_rows(), collect_kept=True)
        self.dims.append(rank)
        self._basis = kept
        return rank

    def dim(self, j: int) -> int:
        while self.level < j:
            self.extend()
        return self.dims[j]


def symmetrizer_rank(x: BraidedSet, j: int, budget: int = DEFAULT_BUDGET) -> int:
    """Rank over Q of the braided symmetrizer S_j; equals dim BS(A)^j."""
    if j < 0:
        raise ValueError("j must be non-negative")
    return SymmetrizerLadder(x, budget).dim(j)


def hilbert_dims(x: BraidedSet, max_degree: int, budget: int = DEFAULT_BUDGET) -> GradedDims:
    """[dim BS(A)^j for j = 0..max_degree]; partial result if the budget runs out."""
    ladder = SymmetrizerLadder(x, budget)
    dims = [1]
    for j in range(1, max_degree + 1):
        try:
            dims.append(ladder.dim(j))
        except BudgetExceeded:
            break
    return GradedDims(dims, max_degree)


def invariant_dims(x: BraidedSet, j: int, budget: int = DEFAULT_BUDGET) -> int:
    """Dimension of the joint eigenvalue-1 invariants of the (signed) braidings.

    For involutive braidings this agrees with symmetrizer_rank; in the
    strictly braided case the two are reported side by side and no equality
    is asserted.
    """
    if j < 0:
        raise ValueError("j must be non-negative")
    if j <= 1:
        return 1 if j == 0 else x.size
    n = x.size
    big = n ** j
    if big > budget:
        raise BudgetExceeded(f"n^j = {big} exceeds budget {budget}")
    sign = x.sign
    left, right = x.left, x.right

    def rows():
        # rows of (sign Psi_i - id) for each adjacent position i
        for pos in range(j - 1):
            lo = n ** (j - 2 - pos)
            for c in range(big):
                digits_a = (c // (lo * n)) % n
                digits_b = (c // lo) % n
                a, b = left[digits_a][digits_b], right[digits_a][digits_b]
                image = c + ((a - digits_a) * n + (b - digits_b)) * lo
                row = {c: -1}
                row[image] = row.get(image, 0) + sign
                if any(row.values()):
                    yield {k: v for k, v in row.items() if v}

    rank, _ = sparse_int_rank(rows())
    return big - rank


# -- dense small-scale symmetrizers (oracle for the recursion) ----------------


def _reduced_word(perm) -> list[int]:
    """A reduced word for a permutation via bubble sort (0-based positions)."""
    p = list(perm)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                word.append(i)
                changed = True
    word.reverse()
    return word


def _apply_word(x: BraidedSet, word, tup):
    digits = list(tup)
    for pos in reversed(word):
        a, b = digits[pos], digits[pos + 1]
        digits[pos], digits[pos + 1] = x.left[a][b], x.right[a][b]
    return tuple(digits)


def symmetrizer_matrix_bruteforce(x: BraidedSet, j: int):
    """S_j as a dense dict {(row, col): int} from the literal sum over all j! reduced words."""
    n = x.size
    out: dict[tuple[int, int], int] = {}
    tuples = list(itertools.product(range(n), repeat=j))
    index = {t: i for i, t in enumerate(tuples)}
    for perm in itertools.permutations(range(j)):
        word = _reduced_word(perm)
        sgn = x.sign ** len(word)
        for c, tup in enumerate(tuples):
            r = index[_apply_word(x, word, tup)]
            out[(r, c)] = out.get((r, c), 0) + sgn
    return {k: v for k, v in out.items() if v}


def symmetrizer_matrix_recursive(x: BraidedSet, j: int):
    """S_j by the coset recursion S_j = (S_{j-1} (x) id) P_j, dense dict form."""
    n = x.size
    if j == 0:
        return {(0, 0): 1}
    mat = {(i, i): 1 for i in range(n)}
    for level in range(2, j + 1):
        big = n ** level
        # P columns: e_c -> sum over words of sign^len e_{pi(c)}
        pcols: list[dict[int, int]] = []
        for c in range(big):
            digits = []
            cc = c
            for _ in range(level):
                digits.append(cc % n)
                cc //= n
            digits.reverse()
            col = {c: 1}
            for k in range(level - 1, 0, -1):
                d = list(digits)
                for pos in range(k - 1, level - 1):
                    a, b = d[pos], d[pos + 1]
                    d[pos], d[pos + 1] = x.left[a][b], x.right[a][b]
                val = 0
                for dd in d:
                    val = val * n + dd
                sgn = x.sign ** (level - k)
                col[val] = col.get(val, 0) + sgn
            pcols.append({k: v for k, v in col.items() if v})
        new: dict[tuple[int, int], int] = {}
        for c, col in enumerate(pcols):
            for mid, v in col.items():
                u, i = divmod(mid, n)
                # (S_{level-1} (x) id)[r', u] placed at row r'*n + i
                for (r, cc), w in mat.items():
                    if cc == u:
                        key = (r * n + i, c)
                        new[key] = new.get(key, 0) + w * v
        mat = {k: v for k, v in new.items() if v}
    return mat


# -- quadratic variant ---------------------------------------------------------


def _ker_s2_basis(x: BraidedSet):
    """Integer basis of ker(S_2) = ker(id + sign Psi) over the rationals."""
    n = x.size
    big = n * n
    cols = [[Fraction(0)] * big for _ in range(big)]
    for c in range(big):
        a, b = divmod(c, n)
        img = x.left[a][b] * n + x.right[a][b]
        cols[c][c] += 1
        cols[img][c] += x.sign
    # RREF on the operator matrix, then read off the null space
    a = [row[:] for row in cols]
    piv: dict[int, int] = {}
    r0 = 0
    for c0 in range(big):
        sel = None
        for r in range(r0, big):
            if a[r][c0] != 0:
                sel = r
                break
        if sel is None:
            continue
        a[r0], a[sel] = a[sel], a[r0]
        pv = a[r0][c0]
        a[r0] = [v / pv for v in a[r0]]
        for r in range(big):
            if r != r0 and a[r][c0] != 0:
                f = a[r][c0]
                a[r] = [v - f * w for v, w in zip(a[r], a[r0])]
        piv[c0] = r0
        r0 += 1
    basis = []
    for free in range(big):
        if free in piv:
            continue
        vec = {free: Fraction(1)}
        for pc, pr in piv.items():
            if a[pr][free] != 0:
                vec[pc] = -a[pr][free]
        den = 1
        for v in vec.values():
            den = den * v.denominator // gcd(den, v.denominator)
        ivec = {k: int(v * den) for k, v in vec.items()}
        g = 0
        for v in ivec.values():
            g = gcd(g, v)
        basis.append({k: v // g for k, v in ivec.items() if v})
    return basis


def hilbert_dims_quadratic(x: BraidedSet, max_degree: int, budget: int = DEFAULT_BUDGET) -> GradedDims:
    """Degreewise dimensions of the quadratic algebra TA / <ker S_2>.

    The degree-j ideal component obeys I_j = ker(S_2) (x) V^{j-2} +
    V (x) I_{j-1}; a maximal independent subset of its spanning rows is
    carried level to level, so dim = n^j - rank(I_j) exactly.
    """
    n = x.size
    dims = [1]
    if max_degree >= 1:
        dims.append(n)
    if max_degree < 2:
        return GradedDims(dims, max_degree)
    kernel = _ker_s2_basis(x)
    _, ideal = sparse_int_rank(kernel, collect_kept=True)
    dims.append(n * n - len(ideal))
    for j in range(3, max_degree + 1):
        big = n ** j
        if big > budget:
            break
        rest = n ** (j - 2)
        prev_dim = n ** (j - 1)

        def candidates():
            for vec in kernel:
                for w in range(rest):
                    yield {c2 * rest + w: v for c2, v in vec.items()}
            for i in range(n):
                base = i * prev_dim
                for row in ideal:
                    yield {base + c: v for c, v in row.items()}

        rank, ideal = sparse_int_rank(candidates(), collect_kept=True)
        dims.append(big - rank)
    return GradedDims(dims, max_degree)


# -- reference series -----------------------------------------------------------


def fk_reference_series(n: int) -> QTPoly:
    """The quoted Hilbert-series products for the 2-cycle classes, expanded.

    n = 2: [2];  n = 3: [2]^2 [3];  n = 4: [2]^2 [3]^2 [4]^2;
    n = 5: [4]^4 [5]^2 [6]^4.
    """
    products = {
        2: [2],
        3: [2, 2, 3],
        4: [2, 2, 3, 3, 4, 4],
        5: [4, 4, 4, 4, 5, 5, 6, 6, 6, 6],
    }
    if n not in products:
        raise ValueError("reference series are quoted for n = 2..5 only")
    acc = QTPoly.one()
    for m in products[n]:
        acc = acc * t_bracket(m)
    return acc
