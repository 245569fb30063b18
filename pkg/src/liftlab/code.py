"""Linear codes, exhaustive codeword enumeration and the MacWilliams transform."""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import config
from .errors import BudgetExceeded, DegenerateCodeError, DimensionError, FieldError
from .field import FieldSpec
from .matrix import MatrixOverField, rref

__all__ = [
    "LinearCode",
    "WeightDistribution",
    "code_from_generator",
    "dual",
    "weight_distribution",
    "min_distance",
    "macwilliams",
    "map_codeword_blocks",
    "codewords",
]

#: Largest block of codewords materialized at once by the enumerator.
BLOCK_ROWS = 1 << 16


@dataclass(frozen=True)
class WeightDistribution:
    """Exact counts ``A_0 .. A_n``."""

    n: int
    counts: tuple

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if len(counts) != self.n + 1:
            raise DimensionError(f"expected {self.n + 1} counts, got {len(counts)}")
        if any(c < 0 for c in counts):
            raise ValueError("weight counts must be nonnegative")
        object.__setattr__(self, "counts", counts)

    @classmethod
    def from_terms(cls, n, terms):
        counts = [0] * (n + 1)
        for w, a in dict(terms).items():
            counts[w] += a
        return cls(n, tuple(counts))

    def __getitem__(self, w):
        return self.counts[w]

    def __iter__(self):
        return iter(self.counts)

    @property
    def total(self):
        return sum(self.counts)

    def terms(self):
        """``[(w, A_w)]`` for every nonzero count, in increasing weight."""
        return [(w, a) for w, a in enumerate(self.counts) if a]

    def nonzero_weights(self):
        return [w for w, a in enumerate(self.counts) if a and w > 0]

    @property
    def min_weight(self):
        ws = self.nonzero_weights()
        return ws[0] if ws else None

    def enumerator(self):
        parts = []
        for w, a in self.terms():
            if w == 0:
                parts.append(str(a))
            else:
                z = "z" if w == 1 else f"z^{w}"
                parts.append(z if a == 1 else f"{a}{z}")
        return " + ".join(parts)

    def __str__(self):
        return self.enumerator()


@dataclass(frozen=True, eq=False)
class LinearCode:
    """A linear code given by a full-rank generator matrix kept in rref."""

    field: FieldSpec
    n: int
    k: int
    generator: MatrixOverField

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise DimensionError(f"need 1 <= k <= n, got k={self.k}, n={self.n}")
        if self.generator.shape != (self.k, self.n):
            raise DimensionError("generator shape does not match (k, n)")

    def __eq__(self, other):
        return isinstance(other, LinearCode) and self.generator == other.generator

    def __hash__(self):
        return hash(self.generator)

    def __repr__(self):
        return f"LinearCode([{self.n}, {self.k}] over {self.field})"

    @property
    def size(self):
        return self.field.order**self.k

    def encode(self, message):
        F = self.field
        msg = np.asarray(message, dtype=np.int64)
        out = np.zeros(self.n, dtype=np.int64)
        for c, row in zip(msg, self.generator.entries):
            out = F.vadd(out, F.vmul(c, row))
        return out


def code_from_generator(field, G):
    """Build a :class:`LinearCode` from any generator (rows may be dependent)."""
    if not isinstance(G, MatrixOverField):
        G = MatrixOverField(field, G)
    if G.owner != field:
        raise FieldError(f"generator is over {G.owner}, expected {field}")
    R, rk, _ = rref(G)
    if rk == 0:
        raise DegenerateCodeError("generator matrix is zero")
    return LinearCode(field, G.cols, rk, MatrixOverField(field, R.entries[:rk]))


def dual(C):
    """The dual code; raises :class:`DegenerateCodeError` for the full space.

    The reduced generator of the dual is written down directly.  Scanning
    columns from the right, the pivots ``Q`` of ``G`` form an information
    set of ``C`` whose complement is the leftmost information set of the
    dual, i.e. the pivot set of its rref.  With ``G' = G_Q^-1 G`` the dual
    row for pivot ``p`` is ``e_p - sum_i G'[i, p] e_{Q_i}``.
    """
    F = C.field
    n, k = C.n, C.k
    if k == n:
        raise DegenerateCodeError(f"dual of the full space {C} is the zero code")
    R, _, piv = rref(MatrixOverField(F, C.generator.entries[:, ::-1]))
    Gq = R.entries[:k, ::-1]
    Q = [n - 1 - c for c in piv]
    P = np.setdiff1d(np.arange(n), Q)
    H = np.zeros((n - k, n), dtype=np.int64)
    H[np.arange(n - k), P] = 1
    H[:, Q] = F.vneg(Gq[:, P].T)
    if np.any((C.generator @ MatrixOverField(F, H.T)).entries):  # pragma: no cover
        raise FieldError("G H^T != 0")
    return LinearCode(F, n, n - k, MatrixOverField(F, H))


# -- enumeration ---------------------------------------------------------------

def _span_table(F, rows):
    """All combinations of ``rows``; the first row is the most significant digit."""
    n = rows.shape[1]
    scalars = np.arange(F.order, dtype=np.int64)[:, None]
    out = np.zeros((1, n), dtype=np.int64)
    for row in rows[::-1]:
        mult = F.vmul(scalars, row[None, :])
        out = F.vadd(mult[:, None, :], out[None, :, :]).reshape(-1, n)
    return out


def _split(F, k):
    j = 1
    while j < k and F.order ** (j + 1) <= BLOCK_ROWS:
        j += 1
    return k - j, j


def check_budget(count, budget, what="codewords"):
    budget = config.resolve_budget(budget)
    if count > budget:
        raise BudgetExceeded(
            f"enumerating {count} {what} exceeds the budget of {budget}",
            requested=count,
            budget=budget,
        )


def map_codeword_blocks(field, G, per_block, workers=1):
    """Apply ``per_block`` to every block of codewords of the row space of ``G``.

    ``G`` is a ``k x n`` array of element codes.  Codewords are produced in
    lexicographic message order, grouped into blocks that share a message
    prefix.  The prefix space is split into ``workers`` contiguous ranges;
    results come back as a flat list in prefix order, so the output never
    depends on the worker count.
    """
    G = np.asarray(G, dtype=np.int64)
    F = field
    k = G.shape[0]
    npre, nsuf = _split(F, k)
    suffix = _span_table(F, G[npre:])
    prefix_rows = G[:npre]
    total = F.order**npre

    def run(lo, hi):
        out = []
        for idx in range(lo, hi):
            word = np.zeros(G.shape[1], dtype=np.int64)
            rem = idx
            for i in range(npre - 1, -1, -1):
                rem, c = divmod(rem, F.order)
                if c:
                    word = F.vadd(word, F.vmul(c, prefix_rows[i]))
            block = F.vadd(word[None, :], suffix) if idx else suffix
            out.append(per_block(block))
        return out

    workers = max(1, min(int(workers), total))
    if workers == 1:
        return run(0, total)
    bounds = [total * i // workers for i in range(workers + 1)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(run, bounds[:-1], bounds[1:]))
    return list(itertools.chain.from_iterable(parts))


def codewords(C, budget=None):
    """Every codeword of ``C`` as rows of an array, in lexicographic message order."""
    check_budget(C.size, budget)
    blocks = map_codeword_blocks(C.field, C.generator.entries, lambda b: b)
    return np.concatenate(blocks, axis=0)


def _direct_counts(C, workers):
    n = C.n

    def count(block):
        return np.bincount(np.count_nonzero(block, axis=1), minlength=n + 1)

    parts = map_codeword_blocks(C.field, C.generator.entries, count, workers)
    total = np.sum(parts, axis=0)
    return WeightDistribution(n, tuple(int(x) for x in total))


_WD_CACHE = {}


def weight_distribution(C, strategy="auto", budget=None, workers=1):
    """Exact weight distribution of ``C``.

    ``direct`` enumerates the q^k codewords, ``via_dual`` enumerates the dual
    and applies :func:`macwilliams`, ``auto`` takes the cheaper side.
    """
    Q = C.field.order
    primal, dual_side = Q**C.k, Q ** (C.n - C.k)
    budget = config.resolve_budget(budget)
    if strategy == "auto":
        if min(primal, dual_side) > budget:
            raise BudgetExceeded(
                f"both sides exceed the budget of {budget}: "
                f"{primal} codewords, {dual_side} dual codewords",
                primal=primal,
                dual=dual_side,
                budget=budget,
            )
        strategy = "direct" if primal <= dual_side else "via_dual"
    if strategy == "direct":
        check_budget(primal, budget)
        key = ("direct", C)
        if key not in _WD_CACHE:
            if len(_WD_CACHE) > 256:
                _WD_CACHE.clear()
            _WD_CACHE[key] = _direct_counts(C, workers)
        return _WD_CACHE[key]
    if strategy == "via_dual":
        check_budget(dual_side, budget, "dual codewords")
        if C.k == C.n:
            zero = WeightDistribution(C.n, (1,) + (0,) * C.n)
            return macwilliams(zero, C.n, Q, 0)
        Wd = weight_distribution(dual(C), "direct", budget, workers)
        return macwilliams(Wd, C.n, Q, C.n - C.k)
    raise ValueError(f"unknown strategy {strategy!r}")


def min_distance(C, budget=None, workers=1):
    return weight_distribution(C, "auto", budget, workers).min_weight


def krawtchouk_row(n, Q, x):
    """``[K_0(x), ..., K_n(x)]``: the coefficients of ``(1 - z)^x (1 + (Q-1) z)^(n-x)``.

    Uses the three-term recurrence
    ``(j+1) K_{j+1} = ((Q-1)(n-j) + j - Q x) K_j - (Q-1)(n-j+1) K_{j-1}``,
    whose division is exact.
    """
    row = [1]
    prev, cur = 0, 1
    for j in range(n):
        nxt, r = divmod(((Q - 1) * (n - j) + j - Q * x) * cur - (Q - 1) * (n - j + 1) * prev, j + 1)
        if r:  # pragma: no cover
            raise ArithmeticError("Krawtchouk recurrence left a remainder")
        prev, cur = cur, nxt
        row.append(cur)
    return row


def macwilliams(W, n, field_order, dim_k):
    """Dual weight distribution via ``Q^-k (1+(Q-1)z)^n W((1-z)/(1+(Q-1)z))``.

    Each term ``A_i (1-z)^i (1+(Q-1)z)^(n-i)`` is expanded with exact integer
    coefficients (a Krawtchouk row); the final division by ``Q^k`` must be
    exact.
    """
    Q = int(field_order)
    counts = list(W.counts if isinstance(W, WeightDistribution) else W)
    if len(counts) != n + 1:
        raise DimensionError(f"expected {n + 1} counts, got {len(counts)}")
    if any(c < 0 for c in counts):
        raise ValueError("negative weight counts")
    if sum(counts) != Q**dim_k:
        raise ValueError(f"counts sum to {sum(counts)}, expected {Q}^{dim_k}")
    acc = [0] * (n + 1)
    for i, a in enumerate(counts):
        if not a:
            continue
        for j, x in enumerate(krawtchouk_row(n, Q, i)):
            acc[j] += a * x
    scale = Q**dim_k
    out = []
    for j, v in enumerate(acc):
        qv, r = divmod(v, scale)
        if r:
            raise ValueError(f"coefficient {j} is not divisible by {Q}^{dim_k}")
        out.append(qv)
    return WeightDistribution(n, tuple(out))
