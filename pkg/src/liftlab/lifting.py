"""Lifting a code over GF(q) to GF(q^ell), and the selector-matrix weight count.

Every codeword of the lifted code is ``sum_i alpha_i * c_i`` for base
codewords ``c_i = a_i G``; stacking the messages ``a_i`` gives an ``ell x k``
selector ``B`` over GF(q), and the codeword vanishes exactly at the
generator columns ``g_j`` with ``B g_j^T = 0``.  :func:`rank_spectrum_wd`
tallies the weight distribution from that column count alone, without ever
doing arithmetic in the extension field.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import config
from .code import (
    LinearCode,
    WeightDistribution,
    check_budget,
    code_from_generator,
    codewords,
    map_codeword_blocks,
    weight_distribution,
)
from .errors import DimensionError, FieldError
from .field import FieldTower, make_tower
from .matrix import MatrixOverField

__all__ = [
    "LiftedCode",
    "LiftSelector",
    "lift",
    "selector_weight",
    "selector_codeword",
    "rank_spectrum_wd",
    "ADReport",
    "check_ad_relation",
]

# number of combined selector rows materialized per block
_SELECTOR_BLOCK = 1 << 16


@dataclass(frozen=True, eq=False)
class LiftedCode:
    base: LinearCode
    ell: int
    tower: FieldTower
    code: LinearCode

    @property
    def n(self):
        return self.base.n

    @property
    def k(self):
        return self.base.k


@dataclass(frozen=True, eq=False)
class LiftSelector:
    B: MatrixOverField

    @classmethod
    def from_rows(cls, field, rows):
        return cls(MatrixOverField(field, rows))


def lift(C, ell):
    """Read the generator of ``C`` over GF(q^ell)."""
    tower = make_tower(C.field, ell)
    G = tower.embed_array(C.generator.entries)
    code = code_from_generator(tower.top, MatrixOverField(tower.top, G))
    if (code.n, code.k) != (C.n, C.k):  # pragma: no cover
        raise DimensionError("lifting changed the code parameters")
    return LiftedCode(C, int(ell), tower, code)


def _selector_matrix(L, B):
    if isinstance(B, LiftSelector):
        B = B.B
    if not isinstance(B, MatrixOverField):
        B = MatrixOverField(L.base.field, B)
    if B.owner != L.base.field:
        raise FieldError(f"selector must be over {L.base.field}")
    if B.shape != (L.ell, L.k):
        raise DimensionError(f"selector shape {B.shape} != {(L.ell, L.k)}")
    return B


def selector_weight(L, B):
    """``n`` minus the number of generator columns annihilated by ``B``."""
    B = _selector_matrix(L, B)
    images = (B @ L.base.generator).entries  # column j is B g_j^T
    in_kernel = int(np.count_nonzero(~images.any(axis=0)))
    return L.n - in_kernel


def selector_codeword(L, B):
    """The lifted codeword ``sum_i basis_i * embed(B_i G)`` indexed by ``B``."""
    B = _selector_matrix(L, B)
    base_words = (B @ L.base.generator).entries
    return L.tower.combine(base_words.T)


def _zero_patterns(C):
    """Bit-packed zero positions of every base codeword, in message order."""
    n = C.n
    words = (n + 63) // 64
    weights = np.left_shift(np.uint64(1), np.arange(64, dtype=np.uint64))

    def pack(block):
        zero = block == 0
        out = np.zeros((block.shape[0], words), dtype=np.uint64)
        for w in range(words):
            chunk = zero[:, 64 * w : 64 * (w + 1)]
            out[:, w] = (chunk.astype(np.uint64) * weights[: chunk.shape[1]]).sum(
                axis=1, dtype=np.uint64
            )
        return out

    return np.concatenate(map_codeword_blocks(C.field, C.generator.entries, pack), axis=0)


def rank_spectrum_wd(L, budget=None, workers=1):
    """Weight distribution of the lifted code by enumerating every selector ``B``.

    Selectors run over GF(q)^(ell x k) in row-major lexicographic order.  The
    count is over generator columns with multiplicity, so non-projective base
    codes are handled as well.
    """
    q, k, ell, n = L.base.field.order, L.k, L.ell, L.n
    check_budget(q ** (ell * k), config.resolve_budget(budget), "selector matrices")
    Z = _zero_patterns(L.base)  # (q^k, words)
    rows = Z.shape[0]

    # joint AND-table for the last s selector rows
    s = 1
    while s < ell and rows ** (s + 1) <= _SELECTOR_BLOCK:
        s += 1
    tail = Z
    for _ in range(s - 1):
        tail = (Z[:, None, :] & tail[None, :, :]).reshape(-1, Z.shape[1])
    npre = ell - s
    total = rows**npre

    def run(lo, hi):
        acc = np.zeros(n + 1, dtype=np.int64)
        for idx in range(lo, hi):
            mask = np.full(Z.shape[1], np.uint64(0xFFFFFFFFFFFFFFFF), dtype=np.uint64)
            rem = idx
            for _ in range(npre):
                rem, a = divmod(rem, rows)
                mask &= Z[a]
            zeros = np.bitwise_count(tail & mask).sum(axis=1)
            acc += np.bincount(n - zeros, minlength=n + 1)
        return acc

    workers = max(1, min(int(workers), total))
    if workers == 1:
        acc = run(0, total)
    else:
        bounds = [total * i // workers for i in range(workers + 1)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            acc = sum(pool.map(run, bounds[:-1], bounds[1:]))
    return WeightDistribution(n, tuple(int(x) for x in acc))


@dataclass(frozen=True)
class ADReport:
    d: int
    lhs: int  # A_d of the lifted code
    rhs: int  # (q^ell - 1)/(q - 1) * A_d of the base code
    equal: bool
    scalar_multiples: bool | None  # None when the exhaustive check was skipped


def _normalize_rows(F, words):
    """Scale each nonzero row so that its first nonzero entry is 1."""
    first = np.argmax(words != 0, axis=1)
    lead = words[np.arange(len(words)), first]
    return F.vmul(words, F.vinv(lead)[:, None])


def check_ad_relation(C, ell, budget=None, workers=1, exhaustive_limit=1 << 18):
    """Compare A_d of the lift with ``(q^ell - 1)/(q - 1) A_d`` of the base code.

    When the lifted code has at most ``exhaustive_limit`` codewords, also
    confirm that every minimum-weight lifted codeword is a scalar multiple of
    an embedded minimum-weight base codeword.
    """
    q = C.field.order
    L = lift(C, ell)
    W = weight_distribution(C, "auto", budget, workers)
    WL = weight_distribution(L.code, "auto", budget, workers)
    d = W.min_weight
    lhs = WL[d]
    rhs = (q**ell - 1) // (q - 1) * W[d]
    scalar = None
    if L.code.size <= exhaustive_limit:
        top = L.tower.top
        lifted = codewords(L.code, budget)
        lifted = lifted[np.count_nonzero(lifted, axis=1) == d]
        base = codewords(C, budget)
        base = base[np.count_nonzero(base, axis=1) == d]
        base_set = {tuple(r) for r in _normalize_rows(top, L.tower.embed_array(base)).tolist()}
        lifted_set = {tuple(r) for r in _normalize_rows(top, lifted).tolist()}
        scalar = lifted_set <= base_set and WL[d] == len(lifted)
    return ADReport(d, lhs, rhs, lhs == rhs, scalar)
