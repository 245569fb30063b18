"""Closed-form weight distributions for Hamming, lifted Simplex/Hamming and lifted RM codes.

Every product or sum with a division is evaluated over exact rationals and
the result is required to be an integer, so a transcription slip shows up as
an exception instead of a wrong count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .code import WeightDistribution, krawtchouk_row, macwilliams
from .errors import DimensionError

__all__ = [
    "RankCountTable",
    "rank_count",
    "rank_count_table",
    "hamming_wd_formula",
    "lifted_simplex_wd_formula",
    "lifted_hamming_wd_formula",
    "lifted_rm1_wd_formula",
    "lifted_rm_m2_wd_formula",
    "TwoThreeWeightReport",
    "two_three_weight_report",
]


def _exact(x, what):
    x = Fraction(x)
    if x.denominator != 1:
        raise ArithmeticError(f"{what} evaluated to the non-integer {x}")
    return x.numerator


def rank_count(q, ell, m, r):
    """Number of ``ell x m`` matrices over GF(q) of rank ``r``."""
    if not 0 <= r <= min(ell, m):
        raise DimensionError(f"rank {r} out of range 0..{min(ell, m)}")
    prod = Fraction(1)
    for j in range(1, r + 1):
        prod *= Fraction((q**ell - q ** (j - 1)) * (q**m - q ** (j - 1)), q ** (j - 1) * (q**j - 1))
    return _exact(prod, f"rank_count({q}, {ell}, {m}, {r})")


@dataclass(frozen=True)
class RankCountTable:
    q: int
    ell: int
    m: int
    counts: tuple

    def __post_init__(self):
        if self.counts[0] != 1 or sum(self.counts) != self.q ** (self.ell * self.m):
            raise ArithmeticError("rank counts do not add up to q^(ell m)")


def rank_count_table(q, ell, m):
    return RankCountTable(q, ell, m, tuple(rank_count(q, ell, m, r) for r in range(min(ell, m) + 1)))


def hamming_wd_formula(q, m):
    """Weight distribution of the Hamming code H(q, m) from its closed form.

    ``A_k = q^-m sum_i C(a,i) C(b,k-i) [(q-1)^k + (-1)^(k-i) (q-1)^i (q^m - 1)]``
    with ``a = (q^(m-1) - 1)/(q - 1)`` and ``b = q^(m-1)``.  Both halves of
    the bracket are convolutions; the plain one collapses to ``C(n, k)``.
    """
    if m < 2:
        raise DimensionError("m must be at least 2")
    n = (q**m - 1) // (q - 1)
    a = (q ** (m - 1) - 1) // (q - 1)
    b = q ** (m - 1)
    # sum_i C(a,i) C(b,k-i) = C(n,k); the signed sum is the z^k coefficient
    # of (1 + (q-1)z)^a (1 - z)^b
    signed = krawtchouk_row(n, q, b)
    counts = []
    for k in range(n + 1):
        s = (q - 1) ** k * comb(n, k) + (q**m - 1) * signed[k]
        counts.append(_exact(Fraction(s, q**m), f"A_{k} of H({q},{m})"))
    return WeightDistribution(n, tuple(counts))


def _check_lift_range(m, ell, m_min=2):
    if m < m_min:
        raise DimensionError(f"m must be at least {m_min}")
    if not 1 <= ell <= m:
        raise DimensionError(f"need 1 <= ell <= m, got ell={ell}, m={m}")


def lifted_simplex_wd_formula(q, m, ell):
    """Weight distribution of S(q, m) lifted to GF(q^ell).

    Rank-``r`` selectors give weight ``q^(m-r) (q^r - 1)/(q - 1)``.
    """
    n = (q**m - 1) // (q - 1)
    return WeightDistribution.from_terms(n, _lifted_simplex_terms(q, m, ell))


def _lifted_simplex_terms(q, m, ell):
    _check_lift_range(m, ell)
    terms = {0: 1}
    for r in range(1, ell + 1):
        w = q ** (m - r) * (q**r - 1) // (q - 1)
        terms[w] = rank_count(q, ell, m, r)
    return terms


def lifted_hamming_wd_formula(q, m, ell):
    """MacWilliams transform of :func:`lifted_simplex_wd_formula` over GF(q^ell)."""
    A = lifted_simplex_wd_formula(q, m, ell)
    return macwilliams(A, A.n, q**ell, m)


def lifted_rm1_wd_formula(m, ell):
    """Weight distribution of RM(1, m) lifted to GF(2^ell)."""
    return WeightDistribution.from_terms(2**m, _lifted_rm1_terms(m, ell))


def _lifted_rm1_terms(m, ell):
    _check_lift_range(m, ell, m_min=3)
    n = 2**m
    terms = {0: 1}
    for h in range(1, ell + 1):
        terms[n - 2 ** (m - h)] = 2**h * rank_count(2, ell, m, h)
    terms[n] = 2 ** (ell * (m + 1)) - 1 - sum(v for w, v in terms.items() if w)
    return terms


def lifted_rm_m2_wd_formula(m, ell):
    """Weight distribution of RM(m-2, m) lifted to GF(2^ell), the dual of the lifted RM(1, m)."""
    A = lifted_rm1_wd_formula(m, ell)
    return macwilliams(A, A.n, 2**ell, m + 1)


@dataclass(frozen=True)
class TwoThreeWeightReport:
    kind: str
    q: int
    m: int
    terms: tuple  # ((weight, count), ...) for the nonzero weights
    matches_general: bool

    @property
    def coefficients(self):
        return tuple(c for _, c in self.terms)

    @property
    def num_weights(self):
        return len(self.terms)


def two_three_weight_report(kind, m, q=2):
    """The two- and three-weight corollaries next to the general formula they specialize.

    ``kind`` is ``"simplex_l2"``, ``"simplex_l3"`` or ``"rm1_l2"`` (RM is binary).
    """
    if kind == "simplex_l2":
        if m < 2:
            raise DimensionError("m must be at least 2")
        Q = q**m
        terms = (
            (q ** (m - 1), (q + 1) * (Q - 1)),
            (q ** (m - 1) + q ** (m - 2), (Q - q) * (Q - 1)),
        )
        general = _lifted_simplex_terms(q, m, 2)
    elif kind == "simplex_l3":
        if m < 3:
            raise DimensionError("m must be at least 3")
        Q = q**m
        s = q * q + q + 1
        terms = (
            (q ** (m - 1), s * (Q - 1)),
            (q ** (m - 1) + q ** (m - 2), s * (Q - 1) * (Q - q)),
            (q ** (m - 1) + q ** (m - 2) + q ** (m - 3), (Q - 1) * (Q - q) * (Q - q * q)),
        )
        general = _lifted_simplex_terms(q, m, 3)
    elif kind == "rm1_l2":
        if m < 3:
            raise DimensionError("m must be at least 3")
        q = 2
        terms = (
            (2 ** (m - 1), 3 * (2 ** (m + 1) - 2)),
            (3 * 2 ** (m - 2), 4 * (2**m - 1) * (2**m - 2)),
            (2**m, 3 * (2 ** (m + 1) - 1)),
        )
        general = _lifted_rm1_terms(m, 2)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    matches = tuple(sorted((w, a) for w, a in general.items() if w and a)) == terms
    return TwoThreeWeightReport(kind, q, m, terms, matches)
