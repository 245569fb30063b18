"""Support designs of linear codes and exhaustive t-design verification."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from . import config
from .code import check_budget, macwilliams, map_codeword_blocks, weight_distribution
from .errors import BudgetExceeded, DimensionError, EmptyDesignError
from .families import hamming, rm2, simplex
from .field import field_of_order
from .lifting import lift

__all__ = [
    "SupportDesign",
    "DesignCertificate",
    "AMReport",
    "ConjectureReport",
    "supports",
    "supports_by_weight",
    "support_multiplicities",
    "verify_design",
    "max_strength",
    "assmus_mattson",
    "am_threshold",
    "conjecture_rm1",
    "conjectured_lambda",
    "family_lift",
    "open_lambda_table",
    "open_lambda_sweep",
]

VERIFIED = "verified"
NOT_A_DESIGN = "not_a_design"
COMPLETE = "complete_design"


@dataclass(frozen=True)
class SupportDesign:
    """Distinct supports of fixed-weight codewords; points are ``0 .. v-1``."""

    v: int
    k: int
    blocks: tuple  # sorted tuples, lexicographically ordered, no repeats

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(int(x) for x in b)) for b in self.blocks))
        if len(set(blocks)) != len(blocks):
            raise ValueError("repeated blocks")
        for b in blocks:
            if len(b) != self.k or (b and not (0 <= b[0] and b[-1] < self.v)):
                raise ValueError(f"block {b} is not a {self.k}-subset of range({self.v})")
        object.__setattr__(self, "blocks", blocks)

    @property
    def b(self):
        return len(self.blocks)

    def incidence(self):
        N = np.zeros((self.b, self.v), dtype=np.int64)
        for i, blk in enumerate(self.blocks):
            N[i, list(blk)] = 1
        return N

    @classmethod
    def complete(cls, v, k):
        return cls(v, k, tuple(itertools.combinations(range(v), k)))


@dataclass(frozen=True)
class DesignCertificate:
    t: int
    v: int
    k: int
    lam: int | None
    b: int
    status: str
    witness: tuple | None = None  # ((subset, count), (subset, count)) when not a design

    @property
    def is_design(self):
        return self.status in (VERIFIED, COMPLETE)

    def as_dict(self):
        return {
            "t": self.t,
            "v": self.v,
            "k": self.k,
            "lambda": self.lam,
            "b": self.b,
            "status": self.status,
        }

    def __str__(self):
        if not self.is_design:
            return f"not a {self.t}-design (v={self.v}, k={self.k}, b={self.b})"
        return f"{self.t}-({self.v}, {self.k}, {self.lam}) design, b={self.b}"


# -- support extraction ------------------------------------------------------------

def _scan_supports(C, weights, budget, workers, count):
    check_budget(C.size, budget)
    weights = sorted(set(weights))
    n = C.n
    nbytes = (n + 7) // 8
    void = np.dtype((np.void, nbytes))

    def per_block(block):
        wt = np.count_nonzero(block, axis=1)
        out = {}
        for w in weights:
            sel = block[wt == w]
            if not len(sel):
                continue
            packed = np.ascontiguousarray(np.packbits(sel != 0, axis=1)).view(void).ravel()
            if count:
                keys, cnt = np.unique(packed, return_counts=True)
                out[w] = (keys, cnt)
            else:
                out[w] = (np.unique(packed), None)
        return out

    found = {w: Counter() for w in weights}
    for part in map_codeword_blocks(C.field, C.generator.entries, per_block, workers):
        for w, (keys, cnt) in part.items():
            raw = [bytes(x) for x in keys]
            if count:
                found[w].update(dict(zip(raw, cnt.tolist())))
            else:
                found[w].update(raw)
    return found, n, nbytes


def _unpack(raw, n, nbytes):
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8, count=nbytes))[:n]
    return tuple(int(i) for i in np.flatnonzero(bits))


def supports_by_weight(C, weights=None, budget=None, workers=1):
    """Support designs for several weights from a single pass over the code.

    ``weights`` defaults to every nonzero weight that occurs.  Weights that
    occur in no codeword are left out of the result.
    """
    if weights is None:
        weights = weight_distribution(C, "auto", budget, workers).nonzero_weights()
    found, n, nbytes = _scan_supports(C, weights, budget, workers, count=False)
    return {
        w: SupportDesign(n, w, tuple(_unpack(raw, n, nbytes) for raw in keys))
        for w, keys in found.items()
        if keys
    }


def supports(C, w, budget=None, workers=1):
    """The design ``D_w(C)`` of distinct supports of weight-``w`` codewords."""
    if not 0 < w <= C.n:
        raise DimensionError(f"weight {w} outside 1..{C.n}")
    found = supports_by_weight(C, [w], budget, workers)
    if w not in found:
        raise EmptyDesignError(f"{C} has no codewords of weight {w}")
    return found[w]


def support_multiplicities(C, w, budget=None, workers=1):
    """Map each support (sorted tuple) of weight ``w`` to the number of codewords carrying it."""
    found, n, nbytes = _scan_supports(C, [w], budget, workers, count=True)
    return {_unpack(raw, n, nbytes): c for raw, c in found[w].items()}


# -- verification ------------------------------------------------------------------

def verify_design(D, t, subset_budget=None):
    """Count the blocks through every t-subset of points.

    Subsets are visited in lexicographic order and the scan stops at the first
    count that differs from the first one; that pair becomes the witness.
    """
    v, k = D.v, D.k
    if not 1 <= t <= k <= v:
        raise DimensionError(f"need 1 <= t <= k <= v, got t={t}, k={k}, v={v}")
    n_subsets = comb(v, t)
    limit = config.resolve_subset_budget(subset_budget)
    if n_subsets > limit:
        raise BudgetExceeded(
            f"{n_subsets} {t}-subsets exceed the subset budget of {limit}",
            requested=n_subsets,
            budget=limit,
        )
    if D.b == 0:
        raise EmptyDesignError("design has no blocks")
    N = D.incidence()
    first = None
    for prefix in itertools.combinations(range(v), t - 1):
        start = prefix[-1] + 1 if prefix else 0
        if start >= v:
            continue
        through = N[:, list(prefix)].all(axis=1).astype(np.int64) if prefix else np.ones(D.b, np.int64)
        counts = through @ N[:, start:]
        if first is None:
            first = (prefix + (start,), int(counts[0]))
        bad = np.flatnonzero(counts != first[1])
        if bad.size:
            j = int(bad[0])
            witness = (first, (prefix + (start + j,), int(counts[j])))
            return DesignCertificate(t, v, k, None, D.b, NOT_A_DESIGN, witness)
    lam = first[1]
    if lam * comb(v, t) != D.b * comb(k, t):  # pragma: no cover - double counting
        raise ArithmeticError("block count violates lambda * C(v,t) = b * C(k,t)")
    if D.b == comb(v, k):
        if lam != comb(v - t, k - t):  # pragma: no cover
            raise ArithmeticError("complete design with unexpected lambda")
        return DesignCertificate(t, v, k, lam, D.b, COMPLETE)
    return DesignCertificate(t, v, k, lam, D.b, VERIFIED)


def max_strength(D, subset_budget=None):
    """Largest ``t`` for which ``D`` is a t-design, with its lambda; ``(0, None)`` if none."""
    if D.b == comb(D.v, D.k):
        return D.k, 1
    best = (0, None)
    for t in range(1, D.k + 1):
        cert = verify_design(D, t, subset_budget)
        if not cert.is_design:
            break
        best = (t, cert.lam)
    return best


# -- Assmus-Mattson ----------------------------------------------------------------

@dataclass(frozen=True)
class AMReport:
    t: int
    d: int
    d_dual: int | None
    w: int
    w_dual: int | None
    s: int
    applicable: bool
    guaranteed_primal: tuple
    guaranteed_dual: tuple

    def as_dict(self):
        return {
            "t": self.t,
            "d": self.d,
            "d_dual": self.d_dual,
            "w": self.w,
            "w_dual": self.w_dual,
            "s": self.s,
            "applicable": self.applicable,
            "guaranteed_primal": list(self.guaranteed_primal),
            "guaranteed_dual": list(self.guaranteed_dual),
        }


def am_threshold(v, q, d):
    """Largest ``w <= v`` with ``w - floor((w + q - 2)/(q - 1)) < d``.

    For ``q = 2`` the left side is always 0, so the answer is ``v``.
    """
    for w in range(v, -1, -1):
        if w - (w + q - 2) // (q - 1) < d:
            return w
    return 0  # pragma: no cover - w = 0 always qualifies


def assmus_mattson(C, t, budget=None, workers=1):
    """Evaluate the Assmus-Mattson conditions for strength ``t``.

    The dual distribution is taken from the MacWilliams transform of the
    primal one.  For the full space the dual is the zero code; it has no
    minimum distance and the theorem never applies.
    """
    v, Q = C.n, C.field.order
    W = weight_distribution(C, "auto", budget, workers)
    d = W.min_weight
    if C.k < C.n:
        Wd = macwilliams(W, v, Q, C.k)
        d_dual = Wd.min_weight
    else:
        Wd, d_dual = None, None
    w = am_threshold(v, Q, d)
    w_dual = am_threshold(v, Q, d_dual) if d_dual is not None else None
    s = sum(1 for i in range(1, v - t + 1) if Wd is not None and Wd[i])
    applicable = t < d and s <= d - t
    primal, dual_side = (), ()
    if applicable:
        primal = tuple(i for i in range(d, w + 1) if W[i])
        if Wd is not None:
            dual_side = tuple(i for i in range(d_dual, min(v - t, w_dual) + 1) if Wd[i])
    return AMReport(t, d, d_dual, w, w_dual, s, applicable, primal, dual_side)


# -- conjecture and open lambda values -----------------------------------------------

def conjectured_lambda(m):
    """Conjectured lambda for weight ``3 * 2^(m-2)`` of RM(1, m) over GF(4), as a Fraction."""
    v, k = 2**m, 3 * 2 ** (m - 2)
    return Fraction(2 * comb(k, 3) * (v - 1) * (v - 2), 3 * comb(v, 3))


@dataclass(frozen=True)
class ConjectureReport:
    m: int
    lam_observed: int | None
    lam_conjectured: Fraction
    agree: bool
    certificate: DesignCertificate

    def as_dict(self):
        conj = self.lam_conjectured
        return {
            "m": self.m,
            "lambda_observed": self.lam_observed,
            "lambda_conjectured": int(conj) if conj.denominator == 1 else str(conj),
            "agree": self.agree,
            "design": self.certificate.as_dict(),
        }


def conjecture_rm1(m, budget=None, subset_budget=None, workers=1):
    """Check the weight-``3*2^(m-2)`` support design of RM(1, m) over GF(4) against the conjecture."""
    if m < 3:
        raise DimensionError("the conjecture concerns m >= 3")
    L = lift(rm2(1, m), 2)
    D = supports(L.code, 3 * 2 ** (m - 2), budget, workers)
    cert = verify_design(D, 3, subset_budget)
    conj = conjectured_lambda(m)
    agree = cert.is_design and cert.lam == conj
    return ConjectureReport(m, cert.lam, conj, agree, cert)


def family_lift(family, params):
    """The lifted code for ``lifted_simplex``/``lifted_hamming`` ``(q, m, ell)`` or ``lifted_rm1`` ``(m, ell)``."""
    if family == "lifted_simplex":
        q, m, ell = params
        return lift(simplex(field_of_order(q), m), ell)
    if family == "lifted_hamming":
        q, m, ell = params
        return lift(hamming(field_of_order(q), m), ell)
    if family == "lifted_rm1":
        m, ell = params[-2:]
        return lift(rm2(1, m), ell)
    raise ValueError(f"unknown family {family!r}")


def open_lambda_table(family, params, weight, t, budget=None, subset_budget=None, workers=1):
    """Certificate for ``D_weight`` of a lifted family member, computed by exhaustion."""
    L = family_lift(family, params)
    D = supports(L.code, weight, budget, workers)
    return verify_design(D, t, subset_budget)


def open_lambda_sweep(family, params, t, budget=None, subset_budget=None, workers=1):
    """Certificates for every nonzero weight of a lifted family member, from one enumeration."""
    L = family_lift(family, params)
    designs = supports_by_weight(L.code, None, budget, workers)
    return {w: verify_design(D, t, subset_budget) for w, D in designs.items() if D.k >= t}
