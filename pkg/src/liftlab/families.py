"""Constructors for Simplex, Hamming, binary Reed-Muller and projective Reed-Muller codes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

import numpy as np

from .code import code_from_generator, dual
from .errors import DimensionError
from .field import FieldSpec, field_of_order, make_field, make_tower
from .matrix import MatrixOverField

__all__ = [
    "ProjectivePointList",
    "projective_points",
    "simplex",
    "simplex_trace",
    "hamming",
    "rm2",
    "prm",
    "prm_evaluation_matrix",
    "prm_dimension",
    "prm_min_distance",
    "MAX_LENGTH",
    "FAMILIES",
    "family_code",
]

MAX_LENGTH = 1 << 12


@dataclass(frozen=True, eq=False)
class ProjectivePointList:
    field: FieldSpec
    m: int
    points: np.ndarray  # shape (count, m), one normalized representative per row

    def __len__(self):
        return len(self.points)


def _projective_length(q, m):
    return (q**m - 1) // (q - 1)


def _check_length(n):
    if n > MAX_LENGTH:
        raise DimensionError(f"code length {n} exceeds the bound {MAX_LENGTH}")


def projective_points(field, m):
    """Points of PG(m-1, q) with first nonzero coordinate 1, lexicographically ordered."""
    if m < 1:
        raise DimensionError("m must be positive")
    q = field.order
    _check_length(_projective_length(q, m))
    pts = []
    for lead in range(m):
        # (0,...,0,1,*,...,*): the free tail runs through GF(q)^(m-1-lead) in order
        for tail in itertools.product(range(q), repeat=m - 1 - lead):
            pts.append((0,) * lead + (1,) + tail)
    pts.sort()
    arr = np.array(pts, dtype=np.int64).reshape(-1, m)
    arr.setflags(write=False)
    return ProjectivePointList(field, m, arr)


def simplex(field, m):
    """Simplex code: generator columns are the points of PG(m-1, q)."""
    if m < 2:
        raise DimensionError("Simplex codes need m >= 2")
    pts = projective_points(field, m)
    return code_from_generator(field, MatrixOverField(field, pts.points.T))


def simplex_trace(field, m):
    """Simplex code as ``{(Tr(a b_i))_i : a in GF(q^m)}`` with ``b_i = alpha^i``."""
    if m < 2:
        raise DimensionError("Simplex codes need m >= 2")
    q = field.order
    n = _projective_length(q, m)
    _check_length(n)
    tower = make_tower(field, m)
    top = tower.top
    b = top.exp_table[:n]
    rows = [tower.trace_array(top.vmul(top.exp_table[j], b)) for j in range(m)]
    return code_from_generator(field, MatrixOverField(field, np.array(rows)))


def hamming(field, m):
    """Hamming code, the dual of :func:`simplex`."""
    return dual(simplex(field, m))


def _monomials_by_degree(m, max_degree):
    for d in range(max_degree + 1):
        yield from itertools.combinations(range(m), d)


def rm2(r, m):
    """Binary Reed-Muller code RM(r, m).

    Coordinates are the integers ``0 .. 2^m - 1`` read as points of GF(2)^m
    with the least significant bit as ``x_1``; rows are the monomials of
    degree at most ``r``, by degree then lexicographically.
    """
    if not 0 <= r < m:
        raise DimensionError(f"need 0 <= r < m, got r={r}, m={m}")
    _check_length(2**m)
    pts = (np.arange(2**m)[:, None] >> np.arange(m)[None, :]) & 1
    rows = [np.prod(pts[:, list(mono)], axis=1) for mono in _monomials_by_degree(m, r)]
    return code_from_generator(make_field(2), MatrixOverField(make_field(2), np.array(rows)))


def _check_prm_degree(q, m, h):
    if m < 2:
        raise DimensionError("projective Reed-Muller codes need m >= 2")
    if not 1 <= h <= (m - 1) * (q - 1):
        raise DimensionError(f"h must lie in 1..{(m - 1) * (q - 1)}, got {h}")


def prm_evaluation_matrix(field, m, h):
    """Evaluations of every degree-h monomial (lexicographic exponents) on the projective points."""
    _check_prm_degree(field.order, m, h)
    pts = projective_points(field, m).points
    rows = []
    for mono in itertools.combinations_with_replacement(range(m), h):
        row = np.ones(len(pts), dtype=np.int64)
        for var in mono:
            row = field.vmul(row, pts[:, var])
        rows.append(row)
    return MatrixOverField(field, np.array(rows))


def prm(field, m, h):
    """Projective Reed-Muller code PRM(q, m, h)."""
    return code_from_generator(field, prm_evaluation_matrix(field, m, h))


def _binom(a, b):
    if b < 0 or a < b:
        return 0
    return comb(a, b)


def prm_dimension(q, m, h):
    """Dimension of PRM(q, m, h) by the closed-form alternating sum."""
    _check_prm_degree(q, m, h)
    total = 0
    for t in range(1, h + 1):
        if (t - h) % (q - 1):
            continue
        total += sum(
            (-1) ** j * comb(m, j) * _binom(t - j * q + m - 1, t - j * q) for j in range(m + 1)
        )
    return total


def prm_min_distance(q, m, h):
    """``(q - v) q^(m-2-u)`` where ``h - 1 = u(q-1) + v``."""
    _check_prm_degree(q, m, h)
    u, v = divmod(h - 1, q - 1)
    return (q - v) * q ** (m - 2 - u)


FAMILIES = ("simplex", "simplex_trace", "hamming", "rm", "prm")


def family_code(family, q=2, m=2, order=1, h=1):
    """Build a family member by name; ``order`` is the RM order, ``h`` the PRM degree."""
    if family == "rm":
        if q != 2:
            raise DimensionError("Reed-Muller codes are binary here; use q = 2")
        return rm2(order, m)
    F = field_of_order(q)
    if family == "simplex":
        return simplex(F, m)
    if family == "simplex_trace":
        return simplex_trace(F, m)
    if family == "hamming":
        return hamming(F, m)
    if family == "prm":
        return prm(F, m, h)
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
