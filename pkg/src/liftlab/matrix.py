"""Dense matrices over a :class:`~liftlab.field.FieldSpec`."""

from __future__ import annotations

import itertools

import numpy as np

from .errors import DimensionError, FieldError
from .field import FieldElement, FieldSpec

__all__ = ["MatrixOverField", "rref", "rank", "kernel_basis", "row_space_equal"]


def _as_codes(field, rows):
    def code(x):
        if isinstance(x, FieldElement):
            if x.owner != field:
                raise FieldError(f"entry {x} does not belong to {field}")
            return x.value
        return int(x)

    arr = np.array([[code(x) for x in row] for row in rows], dtype=np.int64)
    return arr


class MatrixOverField:
    """An immutable rows x cols array of element codes of ``owner``."""

    __slots__ = ("owner", "entries")

    def __init__(self, owner: FieldSpec, entries):
        if isinstance(entries, np.ndarray):
            arr = np.array(entries, dtype=np.int64, copy=True)
        else:
            entries = list(entries)
            arr = _as_codes(owner, entries) if entries else np.zeros((0, 0), dtype=np.int64)
        if arr.ndim != 2:
            raise DimensionError(f"expected a 2-d array, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= owner.order):
            raise FieldError(f"entries out of range for {owner}")
        arr.setflags(write=False)
        object.__setattr__(self, "owner", owner)
        object.__setattr__(self, "entries", arr)

    def __setattr__(self, name, value):
        raise AttributeError("MatrixOverField is immutable")

    @classmethod
    def zeros(cls, owner, rows, cols):
        return cls(owner, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, owner, n):
        return cls(owner, np.eye(n, dtype=np.int64))

    @property
    def rows(self):
        return self.entries.shape[0]

    @property
    def cols(self):
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    def __getitem__(self, idx):
        return self.entries[idx]

    def __eq__(self, other):
        return (
            isinstance(other, MatrixOverField)
            and self.owner == other.owner
            and np.array_equal(self.entries, other.entries)
        )

    def __hash__(self):
        return hash((self.owner, self.entries.shape, self.entries.tobytes()))

    def __repr__(self):
        return f"MatrixOverField({self.owner}, {self.entries.tolist()})"

    def tolist(self):
        return self.entries.tolist()

    def transpose(self):
        return MatrixOverField(self.owner, self.entries.T)

    T = property(transpose)

    def __matmul__(self, other):
        if not isinstance(other, MatrixOverField):
            return NotImplemented
        if other.owner != self.owner:
            raise FieldError("matrices over different fields")
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        F = self.owner
        out = np.zeros((self.rows, other.cols), dtype=np.int64)
        for i in range(self.cols):
            out = F.vadd(out, F.vmul(self.entries[:, i : i + 1], other.entries[i : i + 1, :]))
        return MatrixOverField(F, out)

    def span(self):
        """All vectors of the row space, one row per combination (small cases only)."""
        F = self.owner
        out = set()
        for coeffs in itertools.product(range(F.order), repeat=self.rows):
            v = np.zeros(self.cols, dtype=np.int64)
            for c, row in zip(coeffs, self.entries):
                v = F.vadd(v, F.vmul(c, row))
            out.add(tuple(int(x) for x in v))
        return out


def rref(M):
    """Reduced row echelon form by Gauss-Jordan elimination.

    Returns ``(R, rank, pivots)``; ``R`` has the shape of ``M`` with the zero
    rows at the bottom.  Pivots are chosen as the first nonzero entry at or
    below the current row, scanning columns left to right.
    """
    F = M.owner
    A = np.array(M.entries, dtype=np.int64)
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = F.vmul(A[r], F.inv(int(A[r, c])))
        factors = A[:, c].copy()
        factors[r] = 0
        touched = np.nonzero(factors)[0]
        if touched.size:
            A[touched] = F.vsub(A[touched], F.vmul(factors[touched, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return MatrixOverField(F, A), r, pivots


def rank(M):
    return rref(M)[1]


def kernel_basis(M):
    """Basis (as rows) of the right null space ``{v : M v^T = 0}``."""
    F = M.owner
    R, rk, pivots = rref(M)
    free = [c for c in range(M.cols) if c not in set(pivots)]
    K = np.zeros((len(free), M.cols), dtype=np.int64)
    for j, f in enumerate(free):
        K[j, f] = 1
        for i, pc in enumerate(pivots):
            K[j, pc] = F.neg(int(R.entries[i, f]))
    return MatrixOverField(F, K)


def row_space_equal(A, B):
    if A.owner != B.owner:
        raise FieldError("matrices over different fields")
    if A.cols != B.cols:
        raise DimensionError(f"column counts differ: {A.cols} vs {B.cols}")
    Ra, ra, _ = rref(A)
    Rb, rb, _ = rref(B)
    return ra == rb and np.array_equal(Ra.entries[:ra], Rb.entries[:rb])
