import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liftlab.errors import DimensionError, FieldError
from liftlab.field import field_of_order, make_field
from liftlab.matrix import MatrixOverField, kernel_basis, rank, row_space_equal, rref

ORDERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


@st.composite
def matrices(draw, max_order=16, max_dim=8):
    q = draw(st.sampled_from([o for o in ORDERS if o <= max_order]))
    F = field_of_order(q)
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    vals = draw(st.lists(st.integers(0, q - 1), min_size=r * c, max_size=r * c))
    return MatrixOverField(F, np.array(vals, dtype=np.int64).reshape(r, c))


def _brute_span(M):
    F = M.owner
    out = set()
    for coeffs in itertools.product(range(F.order), repeat=M.rows):
        v = np.zeros(M.cols, dtype=np.int64)
        for c, row in zip(coeffs, M.entries):
            v = F.vadd(v, F.vmul(c, row))
        out.add(tuple(v.tolist()))
    return out


def test_identity_is_reduced():
    F = make_field(5)
    I = MatrixOverField.identity(F, 3)
    R, rk, piv = rref(I)
    assert R == I and rk == 3 and list(piv) == [0, 1, 2]


def test_zero_matrix():
    F = make_field(2)
    Z = MatrixOverField.zeros(F, 2, 4)
    R, rk, piv = rref(Z)
    assert R == Z and rk == 0 and list(piv) == []
    assert kernel_basis(MatrixOverField.zeros(F, 1, 3)).rows == 3


def test_small_rank_example():
    F = make_field(2)
    M = MatrixOverField(F, [[1, 1, 0], [0, 1, 1]])
    assert rank(M) == 2
    assert len(_brute_span(M)) == 4


def test_kernel_examples():
    F = make_field(3)
    assert kernel_basis(MatrixOverField.identity(F, 4)).rows == 0
    K = kernel_basis(MatrixOverField(F, [[1, 1]]))
    assert K.rows == 1
    # brute force: the nonzero kernel vectors are the multiples of (1, 2)
    kernel = [v for v in itertools.product(range(3), repeat=2) if (v[0] + v[1]) % 3 == 0 and any(v)]
    assert sorted(kernel) == [(1, 2), (2, 1)]
    assert tuple(K.entries[0]) in kernel


def test_row_space_equal_examples():
    F = make_field(2)
    G = MatrixOverField(F, [[1, 0, 1, 1], [0, 1, 1, 0], [1, 1, 0, 1]])
    assert row_space_equal(G, rref(G)[0])
    assert row_space_equal(G, MatrixOverField(F, G.entries[::-1]))
    assert not row_space_equal(MatrixOverField.identity(F, 2), MatrixOverField(F, [[1, 1]]))


def test_construction_checks():
    F = make_field(3)
    with pytest.raises(FieldError):
        MatrixOverField(F, [[0, 3]])
    with pytest.raises(DimensionError):
        MatrixOverField(F, np.zeros(3, dtype=np.int64))
    M = MatrixOverField(F, [[1, 2]])
    with pytest.raises(AttributeError):
        M.entries = None
    with pytest.raises(ValueError):
        M.entries[0, 0] = 2
    assert M.T.shape == (2, 1)
    assert hash(M) == hash(MatrixOverField(F, [[1, 2]]))


def test_matmul_against_scalar_loop():
    F = make_field(2, 3)
    rng = np.random.default_rng(1)
    A = MatrixOverField(F, rng.integers(0, 8, size=(3, 4)))
    B = MatrixOverField(F, rng.integers(0, 8, size=(4, 2)))
    C = A @ B
    for i in range(3):
        for j in range(2):
            s = 0
            for k in range(4):
                s = F.add(s, F.mul(int(A[i, k]), int(B[k, j])))
            assert C[i, j] == s


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rref_invariants(M):
    R, rk, piv = rref(M)
    F = M.owner
    assert rref(R)[0] == R
    assert rk == len(piv)
    # pivot columns are unit vectors; leading entries are 1
    for i, c in enumerate(piv):
        col = R.entries[:, c]
        assert col[i] == 1 and np.count_nonzero(col) == 1
    assert not R.entries[rk:].any()
    K = kernel_basis(M)
    assert rk + K.rows == M.cols
    if K.rows:
        assert not (M @ K.T).entries.any()
        assert rank(K) == K.rows
    assert row_space_equal(M, R)
    assert rank(M.T) == rk
    assert F == R.owner


@settings(max_examples=60, deadline=None)
@given(matrices(max_order=4, max_dim=5))
def test_span_from_rref_equals_span_from_rows(M):
    R, rk, _ = rref(M)
    basis = MatrixOverField(M.owner, R.entries[:rk]) if rk else None
    want = _brute_span(M)
    got = _brute_span(basis) if basis is not None else {tuple([0] * M.cols)}
    assert got == want
    assert M.span() == want
