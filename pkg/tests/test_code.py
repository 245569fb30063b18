import itertools
from math import comb

import numpy as np
import pytest

from liftlab.code import (
    WeightDistribution,
    code_from_generator,
    codewords,
    dual,
    krawtchouk_row,
    macwilliams,
    map_codeword_blocks,
    min_distance,
    weight_distribution,
)
from liftlab.errors import BudgetExceeded, DegenerateCodeError, DimensionError
from liftlab.families import hamming, simplex
from liftlab.field import field_of_order, make_field
from liftlab.matrix import row_space_equal

from _instances import base_instances

F2 = make_field(2)


def random_code(rng, q_choices=(2, 3, 4), max_n=12, max_k=None):
    q = int(rng.choice(q_choices))
    F = field_of_order(q)
    n = int(rng.integers(1, max_n + 1))
    k_cap = n if max_k is None else min(n, max_k)
    while True:
        k = int(rng.integers(1, k_cap + 1))
        G = rng.integers(0, q, size=(k, n))
        if G.any():
            return code_from_generator(F, G)


def brute_weights(C):
    """Enumerate by explicit encoding of every message."""
    F = C.field
    counts = [0] * (C.n + 1)
    for msg in itertools.product(range(F.order), repeat=C.k):
        counts[int(np.count_nonzero(C.encode(msg)))] += 1
    return WeightDistribution(C.n, counts)


def test_code_from_generator_examples():
    full = code_from_generator(F2, np.eye(4, dtype=np.int64))
    assert (full.n, full.k, min_distance(full)) == (4, 4, 1)
    rep = code_from_generator(F2, [[1, 1, 1]])
    assert (rep.k, min_distance(rep)) == (1, 3)
    collapsed = code_from_generator(F2, [[1, 1, 0], [1, 1, 0]])
    assert collapsed.k == 1
    with pytest.raises(DegenerateCodeError):
        code_from_generator(F2, [[0, 0, 0]])


def test_dual_examples():
    rep = code_from_generator(F2, [[1, 1, 1]])
    even = dual(rep)
    assert (even.n, even.k, min_distance(even)) == (3, 2, 2)
    H = dual(simplex(F2, 3))
    assert (H.n, H.k, min_distance(H)) == (7, 4, 3)
    with pytest.raises(DegenerateCodeError):
        dual(code_from_generator(F2, np.eye(3, dtype=np.int64)))


def test_weight_distribution_examples():
    assert str(weight_distribution(simplex(F2, 4))) == "1 + 15z^8"
    W = weight_distribution(hamming(F2, 4))
    assert W.counts == (1, 0, 0, 35, 105, 168, 280, 435, 435, 280, 168, 105, 35, 0, 0, 1)
    assert W[9] == 280  # the MacWilliams side confirms the same value
    assert weight_distribution(hamming(F2, 4), "via_dual") == W
    full = code_from_generator(F2, np.eye(6, dtype=np.int64))
    assert weight_distribution(full, "via_dual").counts == tuple(comb(6, i) for i in range(7))
    assert weight_distribution(full, "direct").counts == tuple(comb(6, i) for i in range(7))


def test_min_distance_examples():
    F3 = make_field(3)
    assert min_distance(code_from_generator(F2, [[1, 1, 1]])) == 3
    assert min_distance(hamming(F3, 3)) == 3
    assert min_distance(simplex(F3, 3)) == 9


def test_macwilliams_of_zero_code_is_binomial():
    n = 5
    zero = WeightDistribution(n, (1,) + (0,) * n)
    assert macwilliams(zero, n, 2, 0).counts == tuple(comb(n, i) for i in range(n + 1))


def test_macwilliams_rejects_bad_input():
    with pytest.raises(DimensionError):
        macwilliams([1, 1], 3, 2, 1)
    with pytest.raises(ValueError):
        macwilliams([1, 0, 2], 2, 2, 1)
    with pytest.raises(ValueError):
        macwilliams([1, -1, 2], 2, 2, 1)
    with pytest.raises(DimensionError):
        WeightDistribution(3, (1, 0))


def test_random_codes_macwilliams_and_totals():
    rng = np.random.default_rng(20240611)
    for _ in range(200):
        C = random_code(rng)
        Q = C.field.order
        W = weight_distribution(C, "direct")
        assert W.total == Q**C.k
        assert W[0] == 1
        assert macwilliams(macwilliams(W, C.n, Q, C.k), C.n, Q, C.n - C.k) == W
        if C.k < C.n:
            assert macwilliams(W, C.n, Q, C.k) == weight_distribution(dual(C), "direct")
            assert row_space_equal(dual(dual(C)).generator, C.generator)


def test_direct_matches_explicit_encoding():
    rng = np.random.default_rng(7)
    for _ in range(25):
        C = random_code(rng, q_choices=(2, 3, 4, 5), max_n=8, max_k=5)
        assert weight_distribution(C, "direct") == brute_weights(C)


def test_direct_equals_via_dual_on_families():
    for label, C in base_instances(max_n=40):
        Q = C.field.order
        if max(Q**C.k, Q ** (C.n - C.k)) > 1 << 18 or C.k == C.n:
            continue
        W = weight_distribution(C, "direct")
        assert W == weight_distribution(C, "via_dual"), label
        assert macwilliams(W, C.n, Q, C.k) == weight_distribution(dual(C)), label
        assert min_distance(C) == next(i for i in range(1, C.n + 1) if W[i]), label


def test_block_enumeration_crosses_prefixes():
    # GF(4)^9 splits into 4^8 suffix rows and a one-digit prefix
    C = code_from_generator(make_field(2, 2), np.eye(9, dtype=np.int64))
    words = codewords(C)
    assert words.shape == (4**9, 9)
    assert len({tuple(r) for r in words[::997].tolist()}) == len(words[::997])
    assert tuple(words[1].tolist()) == (0,) * 8 + (1,)
    W = weight_distribution(C, "direct")
    assert W.counts == tuple(comb(9, i) * 3**i for i in range(10))


def test_worker_count_does_not_change_results():
    rng = np.random.default_rng(3)
    C = code_from_generator(make_field(2, 2), rng.integers(0, 4, size=(10, 14)))
    assert C.k == 10
    one = weight_distribution(C, "direct", workers=1)
    from liftlab.code import _WD_CACHE

    _WD_CACHE.clear()
    three = weight_distribution(C, "direct", workers=3)
    assert one == three
    blocks1 = map_codeword_blocks(C.field, C.generator.entries, lambda b: b.sum(axis=1), 1)
    blocks4 = map_codeword_blocks(C.field, C.generator.entries, lambda b: b.sum(axis=1), 4)
    assert np.array_equal(np.concatenate(blocks1), np.concatenate(blocks4))


def test_budget_is_enforced():
    C = simplex(make_field(3), 5)
    with pytest.raises(BudgetExceeded) as err:
        weight_distribution(C, "direct", budget=100)
    assert err.value.sizes["requested"] == 3**5
    with pytest.raises(BudgetExceeded):
        weight_distribution(C, "auto", budget=100)
    with pytest.raises(BudgetExceeded):
        codewords(C, budget=10)


def test_unknown_strategy():
    with pytest.raises(ValueError):
        weight_distribution(simplex(F2, 3), "guess")


def test_enumerator_format():
    W = WeightDistribution(3, (1, 1, 0, 2))
    assert W.enumerator() == "1 + z + 2z^3"
    assert W.terms() == [(0, 1), (1, 1), (3, 2)]
    assert WeightDistribution(2, (1, 0, 0)).min_weight is None


@pytest.mark.parametrize("n,Q", [(1, 2), (5, 2), (7, 3), (9, 4), (12, 5)])
def test_krawtchouk_row_is_a_polynomial_expansion(n, Q):
    for x in range(n + 1):
        # expand (1 - z)^x (1 + (Q-1) z)^(n-x) factor by factor
        poly = [1]
        for factor in [(1, -1)] * x + [(1, Q - 1)] * (n - x):
            nxt = [0] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i] += c * factor[0]
                nxt[i + 1] += c * factor[1]
            poly = nxt
        assert krawtchouk_row(n, Q, x) == poly
