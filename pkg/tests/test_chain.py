import math

import pytest
from hypothesis import given, strategies as st

from air_index import ParameterError, compute_chain, derive_params, gcd_of, interval_layout
from air_index.chain import Interval
from conftest import all_instances


@st.composite
def instance(draw, k_max=200):
    K = draw(st.integers(3, k_max))
    D = draw(st.integers(1, K - 2))
    return K, D


@pytest.mark.parametrize("K, D, U", [(12, 7, 3), (33, 20, 2), (12, 3, 3), (432, 175, 15), (432, 255, 15)])
def test_derive_params(K, D, U):
    params = derive_params(K, D)
    assert (params.K, params.D, params.U) == (K, D, U)


@pytest.mark.parametrize("K, D", [(2, 1), (5, 0), (5, 4), (5, 9), (3, 2)])
def test_derive_params_out_of_range(K, D):
    with pytest.raises(ParameterError):
        derive_params(K, D)


def test_u_is_never_user_supplied():
    from air_index import ProblemParams

    with pytest.raises(ParameterError):
        ProblemParams(12, 7, 2)


@pytest.mark.parametrize(
    "K, D, lambdas, betas, l",
    [
        (33, 20, [12, 9, 3, 0], [1, 1, 3], 2),
        (432, 175, [256, 176, 80, 16, 0], [0, 1, 2, 5], 3),
        (432, 255, [176, 80, 16, 0], [1, 2, 5], 2),
        (12, 7, [4, 0], [2], 0),
    ],
)
def test_compute_chain_examples(K, D, lambdas, betas, l):
    chain = compute_chain(K, D)
    assert list(chain.lambdas) == lambdas
    assert list(chain.betas) == betas
    assert chain.l == l
    assert chain.lambda_minus1 == D + 1


@pytest.mark.parametrize("K, D, g", [(12, 7, 4), (33, 20, 3), (432, 175, 16)])
def test_gcd_of(K, D, g):
    assert gcd_of(compute_chain(K, D)) == g


@given(instance())
def test_chain_invariants(kd):
    K, D = kd
    ch = compute_chain(K, D)
    lam = ch.lam
    assert lam(0) == K - D - 1
    for i in range(ch.l + 1):
        assert lam(i - 1) == ch.beta(i) * lam(i) + lam(i + 1)
    assert all(lam(i) > lam(i + 1) for i in range(ch.l))
    assert lam(ch.l) >= 1 and lam(ch.l + 1) == 0
    assert all(b >= 1 for b in ch.betas[1:]) and ch.betas[0] >= 0
    assert gcd_of(ch) == math.gcd(K, D + 1)
    params = derive_params(K, D)
    assert params.U + params.D <= K - 1


@given(instance())
def test_chain_inequality(kd):
    # lambda_{2i-1} - c lambda_{2i} >= lambda_{2i+1} >= lambda_l, c in [0:beta_{2i}]
    ch = compute_chain(*kd)
    for i in range(ch.half_floor + 1):
        for c in range(ch.beta(2 * i) + 1):
            assert ch.lam(2 * i - 1) - c * ch.lam(2 * i) >= ch.lam(2 * i + 1)
        if 2 * i + 1 <= ch.l:
            assert ch.lam(2 * i + 1) >= ch.gcd


def covers_exactly(intervals, lo, hi):
    seen = [x for iv in intervals for x in iv]
    return sorted(seen) == list(range(lo, hi + 1))


def test_layout_partitions_up_to_200():
    for K, D in all_instances(200):
        ch = compute_chain(K, D)
        lay = interval_layout(ch)
        assert len(lay.rows) == ch.half_floor + 2
        assert len(lay.cols) == ch.half_ceil + 1
        assert covers_exactly(lay.rows, 0, K - 1), (K, D)
        assert covers_exactly(lay.cols, 0, D), (K, D)
        assert covers_exactly(lay.shifted_cols, ch.lam(0), K - 1), (K, D)
        for c, s, dt, et in zip(lay.cols, lay.shifted_cols, lay.dtilde, lay.etilde):
            assert s == c.shift(ch.lam(0)) or (c.empty and s.empty)
            assert sorted([*dt, *et]) == list(s)


def test_layout_example1():
    lay = interval_layout(compute_chain(12, 7))
    assert lay.dtilde[0] == Interval(4, 7)
    assert lay.etilde[0] == Interval(8, 11)
    assert lay.head == Interval(0, 3)
    assert lay.cols[0] == Interval(0, 7)


def test_layout_example4():
    lay = interval_layout(compute_chain(33, 20))
    assert lay.cols[:2] == (Interval(0, 11), Interval(12, 20))
    assert lay.dtilde[0].empty
    assert lay.etilde[0] == Interval(12, 23)
    assert lay.rows == (Interval(0, 20), Interval(21, 29), Interval(30, 32))


def test_layout_example5_c0_empty():
    lay = interval_layout(compute_chain(432, 175))
    assert lay.cols[0].empty
    assert len(lay.cols[0]) == 0


def test_shifted_cols_formula():
    for K, D in all_instances(60):
        ch = compute_chain(K, D)
        for i, s in enumerate(ch.layout.shifted_cols):
            assert s == Interval(K - ch.lam(2 * i - 1), K - ch.lam(2 * i + 1) - 1)


def test_chain_json_shape():
    d = compute_chain(33, 20).to_dict()
    assert d == {"K": 33, "D": 20, "U": 2, "lambda_minus1": 21, "lambdas": [12, 9, 3, 0], "betas": [1, 1, 3], "l": 2}
