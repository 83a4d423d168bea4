import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from air_index import GF2, ParameterError, PrimeField
from air_index.field import is_prime
from air_index.linalg import outside_rowspan, rank_mod_p, solve_mod_p

PRIMES = [2, 3, 5, 7]


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


@pytest.mark.parametrize("p", [0, 1, 4, 9, -3])
def test_field_rejects_non_primes(p):
    with pytest.raises(ParameterError):
        PrimeField(p)


def test_gf2_default():
    assert GF2.p == 2 and GF2.add(1, 1) == 0


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(PRIMES), st.integers(), st.integers(), st.integers())
def test_field_axioms(p, a, b, c):
    F = PrimeField(p)
    a, b, c = F.reduce(a), F.reduce(b), F.reduce(c)
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.sub(a, b) == F.add(a, F.neg(b))
    assert a in F
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.div(b, a) == F.mul(b, F.inv(a))


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        PrimeField(5).inv(0)


def span(rows, p):
    out = set()
    for coeffs in itertools.product(range(p), repeat=len(rows)):
        v = np.zeros(rows.shape[1], dtype=np.int64)
        for a, r in zip(coeffs, rows):
            v = (v + a * r) % p
        out.add(tuple(v))
    return out


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(1, 4), st.integers(1, 5), st.integers(0, 2**32 - 1))
def test_rank_and_span_match_enumeration(p, m, n, seed):
    rng = np.random.default_rng(seed)
    A = rng.integers(0, p, size=(m, n))
    S = span(A, p)
    assert len(S) == p ** rank_mod_p(A, p)
    t = rng.integers(0, p, size=n)
    got = outside_rowspan(A[None], t[None], p)[0]
    assert got == (tuple(t) not in S)


def test_outside_rowspan_batched_gf2_matches_generic():
    rng = np.random.default_rng(7)
    basis = rng.integers(0, 2, size=(50, 6, 70))
    target = rng.integers(0, 2, size=(50, 70))
    target[:10] = basis[:10, 0] ^ basis[:10, 3]
    fast = outside_rowspan(basis, target, 2)
    for b in range(50):
        full = rank_mod_p(np.vstack([basis[b], target[b]]), 2)
        assert fast[b] == (full > rank_mod_p(basis[b], 2))
    assert not fast[:10].any()


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(PRIMES), st.integers(1, 5), st.integers(1, 5), st.integers(0, 2**32 - 1))
def test_solve_mod_p(p, m, n, seed):
    rng = np.random.default_rng(seed)
    A = rng.integers(0, p, size=(m, n))
    b = rng.integers(0, p, size=m)
    x = solve_mod_p(A, b, p)
    if x is None:
        assert rank_mod_p(np.hstack([A, b[:, None]]), p) > rank_mod_p(A, p)
    else:
        assert np.array_equal(A @ x % p, b)
