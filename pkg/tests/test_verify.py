from fractions import Fraction

import numpy as np
import pytest

from air_index import (
    IndexRangeError,
    InstanceModel,
    PrimeField,
    build_air,
    build_plan,
    decodable_oracle,
    derive_params,
    interference_set,
    side_information_set,
    sweep,
    verify_instance,
)
from air_index.verify import SweepReport, column_deletion_breaks, oracle_all, plan_decodes, probe_vectors
from conftest import all_instances

GF2 = PrimeField(2)


def test_interference_examples():
    p = derive_params(12, 7)
    assert p.U == 3
    assert interference_set(p, 0) == [1, 2, 3, 4, 5, 6, 7, 9, 10, 11]
    assert side_information_set(p, 0) == [8]
    q = derive_params(33, 20)
    assert side_information_set(q, 0) == list(range(21, 31))
    assert interference_set(q, 0) == list(range(1, 21)) + [31, 32]


def test_interference_wraps():
    m = InstanceModel.for_instance(12, 7)
    assert m.interference(11) == [0, 1, 2, 3, 4, 5, 6, 8, 9, 10]
    with pytest.raises(IndexRangeError):
        m.interference(12)


def test_sets_partition_receivers():
    for K, D in all_instances(25):
        m = InstanceModel.for_instance(K, D)
        for k in range(K):
            I, S = m.interference(k), m.side_information(k)
            assert len(I) == m.U + m.D
            assert sorted(I + S + [k]) == list(range(K))


def test_oracle_examples():
    M = build_air(12, 7)
    m = InstanceModel.for_instance(12, 7)
    assert all(decodable_oracle(M, m, k, GF2) for k in range(12))
    blind = InstanceModel.with_u(12, 7, 7)
    assert not any(oracle_all(M, blind, GF2))


def test_oracle_batched_matches_single():
    for K, D in [(12, 7), (33, 20), (20, 3)]:
        M = build_air(K, D)
        m = InstanceModel.for_instance(K, D)
        for p in (2, 3):
            F = PrimeField(p)
            assert oracle_all(M, m, F) == [decodable_oracle(M, m, k, F) for k in range(K)]


def test_oracle_catches_a_broken_matrix():
    M = build_air(33, 20)
    L = M.entries.copy()
    L[21, 0] = 0
    verdict = oracle_all(L, InstanceModel.for_instance(33, 20), GF2)
    assert not all(verdict)


@pytest.mark.parametrize("K, D, rate", [(12, 7, Fraction(1, 8)), (33, 20, Fraction(1, 21)), (432, 255, Fraction(1, 256))])
def test_verify_instance_rates(K, D, rate):
    rep = verify_instance(K, D, n_random=4)
    assert rep.passed, rep.failures()
    assert rep.rate == rate and rep.meets_outer_bound
    assert rep.to_dict(receivers=False)["rate"] == str(rate)


def test_verify_instance_odd_fields():
    rep = verify_instance(33, 20, fields=[3, 5, 7])
    assert rep.passed and [f.p for f in rep.fields] == [3, 5, 7]


def test_minimality_small():
    for K, D in all_instances(14):
        M = build_air(K, D)
        assert column_deletion_breaks(M, InstanceModel.for_instance(K, D), GF2), (K, D)


def test_verify_with_minimality_flag():
    rep = verify_instance(12, 7, minimality=True)
    assert rep.minimal is True and rep.passed


def test_plan_agrees_with_oracle():
    for K, D in all_instances(30):
        M = build_air(K, D)
        plan = build_plan(M)
        ok = plan_decodes(plan, M, probe_vectors(K, 2, 4, 0))
        assert ok == oracle_all(M, InstanceModel.for_instance(K, D), GF2)


def test_probe_vectors_deterministic():
    a = probe_vectors(12, 3, 5, 42)
    assert a.shape == (17, 12)
    assert np.array_equal(a, probe_vectors(12, 3, 5, 42))
    assert np.array_equal(a[:12], np.eye(12))


def test_sweep_small():
    rep = sweep(12)
    assert rep.instances == 55 and rep.ok and not rep.failures
    assert rep.to_dict()["first_failure"] is None


def test_sweep_parallel_matches_serial():
    a = sweep(10, [2, 3])
    b = sweep(10, [2, 3], workers=2)
    assert a.to_dict() == b.to_dict()


def test_sweep_merge_order_insensitive():
    x = SweepReport(5, [2], 1, 0, 5, ["b"])
    y = SweepReport(7, [2], 2, 2, 14, ["a"])
    assert x.merge(y) == y.merge(x)


def test_sweep_rejects_small_kmax():
    with pytest.raises(ValueError):
        sweep(2)


def test_knows_matches_side_information():
    for K, D in all_instances(20):
        m = InstanceModel.for_instance(K, D)
        for k in range(K):
            assert [i for i in range(K) if m.knows(k, i)] == m.side_information(k)
