"""Independent decodability oracle and instance/sweep verification.

The oracle never looks at a decoding plan.  Receiver k can decode from the
code ``c = x L`` exactly when some combination of code symbols has
coefficient 1 on x_k and 0 on every interfering message, i.e. when row k of
L is outside the row span of the rows indexed by the interference set.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .chain import derive_params
from .codec import DecodingPlan, build_plan, encode, closed_form_gamma_count, closed_form_tau_count
from .errors import AirIndexError
from .field import PrimeField
from .linalg import outside_rowspan
from .matrix import AirMatrix, build_air
from .model import InstanceModel

log = logging.getLogger(__name__)

DEFAULT_SEED = 20170101


def oracle_all(matrix: AirMatrix | np.ndarray, instance: InstanceModel, field: PrimeField) -> list[bool]:
    """Oracle verdict for every receiver at once."""
    L = matrix.entries if isinstance(matrix, AirMatrix) else np.asarray(matrix)
    K = instance.K
    idx = np.array([instance.interference(k) for k in range(K)], dtype=np.int64)
    if idx.size == 0:
        return [bool(L[k].any()) for k in range(K)]
    return outside_rowspan(L[idx], L, field.p).tolist()


def decodable_oracle(
    matrix: AirMatrix | np.ndarray, instance: InstanceModel, k: int, field: PrimeField
) -> bool:
    L = matrix.entries if isinstance(matrix, AirMatrix) else np.asarray(matrix)
    blocked = instance.interference(k)
    if not blocked:
        return bool(L[k].any())
    return bool(outside_rowspan(L[blocked][None], L[k][None], field.p)[0])


def plan_decodes(plan: DecodingPlan, matrix: AirMatrix, messages: np.ndarray) -> list[bool]:
    """Per receiver: does the plan recover x_k for every row of ``messages``?

    Vectorised form of :func:`air_index.codec.decode` over a batch of
    message vectors, restricted to the side information the plan names.
    """
    p = plan.p
    X = np.asarray(messages, dtype=np.int64) % p
    C = X @ matrix.entries.astype(np.int64) % p
    model = InstanceModel(plan.K, plan.D, plan.U)
    ok = []
    for rp in plan.receivers:
        if not set(rp.gamma) <= set(model.side_information(rp.k)):
            ok.append(False)
            continue
        got = C[:, list(rp.tau)] @ np.array(rp.coeffs, dtype=np.int64)
        if rp.gamma:
            got -= X[:, list(rp.gamma)] @ np.array(rp.gamma_coeffs, dtype=np.int64)
        ok.append(bool(np.array_equal(got % p, X[:, rp.k])))
    return ok


def probe_vectors(K: int, p: int, n_random: int, seed: int) -> np.ndarray:
    """All basis vectors followed by ``n_random`` seeded uniform vectors."""
    rng = np.random.default_rng([seed, K, p])
    return np.vstack([np.eye(K, dtype=np.int64), rng.integers(0, p, size=(n_random, K))])


@dataclass
class ReceiverStatus:
    k: int
    oracle: bool
    plan: bool
    counts: bool | None = None

    @property
    def ok(self) -> bool:
        return self.oracle and self.plan and self.counts is not False

    def to_dict(self) -> dict:
        return {"k": self.k, "oracle": self.oracle, "plan": self.plan, "counts": self.counts}


@dataclass
class FieldResult:
    p: int
    receivers: list[ReceiverStatus]
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(r.ok for r in self.receivers)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "passed": self.passed,
            "error": self.error,
            "receivers": [r.to_dict() for r in self.receivers],
        }


@dataclass
class VerificationReport:
    K: int
    D: int
    U: int
    fields: list[FieldResult]
    minimal: bool | None = None

    @property
    def length(self) -> int:
        return self.D + 1

    @property
    def rate(self) -> Fraction:
        """Message symbols delivered per code symbol."""
        return Fraction(1, self.length)

    @property
    def outer_bound(self) -> Fraction:
        return Fraction(1, self.D + 1)

    @property
    def meets_outer_bound(self) -> bool:
        return self.rate == self.outer_bound

    @property
    def passed(self) -> bool:
        return (
            all(f.passed for f in self.fields)
            and self.meets_outer_bound
            and self.minimal is not False
        )

    def failures(self) -> list[str]:
        out = []
        for f in self.fields:
            if f.error:
                out.append(f"K={self.K} D={self.D} GF({f.p}): {f.error}")
            for r in f.receivers:
                if not r.ok:
                    out.append(
                        f"K={self.K} D={self.D} GF({f.p}) receiver {r.k}: "
                        f"oracle={r.oracle} plan={r.plan} counts={r.counts}"
                    )
        if self.minimal is False:
            out.append(f"K={self.K} D={self.D}: a column can be deleted without loss")
        return out

    def to_dict(self, receivers: bool = True) -> dict:
        fields = [f.to_dict() for f in self.fields]
        if not receivers:
            for f in fields:
                del f["receivers"]
        return {
            "K": self.K,
            "D": self.D,
            "U": self.U,
            "passed": self.passed,
            "length": self.length,
            "rate": str(self.rate),
            "outer_bound": str(self.outer_bound),
            "meets_outer_bound": self.meets_outer_bound,
            "minimal": self.minimal,
            "fields": fields,
            "failures": self.failures(),
        }


def column_deletion_breaks(matrix: AirMatrix, instance: InstanceModel, field: PrimeField) -> bool:
    """True if deleting any single column leaves some receiver unable to decode."""
    for j in range(matrix.D + 1):
        reduced = np.delete(matrix.entries, j, axis=1)
        if all(oracle_all(reduced, instance, field)):
            return False
    return True


def verify_instance(
    K: int,
    D: int,
    fields: Sequence[int] = (2,),
    n_random: int = 8,
    seed: int = DEFAULT_SEED,
    minimality: bool = False,
) -> VerificationReport:
    """Check every receiver of (K, D) over each field in ``fields``.

    Per receiver and field: the oracle verdict, plan-based decoding of all
    basis vectors plus ``n_random`` seeded random vectors, and (GF(2) only)
    the tau/gamma sizes against the closed-form counts.  With
    ``minimality`` the column-deletion check is run over the first field.
    """
    params = derive_params(K, D)
    matrix = build_air(K, D)
    instance = InstanceModel.from_params(params)
    results = []
    for p in fields:
        field_ = PrimeField(p)
        oracle = oracle_all(matrix, instance, field_)
        error = None
        try:
            plan = build_plan(matrix, field_)
            decodes = plan_decodes(plan, matrix, probe_vectors(K, p, n_random, seed))
        except AirIndexError as err:
            error = str(err)
            plan, decodes = None, [False] * K
        statuses = []
        for k in range(K):
            counts = None
            if p == 2 and plan is not None:
                rp = plan[k]
                counts = len(rp.tau) == closed_form_tau_count(matrix, k) and len(
                    rp.gamma
                ) == closed_form_gamma_count(matrix, k)
            statuses.append(ReceiverStatus(k, oracle[k], decodes[k], counts))
        results.append(FieldResult(p, statuses, error))
    minimal = None
    if minimality:
        minimal = column_deletion_breaks(matrix, instance, PrimeField(fields[0]))
    report = VerificationReport(K, D, params.U, results, minimal)
    if not report.passed:
        log.warning("verification failed for K=%d D=%d", K, D)
    return report


@dataclass
class SweepReport:
    K_max: int
    fields: list[int]
    instances: int = 0
    passed: int = 0
    receivers: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.instances > 0 and self.passed == self.instances

    def merge(self, other: "SweepReport") -> "SweepReport":
        return SweepReport(
            max(self.K_max, other.K_max),
            self.fields,
            self.instances + other.instances,
            self.passed + other.passed,
            self.receivers + other.receivers,
            sorted(self.failures + other.failures),
        )

    def to_dict(self) -> dict:
        return {
            "K_max": self.K_max,
            "fields": self.fields,
            "passed": self.ok,
            "instances": self.instances,
            "instances_passed": self.passed,
            "receivers": self.receivers,
            "failures": self.failures[:20],
            "first_failure": self.failures[0] if self.failures else None,
        }


def instances(K_max: int) -> Iterable[tuple[int, int]]:
    for K in range(3, K_max + 1):
        for D in range(1, K - 1):
            yield K, D


def _sweep_one(args) -> SweepReport:
    K, D, fields, n_random, seed = args
    rep = verify_instance(K, D, fields, n_random, seed)
    return SweepReport(K, list(fields), 1, int(rep.passed), K * len(fields), rep.failures())


def sweep(
    K_max: int,
    fields: Sequence[int] = (2,),
    n_random: int = 4,
    seed: int = DEFAULT_SEED,
    workers: int = 1,
) -> SweepReport:
    """verify_instance over every K in [3:K_max] and D in [1:K-2]."""
    if K_max < 3:
        raise ValueError("K_max must be at least 3")
    fields = list(fields)
    jobs = [(K, D, fields, n_random, seed) for K, D in instances(K_max)]
    total = SweepReport(K_max, fields)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = pool.map(_sweep_one, jobs, chunksize=16)
            for part in parts:
                total = total.merge(part)
    else:
        for job in jobs:
            total = total.merge(_sweep_one(job))
    return total
