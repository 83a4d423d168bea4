"""Encoding with the AIR matrix and per-receiver decoding plans.

A receiver k is served by one of four recipes, picked by where k falls in
the receiver layout (``head``, ``dtilde``, ``etilde``):

    I    k < lambda_0             tau = {k mod (D+1)}
    II   k in dtilde_i            tau = {k', k'+mu}
    III  k in etilde_i, i < last  tau = {k'} + {k'+t_r} + {k'+mu}
    IV   k in etilde_last         tau = {k'}

with k' = k - lambda_0 and mu, t_r taken from the distance profile of k'.
Over GF(2) the receiver adds the chosen code symbols; over an odd prime the
coefficients on tau are solved for, so that the combination carries x_k with
coefficient 1 and no interfering message.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .chain import LambdaChain
from .distances import DistanceProfile, distance_profile, down_distance_scan, has_profile
from .errors import DecodingError, ParameterError, StructuralError
from .field import GF2, PrimeField
from .linalg import solve_mod_p
from .matrix import AirMatrix
from .model import InstanceModel

CASES = ("I", "II", "III", "IV")


def receiver_case(chain: LambdaChain, k: int) -> tuple[str, int]:
    """Decoding case of receiver k and the band index i it falls in."""
    lay = chain.layout
    if k in lay.head:
        return "I", 0
    for i, (dt, et) in enumerate(zip(lay.dtilde, lay.etilde)):
        if k in dt:
            return "II", i
        if k in et:
            return ("IV" if i == chain.half_ceil else "III"), i
    raise StructuralError(f"receiver {k} not covered by the case partition")


def tau_of(matrix: AirMatrix, k: int) -> tuple[str, list[int]]:
    case, _ = receiver_case(matrix.chain, k)
    if case == "I":
        return case, [k % (matrix.D + 1)]
    kp = k - matrix.chain.lam(0)
    if case == "IV":
        return case, [kp]
    prof = distance_profile(matrix, kp)
    if case == "II":
        return case, sorted({kp, kp + prof.mu})
    return case, sorted({kp, kp + prof.mu, *(kp + t for t in prof.t)})


@dataclass(frozen=True)
class ReceiverPlan:
    k: int
    case: str
    tau: tuple[int, ...]
    coeffs: tuple[int, ...]
    gamma: tuple[int, ...]
    gamma_coeffs: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"k": self.k, "case": self.case, "tau": list(self.tau), "gamma": list(self.gamma)}


@dataclass(frozen=True)
class DecodingPlan:
    K: int
    D: int
    U: int
    p: int
    receivers: tuple[ReceiverPlan, ...]

    def __getitem__(self, k: int) -> ReceiverPlan:
        return self.receivers[k]

    def __len__(self) -> int:
        return len(self.receivers)


def _coefficients(
    matrix: AirMatrix, k: int, tau: list[int], field: PrimeField, model: InstanceModel
) -> np.ndarray:
    if field.p == 2:
        return np.ones(len(tau), dtype=np.int64)
    rows = [k, *model.interference(k)]
    target = np.zeros(len(rows), dtype=np.int64)
    target[0] = 1
    alpha = solve_mod_p(matrix.entries[np.ix_(rows, tau)], target, field.p)
    if alpha is None:
        raise DecodingError(f"no combination of code symbols {tau} isolates x_{k} over GF({field.p})", k)
    return alpha


def build_plan(matrix: AirMatrix, field: PrimeField = GF2) -> DecodingPlan:
    """Decoding recipe for every receiver.

    gamma is the support of the combined coefficient vector without k, i.e.
    exactly the side information the receiver has to subtract.
    """
    model = InstanceModel.for_instance(matrix.K, matrix.D)
    receivers = []
    for k in range(matrix.K):
        case, tau = tau_of(matrix, k)
        alpha = _coefficients(matrix, k, tau, field, model)
        combined = (matrix.entries[:, tau].astype(np.int64) @ alpha) % field.p
        if combined[k] != 1 or combined[model.interference(k)].any():
            raise StructuralError(f"receiver {k}: code symbols {tau} do not isolate x_{k}")
        gamma = [int(i) for i in np.flatnonzero(combined) if i != k]
        receivers.append(
            ReceiverPlan(
                k,
                case,
                tuple(tau),
                tuple(int(a) for a in alpha),
                tuple(gamma),
                tuple(int(combined[i]) for i in gamma),
            )
        )
    return DecodingPlan(matrix.K, matrix.D, model.U, field.p, tuple(receivers))


def encode(messages: Sequence[int], matrix: AirMatrix, field: PrimeField = GF2) -> np.ndarray:
    x = np.asarray(messages, dtype=np.int64)
    if x.shape != (matrix.K,):
        raise ParameterError(f"expected {matrix.K} message symbols, got shape {x.shape}")
    return (x % field.p) @ matrix.entries.astype(np.int64) % field.p


def decode(
    k: int,
    codeword: Sequence[int],
    side_info: Mapping[int, int],
    plan: DecodingPlan,
    field: PrimeField = GF2,
) -> int:
    """Recover x_k from the code symbols in tau_k and the messages in gamma_k."""
    if field.p != plan.p:
        raise ParameterError(f"plan built for GF({plan.p}), decoding over GF({field.p})")
    if len(codeword) != plan.D + 1:
        raise ParameterError(f"codeword must have {plan.D + 1} symbols, got {len(codeword)}")
    rp = plan[k]
    missing = [i for i in rp.gamma if i not in side_info]
    if missing:
        raise DecodingError(f"missing side information for x{missing}", k)
    acc = sum(a * int(codeword[j]) for a, j in zip(rp.coeffs, rp.tau))
    acc -= sum(g * int(side_info[i]) for g, i in zip(rp.gamma_coeffs, rp.gamma))
    return acc % field.p


def decode_all(
    codeword: Sequence[int],
    messages: Sequence[int],
    plan: DecodingPlan,
    field: PrimeField = GF2,
) -> list[int]:
    """Decode every receiver, each given only its own side-information set.

    Only the known messages the plan asks for are passed on; anything in
    gamma_k outside the side-information set is withheld.
    """
    model = InstanceModel(plan.K, plan.D, plan.U)
    out = []
    for k in range(plan.K):
        side = {i: int(messages[i]) for i in plan[k].gamma if model.knows(k, i)}
        try:
            out.append(decode(k, codeword, side, plan, field))
        except DecodingError as err:
            raise DecodingError(str(err).split(": ", 1)[-1], k) from err
    return out


# -- closed-form counts -------------------------------------------------------


def closed_form_tau_count(matrix: AirMatrix, k: int) -> int:
    """|tau_k| from the case formulas, without building a plan."""
    case, _ = receiver_case(matrix.chain, k)
    if case == "III":
        return distance_profile(matrix, k - matrix.chain.lam(0)).p + 2
    return {"I": 1, "II": 2, "IV": 1}[case]


def closed_form_gamma_count(matrix: AirMatrix, k: int) -> int:
    """|gamma_k| from the column weights N_j and the distance profile of k'."""
    case, _ = receiver_case(matrix.chain, k)
    N = matrix.column_weights
    if case == "I":
        return N[k % (matrix.D + 1)] - 1
    kp = k - matrix.chain.lam(0)
    if case == "IV":
        return N[kp] - 1
    prof = distance_profile(matrix, kp)
    if case == "II":
        return N[kp] + N[kp + prof.mu] - 3
    return N[kp] + N[kp + prof.mu] + sum(N[kp + t] for t in prof.t) - 2 * prof.p - 3


# -- tables -------------------------------------------------------------------


def _maybe_profile(matrix: AirMatrix, k: int) -> DistanceProfile | None:
    return distance_profile(matrix, k) if has_profile(matrix, k) else None


def plan_report(matrix: AirMatrix, plan: DecodingPlan) -> dict:
    """Plan plus the distance columns shown in the decoding tables.

    Undefined quantities are ``None``.
    """
    lam0 = matrix.chain.lam(0)
    receivers = []
    for rp in plan.receivers:
        k = rp.k
        own = _maybe_profile(matrix, k) if k <= matrix.D else None
        prime = _maybe_profile(matrix, k - lam0) if k >= lam0 else None
        receivers.append(
            {
                **rp.to_dict(),
                "d_max": down_distance_scan(matrix, k) if k <= matrix.D else None,
                "mu": own.mu if own else None,
                "mu_prime": prime.mu if prime else None,
                "t": list(own.t) if own else [],
                "t_prime": list(prime.t) if prime else [],
            }
        )
    return {"K": plan.K, "D": plan.D, "U": plan.U, "field": plan.p, "receivers": receivers}


TABLE_COLUMNS = ("R_k", "case", "D_max", "mu_k", "mu_k'", "t_k", "t_k'", "tau", "gamma")


def render_table(report: dict) -> str:
    def cell(v) -> str:
        if v is None or v == []:
            return "-"
        if isinstance(v, list):
            return ",".join(str(x) for x in v)
        return str(v)

    rows = [list(TABLE_COLUMNS)]
    for r in report["receivers"]:
        rows.append(
            [
                f"R_{r['k']}",
                r["case"],
                cell(r["d_max"]),
                cell(r["mu"]),
                cell(r["mu_prime"]),
                cell(r["t"]),
                cell(r["t_prime"]),
                ",".join(f"c_{j}" for j in r["tau"]) or "-",
                ",".join(f"x_{i}" for i in r["gamma"]) or "-",
            ]
        )
    widths = [max(len(row[c]) for row in rows) for c in range(len(TABLE_COLUMNS))]
    lines = [" | ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "-+-".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"
