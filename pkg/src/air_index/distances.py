"""Distances between the 1-entries of an AIR matrix.

Two routes are provided for each quantity.  The ``*_scan`` functions walk the
dense matrix; the closed forms only look at the lambda/beta chain.  The test
suite checks that both agree on every admissible cell.

Distances
    down(k)         from the diagonal 1 at (k, k) to the lowest 1 in column k
    up(j, k)        from (j, k) to the nearest 1 above it, for rows j > D
    right(j, k)     from (j, k) to the nearest 1 to its right, for cells in
                    an even block
    mu_k            right(k + down(k), k), for k in [0:D - lambda_l]
    t_{k,r}         offsets of the 1s below (k + down(k), k + mu_k) in
                    column k + mu_k
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .chain import LambdaChain, column_band, reduce_mod
from .errors import IndexRangeError, PreconditionError, StructuralError
from .matrix import AirMatrix, SubmatrixRef, check_cell, submatrices


@lru_cache(maxsize=256)
def _blocks(chain: LambdaChain) -> tuple[SubmatrixRef, ...]:
    return tuple(submatrices(chain))


def _chain(source: AirMatrix | LambdaChain) -> LambdaChain:
    return source.chain if isinstance(source, AirMatrix) else source


def locate_in_chain(chain: LambdaChain, j: int, k: int) -> tuple[SubmatrixRef, int, int]:
    if not (0 <= j < chain.K and 0 <= k <= chain.D):
        raise IndexRangeError(f"cell ({j}, {k}) outside {chain.K} x {chain.D + 1}")
    for ref in _blocks(chain):
        if ref.contains(j, k):
            return ref, j - ref.row_offset, k - ref.col_offset
    raise AssertionError(f"cell ({j}, {k}) not covered")


def _one_cell(chain: LambdaChain, j: int, k: int) -> tuple[SubmatrixRef, int, int]:
    ref, jr, kr = locate_in_chain(chain, j, k)
    if not ref.local_value(jr, kr):
        raise PreconditionError(f"L({j},{k}) = 0")
    return ref, jr, kr


# -- scans ------------------------------------------------------------------


def down_distance_scan(matrix: AirMatrix, k: int) -> int:
    check_cell(matrix, k, k)
    below = np.flatnonzero(matrix.entries[k + 1 :, k])
    if below.size == 0:
        raise StructuralError(f"column {k} has no 1 below the diagonal")
    return int(below[-1]) + 1


def up_distance_scan(matrix: AirMatrix, j: int, k: int) -> int:
    check_cell(matrix, j, k)
    if j <= matrix.D or not matrix.entries[j, k]:
        raise PreconditionError(f"up-distance needs L({j},{k}) = 1 with row > D")
    above = np.flatnonzero(matrix.entries[:j, k])
    return j - int(above[-1])


def right_distance_scan(matrix: AirMatrix, j: int, k: int) -> int:
    ref, _, _ = locate_in_chain(matrix.chain, j, k)
    if ref.kind != "even" or not matrix.entries[j, k]:
        raise PreconditionError(f"right-distance needs L({j},{k}) = 1 inside an even block")
    right = np.flatnonzero(matrix.entries[j, k + 1 :])
    if right.size == 0:
        raise PreconditionError(f"no 1 to the right of ({j},{k})")
    return int(right[0]) + 1


def ones_below(matrix: AirMatrix, j: int, k: int) -> list[int]:
    """Offsets of the 1s strictly below (j, k) in column k."""
    return [int(x) + 1 for x in np.flatnonzero(matrix.entries[j + 1 :, k])]


# -- closed forms -------------------------------------------------------------


def down_distance(chain: AirMatrix | LambdaChain, k: int) -> int:
    chain = _chain(chain)
    lam = chain.lam
    i = column_band(chain, k)
    base = chain.K - chain.D - 1
    if lam(2 * i) == 0:
        # last column band of an odd-length chain: the lowest 1 sits in the
        # final stacked block, exactly lambda_0 rows down
        return base
    c = reduce_mod(k, chain.D + 1 - lam(2 * i - 1)) // lam(2 * i)
    return base + lam(2 * i + 1) + (chain.beta(2 * i) - 1 - c) * lam(2 * i)


def up_distance(chain: AirMatrix | LambdaChain, j: int, k: int) -> int:
    chain = _chain(chain)
    if j <= chain.D:
        raise PreconditionError(f"up-distance needs row > D, got {j}")
    ref, _, kr = _one_cell(chain, j, k)
    i, lam = ref.index, chain.lam
    if ref.kind == "odd":
        return lam(2 * i + 1)
    c = kr // lam(2 * i)
    return lam(2 * i - 1) - c * lam(2 * i)


def right_distance(chain: AirMatrix | LambdaChain, j: int, k: int) -> int:
    chain = _chain(chain)
    ref, jr, kr = _one_cell(chain, j, k)
    if ref.kind != "even":
        raise PreconditionError(f"right-distance needs ({j},{k}) inside an even block")
    i, lam = ref.index, chain.lam
    if kr < (chain.beta(2 * i) - 1) * lam(2 * i):
        return lam(2 * i)
    if lam(2 * i + 1) == 0:
        raise PreconditionError(f"no 1 to the right of ({j},{k})")
    return lam(2 * i) - (jr // lam(2 * i + 1)) * lam(2 * i + 1)


# -- profile ------------------------------------------------------------------


@dataclass(frozen=True)
class DistanceProfile:
    k: int
    d_down: int
    mu: int
    t: tuple[int, ...] = field(default=())

    @property
    def p(self) -> int:
        return len(self.t)

    @property
    def pivot(self) -> tuple[int, int]:
        return self.k + self.d_down, self.k

    def to_dict(self) -> dict:
        return {"k": self.k, "d_down": self.d_down, "mu": self.mu, "p": self.p, "t": list(self.t)}


def has_profile(matrix: AirMatrix | LambdaChain, k: int) -> bool:
    chain = _chain(matrix)
    return 0 <= k <= chain.D - chain.gcd


def distance_profile(matrix: AirMatrix, k: int) -> DistanceProfile:
    """Scan-based down-distance, mu_k and the r-th down-distances for column k."""
    if not has_profile(matrix, k):
        raise PreconditionError(
            f"profile defined for k in [0:{matrix.D - matrix.chain.gcd}], got {k}"
        )
    d = down_distance_scan(matrix, k)
    mu = right_distance_scan(matrix, k + d, k)
    t = ones_below(matrix, k + d, k + mu)
    return DistanceProfile(k, d, mu, tuple(t))
