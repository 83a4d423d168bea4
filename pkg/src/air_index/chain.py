"""Problem parameters, the Euclid lambda/beta chain and the interval layout.

For an instance (K, D) the chain runs Euclid's algorithm on the pair
(D+1, K-D-1)::

    lambda_{-1} = D+1,  lambda_0 = K-D-1
    lambda_{i-1} = beta_i * lambda_i + lambda_{i+1},   lambda_{l+1} = 0

so that lambda_l = gcd(K, D+1).  Every block of the AIR matrix has a size
expressed in these numbers, and the interval lists below locate the blocks.
All indices are 0-based and all intervals are inclusive ``[lo:hi]`` pairs; an
interval with ``lo > hi`` is empty.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple

from .errors import ParameterError


class Interval(NamedTuple):
    """Inclusive integer interval ``[lo:hi]``; empty when ``lo > hi``."""

    lo: int
    hi: int

    @property
    def empty(self) -> bool:
        return self.lo > self.hi

    def __len__(self) -> int:
        return max(0, self.hi - self.lo + 1)

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and self.lo <= x <= self.hi

    def __iter__(self) -> Iterator[int]:  # type: ignore[override]
        return iter(range(self.lo, self.hi + 1))

    def shift(self, by: int) -> "Interval":
        return Interval(self.lo + by, self.hi + by)

    def as_list(self) -> list[int]:
        return [self.lo, self.hi]

    def __repr__(self) -> str:
        return f"[{self.lo}:{self.hi}]"


@dataclass(frozen=True)
class ProblemParams:
    """An SNI-SUICP instance: K messages, D interferers after, U before."""

    K: int
    D: int
    U: int

    def __post_init__(self) -> None:
        check_range(self.K, self.D)
        if self.U != math.gcd(self.K, self.D + 1) - 1:
            raise ParameterError(f"U must equal gcd(K, D+1) - 1, got U={self.U}")
        assert self.U + self.D <= self.K - 1

    @property
    def length(self) -> int:
        """Codeword length D+1."""
        return self.D + 1


def check_range(K: int, D: int) -> None:
    if not (isinstance(K, int) and isinstance(D, int)):
        raise ParameterError("K and D must be integers")
    if K < 3:
        raise ParameterError(f"K must be at least 3, got K={K}")
    if D < 1 or D > K - 2:
        raise ParameterError(f"D must lie in [1:K-2] = [1:{K - 2}], got D={D}")


def derive_params(K: int, D: int) -> ProblemParams:
    """Validate (K, D) and derive U = gcd(K, D+1) - 1."""
    check_range(K, D)
    return ProblemParams(K, D, math.gcd(K, D + 1) - 1)


@dataclass(frozen=True)
class LambdaChain:
    """Euclid parameters of an instance.

    ``lambdas`` holds lambda_0 .. lambda_{l+1} (the last entry is 0) and
    ``betas`` holds beta_0 .. beta_l.  Use :meth:`lam` and :meth:`beta` for
    indexed access; both accept indices outside the stored range and return
    the natural extension (lambda_{-1} = D+1, zero past the end).
    """

    K: int
    D: int
    lambda_minus1: int
    lambdas: tuple[int, ...]
    betas: tuple[int, ...]
    l: int

    def lam(self, i: int) -> int:
        if i == -1:
            return self.lambda_minus1
        if i < -1:
            raise IndexError(i)
        return self.lambdas[i] if i < len(self.lambdas) else 0

    def beta(self, i: int) -> int:
        if i < 0:
            raise IndexError(i)
        return self.betas[i] if i < len(self.betas) else 0

    @property
    def U(self) -> int:
        return self.gcd - 1

    @property
    def gcd(self) -> int:
        return self.lambdas[self.l]

    @property
    def half_floor(self) -> int:
        return self.l // 2

    @property
    def half_ceil(self) -> int:
        return (self.l + 1) // 2

    @property
    def params(self) -> ProblemParams:
        return ProblemParams(self.K, self.D, self.U)

    @cached_property
    def layout(self) -> "IntervalLayout":
        return interval_layout(self)

    def to_dict(self) -> dict:
        return {
            "K": self.K,
            "D": self.D,
            "U": self.U,
            "lambda_minus1": self.lambda_minus1,
            "lambdas": list(self.lambdas),
            "betas": list(self.betas),
            "l": self.l,
        }


def compute_chain(K: int, D: int) -> LambdaChain:
    check_range(K, D)
    prev, cur = D + 1, K - D - 1
    lambdas = [cur]
    betas = []
    while cur:
        beta, rem = divmod(prev, cur)
        betas.append(beta)
        lambdas.append(rem)
        prev, cur = cur, rem
    return LambdaChain(K, D, D + 1, tuple(lambdas), tuple(betas), len(betas) - 1)


def gcd_of(chain: LambdaChain) -> int:
    """lambda_l, which equals gcd(K, D+1)."""
    return chain.gcd


@dataclass(frozen=True)
class IntervalLayout:
    """Row, column and receiver intervals derived from a chain.

    rows
        R_0 .. R_{floor(l/2)+1}: R_0 is the top identity band, the rest are
        the row bands of the odd blocks followed by the bottom band.
    cols
        C_0 .. C_{ceil(l/2)}: column bands of the even blocks (plus the last
        odd block when l is odd).  C_0 is empty when beta_0 = 0.
    shifted_cols
        Each C_i moved down by lambda_0; together they cover [lambda_0:K-1].
    dtilde, etilde
        The split of each shifted band into the receivers decoded from two
        code symbols (dtilde) and the rest (etilde).
    """

    rows: tuple[Interval, ...]
    cols: tuple[Interval, ...]
    shifted_cols: tuple[Interval, ...]
    dtilde: tuple[Interval, ...]
    etilde: tuple[Interval, ...]
    head: Interval

    def to_dict(self) -> dict:
        def conv(xs):
            return [x.as_list() for x in xs]

        return {
            "rows": conv(self.rows),
            "cols": conv(self.cols),
            "shifted_cols": conv(self.shifted_cols),
            "dtilde": conv(self.dtilde),
            "etilde": conv(self.etilde),
            "head": self.head.as_list(),
        }


def interval_layout(chain: LambdaChain) -> IntervalLayout:
    K, D, lam = chain.K, chain.D, chain.lam
    rows = [Interval(0, K - lam(0) - 1)]
    for i in range(1, chain.half_floor + 2):
        rows.append(Interval(K - lam(2 * (i - 1)), K - lam(2 * i) - 1))

    cols, shifted, dtilde, etilde = [], [], [], []
    for i in range(chain.half_ceil + 1):
        c = Interval(D - lam(2 * i - 1) + 1, D - lam(2 * i + 1))
        cols.append(c)
        shifted.append(c.shift(lam(0)))
        lo, hi = K - lam(2 * i - 1), K - lam(2 * i + 1) - 1
        split = lo + (chain.beta(2 * i) - 1) * lam(2 * i)
        # beta_0 = 0 makes the offset negative; both halves are then empty
        split = max(lo, min(split, hi + 1))
        dtilde.append(Interval(lo, split - 1))
        etilde.append(Interval(split, hi))

    return IntervalLayout(
        rows=tuple(rows),
        cols=tuple(cols),
        shifted_cols=tuple(shifted),
        dtilde=tuple(dtilde),
        etilde=tuple(etilde),
        head=Interval(0, lam(0) - 1),
    )


def column_band(chain: LambdaChain, k: int) -> int:
    """Index i with k in C_i."""
    for i, c in enumerate(chain.layout.cols):
        if k in c:
            return i
    raise ParameterError(f"column {k} outside [0:{chain.D}]")


def reduce_mod(x: int, m: int) -> int:
    """x mod m with the convention x mod 0 = x."""
    return x % m if m else x
