"""AIR encoding matrix construction and block lookup."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .chain import LambdaChain, compute_chain
from .errors import IndexRangeError, ParameterError


def stacked_identity(m: int, n: int) -> np.ndarray:
    """m/n copies of the n x n identity stacked vertically (an m x n matrix).

    The transpose is the matching side-by-side arrangement.
    """
    if m < 1 or n < 1 or m % n:
        raise ParameterError(f"stacked identity needs n | m, got m={m}, n={n}")
    return np.tile(np.eye(n, dtype=np.uint8), (m // n, 1))


@dataclass(frozen=True)
class SubmatrixRef:
    """One identity-patterned block of the AIR matrix.

    ``kind`` is ``"identity"`` for the top (D+1) x (D+1) identity, ``"even"``
    for the side-by-side blocks lambda_{2i} x beta_{2i} lambda_{2i} and
    ``"odd"`` for the stacked blocks beta_{2i+1} lambda_{2i+1} x lambda_{2i+1}.
    ``size`` is the order of the repeated identity.
    """

    kind: str
    index: int
    row_offset: int
    col_offset: int
    height: int
    width: int
    size: int

    @property
    def label(self) -> str:
        return "identity-top" if self.kind == "identity" else f"{self.kind}({self.index})"

    def contains(self, j: int, k: int) -> bool:
        return (
            self.row_offset <= j < self.row_offset + self.height
            and self.col_offset <= k < self.col_offset + self.width
        )

    def local_value(self, jr: int, kr: int) -> int:
        return int(jr % self.size == kr % self.size)

    def cells(self) -> Iterator[tuple[int, int]]:
        """Global coordinates of the 1-entries of this block."""
        for jr in range(self.height):
            for kr in range(jr % self.size, self.width, self.size):
                yield self.row_offset + jr, self.col_offset + kr

    def to_dict(self) -> dict:
        return {
            "kind": self.label,
            "row_offset": self.row_offset,
            "col_offset": self.col_offset,
            "height": self.height,
            "width": self.width,
        }


def submatrices(chain: LambdaChain) -> list[SubmatrixRef]:
    """Blocks of the AIR matrix as dictated by the chain, top to bottom."""
    K, D, lam, beta = chain.K, chain.D, chain.lam, chain.beta
    refs = [SubmatrixRef("identity", 0, 0, 0, D + 1, D + 1, D + 1)]
    if beta(0) > 0:
        refs.append(SubmatrixRef("even", 0, D + 1, 0, lam(0), beta(0) * lam(0), lam(0)))
    for i in range(chain.half_ceil):
        n = lam(2 * i + 1)
        refs.append(SubmatrixRef("odd", i, K - lam(2 * i), D + 1 - n, beta(2 * i + 1) * n, n, n))
        if 2 * i + 2 <= chain.l:
            n = lam(2 * i + 2)
            refs.append(
                SubmatrixRef(
                    "even", i + 1, K - n, D + 1 - lam(2 * i + 1), n, beta(2 * i + 2) * n, n
                )
            )
    return refs


def algorithm_one(K: int, D: int) -> tuple[np.ndarray, list[tuple[int, int, int, int]]]:
    """Run the row-fill / column-fill recursion directly.

    Returns the matrix and the rectangles it filled, each as
    ``(row_offset, col_offset, height, width)``.
    """
    L = np.zeros((K, D + 1), dtype=np.uint8)
    filled = []
    row, col, height, width = 0, 0, K, D + 1
    while True:
        q, r = divmod(height, width)
        L[row : row + q * width, col : col + width] = stacked_identity(q * width, width)
        filled.append((row, col, q * width, width))
        row += q * width
        height = r
        if r == 0:
            break
        q2, r2 = divmod(width, r)
        L[row : row + r, col : col + q2 * r] = stacked_identity(q2 * r, r).T
        filled.append((row, col, r, q2 * r))
        col += q2 * r
        width = r2
        if r2 == 0:
            break
    return L, filled


@dataclass(frozen=True)
class AirMatrix:
    K: int
    D: int
    entries: np.ndarray = field(repr=False)
    chain: LambdaChain = field(repr=False)
    blocks: tuple[SubmatrixRef, ...] = field(repr=False)
    column_weights: tuple[int, ...] = field(repr=False)

    @property
    def layout(self):
        return self.chain.layout

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def __getitem__(self, jk: tuple[int, int]) -> int:
        j, k = jk
        check_cell(self, j, k)
        return int(self.entries[j, k])

    def column(self, k: int) -> np.ndarray:
        return self.entries[:, k]

    def row_support(self, j: int) -> list[int]:
        return np.flatnonzero(self.entries[j]).tolist()

    def column_support(self, k: int) -> list[int]:
        return np.flatnonzero(self.entries[:, k]).tolist()


def build_air(K: int, D: int) -> AirMatrix:
    chain = compute_chain(K, D)
    entries, _ = algorithm_one(K, D)
    entries.setflags(write=False)
    weights = tuple(int(w) for w in entries.sum(axis=0))
    return AirMatrix(K, D, entries, chain, tuple(submatrices(chain)), weights)


def check_cell(matrix: AirMatrix, j: int, k: int) -> None:
    if not (0 <= j < matrix.K):
        raise IndexRangeError(f"row {j} outside [0:{matrix.K - 1}]")
    if not (0 <= k <= matrix.D):
        raise IndexRangeError(f"column {k} outside [0:{matrix.D}]")


def locate(matrix: AirMatrix, j: int, k: int) -> tuple[SubmatrixRef, int, int]:
    """Block containing cell (j, k) and the cell's offsets inside it.

    The offsets agree with the modular reduction rules (j mod (D+1),
    j mod (K - lambda_{2i}), k mod (D+1 - lambda_{2i+1}), ...) wherever those
    give an in-block position.  The one exception is a stacked odd(0) block
    taller than 2(D+1) (beta_0 = 0 and K >= 3(D+1)); there the rule yields
    the row offset modulo D+1 while this returns the true offset.
    """
    check_cell(matrix, j, k)
    for ref in matrix.blocks:
        if ref.contains(j, k):
            return ref, j - ref.row_offset, k - ref.col_offset
    raise AssertionError(f"cell ({j}, {k}) not covered by any block")


def column_weight(matrix: AirMatrix, k: int) -> int:
    check_cell(matrix, 0, k)
    return matrix.column_weights[k]


def adjacent_row_ranks(matrix: AirMatrix) -> list[int]:
    """GF(2) rank of every window of D+1 cyclically consecutive rows.

    Diagnostic only; not asserted anywhere.
    """
    from .linalg import rank_mod_p

    K, n = matrix.K, matrix.D + 1
    idx = (np.arange(K)[:, None] + np.arange(n)[None, :]) % K
    return rank_mod_p(matrix.entries[idx], 2).tolist()


def render(matrix: AirMatrix, fmt: str) -> Iterator[str]:
    """Yield output lines for the txt, csv or pbm formats."""
    if fmt == "pbm":
        yield "P1"
        yield f"{matrix.D + 1} {matrix.K}"
    sep = {"txt": "", "csv": ",", "pbm": " "}.get(fmt)
    if sep is None:
        raise ParameterError(f"unknown matrix format {fmt!r}")
    for row in matrix.entries:
        yield sep.join("1" if v else "0" for v in row)
