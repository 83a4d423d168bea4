"""Interference and side-information sets of the SNI-SUICP."""

from __future__ import annotations

from dataclasses import dataclass

from .chain import ProblemParams, derive_params
from .errors import IndexRangeError, ParameterError


@dataclass(frozen=True)
class InstanceModel:
    """Receiver k wants x_k and is blind to the U messages before it and the
    D messages after it (cyclically); it knows everything else.

    ``U`` normally comes from :func:`derive_params`.  :meth:`with_u` builds a
    model with another U, used to probe instances the AIR code is not meant
    to serve.
    """

    K: int
    D: int
    U: int

    @classmethod
    def from_params(cls, params: ProblemParams) -> "InstanceModel":
        return cls(params.K, params.D, params.U)

    @classmethod
    def for_instance(cls, K: int, D: int) -> "InstanceModel":
        return cls.from_params(derive_params(K, D))

    @classmethod
    def with_u(cls, K: int, D: int, U: int) -> "InstanceModel":
        if U < 0:
            raise ParameterError("U must be non-negative")
        return cls(K, D, U)

    def _check(self, k: int) -> None:
        if not (0 <= k < self.K):
            raise IndexRangeError(f"receiver {k} outside [0:{self.K - 1}]")

    def interference(self, k: int) -> list[int]:
        self._check(k)
        before = {(k - s) % self.K for s in range(1, self.U + 1)}
        after = {(k + s) % self.K for s in range(1, self.D + 1)}
        return sorted((before | after) - {k})

    def knows(self, k: int, i: int) -> bool:
        """Whether message i is side information of receiver k."""
        self._check(k)
        self._check(i)
        return self.D < (i - k) % self.K < self.K - self.U

    def side_information(self, k: int) -> list[int]:
        blocked = set(self.interference(k)) | {k}
        return [i for i in range(self.K) if i not in blocked]


def interference_set(params: ProblemParams, k: int) -> list[int]:
    return InstanceModel.from_params(params).interference(k)


def side_information_set(params: ProblemParams, k: int) -> list[int]:
    return InstanceModel.from_params(params).side_information(k)
