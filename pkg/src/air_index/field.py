"""Arithmetic in the prime field GF(p)."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int = 2

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ParameterError(f"field modulus must be prime, got {self.p}")

    @property
    def characteristic(self) -> int:
        return self.p

    def reduce(self, a: int) -> int:
        return a % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.p)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def __contains__(self, a: object) -> bool:
        return isinstance(a, int) and 0 <= a < self.p


GF2 = PrimeField(2)
