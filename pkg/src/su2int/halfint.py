"""Exact half-integer arithmetic for angular-momentum bookkeeping.

Quantum numbers ell and m are half-integers; storing twice the value as an
int avoids float equality traps everywhere downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, order=True)
class HalfInt:
    """A half-integer stored as twice its value."""

    twice: int

    def __post_init__(self):
        if not isinstance(self.twice, int):
            raise TypeError(f"twice must be int, got {type(self.twice).__name__}")

    @staticmethod
    def of(value) -> "HalfInt":
        """Coerce an int, float, string ("3/2" or "1.5"), or HalfInt."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, int):
            return HalfInt(2 * value)
        if isinstance(value, str):
            frac = Fraction(value)
            if frac.denominator not in (1, 2):
                raise ValueError(f"{value!r} is not a half-integer")
            return HalfInt(int(frac * 2))
        if isinstance(value, float):
            twice = 2.0 * value
            if twice != round(twice):
                raise ValueError(f"{value!r} is not a half-integer")
            return HalfInt(int(round(twice)))
        raise TypeError(f"cannot interpret {value!r} as a half-integer")

    @property
    def value(self) -> float:
        return self.twice / 2.0

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __add__(self, other) -> "HalfInt":
        return HalfInt(self.twice + HalfInt.of(other).twice)

    __radd__ = __add__

    def __sub__(self, other) -> "HalfInt":
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __rsub__(self, other) -> "HalfInt":
        return HalfInt(HalfInt.of(other).twice - self.twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __mul__(self, other: int) -> "HalfInt":
        if not isinstance(other, int):
            raise TypeError("HalfInt can only be scaled by an int")
        return HalfInt(self.twice * other)

    __rmul__ = __mul__

    def __float__(self) -> float:
        return self.value

    def __str__(self) -> str:
        if self.is_integer:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self.twice})"


ZERO = HalfInt(0)
HALF = HalfInt(1)
ONE = HalfInt(2)


def dim(ell: HalfInt) -> int:
    """Dimension 2*ell + 1 of the spin-ell representation."""
    return ell.twice + 1


def m_values(ell: HalfInt) -> list[HalfInt]:
    """m = ell, ell-1, ..., -ell (descending; index 0 is highest weight)."""
    return [HalfInt(t) for t in range(ell.twice, -ell.twice - 2, -2)]


def m_index(ell: HalfInt, m: HalfInt) -> int:
    """Index of |ell, m> in the descending-m amplitude layout."""
    return (ell.twice - m.twice) // 2


def check_m(ell: HalfInt, m: HalfInt) -> None:
    """Validate |m| <= ell and that ell - m is an integer."""
    from .errors import QuantumNumberMismatchError

    if abs(m.twice) > ell.twice:
        raise QuantumNumberMismatchError(f"|m|={m} exceeds ell={ell}")
    if (ell.twice - m.twice) % 2 != 0:
        raise QuantumNumberMismatchError(f"ell={ell} and m={m} have mismatched parity")
