"""Exact half-integer arithmetic.

Hyperbolicity-style parameters take values on the half-integer grid.  To keep
every comparison exact we store twice the value as a plain int and never touch
floating point in computations.
"""

from __future__ import annotations

from dataclasses import dataclass


def _doubled(other) -> int:
    if isinstance(other, HalfInt):
        return other.doubled
    if isinstance(other, int):
        return 2 * other
    raise TypeError(f"cannot compare HalfInt with {type(other).__name__}")


@dataclass(frozen=True, slots=True)
class HalfInt:
    """A value k/2 for integer k, stored as the doubled integer k."""

    doubled: int

    def __post_init__(self):
        if not isinstance(self.doubled, int):
            k = int(self.doubled)
            if k != self.doubled:
                raise TypeError("doubled value must be an integer")
            object.__setattr__(self, "doubled", k)

    @classmethod
    def whole(cls, k: int) -> "HalfInt":
        return cls(2 * int(k))

    @property
    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def __float__(self) -> float:
        return self.doubled / 2.0

    def __str__(self) -> str:
        if self.is_integer:
            return str(self.doubled // 2)
        return f"{self.doubled // 2}.5" if self.doubled >= 0 else f"-{(-self.doubled) // 2}.5"

    def __repr__(self) -> str:
        return f"HalfInt({self.doubled})"

    def __add__(self, other) -> "HalfInt":
        return HalfInt(self.doubled + _doubled(other))

    __radd__ = __add__

    def __sub__(self, other) -> "HalfInt":
        return HalfInt(self.doubled - _doubled(other))

    def __rsub__(self, other) -> "HalfInt":
        return HalfInt(_doubled(other) - self.doubled)

    def __mul__(self, other: int) -> "HalfInt":
        if not isinstance(other, int):
            raise TypeError("HalfInt can only be scaled by an int")
        return HalfInt(self.doubled * other)

    __rmul__ = __mul__

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.doubled)

    def __eq__(self, other) -> bool:
        try:
            return self.doubled == _doubled(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(("HalfInt", self.doubled))

    def __lt__(self, other) -> bool:
        return self.doubled < _doubled(other)

    def __le__(self, other) -> bool:
        return self.doubled <= _doubled(other)

    def __gt__(self, other) -> bool:
        return self.doubled > _doubled(other)

    def __ge__(self, other) -> bool:
        return self.doubled >= _doubled(other)
