"""Exact arithmetic in Z[sqrt 3].

Every coordinate of a phenylene drawn with unit edges, measured in half-units,
has the form ``a + b*sqrt(3)`` with integer ``a`` and ``b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt


@dataclass(frozen=True, order=False)
class Surd:
    a: int = 0
    b: int = 0

    def __add__(self, other: "Surd") -> "Surd":
        return Surd(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "Surd") -> "Surd":
        return Surd(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "Surd":
        return Surd(-self.a, -self.b)

    def __mul__(self, other: "Surd | int") -> "Surd":
        if isinstance(other, int):
            return Surd(self.a * other, self.b * other)
        return Surd(self.a * other.a + 3 * self.b * other.b, self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def sign(self) -> int:
        a, b = self.a, self.b
        if a >= 0 and b >= 0:
            return 0 if a == 0 and b == 0 else 1
        if a <= 0 and b <= 0:
            return -1
        # mixed signs: compare a^2 with 3 b^2
        d = a * a - 3 * b * b
        if a > 0:
            return 1 if d > 0 else -1
        return 1 if d < 0 else -1

    def __lt__(self, other: "Surd") -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: "Surd") -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: "Surd") -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: "Surd") -> bool:
        return (self - other).sign() >= 0

    def decimal(self, scale: int = 2, digits: int = 6) -> str:
        """Fixed-point rendering of ``self / scale`` using integer arithmetic only."""
        unit = 10 ** digits
        root3 = isqrt(3 * unit * unit)  # floor(sqrt(3) * unit)
        num = self.a * unit + self.b * root3
        q, r = divmod(abs(num), scale)
        if 2 * r >= scale:
            q += 1
        whole, frac = divmod(q, unit)
        sign = "-" if num < 0 and q else ""
        return f"{sign}{whole}.{frac:0{digits}d}"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*r3"
        return f"{self.a}{'+' if self.b > 0 else '-'}{abs(self.b)}*r3"


ZERO = Surd()

# 2*cos(30 deg * m) for m = 0..11
_TWO_COS = (
    Surd(2), Surd(0, 1), Surd(1), ZERO, Surd(-1), Surd(0, -1),
    Surd(-2), Surd(0, -1), Surd(-1), ZERO, Surd(1), Surd(0, 1),
)


def two_cos(m: int) -> Surd:
    return _TWO_COS[m % 12]


def two_sin(m: int) -> Surd:
    return _TWO_COS[(m - 3) % 12]
