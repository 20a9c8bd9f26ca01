"""Closed-form Mostar values, in exact integer arithmetic."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RangeError


@dataclass(frozen=True)
class FormulaResult:
    value: int
    branch: str

    def to_dict(self) -> dict[str, object]:
        return {"value": self.value, "branch": self.branch}


def _linear_value(h: int) -> int:
    lo, hi = h // 2, (h + 1) // 2
    return 72 * lo * hi - 24 * lo


def mo_linear(h: int) -> FormulaResult:
    if h < 1:
        raise RangeError(f"h must be >= 1, got {h}")
    return FormulaResult(_linear_value(h), "linear")


def mo_pl(j: int, k: int, n: int) -> FormulaResult:
    """P_L(j, k, n); the case split is on n against floor(h/2), then h's parity."""
    if not 1 <= j <= k <= n:
        raise RangeError(f"need 1 <= j <= k <= n, got ({j}, {k}, {n})")
    h = j + k + n + 1
    if n <= h // 2:
        return FormulaResult(24 * (2 * k * j + 3 * n * j + 4 * k * n + k + 2 * n), "case-1")
    core = (4 * j + 3 * j * j + 8 * k + 3 * k * k + 4 * n + 3 * n * n
            + 14 * k * j + 6 * j * n + 10 * k * n)
    if h % 2 == 0:
        return FormulaResult(6 * (core + 1), "case-2-even")
    return FormulaResult(6 * core, "case-2-odd")


def mo_second(h: int) -> FormulaResult:
    if h < 3:
        raise RangeError(f"h must be >= 3, got {h}")
    return FormulaResult(_linear_value(h) + 24 * (h - 1), "second")


def mo_third_chain(h: int) -> FormulaResult:
    if h < 5:
        raise RangeError(f"h must be >= 5, got {h}")
    return FormulaResult(_linear_value(h) + 48 * (h - 2), "third-chain")


FORMULAS = {
    "linear": (mo_linear, 1),
    "pl": (mo_pl, 3),
    "second": (mo_second, 1),
    "third": (mo_third_chain, 1),
}
