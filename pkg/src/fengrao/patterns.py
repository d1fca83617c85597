"""Pattern admission, the Arf property and saturation."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import accumulate
from typing import Sequence

import numpy as np

from .errors import NotAdmissibleShape
from .semigroup import NumericalSemigroup

__all__ = ["ARF", "Admission", "Pattern", "admits_pattern", "is_arf", "is_saturated"]


@dataclass(frozen=True)
class Pattern:
    """Linear form ``a_1 x_1 + ... + a_k x_k`` evaluated on ``x_1 >= ... >= x_k``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs:
            raise NotAdmissibleShape("pattern needs at least one coefficient")
        if any(c == 0 for c in self.coeffs):
            raise NotAdmissibleShape("pattern coefficients must be non-zero")

    def __call__(self, xs: Sequence[int]) -> int:
        return sum(c * x for c, x in zip(self.coeffs, xs))

    def check_shape(self) -> None:
        """Require every prefix sum of the coefficients to be >= 1.

        That is exactly the condition for ``p(s_1, ..., s_k) >= s_1`` on all
        non-increasing tuples, which makes the admission check finite.
        """
        for j, total in enumerate(accumulate(self.coeffs), 1):
            if total < 1:
                raise NotAdmissibleShape(
                    f"prefix sum a_1 + ... + a_{j} = {total} < 1 in {self}"
                )

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs, 1):
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            terms.append(f"{sign}{mag}x{i}")
        out = "".join(terms)
        return out[1:] if out.startswith("+") else out


ARF = Pattern((1, 1, -1))

_ROWS = 512


@dataclass(frozen=True)
class Admission:
    admitted: bool
    counterexample: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.admitted


def _tuples(members: list[int], length: int, upper: int):
    # non-increasing tuples drawn from members, first entry <= upper, ascending order
    for s in members:
        if s > upper:
            return
        if length == 1:
            yield (s,)
        else:
            for rest in _tuples(members, length - 1, s):
                yield (s,) + rest


def admits_pattern(S: NumericalSemigroup, p: Pattern | Sequence[int]) -> Admission:
    """Decide whether ``S`` admits ``p``; on failure report the first violating tuple.

    Tuples with ``s_1 >= c`` always land in ``S``, so only ``s_1 < c`` is scanned.
    """
    if not isinstance(p, Pattern):
        p = Pattern(tuple(p))
    p.check_shape()
    members = list(S.small_elements[:-1])
    for s in _tuples(members, len(p.coeffs), S.conductor - 1):
        if p(s) not in S:
            return Admission(False, s)
    return Admission(True)


def is_arf(S: NumericalSemigroup) -> bool:
    """Arf test via the equivalent pattern ``2 x_1 - x_2`` (quadratic instead of cubic)."""
    c = S.conductor
    members = np.asarray(S.small_elements[:-1], dtype=np.int64)
    mask = S.mask(c + 1)
    for start in range(0, len(members), _ROWS):
        x = members[start : start + _ROWS, None]
        # 2x - y >= x for y <= x; anything from c on is a member
        values = np.clip(2 * x - members[None, :], 0, c)
        if not np.all(mask[values] | (members[None, :] > x)):
            return False
    return True


def is_saturated(S: NumericalSemigroup) -> bool:
    """``s + gcd(S ∩ [0, s]) in S`` for every member ``0 < s < c``."""
    g = 0
    for s in S.small_elements[1:-1]:
        g = math.gcd(g, s)
        if s + g not in S:
            return False
    return True
