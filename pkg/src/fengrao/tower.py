"""Weierstrass semigroups of the Garcia-Stichtenoth tower.

Level ``n`` of the tower over base ``q`` gives ``Gamma_1 = N`` and
``Gamma_n = q Gamma_{n-1} ∪ (c_n + N)``.  In descriptor terms this is a
depth ``n - 1`` inductive semigroup with every ``a_i = q``; tower level ``j``
is descriptor level ``j - 1``.  Apéry bases are reported as powers ``q**i``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import SemigroupError
from .inductive import InductiveDescriptor

__all__ = [
    "TowerParams",
    "reduction_candidates",
    "tower_apery_cards",
    "tower_conductor",
    "tower_descriptor",
    "tower_e2_closed",
    "tower_lambda",
]


def tower_conductor(q: int, n: int) -> int:
    if n % 2:
        return q**n - q ** ((n + 1) // 2)
    return q**n - q ** (n // 2)


def tower_lambda(q: int, j: int) -> int:
    """Block length contributed by tower level ``j >= 2``."""
    if j % 2:
        return 0
    return (q - 1) * q ** ((j - 2) // 2)


@dataclass(frozen=True)
class TowerParams:
    q: int
    n: int

    def __post_init__(self):
        if self.q < 2:
            raise SemigroupError(f"tower base q must be >= 2, got {self.q}")
        if self.n < 1:
            raise SemigroupError(f"tower level n must be >= 1, got {self.n}")

    @property
    def conductor(self) -> int:
        return tower_conductor(self.q, self.n)

    @property
    def q_is_square(self) -> bool:
        return math.isqrt(self.q) ** 2 == self.q


def tower_descriptor(p: TowerParams) -> InductiveDescriptor:
    q, n = p.q, p.n
    b = []
    for j in range(2, n + 1):
        c, r = divmod(tower_conductor(q, j), q)
        assert r == 0, (q, j)
        b.append(c)
    return InductiveDescriptor((q,) * (n - 1), tuple(b))


def tower_apery_cards(p: TowerParams) -> list[tuple[int, int]]:
    """``[(i, #S_{q**i}) for i in 0..n-1]``."""
    q, n = p.q, p.n
    if n < 2:
        raise SemigroupError("needs n >= 2")
    m, odd = divmod(n, 2)
    out = [(0, q**m)]
    for i in range(1, n - 1):
        # floor(m - i/2) for even n, ceil(m - i/2) for odd n
        e = m - (i // 2 if odd else (i + 1) // 2)
        out.append((i, (q**e - 1) + q**i))
    out.append((n - 1, q ** (n - 1)))
    return out


def reduction_candidates(p: TowerParams) -> list[int]:
    q, n = p.q, p.n
    if n < 2:
        raise SemigroupError("needs n >= 2")
    out = [q ** (n // 2), q ** (n - 1)]
    out += [(q**k - 1) + q ** (n - 1 - 2 * k) for k in range(1, n // 2)]
    return out


def tower_e2_closed(p: TowerParams) -> int:
    q, n = p.q, p.n
    if n == 1:
        return 1
    if n in (2, 3):
        return q
    if n == 4:
        return 2 * q - 1
    if n == 5:
        return q**2
    k = -(-(n - 1) // 3)
    return q**k + q ** (n - 1 - 2 * k) - 1
