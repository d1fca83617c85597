"""Inductive numerical semigroups.

``Gamma(a, b)`` is built from ``Gamma_0 = N`` by ``Gamma_i = a_i Gamma_{i-1} ∪
(a_i b_i + N)``.  Besides construction and recognition this module holds the
closed forms for Apéry sets on the fundamental interval ``[1, A_1]``, their
cardinalities, the second Feng-Rao number and the genus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Sequence

import numpy as np

from .errors import ConductorLimitExceeded, InvalidDescriptor, OutOfFundamentalInterval, SemigroupError
from .semigroup import NATURALS, AperySet, NumericalSemigroup, from_membership

__all__ = [
    "InductiveDescriptor",
    "Partition",
    "apery_cardinalities_closed",
    "apery_closed",
    "build",
    "e2_candidates",
    "e2_closed",
    "genus_closed",
    "is_inductive",
    "is_inductive_naive",
    "multiple_of",
    "partition",
    "quotient_by",
]


@dataclass(frozen=True)
class InductiveDescriptor:
    """The sequences ``a`` and ``b`` of ``Gamma(a, b)``; ``n = 0`` encodes N."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        a, b = self.a, self.b
        if len(a) != len(b):
            raise InvalidDescriptor(f"a and b differ in length ({len(a)} vs {len(b)})")
        for i, ai in enumerate(a, 1):
            if ai < 2:
                raise InvalidDescriptor(f"a_{i} = {ai} < 2")
        if a and b[0] < 1:
            raise InvalidDescriptor(f"b_1 = {b[0]} < 1")
        for i in range(1, len(a)):
            if b[i] < a[i - 1] * b[i - 1]:
                raise InvalidDescriptor(
                    f"b_{i + 1} = {b[i]} < a_{i} b_{i} = {a[i - 1] * b[i - 1]}"
                )

    @classmethod
    def from_lambdas(cls, a: Sequence[int], lambdas: Sequence[int]) -> InductiveDescriptor:
        """Descriptor from ``a`` and the block lengths ``lambda``."""
        if len(a) != len(lambdas):
            raise InvalidDescriptor("a and lambda differ in length")
        b: list[int] = []
        for i, lam in enumerate(lambdas):
            if lam < 0:
                raise InvalidDescriptor(f"lambda_{i + 1} = {lam} < 0")
            b.append(lam if i == 0 else lam + a[i - 1] * b[-1])
        return cls(tuple(a), tuple(b))

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def lambdas(self) -> tuple[int, ...]:
        a, b = self.a, self.b
        return tuple(b[i] if i == 0 else b[i] - a[i - 1] * b[i - 1] for i in range(len(a)))

    @property
    def A(self) -> tuple[int, ...]:
        """``(A_1, ..., A_n, A_{n+1})`` with ``A_i = a_i ... a_n`` and ``A_{n+1} = 1``."""
        out = [1]
        for ai in reversed(self.a):
            out.append(out[-1] * ai)
        return tuple(reversed(out))

    @property
    def multiplicity(self) -> int:
        return self.A[0]

    @property
    def conductor(self) -> int:
        return self.a[-1] * self.b[-1] if self.a else 0

    def prefix(self, k: int) -> InductiveDescriptor:
        """Descriptor of ``Gamma_k``."""
        return InductiveDescriptor(self.a[:k], self.b[:k])

    def __str__(self) -> str:
        return f"a=({','.join(map(str, self.a))}) b=({','.join(map(str, self.b))})"


@dataclass(frozen=True)
class Partition:
    """Disjoint blocks ``Lambda^1 .. Lambda^n`` plus the ray ``ray_start + N``."""

    blocks: tuple[tuple[int, ...], ...]
    ray_start: int

    def finite_part(self) -> tuple[int, ...]:
        return tuple(x for block in self.blocks for x in block)


# -- construction -----------------------------------------------------------


def multiple_of(S: NumericalSemigroup, a: int, b: int) -> NumericalSemigroup:
    """``a S ∪ (b + N)``."""
    if a < 1 or b < 1:
        raise SemigroupError(f"need a >= 1 and b >= 1, got a={a}, b={b}")
    mask = np.zeros(b, dtype=bool)
    ts = np.asarray(S.members_below(-(-b // a)), dtype=np.int64)
    mask[ts * a] = True
    return from_membership(mask)


def quotient_by(S: NumericalSemigroup, a: int) -> NumericalSemigroup:
    """``S / a = {x : a x in S}``."""
    if a < 1:
        raise SemigroupError(f"need a >= 1, got {a}")
    top = -(-S.conductor // a)
    return from_membership(S.mask(a * top)[::a])


def build(d: InductiveDescriptor, max_conductor: int | None = None) -> NumericalSemigroup:
    if max_conductor is not None and d.conductor > max_conductor:
        raise ConductorLimitExceeded(d.conductor, max_conductor)
    S = NATURALS
    for ai, bi in zip(d.a, d.b):
        S = multiple_of(S, ai, ai * bi)
    return S


def partition(d: InductiveDescriptor) -> Partition:
    if d.n < 1:
        raise InvalidDescriptor("partition needs n >= 1")
    A, lam, b = d.A, d.lambdas, d.b
    blocks = [tuple(j * A[0] for j in range(lam[0] + 1))]
    for k in range(1, d.n):
        start = b[k - 1] * A[k - 1]
        blocks.append(tuple(start + j * A[k] for j in range(1, lam[k] + 1)))
    return Partition(tuple(blocks), d.conductor + 1)


# -- recognition --------------------------------------------------------------


def is_inductive(S: NumericalSemigroup) -> InductiveDescriptor | None:
    """Recover a descriptor if consecutive element gaps divide one another.

    Checks ``delta_{i+1} | delta_i`` over the small elements; beyond the
    conductor every gap is 1.  Maximal runs of equal gaps give ``A_k`` and
    ``lambda_k``, hence ``a_k = A_k / A_{k+1}`` and
    ``b_k = lambda_k + a_{k-1} b_{k-1}``.
    """
    s = S.small_elements
    deltas = [v - u for u, v in zip(s, s[1:])]
    if any(d0 % d1 for d0, d1 in zip(deltas, deltas[1:])):
        return None
    runs: list[list[int]] = []  # [A_k, lambda_k]
    for delta in deltas:
        if runs and runs[-1][0] == delta:
            runs[-1][1] += 1
        else:
            runs.append([delta, 1])
    As = [A for A, _ in runs] + [1]
    a = tuple(As[k] // As[k + 1] for k in range(len(runs)))
    lambdas = [lam for _, lam in runs]
    return InductiveDescriptor.from_lambdas(a, lambdas)


def is_inductive_naive(S: NumericalSemigroup) -> bool:
    """Divide the small elements by their gcd until reaching N or gcd 1."""
    while True:
        small = S.small_elements
        if len(small) == 1:
            return True
        g = reduce(math.gcd, small)
        if g == 1:
            return False
        mask = np.zeros(small[-1] // g + 1, dtype=bool)
        mask[[x // g for x in small]] = True
        S = from_membership(mask)


# -- Apéry sets on the fundamental interval ------------------------------------


def _finite_part(a: tuple[int, ...], b: tuple[int, ...]) -> frozenset[int]:
    return frozenset(partition(InductiveDescriptor(a, b)).finite_part())


def _member(a: tuple[int, ...], b: tuple[int, ...], x: int) -> bool:
    """Membership in ``Gamma(a, b)`` by unwinding the recursion."""
    while a:
        if x < 0:
            return False
        if x >= a[-1] * b[-1]:
            return True
        if x % a[-1]:
            return False
        x //= a[-1]
        a, b = a[:-1], b[:-1]
    return x >= 0


@lru_cache(maxsize=4096)
def _apery_rec(a: tuple[int, ...], b: tuple[int, ...], x: int) -> frozenset[int]:
    n = len(a)
    an, bn = a[-1], b[-1]
    c = an * bn
    low = _finite_part(a, b)
    if n == 1:
        if x == 1:
            return low
        if x < an:
            return low | frozenset(range(c + 1, c + x))
        return frozenset({0}) | frozenset(range(c + 1, c + an))
    k, j = divmod(x, an)
    if k == 0:
        if j == 1:
            return low
        return low | frozenset(range(c + 1, c + j))
    if j == 0:
        # also covers k == A_1 / a_n (the Apéry set of the multiplicity)
        lifted = frozenset(an * w for w in _apery_rec(a[:-1], b[:-1], k))
        fresh = frozenset(range(c, c + k * an)) - frozenset(an * (bn + t) for t in range(k))
        return lifted | fresh
    if j == 1:
        prev = _apery_rec(a, b, k * an)
        out = low | frozenset(w + 1 for w in prev if w > c)
        if not _member(a, b, c - k * an):
            out |= {c + 1}
        return out
    # Ap(x + 1) ∩ [c, ∞) = {c} ∪ (1 + Ap(x) ∩ [c, ∞)) whenever a_n ∤ x + 1
    ray = [w for w in _apery_rec(a, b, k * an + 1) if w >= c]
    return low | frozenset(range(c + 1, c + j - 1)) | frozenset(w + j - 1 for w in ray)


def apery_closed(d: InductiveDescriptor, x: int) -> AperySet:
    """``Ap(Gamma(a, b), x)`` for ``1 <= x <= A_1`` by the level recursion."""
    if d.n < 1:
        raise InvalidDescriptor("apery_closed needs n >= 1")
    if not 1 <= x <= d.multiplicity:
        raise OutOfFundamentalInterval(f"x = {x} outside [1, {d.multiplicity}]")
    return AperySet(x, tuple(sorted(_apery_rec(d.a, d.b, x))))


def apery_cardinalities_closed(d: InductiveDescriptor) -> list[tuple[int, int]]:
    """``[(1, #S_1), (A_n, #S_{A_n}), ..., (A_1, #S_{A_1})]``."""
    if d.n < 1:
        raise InvalidDescriptor("needs n >= 1")
    lam, A = d.lambdas, d.A
    out = [(1, sum(lam) + 1)]
    for i in range(d.n, 0, -1):
        out.append((A[i - 1], sum(lam[: i - 1]) + A[i - 1]))
    return out


def e2_candidates(d: InductiveDescriptor) -> list[int]:
    """The values whose minimum is ``E(Gamma, 2)``, in the order of :func:`apery_cardinalities_closed`."""
    return [card for _, card in apery_cardinalities_closed(d)]


def e2_closed(d: InductiveDescriptor) -> int:
    """Second Feng-Rao number, one pass from the last level down."""
    if d.n == 0:
        return 1
    lam = d.lambdas
    L = sum(lam)
    A = 1
    E = L + A
    for i in range(1, d.n + 1):
        L -= lam[d.n - i]
        A *= d.a[d.n - i]
        if L + A < E:
            E = L + A
    return E


def genus_closed(d: InductiveDescriptor) -> int:
    return sum(bi * (ai - 1) for ai, bi in zip(d.a, d.b))
