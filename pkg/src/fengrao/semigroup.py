"""Numerical semigroups and the brute-force Feng-Rao quantities.

A numerical semigroup is stored by its small elements, the members up to and
including the conductor ``c``; every integer ``>= c`` is a member.  All other
modules consume :class:`NumericalSemigroup`, and the functions here that count
things directly from membership (Apéry sets, divisor sets, Feng-Rao
distances) are the oracles that the closed forms elsewhere are checked
against.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    ConductorLimitExceeded,
    InvalidBase,
    NotClosed,
    NotCoprime,
    NotMember,
    SemigroupError,
    WindowTooSmall,
)

__all__ = [
    "AperySet",
    "NATURALS",
    "NumericalSemigroup",
    "apery_cardinalities",
    "apery_set",
    "contains",
    "divisors",
    "feng_rao_distance",
    "feng_rao_distances",
    "feng_rao_number_2_bruteforce",
    "from_generators",
    "from_membership",
    "from_small_elements",
    "generalized_feng_rao_distance",
    "nu",
    "nu_values",
    "rho",
]


@dataclass(frozen=True)
class NumericalSemigroup:
    """Canonical encoding of a numerical semigroup.

    ``small_elements`` is strictly increasing, starts at 0 and ends at the
    conductor, and ``conductor - 1`` is a gap (except for the naturals,
    encoded as ``(0,)``).  Use :func:`from_small_elements`,
    :func:`from_generators` or :func:`from_membership` to build one from
    unchecked data.
    """

    small_elements: tuple[int, ...]

    def __post_init__(self):
        s = self.small_elements
        if not s or s[0] != 0:
            raise SemigroupError("small elements must start with 0")
        if any(u >= v for u, v in zip(s, s[1:])):
            raise SemigroupError("small elements must be strictly increasing")
        if len(s) > 1 and s[-2] == s[-1] - 1:
            raise SemigroupError("small elements are not canonical: conductor - 1 is a member")

    @property
    def conductor(self) -> int:
        return self.small_elements[-1]

    @property
    def genus(self) -> int:
        return self.conductor - (len(self.small_elements) - 1)

    @property
    def multiplicity(self) -> int:
        return self.small_elements[1] if len(self.small_elements) > 1 else 1

    @property
    def frobenius_number(self) -> int:
        return self.conductor - 1

    @cached_property
    def _members(self) -> frozenset[int]:
        return frozenset(self.small_elements)

    @property
    def gaps(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.conductor) if x not in self._members)

    def __contains__(self, x: int) -> bool:
        return x >= self.conductor or (x >= 0 and x in self._members)

    def mask(self, length: int) -> np.ndarray:
        """Boolean membership array for ``0 .. length-1``."""
        out = np.ones(max(length, 0), dtype=bool)
        c = self.conductor
        if c > 0:
            head = np.zeros(c, dtype=bool)
            head[list(self.small_elements[:-1])] = True
            out[: min(c, length)] = head[:length]
        return out

    def members_below(self, bound: int) -> list[int]:
        """All members ``< bound``, increasing."""
        head = [s for s in self.small_elements if s < bound]
        if bound > self.conductor:
            head.extend(range(self.conductor + 1, bound))
        return head

    def __str__(self) -> str:
        if self.conductor == 0:
            return "{0,->}"
        return "{" + ",".join(map(str, self.small_elements)) + ",->}"


NATURALS = NumericalSemigroup((0,))


@dataclass(frozen=True)
class AperySet:
    """``Ap(S, base) = {w in S : w - base not in S}``."""

    base: int
    elements: tuple[int, ...]

    @property
    def cardinality(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


# -- construction -----------------------------------------------------------


def from_membership(mask: Sequence[bool] | np.ndarray) -> NumericalSemigroup:
    """Canonicalize a membership prefix; every integer ``>= len(mask)`` is a member.

    No closure check is made here.
    """
    mask = np.asarray(mask, dtype=bool)
    if len(mask) == 0:
        return NATURALS
    if not mask[0]:
        raise SemigroupError("0 must be a member")
    missing = np.flatnonzero(~mask)
    if len(missing) == 0:
        return NATURALS
    c = int(missing[-1]) + 1
    small = np.flatnonzero(mask[:c]).tolist()
    return NumericalSemigroup(tuple(small) + (c,))


def from_small_elements(elems: Iterable[int]) -> NumericalSemigroup:
    """Semigroup ``elems ∪ (max(elems) + N)``, checked for additive closure."""
    elems = sorted(set(int(e) for e in elems))
    if not elems or elems[0] != 0:
        raise SemigroupError("small elements must start with 0")
    top = elems[-1]
    present = set(elems)
    for i, u in enumerate(elems):
        for v in elems[i:]:
            if u + v >= top:
                break
            if u + v not in present:
                raise NotClosed(f"{u} + {v} = {u + v} is missing")
    mask = np.zeros(top + 1, dtype=bool)
    mask[elems] = True
    return from_membership(mask)


def from_generators(gens: Iterable[int], max_conductor: int | None = None) -> NumericalSemigroup:
    """Smallest submonoid of N containing ``gens``.

    Sieves membership upward until ``min(gens)`` consecutive members appear;
    the start of that run is the conductor.
    """
    gens = sorted(set(int(g) for g in gens))
    if not gens:
        raise SemigroupError("need at least one generator")
    if gens[0] <= 0:
        raise SemigroupError("generators must be positive")
    if reduce(math.gcd, gens) != 1:
        raise NotCoprime(f"gcd{tuple(gens)} = {reduce(math.gcd, gens)} != 1")
    m = gens[0]
    if m == 1:
        return NATURALS
    member = bytearray([1])
    run = 0
    x = 0
    while run < m:
        x += 1
        hit = 0
        for g in gens:
            if g > x:
                break
            if member[x - g]:
                hit = 1
                break
        member.append(hit)
        if hit:
            run += 1
        else:
            run = 0
            if max_conductor is not None and x + 1 > max_conductor:
                raise ConductorLimitExceeded(x + 1, max_conductor, lower_bound=True)
    c = x - m + 1
    small = [i for i in range(c) if member[i]] + [c]
    return NumericalSemigroup(tuple(small))


# -- elementary queries -------------------------------------------------------


def contains(S: NumericalSemigroup, x: int) -> bool:
    return x in S


def rho(S: NumericalSemigroup, i: int) -> int:
    """The ``i``-th smallest member, ``rho(S, 1) == 0``."""
    if i < 1:
        raise SemigroupError(f"rho index must be >= 1, got {i}")
    k = len(S.small_elements)
    if i <= k:
        return S.small_elements[i - 1]
    return i - 1 + S.genus


def apery_set(S: NumericalSemigroup, x: int) -> AperySet:
    """Definitional Apéry set: scan ``w < c + x`` for ``w in S, w - x not in S``."""
    if x <= 0:
        raise InvalidBase(f"Apéry base must be positive, got {x}")
    n = S.conductor + x
    mask = S.mask(n)
    shifted = np.zeros(n, dtype=bool)
    shifted[x:] = mask[: n - x]
    return AperySet(x, tuple(np.flatnonzero(mask & ~shifted).tolist()))


def apery_cardinalities(S: NumericalSemigroup, xs: Iterable[int]) -> np.ndarray:
    """``#Ap(S, x)`` for each positive ``x``, by counting.

    Uses ``#Ap(S, x) = (c + x - g) - #{u in S, u < c : u + x in S}``, which
    follows from splitting the definition at ``w = x``; cost is O(#small) per
    base instead of O(c).
    """
    xs = np.asarray(list(xs), dtype=np.int64)
    if len(xs) == 0:
        return xs
    if xs.min() <= 0:
        raise InvalidBase("Apéry bases must be positive")
    c, g = S.conductor, S.genus
    small = np.asarray(S.small_elements[:-1], dtype=np.int64)
    if len(small) == 0:
        return xs + c - g
    mask = S.mask(int(c + xs.max()) + 1)
    out = np.empty(len(xs), dtype=np.int64)
    step = max(1, 4_000_000 // len(small))
    for lo in range(0, len(xs), step):
        chunk = xs[lo : lo + step]
        hits = mask[chunk[:, None] + small[None, :]].sum(axis=1)
        out[lo : lo + step] = chunk + (c - g) - hits
    return out


# -- divisors and Feng-Rao distances -----------------------------------------


def divisors(S: NumericalSemigroup, x: int) -> tuple[int, ...]:
    """``D(x) = {a in S : x - a in S}``."""
    if x not in S:
        raise NotMember(f"{x} is not a member")
    mask = S.mask(x + 1)
    return tuple(np.flatnonzero(mask & mask[::-1]).tolist())


def nu(S: NumericalSemigroup, x: int) -> int:
    return len(divisors(S, x))


def _self_convolve(mask: np.ndarray) -> np.ndarray:
    v = mask.astype(np.int64)
    if len(v) <= 4096:
        return np.convolve(v, v)
    size = 1 << (2 * len(v) - 1).bit_length()
    f = np.fft.rfft(v.astype(np.float64), size)
    return np.rint(np.fft.irfft(f * f, size)[: 2 * len(v) - 1]).astype(np.int64)


def nu_values(S: NumericalSemigroup, lo: int, hi: int) -> np.ndarray:
    """``nu(t)`` for ``t`` in ``lo..hi``; entries at gaps are meaningless."""
    if lo < 0 or hi < lo:
        raise SemigroupError(f"bad range {lo}..{hi}")
    return _self_convolve(S.mask(hi + 1))[lo : hi + 1]


def feng_rao_distance(S: NumericalSemigroup, m: int) -> int:
    """``min nu(m1)`` over members ``m1 >= m``.

    Past ``2c - 1``, ``nu(m1) = m1 + 1 - 2g`` is increasing, so the scan stops there.
    """
    if m not in S:
        raise NotMember(f"{m} is not a member")
    hi = max(m, 2 * S.conductor - 1)
    values = nu_values(S, m, hi)
    members = S.mask(hi + 1)[m:]
    return int(values[members].min())


def feng_rao_distances(S: NumericalSemigroup, lo: int, hi: int) -> np.ndarray:
    """``min nu(m1)`` over members ``m1 >= t``, for every ``t`` in ``lo..hi``."""
    if lo < 0 or hi < lo:
        raise SemigroupError(f"bad range {lo}..{hi}")
    top = max(hi, 2 * S.conductor - 1)
    mask = S.mask(top + 1)
    values = np.where(mask, _self_convolve(mask)[: top + 1], np.iinfo(np.int64).max)
    return np.minimum.accumulate(values[::-1])[::-1][lo : hi + 1]


def _divisor_rows(S: NumericalSemigroup, ts: np.ndarray, width: int) -> np.ndarray:
    mask = S.mask(width)
    alpha = np.arange(width)
    rest = ts[:, None] - alpha[None, :]
    ok = rest >= 0
    return mask[None, :] & ok & mask[np.where(ok, rest, 0)]


def generalized_feng_rao_distance(
    S: NumericalSemigroup, r: int, m: int, window: int | None = None
) -> int:
    """``r``-th Feng-Rao distance by exhaustive search.

    Minimizes ``#(D(m1) ∪ ... ∪ D(mr))`` over members
    ``m <= m1 < ... < mr <= m + window``.  The default window is ``2c + r``.
    """
    if r < 1:
        raise SemigroupError(f"r must be >= 1, got {r}")
    if m not in S:
        raise NotMember(f"{m} is not a member")
    if window is None:
        window = 2 * S.conductor + r
    if window < 1:
        raise WindowTooSmall(f"window must be positive, got {window}")
    top = m + window
    ts = np.asarray([t for t in range(m, top + 1) if t in S], dtype=np.int64)
    if len(ts) < r:
        raise WindowTooSmall(f"only {len(ts)} members in [{m}, {top}], need {r}")
    rows = _divisor_rows(S, ts, top + 1)
    sizes = rows.sum(axis=1)
    if r == 1:
        return int(sizes.min())
    if r == 2:
        f = rows.astype(np.float64)
        union = sizes[:, None] + sizes[None, :] - np.rint(f @ f.T).astype(np.int64)
        iu = np.triu_indices(len(ts), k=1)
        return int(union[iu].min())
    bits = [int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little") for row in rows]
    best = None
    for combo in itertools.combinations(bits, r):
        size = reduce(int.__or__, combo).bit_count()
        if best is None or size < best:
            best = size
    return best


def feng_rao_number_2_bruteforce(S: NumericalSemigroup) -> int:
    """``E(S, 2) = min #Ap(S, x)`` over ``1 <= x <= multiplicity``."""
    return int(apery_cardinalities(S, range(1, S.multiplicity + 1)).min())
