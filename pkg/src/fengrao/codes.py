"""Order bounds for one-point codes and the tower bound tables.

A table row labelled ``m`` describes the code ``C_m``; its weight bounds are
evaluated at degree ``m + 1``.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import BelowConductor, NotArf, NotMember, SemigroupError
from .inductive import build, e2_closed, is_inductive
from .patterns import is_arf
from .semigroup import NumericalSemigroup, feng_rao_distance, feng_rao_number_2_bruteforce
from .tower import TowerParams, tower_descriptor, tower_e2_closed

__all__ = [
    "BoundsRow",
    "BoundsTable",
    "bounds_table",
    "d2_lower_bound",
    "delta_arf_closed",
    "delta_arf_closed_range",
    "generic_dr_bound",
    "griesmer_order_bound",
]

Winner = Literal["goppa_like", "gob", "tie"]


def delta_arf_closed(S: NumericalSemigroup, m: int, check_arf: bool = True) -> int:
    """Feng-Rao distance of an Arf semigroup at ``m >= c``.

    ``2i`` on ``[c + rho_i, c + rho_{i+1})`` and ``m + 1 - 2g`` from ``2c - 1`` on.
    """
    c = S.conductor
    if m not in S:
        raise NotMember(f"{m} is not a member")
    if m < c:
        raise BelowConductor(f"m = {m} < conductor {c}")
    if check_arf and not is_arf(S):
        raise NotArf(f"{S} is not Arf")
    if m >= 2 * c - 1:
        return m + 1 - 2 * S.genus
    return 2 * bisect.bisect_right(S.small_elements, m - c)


def delta_arf_closed_range(
    S: NumericalSemigroup, lo: int, hi: int, check_arf: bool = True
) -> np.ndarray:
    """:func:`delta_arf_closed` for every ``m`` in ``lo..hi`` (all members, as ``lo >= c``)."""
    c, g = S.conductor, S.genus
    if lo < c:
        raise BelowConductor(f"m = {lo} < conductor {c}")
    if hi < lo:
        raise SemigroupError(f"empty range {lo}..{hi}")
    if check_arf and not is_arf(S):
        raise NotArf(f"{S} is not Arf")
    m = np.arange(lo, hi + 1, dtype=np.int64)
    low = 2 * np.searchsorted(np.asarray(S.small_elements, dtype=np.int64), m - c, side="right")
    return np.where(m >= 2 * c - 1, m + 1 - 2 * g, low)


def e2_of(S: NumericalSemigroup) -> int:
    """Second Feng-Rao number, closed form when ``S`` is inductive."""
    d = is_inductive(S)
    return e2_closed(d) if d is not None else feng_rao_number_2_bruteforce(S)


def d2_lower_bound(S: NumericalSemigroup, m: int, e2: int | None = None) -> int:
    """Goppa-like bound ``m + 2 - 2g + E_2`` on the second weight of ``C_m``."""
    if m < S.conductor:
        raise BelowConductor(f"m = {m} < conductor {S.conductor}")
    if e2 is None:
        e2 = e2_of(S)
    return m + 2 - 2 * S.genus + e2


def griesmer_order_bound(
    S: NumericalSemigroup, q: int, m: int, arf: bool | None = None
) -> int:
    """``GOB(m + 1) = delta(m + 1) + ceil(delta(m + 1) / q)``."""
    if q < 2:
        raise SemigroupError(f"q must be >= 2, got {q}")
    t = m + 1
    if arf is None:
        arf = is_arf(S)
    if arf and t >= S.conductor:
        d = delta_arf_closed(S, t, check_arf=False)
    else:
        d = feng_rao_distance(S, t)
    return d + -(-d // q)


def generic_dr_bound(S: NumericalSemigroup, r: int, m: int) -> int:
    """``delta_FR(m + r)``, the classical bound on the ``r``-th weight."""
    if r < 1:
        raise SemigroupError(f"r must be >= 1, got {r}")
    return feng_rao_distance(S, m + r)


@dataclass(frozen=True)
class BoundsRow:
    m: int
    d2_goppa_like: int
    gob: int

    @property
    def winner(self) -> Winner:
        if self.d2_goppa_like > self.gob:
            return "goppa_like"
        if self.gob > self.d2_goppa_like:
            return "gob"
        return "tie"

    def as_dict(self) -> dict:
        return {"m": self.m, "d2_goppa_like": self.d2_goppa_like, "gob": self.gob, "winner": self.winner}


@dataclass(frozen=True)
class BoundsTable:
    params: TowerParams
    m_from: int
    m_to: int
    genus: int
    conductor: int
    e2: int
    rows: tuple[BoundsRow, ...]


def bounds_table(
    p: TowerParams,
    m_from: int | None = None,
    m_to: int | None = None,
    max_conductor: int | None = None,
) -> BoundsTable:
    """Both second-weight bounds for ``m_from <= m <= m_to``, default ``[2g - 1, 2c - 2]``."""
    S = build(tower_descriptor(p), max_conductor=max_conductor)
    g, c = S.genus, S.conductor
    m_from = 2 * g - 1 if m_from is None else m_from
    m_to = 2 * c - 2 if m_to is None else m_to
    if m_from > m_to:
        raise SemigroupError(f"empty range {m_from}..{m_to}")
    e2 = tower_e2_closed(p)
    arf = is_arf(S)
    rows = tuple(
        BoundsRow(m, d2_lower_bound(S, m, e2=e2), griesmer_order_bound(S, p.q, m, arf=arf))
        for m in range(m_from, m_to + 1)
    )
    return BoundsTable(p, m_from, m_to, g, c, e2, rows)
