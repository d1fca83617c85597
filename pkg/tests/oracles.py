"""Independent reference implementations used only by the tests.

Everything here works on Python sets straight from the definitions and shares
no code with the package.
"""

from __future__ import annotations

import itertools
import random


def closure(gens, bound):
    """Members of the monoid generated by ``gens`` that are ``<= bound``."""
    reach = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x + g
                if y <= bound and y not in reach:
                    reach.add(y)
                    nxt.append(y)
        frontier = nxt
    return reach


class SetSemigroup:
    """Membership from an explicit finite set plus an all-member tail."""

    def __init__(self, members_below, tail_start):
        self.low = set(m for m in members_below if m < tail_start)
        self.tail = tail_start

    def __contains__(self, x):
        return x >= self.tail or x in self.low

    @classmethod
    def from_gens(cls, gens, bound=400):
        reach = closure(gens, bound)
        # last gap + 1; bound is generous enough for the tests' generators
        gaps = [x for x in range(bound + 1) if x not in reach]
        tail = gaps[-1] + 1 if gaps else 0
        assert tail + min(gens) < bound
        return cls(reach, tail)

    @classmethod
    def inductive(cls, a, b):
        members, tail = {0}, 0  # Gamma_0 = N
        for ai, bi in zip(a, b):
            old = cls(members, tail)
            new_tail = ai * bi
            members = {ai * t for t in range(new_tail) if t in old and ai * t < new_tail}
            tail = new_tail
        return cls(members, tail)

    @property
    def conductor(self):
        c = self.tail
        while c > 0 and (c - 1) in self:
            c -= 1
        return c

    @property
    def genus(self):
        return sum(1 for x in range(self.conductor) if x not in self)

    def small(self):
        c = self.conductor
        return [x for x in range(c + 1) if x in self]


def apery(S, x):
    c = S.conductor
    return {w for w in range(c + x + 1) if w in S and (w - x) not in S}


def divisor_set(S, x):
    return {a for a in range(x + 1) if a in S and (x - a) in S}


def frd(S, m, horizon=None):
    """Feng-Rao distance scanning members up to ``horizon`` (default 3c + m + 5)."""
    c = S.conductor
    top = horizon if horizon is not None else 3 * c + m + 5
    return min(len(divisor_set(S, t)) for t in range(m, top + 1) if t in S)


def frd_r(S, r, m, top):
    members = [t for t in range(m, top + 1) if t in S]
    divs = {t: divisor_set(S, t) for t in members}
    return min(len(set().union(*(divs[t] for t in combo))) for combo in itertools.combinations(members, r))


def e2_bruteforce(S):
    small = S.small()
    mult = small[1] if len(small) > 1 else 1
    return min(len(apery(S, x)) for x in range(1, mult + 1))


def random_descriptor(rng: random.Random, max_n=4, a_range=(2, 5), lam1=(1, 6), lam=(0, 6), max_conductor=5000):
    """Random ``(a, b)`` with the stated ranges, rejecting large conductors."""
    while True:
        n = rng.randint(1, max_n)
        a = [rng.randint(*a_range) for _ in range(n)]
        lambdas = [rng.randint(*lam1)] + [rng.randint(*lam) for _ in range(n - 1)]
        b = []
        for i, l in enumerate(lambdas):
            b.append(l if i == 0 else l + a[i - 1] * b[-1])
        if a[-1] * b[-1] <= max_conductor:
            return tuple(a), tuple(b)


def random_generators(rng: random.Random, max_gen=20, max_count=4):
    while True:
        k = rng.randint(1, max_count)
        gens = sorted({rng.randint(2, max_gen) for _ in range(k)})
        from math import gcd
        from functools import reduce

        if reduce(gcd, gens) == 1:
            return gens
