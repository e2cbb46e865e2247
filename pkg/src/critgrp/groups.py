"""Finite abelian groups in invariant-factor form."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import prod
from typing import Iterable


@dataclass(frozen=True, order=True)
class AbelianGroup:
    """``Z/d1 ⊕ Z/d2 ⊕ ... ⊕ Z/dk`` with ``d1 | d2 | ... | dk`` and each ``di ≥ 2``.

    The trivial group has no factors.
    """

    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        fs = self.invariant_factors
        if any(d < 2 for d in fs):
            raise ValueError(f"invariant factors must be >= 2, got {fs}")
        if any(b % a for a, b in zip(fs, fs[1:])):
            raise ValueError(f"invariant factors must form a divisibility chain, got {fs}")

    @classmethod
    def from_factors(cls, factors: Iterable[int]) -> "AbelianGroup":
        """Canonical form of ``⊕ Z/f`` for arbitrary positive ``f`` (1s dropped).

        Zero factors mean an infinite group and are rejected.
        """
        factors = [abs(f) for f in factors]
        if 0 in factors:
            raise ValueError("group is infinite (zero invariant factor)")
        # primary decomposition, then regroup the largest prime powers together
        by_prime: dict[int, list[int]] = {}
        for f in factors:
            for p, e in _factorize(f).items():
                by_prime.setdefault(p, []).append(p**e)
        width = max((len(v) for v in by_prime.values()), default=0)
        out = [1] * width
        for powers in by_prime.values():
            powers.sort(reverse=True)
            for i, q in enumerate(powers):
                out[width - 1 - i] *= q
        return cls(tuple(d for d in out if d > 1))

    @classmethod
    def cyclic(cls, n: int) -> "AbelianGroup":
        return cls.from_factors([n])

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def direct_sum(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup.from_factors(self.invariant_factors + other.invariant_factors)

    __add__ = direct_sum

    def __str__(self):
        if not self.invariant_factors:
            return "0"
        return " + ".join(f"Z/{d}" for d in self.invariant_factors)


def _factorize(n: int) -> dict[int, int]:
    out: Counter = Counter()
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] += 1
            n //= p
        p += 1
    if n > 1:
        out[n] += 1
    return dict(out)


def group_from_element_orders(orders: Iterable[int]) -> AbelianGroup:
    """Recover a finite abelian group from the multiset of its element orders.

    For each prime ``p``, the number of elements killed by ``p^i`` is
    ``p^(sum_j min(λ_j, i))`` where ``λ`` lists the exponents of the cyclic
    ``p``-components; successive differences of the logarithms count the
    components of exponent at least ``i``.
    """
    orders = list(orders)
    n = len(orders)
    primes = _factorize(n)
    factors = []
    for p in primes:
        top = max(_p_part(o, p) for o in orders)
        logs = [0]
        for i in range(1, top + 1):
            killed = sum(1 for o in orders if p**i % o == 0)
            logs.append(_exact_log(killed, p))
        at_least = [logs[i] - logs[i - 1] for i in range(1, top + 1)]
        # at_least[i-1] components have exponent >= i
        for i in range(1, top + 1):
            count = at_least[i - 1] - (at_least[i] if i < top else 0)
            factors.extend([p**i] * count)
    group = AbelianGroup.from_factors(factors)
    if group.order != n:
        raise ValueError("element orders are not those of an abelian group")
    return group


def _p_part(n: int, p: int) -> int:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def _exact_log(n: int, p: int) -> int:
    e = 0
    while n > 1:
        if n % p:
            raise ValueError(f"{n} is not a power of {p}")
        n //= p
        e += 1
    return e
