"""Binomial expansions and the Macaulay / Green / Gotzmann growth bounds.

Everything here is pure integer arithmetic.  The binomial convention used by
the shifted sums is C(m, q) = 0 whenever m < q or q < 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


def _binom(m: int, q: int) -> int:
    if q < 0 or m < q:
        return 0
    return comb(m, q)


@dataclass(frozen=True)
class BinomialExpansion:
    """The unique greedy decomposition n = C(n_i, i) + C(n_{i-1}, i-1) + ...

    Tops strictly decrease, bottoms descend by exactly one from ``i`` down to
    some j >= 1, and n_k >= k for every part.
    """

    i: int
    parts: tuple[tuple[int, int], ...]  # (top, bottom), bottoms descending

    @property
    def value(self) -> int:
        return sum(comb(top, bot) for top, bot in self.parts)


def binom_expansion(n: int, i: int) -> BinomialExpansion:
    """The i-binomial expansion of n (greedy, hence the unique valid one)."""
    if n <= 0:
        raise ValueError("n must be positive")
    if i <= 0:
        raise ValueError("i must be positive")
    parts = []
    remaining = n
    bot = i
    while remaining > 0:
        top = bot
        while comb(top + 1, bot) <= remaining:
            top += 1
        parts.append((top, bot))
        remaining -= comb(top, bot)
        bot -= 1
    return BinomialExpansion(i, tuple(parts))


def shift(expansion: BinomialExpansion, a: int, b: int) -> int:
    """Sum of C(top + b, bottom + a) over the parts, with vanishing convention."""
    return sum(_binom(top + b, bot + a) for top, bot in expansion.parts)


def macaulay_bound(n: int, i: int) -> int:
    """Largest h_{i+1} compatible with h_i = n in a standard graded algebra."""
    if n == 0:
        return 0
    return shift(binom_expansion(n, i), 1, 1)


def green_bound(n: int, i: int) -> int:
    """Largest dim of the degree-i part after restriction to a general hyperplane."""
    if n == 0:
        return 0
    return shift(binom_expansion(n, i), 0, -1)


def gotzmann_values(n: int, d: int, s: int) -> int:
    """Value persisted s steps beyond degree d once growth from d is maximal.

    Numerical prediction only; the hypothesis that the ideal is generated in
    degrees <= d+1 is the caller's responsibility.
    """
    if s < 1:
        raise ValueError("s must be at least 1")
    if n == 0:
        return 0
    return shift(binom_expansion(n, d), s, s)


def is_o_sequence(h) -> tuple[bool, int | None]:
    """Whether consecutive growth obeys the Macaulay bound at every step.

    Returns (True, None) or (False, first index i with h[i+1] too big).
    Entries must be non-negative; growth from index 0 is unconstrained.
    """
    entries = list(h)
    if not entries:
        raise ValueError("empty sequence")
    if any(x < 0 for x in entries):
        raise ValueError("entries must be non-negative")
    for i in range(1, len(entries) - 1):
        if entries[i + 1] > macaulay_bound(entries[i], i):
            return False, i
    return True, None
