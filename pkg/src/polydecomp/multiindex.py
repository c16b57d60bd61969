"""Multi-index combinatorics: norms, weighted degrees, multinomials, enumeration."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Sequence

MultiIndex = tuple[int, ...]


def norm(alpha: Sequence[int]) -> int:
    """|alpha| = alpha_1 + ... + alpha_k."""
    return sum(alpha)


def weight(alpha: Sequence[int]) -> int:
    """Weighted degree alpha_1 + 2*alpha_2 + ... + k*alpha_k."""
    return sum(i * a for i, a in enumerate(alpha, start=1))


def multinomial(m: int, alpha: Sequence[int]) -> int:
    """m! / ((m - |alpha|)! * alpha_1! * ... * alpha_k!), exactly.

    Requires |alpha| <= m.
    """
    total = norm(alpha)
    if total > m:
        raise ValueError(f"multi-index norm {total} exceeds m = {m}")
    result = 1
    remaining = m
    for part in alpha:
        result *= math.comb(remaining, part)
        remaining -= part
    return result


def power_product(values: Sequence[Fraction], alpha: Sequence[int]) -> Fraction:
    """values^alpha = prod(values[t] ** alpha[t]), with 0**0 == 1."""
    out = Fraction(1)
    for v, e in zip(values, alpha):
        if e:
            out *= v**e
    return out


def enumerate_weighted(k: int, weight_target: int, max_norm: int) -> list[MultiIndex]:
    """All alpha in N^k with weight(alpha) == weight_target and |alpha| <= max_norm.

    Entries come out in descending lexicographic order, which keeps sums and
    serialized output deterministic.
    """
    if k < 0 or weight_target < 0 or max_norm < 0:
        raise ValueError("k, weight_target and max_norm must be nonnegative")
    if k == 0:
        return [()] if weight_target == 0 else []

    out: list[MultiIndex] = []
    prefix = [0] * k

    def fill(pos: int, target: int, budget: int) -> None:
        if pos == k:
            if target == 0:
                out.append(tuple(prefix))
            return
        w = pos + 1
        for v in range(min(budget, target // w), -1, -1):
            rest = target - w * v
            if rest > (budget - v) * k:
                continue
            prefix[pos] = v
            fill(pos + 1, rest, budget - v)
        prefix[pos] = 0

    fill(0, weight_target, max_norm)
    return out


def iter_simplex(k: int, max_norm: int) -> Iterator[MultiIndex]:
    """All alpha in N^k with |alpha| <= max_norm, in a fixed order."""
    if k == 0:
        yield ()
        return
    for head in range(max_norm + 1):
        for rest in iter_simplex(k - 1, max_norm - head):
            yield (head, *rest)
