"""Partitions, multipartitions, and the two ingredients of Hua's formula:
q-Pochhammer products and the Tits-form statistic on multipartitions."""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import DimensionMismatchError, InputError
from .qseries import ONE, RationalFunction
from .quiver import Quiver, tits_form

Partition = tuple[int, ...]  # weakly decreasing positive parts, () for empty
MultiPartition = tuple[Partition, ...]  # one partition per vertex


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n, largest-first (reverse lexicographic)."""
    if n < 0:
        raise InputError("cannot partition a negative integer")
    out: list[Partition] = []
    prefix: list[int] = []

    def rec(remaining: int, cap: int):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            rec(remaining - part, part)
            prefix.pop()

    rec(n, n)
    return out


def enumerate_multipartitions(alpha) -> list[MultiPartition]:
    """All tuples of partitions with |mu_i| = alpha_i, in vertex-major order."""
    alpha = tuple(int(x) for x in alpha)
    if any(x < 0 for x in alpha):
        raise InputError(f"dimension vector {alpha} has a negative entry")
    return list(itertools.product(*(enumerate_partitions(a) for a in alpha)))


@lru_cache(maxsize=None)
def q_pochhammer(n: int) -> RationalFunction:
    """(1 - q)(1 - q^2) ... (1 - q^n); empty product for n = 0."""
    if n < 0:
        raise InputError("q_pochhammer needs n >= 0")
    out = ONE
    for m in range(1, n + 1):
        out = out * RationalFunction((1,) + (0,) * (m - 1) + (-1,))
    return out


@lru_cache(maxsize=None)
def _q_pochhammer_inv_arg(n: int) -> RationalFunction:
    # (1 - 1/q)(1 - 1/q^2)...(1 - 1/q^n), each factor as (q^m - 1)/q^m
    out = ONE
    for m in range(1, n + 1):
        out = out * RationalFunction((-1,) + (0,) * (m - 1) + (1,), (0,) * m + (1,))
    return out


def partition_pochhammer(mu: Partition, at_inverse: bool = False) -> RationalFunction:
    """Product over columns of the Pochhammer factor of successive part
    differences: for mu = (mu_1 >= mu_2 >= ...), the product of
    q_pochhammer(mu_j - mu_{j+1}).  With at_inverse=True the same product
    evaluated at 1/q, which is the shape Hua's formula wants.
    """
    parts = tuple(int(x) for x in mu)
    if any(a <= 0 for a in parts) or any(
        parts[j] < parts[j + 1] for j in range(len(parts) - 1)
    ):
        raise InputError(f"{parts} is not a partition")
    out = ONE
    for j, part in enumerate(parts):
        nxt = parts[j + 1] if j + 1 < len(parts) else 0
        step = part - nxt
        out = out * (_q_pochhammer_inv_arg(step) if at_inverse else q_pochhammer(step))
    return out


def tits_statistic(quiver: Quiver, mp: MultiPartition) -> int:
    """Sum of the Tits form over the rows of a multipartition.

    Row j is the vector whose i-th entry is the j-th part of mp[i] (zero when
    mp[i] has fewer than j parts).  The rows sum back to |mp| componentwise.
    """
    if len(mp) != quiver.vertex_count:
        raise DimensionMismatchError(
            f"multipartition with {len(mp)} components on a "
            f"{quiver.vertex_count}-vertex quiver"
        )
    depth = max((len(p) for p in mp), default=0)
    total = 0
    for j in range(depth):
        row = tuple(p[j] if j < len(p) else 0 for p in mp)
        total += tits_form(quiver, row)
    return total
