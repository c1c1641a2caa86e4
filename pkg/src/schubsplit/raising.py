"""
Finite expansion of the raising operator attached to a k-strict partition.

For a k-strict partition of length l the operator is a product over pairs
i < j <= l.  A pair is *inverted* when lam_i + lam_j > 2k + j - i; it then
contributes (1 - R_ij)/(1 + R_ij) = 1 + sum_{m>=1} 2(-1)^m R_ij^m, and
otherwise just (1 - R_ij).  Raising operators commute, so a term is fixed by
its exponent matrix.  We choose the matrix one column at a time, from the
last column to the first; once all later columns are fixed the j-th entry of
the result is known up to the column being chosen, which bounds the column
sum (a negative entry kills the term).  The search is therefore finite with
no cutoff.

>>> expand_raising((3, 1), 1).as_dict()
{(3, 1): 1, (4, 0): -2}
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidPartition
from .partitions import Partition, TypedKStrictPartition

__all__ = ["RaisingExpansion", "expand_raising", "inverted_pairs"]


@dataclass(frozen=True)
class RaisingExpansion:
    k: int
    lam: Partition
    terms: tuple[tuple[int, tuple[int, ...]], ...]

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return {seq: c for c, seq in self.terms}

    def apply(self, u, one=1):
        """Evaluate sum(c * u(a_1) * u(a_2) * ...) for a callable u on integers."""
        total = None
        for c, seq in self.terms:
            term = one
            for a in seq:
                if a:
                    term = term * u(a)
            term = term * c
            total = term if total is None else total + term
        return one * 0 if total is None else total


def inverted_pairs(parts: tuple[int, ...], k: int) -> set[tuple[int, int]]:
    l = len(parts)
    return {(i, j) for i in range(1, l + 1) for j in range(i + 1, l + 1)
            if parts[i - 1] + parts[j - 1] > 2 * k + j - i}


def expand_raising(lam, k: int | None = None) -> RaisingExpansion:
    """
    Expand R^lam applied to u_lam.  `lam` is a TypedKStrictPartition, or a
    Partition / tuple together with k.
    """
    if isinstance(lam, TypedKStrictPartition):
        k, parts = lam.k, lam.parts
    else:
        if k is None:
            raise InvalidPartition("k is required for an untyped partition")
        parts = Partition(tuple(lam)).parts
        if not Partition(parts).is_k_strict(k):
            raise InvalidPartition(f"{parts} is not {k}-strict")
    return RaisingExpansion(k, Partition(parts), _expand(parts, k))


@lru_cache(maxsize=None)
def _expand(parts: tuple[int, ...], k: int):
    l = len(parts)
    inv = inverted_pairs(parts, k)
    out: dict[tuple[int, ...], int] = defaultdict(int)
    # gain[j] = sum of exponents a_jm over m > j (raising entry j)
    gain = [0] * (l + 1)
    loss = [0] * (l + 1)

    def column(j: int, coeff: int):
        if j < 2:
            seq = tuple(parts[i - 1] + gain[i] - loss[i] for i in range(1, l + 1))
            out[seq] += coeff
            return
        cap = parts[j - 1] + gain[j]
        rows = list(range(1, j))
        yield_column(j, rows, 0, cap, coeff)

    def yield_column(j, rows, idx, cap, coeff):
        if idx == len(rows):
            loss[j] = parts[j - 1] + gain[j] - cap
            column(j - 1, coeff)
            return
        h = rows[idx]
        top = cap if (h, j) in inv else min(cap, 1)
        for m in range(top + 1):
            if m == 0:
                c = 1
            elif (h, j) in inv:
                c = 2 if m % 2 == 0 else -2
            else:
                c = -1
            gain[h] += m
            yield_column(j, rows, idx + 1, cap - m, coeff * c)
            gain[h] -= m

    column(l, 1)
    terms = sorted(((c, s) for s, c in out.items() if c), key=lambda t: t[1])
    return tuple(terms)
