"""
Partitions, k-strict partitions with an optional type tag, and the bijection
between typed k-strict partitions and k-Grassmannian signed permutations.

>>> from schubsplit.weyl import SignedPermutation
>>> str(grassmannian_to_partition(SignedPermutation.parse("3,-1,2"), 1))
'(2,1)'
>>> str(grassmannian_to_partition(SignedPermutation.parse("-2,-1,3", "D"), 1))
'(1)#2'
>>> partition_to_grassmannian(TypedKStrictPartition.parse("(2)", 1))
SignedPermutation('BC', 2,-1)
"""

from __future__ import annotations

from dataclasses import dataclass
import re

from .errors import InvalidPartition, InvalidPermutation, NotGrassmannian
from .weyl import Family, SignedPermutation

__all__ = [
    "Partition", "TypedKStrictPartition", "IntegerSequence",
    "conjugate", "grassmannian_to_partition", "partition_to_grassmannian",
    "is_k_grassmannian", "partitions", "strict_partitions", "k_strict_partitions",
    "typed_k_strict_partitions", "sort_key",
]


@dataclass(frozen=True, order=False)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts) or any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidPartition(f"{parts} is not a partition")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("", "()", "0", "∅"):
            return cls()
        m = re.fullmatch(r"\(?\s*(\d+(?:\s*,\s*\d+)*)\s*,?\s*\)?", text)
        if not m:
            raise InvalidPartition(f"malformed partition {text!r}")
        return cls(tuple(int(t) for t in m.group(1).split(",")))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        """1-based part access, zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)))

    def contains(self, other: "Partition") -> bool:
        """Diagram inclusion other ⊂ self."""
        return len(other) <= len(self) and all(other[i] <= self[i] for i in range(1, len(other) + 1))

    def is_strict(self) -> bool:
        return all(self.parts[i] > self.parts[i + 1] for i in range(len(self.parts) - 1))

    def is_k_strict(self, k: int) -> bool:
        big = [p for p in self.parts if p > k]
        return len(set(big)) == len(big)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"

    def __repr__(self):
        return f"Partition({self})"


def conjugate(lam: Partition) -> Partition:
    """
    >>> conjugate(Partition((3, 1)))
    Partition((2,1,1))
    """
    return lam.conjugate()


@dataclass(frozen=True)
class TypedKStrictPartition:
    """A k-strict partition with a type in {0, 1, 2}; types 1 and 2 need a part equal to k."""
    partition: Partition
    k: int
    type: int = 0

    def __post_init__(self):
        lam = self.partition if isinstance(self.partition, Partition) else Partition(tuple(self.partition))
        object.__setattr__(self, "partition", lam)
        if self.k < 0:
            raise InvalidPartition("k must be nonnegative")
        if not lam.is_k_strict(self.k):
            raise InvalidPartition(f"{lam} is not {self.k}-strict")
        if self.type not in (0, 1, 2):
            raise InvalidPartition(f"bad type {self.type}")
        if self.type and self.k not in lam.parts:
            raise InvalidPartition(f"type {self.type} needs a part equal to {self.k}")

    @classmethod
    def parse(cls, text: str, k: int) -> "TypedKStrictPartition":
        text = text.strip()
        typ = 0
        if "#" in text:
            text, t = text.rsplit("#", 1)
            typ = int(t)
        return cls(Partition.parse(text), k, typ)

    @property
    def parts(self) -> tuple[int, ...]:
        return self.partition.parts

    @property
    def weight(self) -> int:
        return self.partition.weight

    def has_part_k(self) -> bool:
        return self.k in self.partition.parts

    def __str__(self):
        return str(self.partition) + (f"#{self.type}" if self.type else "")

    def __repr__(self):
        return f"TypedKStrictPartition({self}, k={self.k})"


@dataclass(frozen=True)
class IntegerSequence:
    entries: tuple[int, ...] = ()

    def __post_init__(self):
        e = tuple(int(x) for x in self.entries)
        while e and e[-1] == 0:
            e = e[:-1]
        object.__setattr__(self, "entries", e)

    @property
    def weight(self) -> int:
        return sum(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        return "(" + ",".join(map(str, self.entries)) + ")"


def sort_key(lam) -> tuple:
    """Weight descending, then parts descending, then type ascending."""
    if isinstance(lam, TypedKStrictPartition):
        return (-lam.weight, tuple(-p for p in lam.parts), lam.type)
    return (-lam.weight, tuple(-p for p in lam.parts), 0)


# -- Grassmannian elements ---------------------------------------------------

def is_k_grassmannian(w: SignedPermutation, k: int) -> bool:
    d = w.descents()
    if w.family is Family.D and k == 1:
        return d <= {0, 1}
    return d <= {k}


def _shape(mu: list[int], beyond: list[int]) -> Partition:
    """Partition whose first len(mu) columns have lengths mu and whose rows continue by `beyond`."""
    rows = max([len(beyond)] + mu) if (mu or beyond) else 0
    parts = []
    for i in range(1, rows + 1):
        parts.append(sum(1 for m in mu if m >= i) + (beyond[i - 1] if i <= len(beyond) else 0))
    try:
        return Partition(tuple(parts))
    except InvalidPartition:
        raise NotGrassmannian("inconsistent column data") from None


def grassmannian_to_partition(w: SignedPermutation, k: int) -> TypedKStrictPartition:
    if k < 0:
        raise InvalidPartition("k must be nonnegative")
    if not is_k_grassmannian(w, k):
        raise NotGrassmannian(f"{w} is not {k}-Grassmannian")
    n = max(w.rank, k)
    win = w.padded(n)
    if w.family is Family.A:
        lam = Partition(tuple(win[k - i] - (k + 1 - i) for i in range(1, k + 1)))
        return TypedKStrictPartition(lam, k, 0)
    u = [abs(x) for x in reversed(win[:k])]          # u_1 > ... > u_k
    zeta = sorted((-x for x in win[k:] if x < 0), reverse=True)
    mu = [u[i - 1] + i - k - 1 + sum(1 for z in zeta if z > u[i - 1]) for i in range(1, k + 1)]
    if w.family is Family.BC:
        return TypedKStrictPartition(_shape(mu, zeta), k, 0)
    lam = _shape(mu, [z - 1 for z in zeta])
    typ = 0
    if k in lam.parts:
        typ = 1 if win[0] > 0 else 2
    return TypedKStrictPartition(lam, k, typ)


def _from_data(k: int, mu: list[int], zeta: list[int], family: Family, barred_first: bool) -> SignedPermutation:
    zs = set(zeta)
    need = [mu[i - 1] - i + k + 1 for i in range(1, k + 1)]
    # f(u) = u + #{zeta > u} is increasing on the complement of zeta
    u = []
    for target in need:
        x, found = 0, None
        while x < target + len(zeta) + 1:
            x += 1
            if x in zs:
                continue
            fx = x + sum(1 for z in zeta if z > x)
            if fx == target:
                found = x
                break
            if fx > target:
                break
        if found is None:
            raise InvalidPartition("no Grassmannian element for this shape")
        u.append(found)
    used = set(u) | zs
    n = max(used, default=0)
    v = [x for x in range(1, n + 1) if x not in used]
    head = list(reversed(u))
    if barred_first and head:
        head[0] = -head[0]
    return SignedPermutation(family, tuple(head + [-z for z in zeta] + v))


def partition_to_grassmannian(lam: TypedKStrictPartition, family="BC") -> SignedPermutation:
    fam = Family.of(family)
    k = lam.k
    parts = lam.partition.parts
    if fam is Family.A:
        if len(parts) > k:
            raise InvalidPartition(f"{lam.partition} has more than {k} rows")
        vals = [lam.partition[k + 1 - j] + j for j in range(1, k + 1)]
        rest = [x for x in range(1, max(vals, default=0) + 1) if x not in vals]
        return SignedPermutation(fam, tuple(vals + rest))
    conj = lam.partition.conjugate()
    mu = [conj[j] for j in range(1, k + 1)]
    if fam is Family.BC:
        zeta = [p - k for p in parts if p > k]
        w = _from_data(k, mu, zeta, fam, False)
        if grassmannian_to_partition(w, k).partition != lam.partition:
            raise InvalidPartition(f"{lam} has no Grassmannian element")
        return w
    base = [p - k + 1 for p in parts if p > k]
    for zeta in (base, base + [1]):
        barred = len(zeta) % 2 == 1
        if k == 0 and barred:
            continue
        try:
            w = _from_data(k, mu, zeta, fam, barred)
        except (InvalidPartition, InvalidPermutation):
            continue
        if grassmannian_to_partition(w, k) == lam:
            return w
    raise InvalidPartition(f"{lam} is not a valid typed {k}-strict partition")


# -- enumeration ---------------------------------------------------------------

def partitions(n: int, max_part: int | None = None, max_len: int | None = None):
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first, None if max_len is None else max_len - 1):
            yield Partition((first,) + rest.parts)


def strict_partitions(n: int):
    return (p for p in partitions(n) if p.is_strict())


def k_strict_partitions(n: int, k: int):
    return (p for p in partitions(n) if p.is_k_strict(k))


def typed_k_strict_partitions(n: int, k: int):
    """Typed k-strict partitions of n: parts equal to k come in types 1 and 2."""
    for p in k_strict_partitions(n, k):
        if k in p.parts:
            yield TypedKStrictPartition(p, k, 1)
            yield TypedKStrictPartition(p, k, 2)
        else:
            yield TypedKStrictPartition(p, k, 0)
