"""
k-transition trees for the hyperoctahedral group (family BC) and the even
signed permutation group (family D).

At a node w with last descent r (not a stopping node), let s be the largest
position after r with w_s < w_r and v = w t_rs.  The children are the
elements v t_ir (1 <= i < r) and v tbar_ir (i >= 1; in family D, i != r)
whose length equals that of w.  Leaves are k-Grassmannian, and counting
leaves by shape gives the mixed Stanley coefficients.

>>> from schubsplit.weyl import SignedPermutation
>>> mixed_coeffs(SignedPermutation.parse("3,-1,2,5,4"), 1).simple()
{(4,): Dyadic(1), (3, 1): Dyadic(2), (2, 1, 1): Dyadic(1)}
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import FamilyMismatch, InvalidPartition, InvalidPermutation, StopNode
from .partitions import (Partition, TypedKStrictPartition, grassmannian_to_partition,
                         partition_to_grassmannian, sort_key)
from .symfunc import BasisExpansion
from .weyl import Family, SignedPermutation, cross_product, reflection_action

__all__ = [
    "TransitionTree", "is_stop_node", "transition_children", "transition_tree",
    "mixed_coeffs", "theta_product", "skew_q_expansion", "last_descent",
]


def last_descent(w: SignedPermutation) -> int | None:
    d = w.descents()
    return max(d) if d else None


def is_stop_node(w: SignedPermutation, k: int) -> bool:
    r = last_descent(w)
    if r is None:
        return True
    if w.family is Family.D and k == 1:
        return r in (0, 1)
    return r == k


def _check(w: SignedPermutation, k: int):
    if w.family is Family.A:
        raise FamilyMismatch("transition trees are defined for families BC and D")
    if k < 0:
        raise InvalidPermutation("k must be nonnegative")
    if not w.is_increasing_up_to(k):
        raise InvalidPermutation(f"{w} is not increasing up to {k}")


def transition_children(w: SignedPermutation, k: int, extra: int = 1) -> list[SignedPermutation]:
    """
    Children of w in the k-transition tree, sorted by window.  Candidates
    for the second kind of child range over positions up to rank + `extra`.
    """
    _check(w, k)
    if is_stop_node(w, k):
        raise StopNode(f"{w} is a stopping node for k={k}")
    return list(_children(w, k, extra))


@lru_cache(maxsize=None)
def _children(w: SignedPermutation, k: int, extra: int = 1) -> tuple[SignedPermutation, ...]:
    r = last_descent(w)
    n = w.rank
    s = max(i for i in range(r + 1, n + 1) if w(i) < w(r))
    v = reflection_action(w, "t", r, s)
    ell = w.length()
    out = set()
    for i in range(1, r):
        c = reflection_action(v, "t", i, r)
        if c.length() == ell:
            out.add(c)
    for i in range(1, n + extra + 1):
        if w.family is Family.D and i == r:
            continue
        c = reflection_action(v, "t-bar", min(i, r), max(i, r))
        if c.length() == ell:
            out.add(c)
    return tuple(sorted(out, key=lambda c: (c.rank, c.window)))


@dataclass
class TransitionTree:
    root: SignedPermutation
    k: int
    nodes: dict = field(default_factory=dict)
    leaves: Counter = field(default_factory=Counter)

    def leaf_nodes(self):
        return [w for w, ch in self.nodes.items() if not ch]

    def to_dot(self) -> str:
        lines = ["digraph transition {"]
        for w in sorted(self.nodes, key=lambda c: (c.rank, c.window)):
            label = str(w) or "id"
            if not self.nodes[w]:
                label += "\\n" + str(grassmannian_to_partition(w, self.k))
            lines.append(f'  "{w}" [label="{label}"];')
        for w in sorted(self.nodes, key=lambda c: (c.rank, c.window)):
            for c in self.nodes[w]:
                lines.append(f'  "{w}" -> "{c}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def _leaf_counts(w: SignedPermutation, k: int) -> tuple:
    if is_stop_node(w, k):
        return ((grassmannian_to_partition(w, k), 1),)
    total: Counter = Counter()
    for c in _children(w, k):
        for lam, m in _leaf_counts(c, k):
            total[lam] += m
    return tuple(sorted(total.items(), key=lambda kv: sort_key(kv[0])))


def transition_tree(w: SignedPermutation, k: int) -> TransitionTree:
    _check(w, k)
    nodes: dict = {}
    stack = [w]
    while stack:
        x = stack.pop()
        if x in nodes:
            continue
        ch = () if is_stop_node(x, k) else _children(x, k)
        nodes[x] = list(ch)
        stack.extend(ch)
    return TransitionTree(w, k, nodes, Counter(dict(_leaf_counts(w, k))))


def mixed_coeffs(w: SignedPermutation, k: int) -> BasisExpansion:
    """Leaf counts by shape: the theta coefficients (BC) or formal eta coefficients (D)."""
    _check(w, k)
    basis = "theta" if w.family is Family.BC else "eta-formal"
    return BasisExpansion(basis, dict(_leaf_counts(w, k)))


def _as_typed(lam, k: int) -> TypedKStrictPartition:
    if isinstance(lam, TypedKStrictPartition):
        return lam
    return TypedKStrictPartition(Partition(tuple(lam)), k)


def theta_product(mu, nu, k: int) -> BasisExpansion:
    """Theta_mu * Theta_nu for nu with all parts <= k, read off one transition tree."""
    mu, nu = _as_typed(mu, k), _as_typed(nu, k)
    if mu.k != k or nu.k != k:
        raise InvalidPartition("both partitions must be k-strict for the given k")
    if any(p > k for p in nu.parts):
        raise InvalidPartition(f"the parts of {nu.partition} must not exceed k={k}")
    wmu = partition_to_grassmannian(mu, "BC")
    wnu = partition_to_grassmannian(nu, "BC")
    return mixed_coeffs(cross_product(wmu, wnu), k)


def skew_q_expansion(lam, mu) -> BasisExpansion:
    """The coefficients f^lam_{mu nu}, keyed by nu; empty unless mu is inside lam."""
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    mu = mu if isinstance(mu, Partition) else Partition(tuple(mu))
    if not (lam.is_strict() and mu.is_strict()):
        raise InvalidPartition("skew Q expansions need strict partitions")
    if not lam.contains(mu):
        return BasisExpansion("schur-p", {})
    wl = partition_to_grassmannian(TypedKStrictPartition(lam, 0), "BC")
    wm = partition_to_grassmannian(TypedKStrictPartition(mu, 0), "BC")
    x = wl * wm.inverse()
    if x.length() != lam.weight - mu.weight:
        raise InvalidPermutation(f"lengths are not additive for {lam}/{mu}")
    return BasisExpansion("schur-p", dict(_leaf_counts(x, 0)))
