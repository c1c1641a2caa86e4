"""
Reduced factorizations compatible with descent sequences, the splitting
coefficients built from them, and the resulting Giambelli-type expansions
of Schubert polynomials.

A descent sequence ``a = (a_1 < ... < a_p)`` cuts the y-alphabet into blocks
``Y_i = {y_{a_{i-1}+1}, ..., y_{a_i}}``; an optional ``b = (0 = b_1 < ... < b_q)``
does the same for z.  The factor that carries the x-variables sits in
position q (position 1 for single polynomials); all other factors are
unsigned permutations, those to its right fixing 1..a_{j-q} and those to
its left fixing 1..b_{q-j}.

>>> from schubsplit.weyl import SignedPermutation
>>> split = split_coeffs(SignedPermutation.parse("3,2,1"), DescentSequence((1, 2)))
>>> [(tuple(map(str, key)), int(c)) for key, c in split.items()]
[(('(2,1)', '()'), 1), (('(1,1)', '(1)'), 1)]
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache

from .errors import FamilyMismatch, Incompatible, NeedsMoreVariables
from .nilcox import stanley
from .partitions import Partition, TypedKStrictPartition, sort_key
from .polyalg import Polynomial, VariableSpace
from .symfunc import expand_in_basis, schur, theta
from .transition import mixed_coeffs
from .weyl import Family, SignedPermutation

__all__ = [
    "DescentSequence", "SplitExpansion", "compatible_factorizations",
    "split_coeffs", "split_coeffs_by_parts", "giambelli_expansion",
    "stanley_schur_coeffs", "y_block", "z_block",
]


@dataclass(frozen=True)
class DescentSequence:
    a: tuple[int, ...]
    b: tuple[int, ...] | None = None

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        if not a or any(x < 0 for x in a) or any(a[i] >= a[i + 1] for i in range(len(a) - 1)):
            raise Incompatible(f"{a} is not a strictly increasing sequence of naturals")
        object.__setattr__(self, "a", a)
        if self.b is not None:
            b = tuple(int(x) for x in self.b)
            if not b or b[0] != 0 or any(b[i] >= b[i + 1] for i in range(len(b) - 1)):
                raise Incompatible(f"{b} must start at 0 and increase strictly")
            object.__setattr__(self, "b", b)

    @property
    def p(self) -> int:
        return len(self.a)

    @property
    def q(self) -> int:
        return len(self.b) if self.b is not None else 1

    @property
    def arity(self) -> int:
        return self.p + self.q - 1

    def __str__(self):
        out = "a=(" + ",".join(map(str, self.a)) + ")"
        if self.b is not None:
            out += " b=(" + ",".join(map(str, self.b)) + ")"
        return out


def y_block(seq: DescentSequence, i: int) -> list[tuple[str, int]]:
    """Variables of Y_i (1-based)."""
    lo = seq.a[i - 2] if i > 1 else 0
    return [("y", j) for j in range(lo + 1, seq.a[i - 1] + 1)]


def z_block(seq: DescentSequence, j: int) -> list[tuple[str, int]]:
    """Variables of Z_j (1-based); Z_1 is empty."""
    if j <= 1:
        return []
    return [("z", t) for t in range(seq.b[j - 2] + 1, seq.b[j - 1] + 1)]


class SplitExpansion(dict):
    """Map from tuples of partitions to coefficients, iterated in a fixed order."""

    def __init__(self, terms=None, position: int = 1):
        super().__init__()
        self.position = position
        for key in sorted(terms or {}, key=self._order):
            if terms[key]:
                self[key] = terms[key]

    def _order(self, key):
        return tuple(sort_key(lam) for lam in key)

    def total_weight_ok(self, length: int) -> bool:
        return all(sum(lam.weight for lam in key) == length for key in self)


def _unsigned(w: SignedPermutation) -> bool:
    return w.num_barred == 0


def _peel_right(w: SignedPermutation, lo: int):
    """All (x, v): x v = w reduced, v generated by s_i with i > lo."""
    seen = set()
    stack = [(w, SignedPermutation.identity(w.family))]
    while stack:
        x, v = stack.pop()
        if (x, v) in seen:
            continue
        seen.add((x, v))
        for d in x.descents():
            if d > lo:
                stack.append((x.right_mul(d), v.left_mul(d)))
    return seen


def _peel_left(w: SignedPermutation, lo: int):
    """All (v, x): v x = w reduced, v generated by s_i with i > lo."""
    return {(v.inverse(), x.inverse()) for x, v in _peel_right(w.inverse(), lo)}


def _allowed_descents(w: SignedPermutation, a: tuple[int, ...]) -> set[int]:
    allowed = set(a)
    # in family D the generators s_0 and s_1 both sit at position 1
    if w.family is Family.D and a[0] == 1:
        allowed.add(0)
    return allowed


def _check_compatible(w: SignedPermutation, seq: DescentSequence):
    if not w.descents() <= _allowed_descents(w, seq.a):
        raise Incompatible(f"descents {sorted(w.descents())} of {w} are not among {seq.a}")
    if seq.b is not None and not w.inverse().descents() <= set(seq.b):
        raise Incompatible(f"descents of the inverse of {w} are not among {seq.b}")


def compatible_factorizations(w: SignedPermutation, seq: DescentSequence):
    """
    Reduced factorizations compatible with `seq` whose factors other than the
    distinguished one (position q) are unsigned.  Returned as tuples of
    SignedPermutation in a deterministic order.
    """
    _check_compatible(w, seq)
    a, q = seq.a, seq.q
    b = seq.b or (0,)
    # right factors u_{q+1}, ..., u_{p+q-1}
    partial = [(w, ())]
    for j in range(seq.p - 1, 0, -1):
        nxt = []
        for x, tail in partial:
            for x2, v in _peel_right(x, a[j - 1]):
                nxt.append((x2, (v,) + tail))
        partial = nxt
    # left factors u_1, ..., u_{q-1}; u_j fixes 1..b_{q-j}
    out = []
    for x, tail in partial:
        heads = [((), x)]
        for j in range(1, q):
            nxt = []
            for head, rest in heads:
                for v, r2 in _peel_left(rest, b[q - j - 1]):
                    nxt.append((head + (v,), r2))
            heads = nxt
        for head, middle in heads:
            out.append(head + (middle,) + tail)
    out = [f for f in out if all(_unsigned(u) for i, u in enumerate(f) if i != q - 1)]
    return sorted(set(out), key=lambda f: tuple((u.length(), u.window) for u in f))


def _shift_down(u: SignedPermutation) -> SignedPermutation:
    """Strip leading fixed points: 1_m x v -> v."""
    win = u.window
    m = 0
    while m < len(win) and win[m] == m + 1:
        m += 1
    return SignedPermutation(Family.A, tuple(x - m for x in win[m:]))


@lru_cache(maxsize=None)
def _schur_coeffs(v: SignedPermutation) -> tuple:
    n = v.length()
    if n == 0:
        return ((Partition(), 1),)
    sp = VariableSpace(ny=n)
    g = stanley(v, "G", sp, sym=True)
    exp = expand_in_basis(g, "schur-s", n, axis="y")
    return tuple((lam, int(c)) for lam, c in exp.terms.items())


def stanley_schur_coeffs(u: SignedPermutation) -> dict[Partition, int]:
    """The Schur expansion coefficients of the type A Stanley function of u."""
    if not _unsigned(u):
        raise FamilyMismatch(f"{u} is not an unsigned permutation")
    return dict(_schur_coeffs(_shift_down(u)))


def _first_coeffs(u: SignedPermutation, k: int) -> dict:
    if u.family is Family.A:
        return stanley_schur_coeffs(u)
    return {lam: int(c) for lam, c in mixed_coeffs(u, k).terms.items()}


def split_coeffs(w: SignedPermutation, seq: DescentSequence) -> SplitExpansion:
    """Sum over compatible factorizations of products of the factor coefficients."""
    q = seq.q
    total: dict[tuple, int] = defaultdict(int)
    for fact in compatible_factorizations(w, seq):
        pieces = []
        for i, u in enumerate(fact):
            if i == q - 1:
                pieces.append(_first_coeffs(u, seq.a[0]))
            else:
                pieces.append(stanley_schur_coeffs(u))
        combos = [((), 1)]
        for piece in pieces:
            combos = [(key + (lam,), c * m) for key, c in combos for lam, m in piece.items()]
        for key, c in combos:
            total[key] += c
    return SplitExpansion(total, q)


def split_coeffs_by_parts(w: SignedPermutation, seq: DescentSequence) -> SplitExpansion:
    """
    Same numbers for single sequences, organised differently: split w = u v
    with v an unsigned right factor fixing 1..a_1, then split v recursively
    with the remaining sequence (a grove count taken one tree at a time).
    """
    if seq.b is not None:
        raise Incompatible("the alternative count covers single sequences only")
    _check_compatible(w, seq)
    a = seq.a
    total: dict[tuple, int] = defaultdict(int)
    if len(a) == 1:
        for lam, c in _first_coeffs(w, a[0]).items():
            total[(lam,)] += c
        return SplitExpansion(total)
    for u, v in _peel_right(w, a[0]):
        if not _unsigned(v):
            continue
        head = _first_coeffs(u, a[0])
        rest = _type_a_split(v.as_family(Family.A), a[1:])
        for lam, c in head.items():
            for key, m in rest.items():
                total[(lam,) + key] += c * m
    return SplitExpansion(total)


def _type_a_split(v: SignedPermutation, a: tuple[int, ...]) -> dict:
    """Type A splitting of v fixing 1..a_0 - 1 along the blocks of a."""
    out: dict[tuple, int] = defaultdict(int)
    if len(a) == 1:
        for lam, c in stanley_schur_coeffs(v).items():
            out[(lam,)] += c
        return out
    for u, rest in _peel_right(v, a[0]):
        for lam, c in stanley_schur_coeffs(u).items():
            for key, m in _type_a_split(rest, a[1:]).items():
                out[(lam,) + key] += c * m
    return out


def giambelli_expansion(w: SignedPermutation, seq: DescentSequence, space: VariableSpace) -> Polynomial:
    """
    The polynomial sum of coefficient * Theta(X; Y_1) * prod s(Y_i) (times
    s(0/Z_j) factors for double sequences).  In family A the first factor is
    a Schur polynomial in Y_1 as well.  Family D has no polynomial value here.
    """
    if w.family is Family.D:
        raise FamilyMismatch("eta polynomials are formal; compare split_coeffs instead")
    split = split_coeffs(w, seq)
    q = seq.q
    if seq.a[-1] > space.ny or (seq.b is not None and seq.b[-1] > space.nz):
        raise NeedsMoreVariables("variable space too small for the descent sequence")
    total = Polynomial.zero(space)
    for key, c in split.items():
        term = Polynomial.one(space)
        for i, lam in enumerate(key, start=1):
            if i < q:
                zs = z_block(seq, q + 1 - i)
                term = term * schur(lam.parts, space, plus=None, minus=zs)
            elif i == q:
                if w.family is Family.A:
                    term = term * schur(lam.parts, space, plus=y_block(seq, 1))
                else:
                    term = term * theta(lam.parts, seq.a[0], space, y_slots=y_block(seq, 1))
            else:
                term = term * schur(lam.parts, space, plus=y_block(seq, i - q + 1))
        total = total + term * c
    return total
