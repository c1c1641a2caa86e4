"""
Signed permutations for the families A (symmetric groups), BC (hyperoctahedral
groups) and D (even signed permutations).

Elements are written in window notation, negative entries standing for barred
values, and are kept with trailing fixed points removed so that an element of
rank n and its image at rank n+1 compare equal.

Simple reflections act on the right on positions: for i >= 1, s_i swaps
positions i and i+1; in family BC, s_0 changes the sign of the first entry;
in family D, s_0 sends (u1, u2, ...) to (-u2, -u1, ...).

>>> w = SignedPermutation.parse("2,-1,3")
>>> w, w.length()
(SignedPermutation('BC', 2,-1), 2)
>>> [str(a) for a in reduced_words(w)]
['01']
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import permutations, product

from .errors import FamilyMismatch, InvalidPermutation, ParityViolation

__all__ = [
    "Family", "SignedPermutation", "ReducedWord",
    "length", "descent_set", "reduced_words", "count_reduced_words",
    "canonical_word", "is_reduced_word", "reflection_action",
    "cross_product", "phi_embed", "elements", "generators",
]


class Family(str, Enum):
    A = "A"
    BC = "BC"
    D = "D"

    @classmethod
    def of(cls, tag) -> "Family":
        if isinstance(tag, Family):
            return tag
        t = str(tag).upper()
        if t in ("B", "C"):
            return cls.BC
        try:
            return cls(t)
        except ValueError:
            raise FamilyMismatch(f"unknown family {tag!r}") from None

    def __str__(self):
        return self.value


def _strip(window) -> tuple[int, ...]:
    w = list(window)
    while w and w[-1] == len(w):
        w.pop()
    return tuple(w)


@dataclass(frozen=True)
class SignedPermutation:
    family: Family
    window: tuple[int, ...]

    def __post_init__(self):
        fam = Family.of(self.family)
        win = tuple(int(v) for v in self.window)
        if sorted(abs(v) for v in win) != list(range(1, len(win) + 1)):
            raise InvalidPermutation(f"{win} is not a signed permutation")
        negs = sum(v < 0 for v in win)
        if fam is Family.A and negs:
            raise FamilyMismatch(f"{win} has barred entries but family A")
        if fam is Family.D and negs % 2:
            raise ParityViolation(f"{win} has an odd number of barred entries")
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "window", _strip(win))

    # -- construction -------------------------------------------------------

    @classmethod
    def parse(cls, text: str, family="BC") -> "SignedPermutation":
        text = text.strip().strip("[]()")
        try:
            win = tuple(int(t) for t in text.split(",")) if text else ()
        except ValueError:
            raise InvalidPermutation(f"malformed window {text!r}") from None
        return cls(Family.of(family), win)

    @classmethod
    def identity(cls, family="BC") -> "SignedPermutation":
        return cls(Family.of(family), ())

    @classmethod
    def from_word(cls, word, family="BC") -> "SignedPermutation":
        w = cls.identity(family)
        for a in word:
            w = w.right_mul(a)
        return w

    # -- basic data ---------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.window)

    def padded(self, n: int) -> tuple[int, ...]:
        return self.window + tuple(range(self.rank + 1, n + 1))

    def __call__(self, i: int) -> int:
        if i < 0:
            return -self(-i)
        if i == 0:
            return 0
        return self.window[i - 1] if i <= self.rank else i

    def is_identity(self) -> bool:
        return not self.window

    @property
    def num_barred(self) -> int:
        """s(w): the number of barred entries."""
        return sum(v < 0 for v in self.window)

    def __str__(self):
        return ",".join(str(v) for v in self.window)

    def __repr__(self):
        return f"SignedPermutation({self.family.value!r}, {self})"

    def _new(self, window) -> "SignedPermutation":
        return SignedPermutation(self.family, tuple(window))

    def as_family(self, family) -> "SignedPermutation":
        return SignedPermutation(Family.of(family), self.window)

    # -- group structure ----------------------------------------------------

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """Composition (uv)(j) = u(v(j))."""
        if self.family is not other.family:
            raise FamilyMismatch("multiplying elements of different families")
        n = max(self.rank, other.rank)
        return self._new(self(other(j)) for j in range(1, n + 1))

    def inverse(self) -> "SignedPermutation":
        inv = [0] * self.rank
        for i, v in enumerate(self.window, 1):
            inv[abs(v) - 1] = i if v > 0 else -i
        return self._new(inv)

    def right_mul(self, i: int) -> "SignedPermutation":
        """w * s_i."""
        fam = self.family
        if i == 0:
            if fam is Family.A:
                raise InvalidPermutation("s_0 does not exist in family A")
            if fam is Family.BC:
                win = list(self.padded(1))
                win[0] = -win[0]
            else:
                win = list(self.padded(2))
                win[0], win[1] = -win[1], -win[0]
            return self._new(win)
        if i < 0:
            raise InvalidPermutation(f"no generator s_{i}")
        win = list(self.padded(i + 1))
        win[i - 1], win[i] = win[i], win[i - 1]
        return self._new(win)

    def left_mul(self, i: int) -> "SignedPermutation":
        """s_i * w."""
        s = SignedPermutation.identity(self.family).right_mul(i)
        return s * self

    # -- Coxeter data -------------------------------------------------------

    def length(self) -> int:
        return length(self)

    def descents(self) -> frozenset[int]:
        return descent_set(self)

    def is_increasing_up_to(self, k: int) -> bool:
        """No descents below k; in family D the condition is |w1| < w2 < ... < wk."""
        if self.family is Family.D and k <= 1:
            return True
        return all(d >= k for d in self.descents())

    def ascends_at(self, i: int) -> bool:
        """True when l(w s_i) = l(w) + 1."""
        w = self
        if i == 0:
            if w.family is Family.BC:
                return w(1) > 0
            return w(1) + w(2) > 0
        return w(i) < w(i + 1)


def length(w: SignedPermutation) -> int:
    """
    Coxeter length via inversions.

    >>> length(SignedPermutation.parse("3,2,1", "D"))
    3
    """
    win = w.window
    inv = sum(1 for i in range(len(win)) for j in range(i + 1, len(win)) if win[i] > win[j])
    if w.family is Family.A:
        return inv
    if w.family is Family.BC:
        return inv + sum(-v for v in win if v < 0)
    return inv + sum(-v - 1 for v in win if v < 0)


def descent_set(w: SignedPermutation) -> frozenset[int]:
    out = set()
    n = w.rank
    if w.family is Family.BC and n and w(1) < 0:
        out.add(0)
    if w.family is Family.D and n and w(1) + w(2) < 0:
        out.add(0)
    out.update(i for i in range(1, n) if w(i) > w(i + 1))
    return frozenset(out)


def generators(family, n: int) -> list[int]:
    """Indices of simple reflections of the rank-n group."""
    fam = Family.of(family)
    lo = 1 if fam is Family.A else 0
    if fam is Family.D and n < 2:
        return []
    return list(range(lo, n))


@dataclass(frozen=True)
class ReducedWord:
    letters: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def is_type(self, m: int) -> bool:
        """Word of type m: its last m letters are all nonzero."""
        return m <= 0 or all(a != 0 for a in self.letters[-m:])

    @classmethod
    def parse(cls, text: str) -> "ReducedWord":
        text = text.strip()
        if "," in text or " " in text:
            return cls(tuple(int(t) for t in text.replace(",", " ").split()))
        return cls(tuple(int(c) for c in text))

    def __str__(self):
        if any(a > 9 for a in self.letters):
            return ",".join(map(str, self.letters))
        return "".join(map(str, self.letters))


@lru_cache(maxsize=None)
def _words(w: SignedPermutation) -> tuple[tuple[int, ...], ...]:
    if w.is_identity():
        return ((),)
    out = []
    for d in sorted(w.descents()):
        out.extend(word + (d,) for word in _words(w.right_mul(d)))
    return tuple(sorted(out))


def reduced_words(w: SignedPermutation) -> list[ReducedWord]:
    """All reduced words, sorted lexicographically."""
    return [ReducedWord(t) for t in _words(w)]


@lru_cache(maxsize=None)
def count_reduced_words(w: SignedPermutation, m: int = 0) -> int:
    """Number of reduced words of w, restricted to those of type m when m > 0."""
    if w.is_identity():
        return 1
    return sum(count_reduced_words(w.right_mul(d), max(m - 1, 0))
               for d in w.descents() if not (m > 0 and d == 0))


def is_reduced_word(w: SignedPermutation, word) -> bool:
    letters = tuple(word)
    return (len(letters) == w.length()
            and SignedPermutation.from_word(letters, w.family) == w)


def canonical_word(w: SignedPermutation) -> ReducedWord:
    """The reduced word obtained by repeatedly splitting off the last descent."""
    letters = []
    while not w.is_identity():
        d = max(w.descents())
        letters.append(d)
        w = w.right_mul(d)
    return ReducedWord(tuple(reversed(letters)))


def reflection_action(w: SignedPermutation, kind: str, i: int, j: int) -> SignedPermutation:
    """
    Right action of t_ij (swap positions i, j) or of t-bar_ij (swap and negate
    both; for i = j negate entry i).

    >>> reflection_action(SignedPermutation.parse("2,1,3"), "t-bar", 1, 2)
    SignedPermutation('BC', -1,-2)
    """
    if not 1 <= i <= j:
        raise InvalidPermutation(f"need 1 <= i <= j, got {i}, {j}")
    win = list(w.padded(j))
    if kind == "t":
        win[i - 1], win[j - 1] = win[j - 1], win[i - 1]
    elif kind in ("t-bar", "tbar"):
        if w.family is Family.A:
            raise FamilyMismatch("t-bar reflections do not exist in family A")
        if i == j:
            if w.family is Family.D:
                raise ParityViolation("t-bar_ii is not in the even signed group")
            win[i - 1] = -win[i - 1]
        else:
            win[i - 1], win[j - 1] = -win[j - 1], -win[i - 1]
    else:
        raise ValueError(f"unknown reflection kind {kind!r}")
    return w._new(win)


def cross_product(w: SignedPermutation, v: SignedPermutation, n: int | None = None) -> SignedPermutation:
    """w x v = (w_1, ..., w_n, v_1 + n, ..., v_m + n) with n defaulting to the rank of w."""
    if v.family is not Family.A and v.num_barred:
        raise FamilyMismatch("the right factor of a cross product must be unsigned")
    n = w.rank if n is None else n
    if n < w.rank:
        raise InvalidPermutation("cross product rank below the rank of w")
    return w._new(w.padded(n) + tuple(x + n for x in v.window))


def phi_embed(w: SignedPermutation, n: int | None = None) -> SignedPermutation:
    """
    Embed W_n in S_2n; the image is centrosymmetric.

    >>> phi_embed(SignedPermutation.parse("-1,2"), 2)
    SignedPermutation('A', 1,3,2)
    """
    if w.family is not Family.BC:
        raise FamilyMismatch("phi is defined on the hyperoctahedral group")
    n = w.rank if n is None else n
    if n < w.rank:
        raise InvalidPermutation("rank too small")
    win = w.padded(n)
    img = [0] * (2 * n)
    for i in range(1, n + 1):
        v = win[n - i]
        img[i - 1] = n + 1 - v if v > 0 else n - v
    for i in range(1, n + 1):
        img[2 * n - i] = 2 * n + 1 - img[i - 1]
    return SignedPermutation(Family.A, tuple(img))


def elements(family, n: int):
    """All elements of the rank-n group, in a fixed order."""
    fam = Family.of(family)
    for perm in permutations(range(1, n + 1)):
        if fam is Family.A:
            yield SignedPermutation(fam, perm)
            continue
        for signs in product((1, -1), repeat=n):
            if fam is Family.D and signs.count(-1) % 2:
                continue
            yield SignedPermutation(fam, tuple(s * p for s, p in zip(signs, perm)))
