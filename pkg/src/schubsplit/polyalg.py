"""
Exact sparse multivariate polynomials with coefficients in Z[1/2].

Variables come in three alphabets ``x``, ``y`` and ``z``; a `VariableSpace`
fixes how many of each are in play.  A `Polynomial` stores its terms as a map
from dense exponent tuples (x-block, then y-block, then z-block) to Python
integers, together with one common power-of-two denominator.  That is the
whole of the dyadic arithmetic: every denominator that occurs in this package
is a power of two.

A polynomial may also be held in *symmetric form* along one alphabet
(``sym="x"``): only monomials whose exponents on that alphabet are weakly
decreasing are stored.  This is lossless for polynomials that are symmetric in
that alphabet and is what makes computations with many x-variables tractable.

>>> sp = VariableSpace(nx=1, ny=1)
>>> x1, y1 = Polynomial.variable("x", 1, sp), Polynomial.variable("y", 1, sp)
>>> print((x1 + y1) * (x1 - y1))
x1^2 - y1^2
>>> print((x1 + y1).restrict(1, 1))
y1
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
import re

from .errors import InvalidRange, SymmetryError

__all__ = [
    "AXES", "Dyadic", "VariableSpace", "Monomial", "Polynomial",
    "coefficient_of", "poly_arith", "restrict",
]

AXES = ("x", "y", "z")


def _twos(n: int) -> int:
    """Number of trailing zero bits of a nonzero integer."""
    return (n & -n).bit_length() - 1


@dataclass(frozen=True)
class Dyadic:
    """The number ``numerator / 2**exponent``, kept in lowest terms."""
    numerator: int
    exponent: int = 0

    def __post_init__(self):
        n, e = int(self.numerator), int(self.exponent)
        if e < 0:
            n, e = n << -e, 0
        if n == 0:
            e = 0
        elif e:
            s = min(_twos(n), e)
            n, e = n >> s, e - s
        object.__setattr__(self, "numerator", n)
        object.__setattr__(self, "exponent", e)

    @classmethod
    def of(cls, value) -> "Dyadic":
        if isinstance(value, Dyadic):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a coefficient")
        if isinstance(value, int):
            return cls(value)
        if isinstance(value, Fraction):
            d = value.denominator
            if d & (d - 1):
                raise ValueError(f"{value} is not dyadic")
            return cls(value.numerator, d.bit_length() - 1)
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"cannot make a dyadic rational from {value!r}")

    @classmethod
    def parse(cls, text: str) -> "Dyadic":
        m = re.fullmatch(r"\s*(-?\d+)(?:\s*/\s*2\^(\d+))?\s*", text)
        if not m:
            raise ValueError(f"malformed dyadic {text!r}")
        return cls(int(m.group(1)), int(m.group(2) or 0))

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def is_integer(self) -> bool:
        return self.exponent == 0

    def __int__(self):
        if self.exponent:
            raise ValueError(f"{self} is not an integer")
        return self.numerator

    def __bool__(self):
        return self.numerator != 0

    def _align(self, other):
        o = Dyadic.of(other)
        e = max(self.exponent, o.exponent)
        return self.numerator << (e - self.exponent), o.numerator << (e - o.exponent), e

    def __add__(self, other):
        a, b, e = self._align(other)
        return Dyadic(a + b, e)

    __radd__ = __add__

    def __sub__(self, other):
        a, b, e = self._align(other)
        return Dyadic(a - b, e)

    def __rsub__(self, other):
        return Dyadic.of(other) - self

    def __neg__(self):
        return Dyadic(-self.numerator, self.exponent)

    def __mul__(self, other):
        o = Dyadic.of(other)
        return Dyadic(self.numerator * o.numerator, self.exponent + o.exponent)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            o = Dyadic.of(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.numerator == o.numerator and self.exponent == o.exponent

    def __lt__(self, other):
        return self.to_fraction() < Dyadic.of(other).to_fraction()

    def __hash__(self):
        return hash(self.to_fraction())

    def __str__(self):
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/2^{self.exponent}"

    def __repr__(self):
        return f"Dyadic({self})"


@dataclass(frozen=True)
class VariableSpace:
    """Finite instantiation of the alphabets: x1..x_nx, y1..y_ny, z1..z_nz."""
    nx: int = 0
    ny: int = 0
    nz: int = 0

    def __post_init__(self):
        if min(self.nx, self.ny, self.nz) < 0:
            raise ValueError("variable counts must be nonnegative")

    @property
    def size(self) -> int:
        return self.nx + self.ny + self.nz

    def count(self, axis: str) -> int:
        return {"x": self.nx, "y": self.ny, "z": self.nz}[axis]

    def block(self, axis: str) -> tuple[int, int]:
        """Half-open slot range of one alphabet inside an exponent tuple."""
        if axis == "x":
            return 0, self.nx
        if axis == "y":
            return self.nx, self.nx + self.ny
        if axis == "z":
            return self.nx + self.ny, self.size
        raise ValueError(f"unknown alphabet {axis!r}")

    def slot(self, axis: str, index: int) -> int:
        lo, hi = self.block(axis)
        if not 1 <= index <= hi - lo:
            raise IndexError(f"{axis}{index} is not in {self}")
        return lo + index - 1

    def variable_at(self, slot: int) -> tuple[str, int]:
        for axis in AXES:
            lo, hi = self.block(axis)
            if lo <= slot < hi:
                return axis, slot - lo + 1
        raise IndexError(slot)

    def join(self, other: "VariableSpace") -> "VariableSpace":
        return VariableSpace(max(self.nx, other.nx), max(self.ny, other.ny), max(self.nz, other.nz))

    def with_count(self, axis: str, n: int) -> "VariableSpace":
        counts = {"x": self.nx, "y": self.ny, "z": self.nz}
        counts[axis] = n
        return VariableSpace(counts["x"], counts["y"], counts["z"])

    def __str__(self):
        return f"VariableSpace(nx={self.nx}, ny={self.ny}, nz={self.nz})"


_VAR_RE = re.compile(r"([xyz])(\d+)(?:\^(\d+))?")


@dataclass(frozen=True)
class Monomial:
    """
    A product of variables, e.g. ``Monomial.parse("x1^2*y3")``.

    `powers` holds ``(axis, index, exponent)`` triples with positive exponents,
    in variable order.
    """
    powers: tuple[tuple[str, int, int], ...] = ()

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        text = text.strip()
        if text in ("", "1"):
            return cls()
        acc: dict[tuple[str, int], int] = defaultdict(int)
        for factor in text.split("*"):
            m = _VAR_RE.fullmatch(factor.strip())
            if not m or int(m.group(2)) < 1:
                raise ValueError(f"malformed monomial {text!r}")
            acc[m.group(1), int(m.group(2))] += int(m.group(3) or 1)
        return cls._from_map(acc)

    @classmethod
    def _from_map(cls, acc) -> "Monomial":
        items = sorted(((a, i, e) for (a, i), e in acc.items() if e),
                       key=lambda t: (AXES.index(t[0]), t[1]))
        return cls(tuple(items))

    @classmethod
    def from_exponents(cls, space: VariableSpace, exps: tuple[int, ...]) -> "Monomial":
        acc = {}
        for slot, e in enumerate(exps):
            if e:
                acc[space.variable_at(slot)] = e
        return cls._from_map(acc)

    def exponents(self, space: VariableSpace) -> tuple[int, ...]:
        out = [0] * space.size
        for axis, index, e in self.powers:
            out[space.slot(axis, index)] = e
        return tuple(out)

    def fits(self, space: VariableSpace) -> bool:
        return all(i <= space.count(a) for a, i, _ in self.powers)

    @property
    def degree(self) -> int:
        return sum(e for _, _, e in self.powers)

    def __str__(self):
        if not self.powers:
            return "1"
        return "*".join(f"{a}{i}" + (f"^{e}" if e > 1 else "") for a, i, e in self.powers)


def _mono_text(space: VariableSpace, exps: tuple[int, ...]) -> str:
    parts = []
    for slot, e in enumerate(exps):
        if e:
            a, i = space.variable_at(slot)
            parts.append(f"{a}{i}" + (f"^{e}" if e > 1 else ""))
    return "*".join(parts)


def _is_weakly_decreasing(seq) -> bool:
    return all(seq[i] >= seq[i + 1] for i in range(len(seq) - 1))


def _dominant_vectors(total: int, n: int, cap: int | None = None):
    """Weakly decreasing nonnegative vectors of length n summing to `total`."""
    if cap is None:
        cap = total
    if n == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, cap), -1, -1):
        if first * n < total:
            break
        for rest in _dominant_vectors(total - first, n - 1, first):
            yield (first,) + rest


def _below(mu: tuple[int, ...], total: int):
    """Vectors a with 0 <= a <= mu componentwise and sum(a) == total."""
    n = len(mu)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + mu[i]
    out: list[int] = [0] * n

    def rec(i, left):
        if i == n:
            if left == 0:
                yield tuple(out)
            return
        lo = max(0, left - suffix[i + 1])
        for v in range(lo, min(mu[i], left) + 1):
            out[i] = v
            yield from rec(i + 1, left - v)
        out[i] = 0

    yield from rec(0, total)


def _sym_mul(a: dict, b: dict, space: VariableSpace, axis: str) -> dict:
    """Dominant part of the product of two polynomials symmetric along `axis`."""
    lo, hi = space.block(axis)
    n = hi - lo
    ga: dict[tuple, dict] = defaultdict(dict)
    gb: dict[tuple, dict] = defaultdict(dict)
    for src, dst in ((a, ga), (b, gb)):
        for m, c in src.items():
            rest = m[:lo] + (0,) * n + m[hi:]
            dst[m[lo:hi]][rest] = c
    da = {sum(k) for k in ga}
    db = {sum(k) for k in gb}
    out: dict[tuple, int] = defaultdict(int)
    for d1 in da:
        for d2 in db:
            for mu in _dominant_vectors(d1 + d2, n):
                for part in _below(mu, d1):
                    ka = tuple(sorted(part, reverse=True))
                    pa = ga.get(ka)
                    if pa is None:
                        continue
                    kb = tuple(sorted((m - p for m, p in zip(mu, part)), reverse=True))
                    pb = gb.get(kb)
                    if pb is None:
                        continue
                    for ra, ca in pa.items():
                        for rb, cb in pb.items():
                            mono = tuple(x + y for x, y in zip(ra, rb))
                            mono = mono[:lo] + mu + mono[hi:]
                            out[mono] += ca * cb
    return {m: c for m, c in out.items() if c}


class Polynomial:
    """
    Immutable polynomial ``sum(c * m) / 2**shift`` over a `VariableSpace`.

    Terms are integers keyed by exponent tuples; `shift` is the common
    power-of-two denominator, normalised so that it is zero or some
    coefficient is odd.  `sym` names an alphabet along which only dominant
    monomials are stored (see the module docstring), or is ``None``.
    """

    __slots__ = ("space", "sym", "_terms", "_shift", "_hash")

    def __init__(self, space: VariableSpace, terms=None, shift: int = 0, sym: str | None = None):
        terms = {m: c for m, c in (terms or {}).items() if c}
        if shift < 0:
            terms = {m: c << -shift for m, c in terms.items()}
            shift = 0
        if shift and terms:
            s = min(min(_twos(c) for c in terms.values()), shift)
            if s:
                terms = {m: c >> s for m, c in terms.items()}
                shift -= s
        if not terms:
            shift = 0
        if sym is not None and space.count(sym) == 0:
            sym = None
        self.space = space
        self.sym = sym
        self._terms = terms
        self._shift = shift
        self._hash = None

    # -- construction -------------------------------------------------------

    @classmethod
    def zero(cls, space: VariableSpace, sym: str | None = None) -> "Polynomial":
        return cls(space, {}, 0, sym)

    @classmethod
    def constant(cls, value, space: VariableSpace, sym: str | None = None) -> "Polynomial":
        d = Dyadic.of(value)
        return cls(space, {(0,) * space.size: d.numerator}, d.exponent, sym)

    @classmethod
    def one(cls, space: VariableSpace, sym: str | None = None) -> "Polynomial":
        return cls.constant(1, space, sym)

    @classmethod
    def variable(cls, axis: str, index: int, space: VariableSpace) -> "Polynomial":
        exps = [0] * space.size
        exps[space.slot(axis, index)] = 1
        return cls(space, {tuple(exps): 1})

    @classmethod
    def from_terms(cls, mapping, space: VariableSpace | None = None, sym: str | None = None) -> "Polynomial":
        """Build from ``{monomial: coefficient}``; keys may be strings like ``"x1^2*y1"``."""
        monos = {(Monomial.parse(k) if isinstance(k, str) else k): Dyadic.of(v)
                 for k, v in mapping.items()}
        if space is None:
            need = {a: 0 for a in AXES}
            for m in monos:
                for a, i, _ in m.powers:
                    need[a] = max(need[a], i)
            space = VariableSpace(need["x"], need["y"], need["z"])
        shift = max((d.exponent for d in monos.values()), default=0)
        terms: dict[tuple, int] = defaultdict(int)
        for m, d in monos.items():
            terms[m.exponents(space)] += d.numerator << (shift - d.exponent)
        return cls(space, terms, shift, sym)

    # -- inspection ---------------------------------------------------------

    @property
    def shift(self) -> int:
        return self._shift

    def raw_terms(self) -> dict[tuple[int, ...], int]:
        """Integer numerators keyed by exponent tuple (denominator ``2**shift``)."""
        return dict(self._terms)

    def _sorted_keys(self):
        return sorted(self._terms, key=lambda m: (sum(m), m), reverse=True)

    @property
    def terms(self) -> dict[Monomial, Dyadic]:
        """Coefficients in graded lexicographic order (highest first)."""
        return {Monomial.from_exponents(self.space, m): Dyadic(self._terms[m], self._shift)
                for m in self._sorted_keys()}

    def coefficient(self, mono) -> Dyadic:
        if isinstance(mono, str):
            mono = Monomial.parse(mono)
        if not mono.fits(self.space):
            return Dyadic(0)
        return Dyadic(self._terms.get(mono.exponents(self.space), 0), self._shift)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(m) for m in self._terms}
        if degree is None:
            return len(degs) <= 1
        return degs <= {degree}

    def uses(self, axis: str) -> bool:
        lo, hi = self.space.block(axis)
        return any(any(m[lo:hi]) for m in self._terms)

    def is_symmetric(self, axis: str) -> bool:
        """Full-form check that every transposition of the alphabet fixes the polynomial."""
        if self.sym == axis:
            return True
        lo, hi = self.space.block(axis)
        for i in range(lo, hi - 1):
            for m, c in self._terms.items():
                sw = list(m)
                sw[i], sw[i + 1] = sw[i + 1], sw[i]
                if self._terms.get(tuple(sw), 0) != c:
                    return False
        return True

    # -- coercion -----------------------------------------------------------

    def embed(self, space: VariableSpace) -> "Polynomial":
        """Re-home the polynomial in a space with at least as many variables per alphabet."""
        if space == self.space:
            return self
        for axis in AXES:
            if self.uses_beyond(axis, space.count(axis)):
                raise ValueError(f"{self.space} does not embed into {space}")
        if self.sym and space.count(self.sym) != self.space.count(self.sym) and self.uses(self.sym):
            raise SymmetryError("changing the size of a symmetric alphabet")
        blocks = [(self.space.block(a), space.count(a)) for a in AXES]
        terms = {}
        for m, c in self._terms.items():
            new = []
            for (lo, hi), n in blocks:
                seg = m[lo:hi][:n]
                new.extend(seg)
                new.extend((0,) * (n - len(seg)))
            terms[tuple(new)] = c
        return Polynomial(space, terms, self._shift, self.sym)

    def uses_beyond(self, axis: str, n: int) -> bool:
        lo, hi = self.space.block(axis)
        return any(any(m[lo + n:hi]) for m in self._terms)

    def set_count(self, axis: str, n: int) -> "Polynomial":
        """
        Change the number of variables in one alphabet.  Shrinking sets the
        dropped variables to zero; growing a symmetric alphabet is refused
        (new variables would need new dominant monomials).
        """
        old = self.space.count(axis)
        if n == old:
            return self
        space = self.space.with_count(axis, n)
        lo, hi = self.space.block(axis)
        if n > old and self.sym == axis and self.uses(axis):
            raise SymmetryError("cannot grow a symmetric alphabet in place")
        terms = {}
        for m, c in self._terms.items():
            seg = m[lo:hi]
            if n < old:
                if any(seg[n:]):
                    continue
                seg = seg[:n]
            else:
                seg = seg + (0,) * (n - old)
            terms[m[:lo] + seg + m[hi:]] = c
        return Polynomial(space, terms, self._shift, self.sym)

    def to_symmetric(self, axis: str = "x", check: bool = True) -> "Polynomial":
        """Keep only the dominant monomials along `axis`."""
        if self.sym == axis:
            return self
        if self.sym is not None:
            raise SymmetryError("already symmetric along another alphabet")
        if check and not self.is_symmetric(axis):
            raise SymmetryError(f"polynomial is not symmetric in {axis}")
        lo, hi = self.space.block(axis)
        terms = {m: c for m, c in self._terms.items() if _is_weakly_decreasing(m[lo:hi])}
        return Polynomial(self.space, terms, self._shift, axis)

    def _pair(self, other: "Polynomial"):
        """Bring two polynomials into one space and one storage form."""
        a, b = self, other
        if a.sym and b.sym and a.sym != b.sym:
            raise SymmetryError("polynomials stored along different symmetric alphabets")
        sym = a.sym or b.sym
        if sym:
            for p in (a, b):
                if p.sym is None and p.uses(sym):
                    raise SymmetryError(f"mixing symmetric and full storage along {sym}")
            counts = {p.space.count(sym) for p in (a, b) if p.uses(sym)}
            if len(counts) > 1:
                raise SymmetryError("symmetric alphabets of different sizes")
            n = counts.pop() if counts else max(a.space.count(sym), b.space.count(sym))
            a, b = (Polynomial(p.space, p._terms, p._shift, sym).set_count(sym, n) for p in (a, b))
        space = a.space.join(b.space)
        return a.embed(space), b.embed(space)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial.constant(other, self.space, self.sym)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._pair(other)
        s = max(a._shift, b._shift)
        terms = defaultdict(int)
        for m, c in a._terms.items():
            terms[m] += c << (s - a._shift)
        for m, c in b._terms.items():
            terms[m] += c << (s - b._shift)
        return Polynomial(a.space, terms, s, a.sym)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.space, {m: -c for m, c in self._terms.items()}, self._shift, self.sym)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            try:
                d = Dyadic.of(other)
            except (TypeError, ValueError):
                return NotImplemented
            return Polynomial(self.space, {m: c * d.numerator for m, c in self._terms.items()},
                              self._shift + d.exponent, self.sym)
        a, b = self._pair(other)
        sym = a.sym
        if sym is not None and a.uses(sym) and b.uses(sym):
            terms = _sym_mul(a._terms, b._terms, a.space, sym)
        else:
            terms = defaultdict(int)
            for m1, c1 in a._terms.items():
                for m2, c2 in b._terms.items():
                    terms[tuple(x + y for x, y in zip(m1, m2))] += c1 * c2
        return Polynomial(a.space, terms, a._shift + b._shift, sym)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.one(self.space, self.sym)
        for _ in range(k):
            out = out * self
        return out

    def scale_pow2(self, e: int) -> "Polynomial":
        """Multiply by ``2**-e``."""
        return Polynomial(self.space, self._terms, self._shift + e, self.sym)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            try:
                other = self._coerce(other)
            except TypeError:
                return NotImplemented
        try:
            a, b = self._pair(other)
        except (SymmetryError, ValueError):
            return False
        return a._shift == b._shift and a._terms == b._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._shift, frozenset(self._terms.items())))
        return self._hash

    # -- substitutions ------------------------------------------------------

    def restrict(self, r: int, s: int) -> "Polynomial":
        """
        Kill variables outside the window ``[r, s]``: every x_i unless
        ``r <= 0 <= s``, y_j unless ``r <= j <= s``, z_j unless ``r <= -j <= s``.
        """
        if r > s:
            raise InvalidRange(f"empty range [{r},{s}]")
        sp = self.space
        dead = []
        if not r <= 0 <= s:
            dead.extend(range(*sp.block("x")))
        lo, _ = sp.block("y")
        dead.extend(lo + j - 1 for j in range(1, sp.ny + 1) if not r <= j <= s)
        lo, _ = sp.block("z")
        dead.extend(lo + j - 1 for j in range(1, sp.nz + 1) if not r <= -j <= s)
        terms = {m: c for m, c in self._terms.items() if not any(m[i] for i in dead)}
        return Polynomial(sp, terms, self._shift, self.sym)

    def negate_variables(self, variables) -> "Polynomial":
        """
        Substitute v -> -v.  `variables` may mix alphabet names (all of that
        alphabet) and ``(axis, index)`` pairs.
        """
        slots = set()
        for v in variables:
            if isinstance(v, str):
                slots.update(range(*self.space.block(v)))
            else:
                slots.add(self.space.slot(*v))
        if self.sym:
            lo, hi = self.space.block(self.sym)
            part = slots & set(range(lo, hi))
            if part and part != set(range(lo, hi)):
                raise SymmetryError("negating part of a symmetric alphabet")
        terms = {}
        for m, c in self._terms.items():
            odd = sum(m[i] for i in slots) & 1
            terms[m] = -c if odd else c
        return Polynomial(self.space, terms, self._shift, self.sym)

    def swap_axes(self, a: str, b: str) -> "Polynomial":
        """Exchange two alphabets (e.g. Y and Z)."""
        if self.sym in (a, b):
            raise SymmetryError("cannot swap a symmetric alphabet")
        counts = {ax: self.space.count(ax) for ax in AXES}
        counts[a], counts[b] = counts[b], counts[a]
        space = VariableSpace(counts["x"], counts["y"], counts["z"])
        terms = {}
        for m, c in self._terms.items():
            blocks = {ax: m[slice(*self.space.block(ax))] for ax in AXES}
            blocks[a], blocks[b] = blocks[b], blocks[a]
            terms[blocks["x"] + blocks["y"] + blocks["z"]] = c
        return Polynomial(space, terms, self._shift, self.sym)

    def shift_variables(self, axis: str, offset: int) -> "Polynomial":
        """Rename v_i -> v_{i+offset} along one alphabet, resizing it as needed."""
        if self.sym == axis and self.uses(axis):
            raise SymmetryError("cannot shift a symmetric alphabet")
        n = self.space.count(axis)
        space = self.space.with_count(axis, max(n + offset, 0))
        lo, hi = self.space.block(axis)
        out = {}
        for m, c in self._terms.items():
            seg = m[lo:hi]
            if offset >= 0:
                seg = (0,) * offset + seg
            elif any(seg[:-offset]):
                raise ValueError("shift would drop variables")
            else:
                seg = seg[-offset:]
            out[m[:lo] + seg + m[hi:]] = c
        return Polynomial(space, out, self._shift, self.sym)

    # -- text ---------------------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for m in self._sorted_keys():
            coeff = Dyadic(self._terms[m], self._shift)
            mono = _mono_text(self.space, m)
            if not mono:
                pieces.append(str(coeff))
            elif coeff == 1:
                pieces.append(mono)
            elif coeff == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{coeff}*{mono}")
        out = pieces[0]
        for p in pieces[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        tag = f", sym={self.sym!r}" if self.sym else ""
        return f"Polynomial({self.to_text()!r}, {self.space}{tag})"


def poly_arith(a: Polynomial, b: Polynomial | None, op: str, variables=()) -> Polynomial:
    """Functional front end: ``op`` is ``add``, ``mul`` or ``negate-variables``."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "negate-variables":
        return a.negate_variables(variables)
    raise ValueError(f"unknown operation {op!r}")


def restrict(p: Polynomial, r: int, s: int) -> Polynomial:
    return p.restrict(r, s)


def coefficient_of(p: Polynomial, mono) -> Dyadic:
    return p.coefficient(mono)
