"""
Concrete symmetric polynomials built from generating series, theta
polynomials via raising operators, and an exact linear solver that expands a
polynomial in any of these bases.

Every product of series coefficients is computed by one dynamic programme
that walks through the variables in order, keeping for each partial state
the amounts still owed to each factor.  Per variable, a factor is one of

* ``e``  : 1 + v t                 (elementary)
* ``h``  : 1 / (1 - v t)           (complete)
* ``q``  : (1 + v t) / (1 - v t)   (the q-series)
* ``e-`` : 1 - v t

so ``vartheta_r(X; y1..yk)`` uses ``q`` on the x's and ``e`` on y1..yk, and
``h_r(Y/Z)`` uses ``h`` on Y and ``e-`` on Z.

>>> sp = VariableSpace(nx=1, ny=1)
>>> print(theta((1,), 1, sp))
2*x1 + y1
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .errors import InvalidPartition, NeedsMoreVariables, NotInSpan, SymmetryError
from .partitions import (Partition, TypedKStrictPartition, k_strict_partitions,
                         partitions, sort_key, strict_partitions)
from .polyalg import Dyadic, Polynomial, VariableSpace
from .raising import expand_raising

__all__ = [
    "SeriesFamily", "BasisExpansion", "series_term", "series_product", "series_combination",
    "schur", "schur_determinant", "theta", "schur_q", "schur_p",
    "expand_in_basis", "solve_in_span",
]


def _weight(kind: str, a: int) -> int:
    if a == 0:
        return 1
    if kind == "e":
        return 1 if a == 1 else 0
    if kind == "h":
        return 1
    if kind == "q":
        return 2
    if kind == "e-":
        return -1 if a == 1 else 0
    raise ValueError(f"unknown series kind {kind!r}")


def _cap(kind: str, r: int) -> int:
    return min(r, 1) if kind in ("e", "e-") else r


@lru_cache(maxsize=None)
def _columns(rem: tuple[int, ...], kind: str):
    """
    Ways to take (a_1..a_m), a_i <= rem_i, from one variable: a map from the
    exponent sum to ``{canonical new remainder: weight}``.
    """
    out = [((), 1)]
    for r in rem:
        nxt = []
        for a in range(_cap(kind, r) + 1):
            wa = _weight(kind, a)
            if wa:
                nxt.extend((col + (a,), w * wa) for col, w in out)
        out = nxt
    by_sum: dict[int, dict[tuple, int]] = defaultdict(lambda: defaultdict(int))
    for col, w in out:
        new = _canon(tuple(r - a for r, a in zip(rem, col)))
        by_sum[sum(col)][new] += w
    return {e: {r: w for r, w in d.items() if w} for e, d in sorted(by_sum.items())}


def _canon(rem) -> tuple[int, ...]:
    return tuple(sorted((r for r in rem if r), reverse=True))


@lru_cache(maxsize=4096)
def _series_combination(combo: tuple[tuple[tuple[int, ...], int], ...],
                        plan: tuple[tuple[int, str], ...],
                        space: VariableSpace, sym: str | None):
    """
    Integer terms of ``sum_c c * prod_i [t^{alpha_i}] prod_{(slot, kind)} f_kind(slot, t)``.

    All factors are the same series, so a state only needs the multiset of
    amounts still owed; products sharing a state are merged.
    """
    size = space.size
    zero = (0,) * size
    states: dict[tuple, dict[tuple, int]] = defaultdict(lambda: defaultdict(int))
    for alpha, c in combo:
        if any(a < 0 for a in alpha):
            continue
        states[_canon(alpha)][zero] += c
    lo, hi = space.block(sym) if sym else (0, 0)
    for idx, (slot, kind) in enumerate(plan):
        rest = plan[idx + 1:]
        bounded = all(k in ("e", "e-") for _, k in rest)
        slack = len(rest)
        dominant = sym is not None and lo < slot < hi
        nxt: dict[tuple, dict[tuple, int]] = defaultdict(lambda: defaultdict(int))
        for rem, monos in states.items():
            if not rem:
                bucket = nxt[rem]
                for m, c in monos.items():
                    bucket[m] += c
                continue
            cols = _columns(rem, kind)
            for m, c in monos.items():
                cap = m[slot - 1] if dominant else None
                for e, targets in cols.items():
                    if cap is not None and e > cap:
                        break
                    nm = m[:slot] + (m[slot] + e,) + m[slot + 1:] if e else m
                    for new_rem, w in targets.items():
                        if bounded and new_rem and new_rem[0] > slack:
                            continue
                        nxt[new_rem][nm] += c * w
        states = {}
        for r, d in nxt.items():
            d = {m: c for m, c in d.items() if c}
            if d:
                states[r] = d
    return dict(states.get((), {}))


def series_combination(combo, plan, space: VariableSpace, sym: str | None = None) -> Polynomial:
    """
    Linear combination of products of series coefficients.  `combo` is a list
    of ``(alpha, coefficient)``; `plan` lists ``(axis, index, kind)`` triples
    naming the variables of the series and how each one enters.
    """
    slots = tuple(sorted((space.slot(a, i), kind) for a, i, kind in plan))
    if sym:
        lo, hi = space.block(sym)
        inside = [(s, k) for s, k in slots if lo <= s < hi]
        if hi > lo and (len({k for _, k in inside}) > 1 or len(inside) != hi - lo):
            raise SymmetryError("symmetric storage needs one series kind on the whole alphabet")
    key = tuple(sorted((tuple(a), c) for a, c in combo))
    terms = _series_combination(key, slots, space, sym)
    return Polynomial(space, terms, 0, sym)


def series_product(alpha, plan, space: VariableSpace, sym: str | None = None) -> Polynomial:
    """Product of the series coefficients indexed by `alpha` (see series_combination)."""
    return series_combination([(tuple(alpha), 1)], plan, space, sym)


@dataclass(frozen=True)
class SeriesFamily:
    """
    One of the generating series ``e``, ``h``, ``q`` (in X) or ``theta``
    (q in X times e in y1..yk).  ``e``/``h`` run over the alphabet `axis`.
    """
    kind: str
    space: VariableSpace
    k: int = 0
    axis: str = "x"

    def plan(self):
        sp = self.space
        if self.kind in ("e", "h"):
            return [(self.axis, i, self.kind) for i in range(1, sp.count(self.axis) + 1)]
        if self.kind in ("q", "theta"):
            if self.kind == "theta" and sp.ny < self.k:
                raise InvalidPartition(f"theta series needs {self.k} y-variables")
            k = self.k if self.kind == "theta" else 0
            return [("x", i, "q") for i in range(1, sp.nx + 1)] + [("y", j, "e") for j in range(1, k + 1)]
        raise ValueError(f"unknown series family {self.kind!r}")


def series_term(fam: SeriesFamily, r: int) -> Polynomial:
    """
    >>> print(series_term(SeriesFamily("q", VariableSpace(nx=2)), 1))
    2*x1 + 2*x2
    """
    if r < 0:
        return Polynomial.zero(fam.space)
    return series_product((r,), fam.plan(), fam.space)


# -- Schur polynomials ---------------------------------------------------------

@lru_cache(maxsize=None)
def schur_determinant(parts: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Expansion of det(h_{lam_i + j - i}) into products of h's (sorted index tuples)."""
    l = len(parts)
    out: dict[tuple[int, ...], int] = defaultdict(int)
    for perm in permutations(range(l)):
        idx = [parts[i] + perm[i] - i for i in range(l)]
        if any(a < 0 for a in idx):
            continue
        inv = sum(1 for i in range(l) for j in range(i + 1, l) if perm[i] > perm[j])
        out[tuple(sorted((a for a in idx if a), reverse=True))] += -1 if inv % 2 else 1
    return {k: v for k, v in out.items() if v}


def _alphabet(space: VariableSpace, spec) -> list[tuple[str, int]]:
    if spec is None:
        return []
    if isinstance(spec, str):
        return [(spec, i) for i in range(1, space.count(spec) + 1)]
    return [tuple(v) for v in spec]


def schur(lam, space: VariableSpace, plus="y", minus=None, h=None, sym: str | None = None):
    """
    Supersymmetric Schur polynomial s_lam(plus/minus) over the given alphabets
    (an axis name or a list of ``(axis, index)`` pairs).  With a callable `h`
    the determinant is evaluated formally: ``sum sign * prod h(r)``.
    """
    parts = lam.parts if hasattr(lam, "parts") else Partition(tuple(lam)).parts
    det = schur_determinant(parts)
    if h is not None:
        total = 0
        for seq, c in det.items():
            term = c
            for r in seq:
                term = term * h(r)
            total = total + term
        return total
    plan = [(a, i, "h") for a, i in _alphabet(space, plus)] + \
           [(a, i, "e-") for a, i in _alphabet(space, minus)]
    return series_combination(list(det.items()), plan, space, sym)


# -- theta polynomials -------------------------------------------------------

def _theta_plan(space: VariableSpace, k: int, y_slots=None):
    ys = list(y_slots) if y_slots is not None else [("y", j) for j in range(1, k + 1)]
    return [("x", i, "q") for i in range(1, space.nx + 1)] + [(a, j, "e") for a, j in ys]


def theta(lam, k: int | None = None, space: VariableSpace | None = None, *,
          sym: str | None = None, y_slots=None) -> Polynomial:
    """
    Theta polynomial of a k-strict partition in X and y1..yk (or the listed
    `y_slots`).  At k = 0 this is the Schur Q-polynomial.
    """
    if isinstance(lam, TypedKStrictPartition):
        k = lam.k if k is None else k
        parts = lam.parts
    else:
        parts = Partition(tuple(lam)).parts
    if k is None or space is None:
        raise TypeError("theta needs k and a variable space")
    if y_slots is None and space.ny < k:
        raise InvalidPartition(f"theta with k={k} needs at least {k} y-variables")
    plan = _theta_plan(space, k, y_slots)
    return _theta_cached(parts, k, space, sym, tuple(map(tuple, plan)))


@lru_cache(maxsize=4096)
def _theta_cached(parts, k, space, sym, plan):
    exp = expand_raising(parts, k)
    return series_combination([(seq, c) for c, seq in exp.terms], plan, space, sym)


def schur_q(lam, space: VariableSpace, sym: str | None = None) -> Polynomial:
    return theta(lam, 0, space, sym=sym)


def schur_p(lam, space: VariableSpace, sym: str | None = None) -> Polynomial:
    parts = lam.parts if hasattr(lam, "parts") else Partition(tuple(lam)).parts
    return schur_q(parts, space, sym).scale_pow2(len(parts))


# -- basis expansion -----------------------------------------------------------

@dataclass
class BasisExpansion:
    """Coefficients keyed by (typed) partitions, kept in graded order."""
    basis: str
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {key: Dyadic.of(c) for key, c in sorted(self.terms.items(), key=lambda kv: sort_key(kv[0]))
                      if Dyadic.of(c)}

    def __getitem__(self, key):
        return self.terms.get(key, Dyadic(0))

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, BasisExpansion):
            return self.simple() == other.simple()
        if isinstance(other, dict):
            return self.simple() == {k: Dyadic.of(v) for k, v in other.items()}
        return NotImplemented

    def simple(self) -> dict:
        """Keys as plain part tuples, or (parts, type) when a type is set."""
        out = {}
        for key, c in self.terms.items():
            parts = tuple(key.parts)
            typ = getattr(key, "type", 0)
            out[(parts, typ) if typ else parts] = c
        return out

    def is_integral(self) -> bool:
        return all(c.is_integer() for c in self.terms.values())

    def __str__(self):
        return " + ".join(f"{c}*{key}" for key, c in self.terms.items()) or "0"


def _to_fraction_columns(p: Polynomial):
    den = 1 << p.shift
    return {m: Fraction(c, den) for m, c in p.raw_terms().items()}


def solve_in_span(p: Polynomial, basis: list, integral: bool = False, check_rank: bool = True):
    """
    Solve ``p = sum c_i * b_i`` exactly for the ``(key, polynomial)`` pairs in
    `basis`.  Raises NeedsMoreVariables when the basis polynomials are not
    linearly independent (if `check_rank`), NotInSpan when no solution exists,
    or, with `integral`, when the unique solution is not integral.
    Returns ``{key: Fraction}``.
    """
    keys = [k for k, _ in basis]
    cols = [_to_fraction_columns(b) for _, b in basis]
    target = _to_fraction_columns(p)
    monos = sorted(set().union(target, *cols))
    index = {m: i for i, m in enumerate(monos)}
    ncol = len(cols)
    rows = [[Fraction(0)] * (ncol + 1) for _ in monos]
    for j, col in enumerate(cols):
        for m, c in col.items():
            rows[index[m]][j] = c
    for m, c in target.items():
        rows[index[m]][ncol] = c
    pivots = []
    r = 0
    for j in range(ncol):
        piv = next((i for i in range(r, len(rows)) if rows[i][j]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][j]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][j]:
                f = rows[i][j]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(j)
        r += 1
    if any(rows[i][ncol] for i in range(r, len(rows))):
        raise NotInSpan("polynomial is not in the span of the basis")
    if check_rank and len(pivots) < ncol:
        raise NeedsMoreVariables(f"basis has rank {len(pivots)} < {ncol} in this variable space")
    sol = {keys[j]: rows[i][ncol] for i, j in enumerate(pivots)}
    if integral and any(v.denominator != 1 for v in sol.values()):
        raise NotInSpan("no integral solution: " + ", ".join(f"{keys[j]}={v}" for j, v in
                                                                sorted(((keys.index(k), v) for k, v in sol.items()))))
    return {k: v for k, v in sol.items() if v}


def _basis_items(basis: str, degree: int, space: VariableSpace, k: int, sym: str | None):
    if basis == "schur-s":
        axis = sym or "y"
        return [(lam, schur(lam, space, plus=axis, sym=sym))
                for lam in partitions(degree, max_len=space.count(axis))]
    if basis in ("schur-q", "schur-p"):
        fn = schur_q if basis == "schur-q" else schur_p
        return [(TypedKStrictPartition(lam, 0), fn(lam, space, sym)) for lam in strict_partitions(degree)]
    if basis == "theta":
        return [(TypedKStrictPartition(lam, k), theta(lam, k, space, sym=sym))
                for lam in k_strict_partitions(degree, k)]
    raise ValueError(f"unknown basis {basis!r}")


def expand_in_basis(p, basis: str, degree: int, k: int = 0, *, space: VariableSpace | None = None,
                    axis: str | None = None, retries: int = 1) -> BasisExpansion:
    """
    Expand `p` in one of the bases ``schur-s`` (in the alphabet `axis`,
    default y), ``schur-q``, ``schur-p`` or ``theta`` (with k) in X.

    `p` is a Polynomial, or a callable taking a VariableSpace; in the latter
    case the default space has as many x-variables as the degree (as many
    of `axis` for schur-s) and is enlarged by two on a rank failure.
    """
    if basis == "schur-s":
        axis = axis or "y"
    else:
        axis = "x"
    if callable(p) and not isinstance(p, Polynomial):
        make = p
        if space is None:
            space = VariableSpace(nx=degree if axis == "x" else 0,
                                  ny=max(k if basis == "theta" else 0, degree if axis == "y" else 0),
                                  nz=degree if axis == "z" else 0)
        attempts = retries + 1
    else:
        make = None
        space = p.space
        attempts = 1
    last = None
    for _ in range(attempts):
        poly = make(space) if make else p
        if not poly.is_homogeneous(degree):
            raise ValueError(f"polynomial is not homogeneous of degree {degree}")
        sym = axis if poly.sym == axis else None
        if sym is None and poly.is_symmetric(axis):
            poly, sym = poly.to_symmetric(axis, check=False), axis
        items = _basis_items(basis, degree, poly.space, k, sym)
        try:
            sol = solve_in_span(poly, items, integral=False)
        except NeedsMoreVariables as exc:
            last = exc
            space = space.with_count(axis, space.count(axis) + 2)
            continue
        if basis != "schur-p" and any(v.denominator != 1 for v in sol.values()):
            raise NotInSpan(f"non-integral {basis} coefficients")
        return BasisExpansion(basis, sol)
    raise last
