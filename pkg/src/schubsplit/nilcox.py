"""
Evaluation of products of linear factors (1 + c t u_i) in the nilCoxeter
algebra, and through it the Stanley symmetric functions F, G, E, the
Schubert polynomials of types A, B, C, D and the mixed Stanley functions.

A product is expanded left to right.  Since u_w u_i is u_{w s_i} when the
length goes up and zero otherwise, only elements that are left factors of
the target (in a length-additive factorization) can ever contribute, so the
support is pruned to those.  When the result is symmetric in an alphabet,
monomials whose exponents on that alphabet are not weakly decreasing are
dropped as soon as a variable is finished; this keeps exactly the dominant
terms.

>>> from schubsplit.weyl import SignedPermutation
>>> sp = VariableSpace(nx=2)
>>> print(stanley(SignedPermutation.parse("-1"), "F", sp))
2*x1 + 2*x2
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import FamilyMismatch, InvalidRank
from .polyalg import Polynomial, VariableSpace
from .weyl import Family, SignedPermutation

__all__ = [
    "FactorStream", "NilCoxeterElement", "nc_evaluate", "nc_product",
    "stanley", "schubert", "mixed_stanley", "left_factors", "right_factors",
]


def _rmul(win: tuple[int, ...], g: int, family: Family) -> tuple[int, ...] | None:
    """w s_g on a padded window, or None when the length does not go up."""
    if g == 0:
        if family is Family.BC:
            if win[0] < 0:
                return None
            return (-win[0],) + win[1:]
        if win[0] + win[1] < 0:
            return None
        return (-win[1], -win[0]) + win[2:]
    if win[g - 1] > win[g]:
        return None
    return win[:g - 1] + (win[g], win[g - 1]) + win[g + 1:]


@dataclass(frozen=True)
class FactorStream:
    """
    An ordered product of linear factors (1 + coef * v * u_gen).  Atoms are
    ``(coef, axis, index, gen)``; `ends` marks atoms after which a variable
    is complete (used for dominance pruning).
    """
    family: Family
    rank: int
    atoms: tuple[tuple[int, str, int, int], ...] = ()

    def __add__(self, other: "FactorStream") -> "FactorStream":
        if self.family is not other.family or self.rank != other.rank:
            raise FamilyMismatch("concatenating incompatible factor streams")
        return FactorStream(self.family, self.rank, self.atoms + other.atoms)

    def _with(self, atoms) -> "FactorStream":
        return FactorStream(self.family, self.rank, self.atoms + tuple(atoms))

    # factors of one variable
    def A(self, i: int, var: tuple[str, int]) -> "FactorStream":
        """A_i(t) = (1 + t u_{n-1}) ... (1 + t u_i)."""
        return self._with((1, *var, g) for g in range(self.rank - 1, i - 1, -1))

    def A_tilde(self, i: int, var: tuple[str, int]) -> "FactorStream":
        """(1 - t u_i) ... (1 - t u_{n-1})."""
        return self._with((-1, *var, g) for g in range(i, self.rank))

    def C(self, var: tuple[str, int]) -> "FactorStream":
        n = self.rank
        atoms = [(1, *var, g) for g in range(n - 1, 0, -1)] + [(2, *var, 0)]
        atoms += [(1, *var, g) for g in range(1, n)]
        return self._with(atoms)

    def D(self, var: tuple[str, int]) -> "FactorStream":
        n = self.rank
        atoms = [(1, *var, g) for g in range(n - 1, 1, -1)] + [(1, *var, 1), (1, *var, 0)]
        atoms += [(1, *var, g) for g in range(2, n)]
        return self._with(atoms)


@dataclass
class NilCoxeterElement:
    family: Family
    rank: int
    terms: dict = field(default_factory=dict)

    def __getitem__(self, w: SignedPermutation) -> Polynomial:
        return self.terms.get(w)

    def __eq__(self, other):
        if not isinstance(other, NilCoxeterElement):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        return all(self.terms.get(k) == other.terms.get(k) for k in keys)


def _prefixes(target: tuple[int, ...], family: Family) -> frozenset:
    """Left factors u of target with l(u) + l(u^-1 target) = l(target), as padded windows."""
    seen = {target}
    stack = [target]
    n = len(target)
    while stack:
        w = stack.pop()
        sw = SignedPermutation(family, w)
        for d in sw.descents():
            nw = sw.right_mul(d).padded(n)
            if nw not in seen:
                seen.add(nw)
                stack.append(nw)
    return frozenset(seen)


def _run(stream: FactorStream, space: VariableSpace, allowed=None, cap=None, sym=None):
    n = stream.rank
    fam = stream.family
    start = tuple(range(1, n + 1))
    zero = (0,) * space.size
    state: dict[tuple, dict[tuple, int]] = {start: {zero: 1}}
    lengths = {start: 0}
    atoms = [(c, a, i, g) for c, a, i, g in stream.atoms if i <= space.count(a)]
    if sym is not None:
        lo, hi = space.block(sym)
    for pos, (coef, axis, index, gen) in enumerate(atoms):
        slot = space.slot(axis, index)
        for w in sorted(state, key=lengths.__getitem__, reverse=True):
            nw = _rmul(w, gen, fam)
            if nw is None:
                continue
            if allowed is not None and nw not in allowed:
                continue
            if cap is not None and lengths[w] + 1 > cap:
                continue
            bucket = state.get(nw)
            if bucket is None:
                bucket = state[nw] = {}
                lengths[nw] = lengths[w] + 1
            for m, c in state[w].items():
                nm = m[:slot] + (m[slot] + 1,) + m[slot + 1:]
                v = bucket.get(nm, 0) + c * coef
                if v:
                    bucket[nm] = v
                else:
                    bucket.pop(nm, None)
        # dominance pruning once a variable of the symmetric alphabet is complete
        if sym is not None and lo < slot < hi:
            nxt = atoms[pos + 1] if pos + 1 < len(atoms) else None
            if nxt is None or (nxt[1], nxt[2]) != (axis, index):
                for w, monos in state.items():
                    bad = [m for m in monos if m[slot] > m[slot - 1]]
                    for m in bad:
                        del monos[m]
    return state


def _rank_for(w: SignedPermutation, rank: int | None) -> int:
    need = w.rank
    if w.family is Family.D:
        need = max(need, 2)
    elif w.family is Family.BC:
        need = max(need, 1)
    else:
        need = max(need, 1)
    if rank is None:
        return need
    if rank < need:
        raise InvalidRank(f"rank {rank} is too small for {w}")
    return rank


def nc_evaluate(stream: FactorStream, target: SignedPermutation, space: VariableSpace,
                sym: str | None = None) -> Polynomial:
    """Coefficient of u_target in the product (pruned to left factors of target)."""
    if target.family is not stream.family:
        raise FamilyMismatch("target and stream families differ")
    if target.rank > stream.rank:
        raise InvalidRank(f"rank {stream.rank} is too small for {target}")
    if sym is not None and space.count(sym) == 0:
        sym = None
    tw = target.padded(stream.rank)
    state = _run(stream, space, allowed=_prefixes(tw, target.family), sym=sym)
    return Polynomial(space, state.get(tw, {}), 0, sym)


def nc_product(stream: FactorStream, space: VariableSpace, cap: int | None = None) -> NilCoxeterElement:
    """The whole product, optionally truncated to elements of length <= cap."""
    state = _run(stream, space, cap=cap)
    terms = {}
    for w, monos in state.items():
        p = Polynomial(space, monos)
        if p:
            terms[SignedPermutation(stream.family, w)] = p
    return NilCoxeterElement(stream.family, stream.rank, terms)


# -- named generating functions -----------------------------------------------

_FLAVOR_FAMILY = {"F": Family.BC, "G": Family.A, "E": Family.D}


def stanley(w: SignedPermutation, flavor: str, space: VariableSpace, *, axis: str | None = None,
            rank: int | None = None, sym: bool = False) -> Polynomial:
    """
    Stanley symmetric function F (type C), G (type A) or E (type D) over the
    whole of one alphabet (x for F and E, y for G unless `axis` is given).
    With `sym`, only the dominant part is returned.
    """
    fam = _FLAVOR_FAMILY.get(flavor)
    if fam is None:
        raise ValueError(f"unknown Stanley flavor {flavor!r}")
    if flavor == "G" and w.num_barred == 0:
        w = w.as_family(Family.A)
    if w.family is not fam:
        raise FamilyMismatch(f"flavor {flavor} needs family {fam.value}")
    axis = axis or ("y" if flavor == "G" else "x")
    return _stanley(w, flavor, space, axis, _rank_for(w, rank), sym)


@lru_cache(maxsize=4096)
def _stanley(w, flavor, space, axis, n, sym):
    s = FactorStream(w.family, n)
    for i in range(1, space.count(axis) + 1):
        if flavor == "F":
            s = s.C((axis, i))
        elif flavor == "E":
            s = s.D((axis, i))
        else:
            s = s.A(1, (axis, i))
    return nc_evaluate(s, w, space, sym=axis if sym else None)


def schubert(w: SignedPermutation, flavor: str, space: VariableSpace, *, rank: int | None = None,
             sym: bool = False) -> Polynomial:
    """
    Schubert polynomials: ``A`` (in Y), ``C-double``, ``B-double`` and
    ``D-double`` (in X; Y, Z).  Variables missing from `space` are set to
    zero, so single versions come from nz = 0.
    """
    flavor = flavor.upper()
    if flavor == "A":
        if w.num_barred:
            raise FamilyMismatch("type A Schubert polynomials need an unsigned permutation")
        w = w.as_family(Family.A)
        n = _rank_for(w, rank)
        return _schubert_a(w, space, n)
    want = {"C-DOUBLE": Family.BC, "B-DOUBLE": Family.BC, "D-DOUBLE": Family.D}.get(flavor)
    if want is None:
        raise ValueError(f"unknown Schubert flavor {flavor!r}")
    if w.family is not want:
        raise FamilyMismatch(f"flavor {flavor} needs family {want.value}")
    n = _rank_for(w, rank)
    p = _schubert_cd(w, space, n, sym)
    if flavor == "B-DOUBLE":
        p = p.scale_pow2(w.num_barred)
    return p


@lru_cache(maxsize=4096)
def _schubert_a(w, space, n):
    s = FactorStream(Family.A, n)
    for i in range(1, n):
        s = s.A(i, ("y", i))
    return nc_evaluate(s, w, space)


@lru_cache(maxsize=4096)
def _schubert_cd(w, space, n, sym):
    s = FactorStream(w.family, n)
    for j in range(n - 1, 0, -1):
        s = s.A_tilde(j, ("z", j))
    for i in range(1, space.nx + 1):
        s = s.C(("x", i)) if w.family is Family.BC else s.D(("x", i))
    for i in range(1, n):
        s = s.A(i, ("y", i))
    return nc_evaluate(s, w, space, sym="x" if sym else None)


def right_factors(w: SignedPermutation) -> list[tuple[SignedPermutation, SignedPermutation]]:
    """All (u, v) with u v = w, lengths additive and v unsigned (v in S_n)."""
    out = {}
    stack = [(w, SignedPermutation.identity(w.family))]
    while stack:
        u, v = stack.pop()
        if (u, v) in out:
            continue
        out[(u, v)] = None
        for d in u.descents():
            if d >= 1:
                stack.append((u.right_mul(d), v.left_mul(d)))
    return sorted(out, key=lambda p: (p[1].length(), p[1].window, p[0].window))


def left_factors(w: SignedPermutation) -> list[tuple[SignedPermutation, SignedPermutation]]:
    """All (u, v) with u v = w, lengths additive and u unsigned."""
    return [(a.inverse(), b.inverse()) for b, a in right_factors(w.inverse())]


def mixed_stanley(w: SignedPermutation, flavor: str, space: VariableSpace, *, rank: int | None = None,
                  sym: bool = False) -> Polynomial:
    """
    Mixed Stanley functions J (type C), I (type D) in X and all y's of
    `space`, and the double version ``J-double`` in X, Y and Z.
    """
    if flavor in ("J", "I"):
        want = Family.BC if flavor == "J" else Family.D
        if w.family is not want:
            raise FamilyMismatch(f"flavor {flavor} needs family {want.value}")
        return _mixed(w, space, _rank_for(w, rank), sym)
    if flavor == "J-double":
        if w.family is not Family.BC:
            raise FamilyMismatch("J-double needs family BC")
        return _mixed_double(w, space)
    raise ValueError(f"unknown mixed flavor {flavor!r}")


@lru_cache(maxsize=4096)
def _mixed(w, space, n, sym):
    s = FactorStream(w.family, n)
    for i in range(1, space.nx + 1):
        s = s.C(("x", i)) if w.family is Family.BC else s.D(("x", i))
    for j in range(1, space.ny + 1):
        s = s.A(1, ("y", j))
    return nc_evaluate(s, w, space, sym="x" if sym else None)


def _mixed_double(w, space):
    total = Polynomial.zero(space)
    for om, rest in left_factors(w):
        g_om = stanley(om.inverse().as_family(Family.A), "G", space, axis="z").negate_variables(["z"])
        for u, v in right_factors(rest):
            f_u = stanley(u, "F", space)
            g_v = stanley(v.as_family(Family.A), "G", space)
            total = total + g_om * f_u * g_v
    return total
