import pytest

from schubsplit.errors import FamilyMismatch, Incompatible, NeedsMoreVariables
from schubsplit.nilcox import schubert
from schubsplit.partitions import Partition
from schubsplit.polyalg import VariableSpace
from schubsplit.splitting import (DescentSequence, compatible_factorizations, giambelli_expansion, split_coeffs,
                                  split_coeffs_by_parts, stanley_schur_coeffs, y_block, z_block)
from schubsplit.symfunc import schur, theta
from schubsplit.weyl import SignedPermutation, elements

P = SignedPermutation.parse
SEQS = [(1,), (2,), (0, 2), (1, 2), (0, 1, 2), (2, 3), (1, 2, 3)]


def simple(split):
    return {tuple((lam.parts, getattr(lam, "type", 0)) if getattr(lam, "type", 0) else lam.parts
                  for lam in key): int(c) for key, c in split.items()}


def test_descent_sequence_validation():
    assert DescentSequence((1, 2)).p == 2
    assert DescentSequence((1, 2), (0, 1)).arity == 3
    assert str(DescentSequence((1, 2), (0, 1))) == "a=(1,2) b=(0,1)"
    for bad in [(), (2, 1), (1, 1), (-1, 2)]:
        with pytest.raises(Incompatible):
            DescentSequence(bad)
    with pytest.raises(Incompatible):
        DescentSequence((1,), (1, 2))


def test_blocks():
    seq = DescentSequence((1, 3), (0, 2))
    assert y_block(seq, 1) == [("y", 1)]
    assert y_block(seq, 2) == [("y", 2), ("y", 3)]
    assert z_block(seq, 1) == [] and z_block(seq, 2) == [("z", 1), ("z", 2)]


def test_factorization_examples():
    facts = compatible_factorizations(P("3,2,1"), DescentSequence((1, 2)))
    assert len(facts) == 2
    assert all(u * v == P("3,2,1") and u.length() + v.length() == 3 for u, v in facts)
    w = P("3,-1,2")
    assert compatible_factorizations(w, DescentSequence((1,))) == [(w,)]
    ident = SignedPermutation.identity()
    assert compatible_factorizations(ident, DescentSequence((1, 2), (0, 1))) == [(ident, ident, ident)]
    with pytest.raises(Incompatible):
        compatible_factorizations(P("3,2,1"), DescentSequence((2,)))


@pytest.mark.parametrize("family", ["BC", "D"])
def test_factorizations_are_complete(family):
    # brute force: every length-additive factorization u v = w with v fixing 1 and unsigned
    seq = DescentSequence((1, 2))
    group = list(elements(family, 3))
    for w in group:
        try:
            got = set(compatible_factorizations(w, seq))
        except Incompatible:
            continue
        want = set()
        for v in group:
            if v.num_barred or v(1) != 1:
                continue
            u = w * v.inverse()
            if u.length() + v.length() == w.length():
                want.add((u, v))
        assert got == want


def test_table_examples():
    assert simple(split_coeffs(P("3,2,1"), DescentSequence((1, 2)))) == {((2, 1), ()): 1, ((1, 1), (1,)): 1}
    assert simple(split_coeffs(P("2,3,1"), DescentSequence((1, 2)))) == {((2,), ()): 1, ((1,), (1,)): 1}
    d = simple(split_coeffs(P("3,2,1", "D"), DescentSequence((1, 2))))
    assert d == {((3,), ()): 1, (((2, 1), 1), ()): 1, (((1, 1), 1), (1,)): 1}


def test_key_weights_add_up_to_length():
    for w in elements("BC", 3):
        for a in SEQS:
            try:
                split = split_coeffs(w, DescentSequence(a))
            except Incompatible:
                continue
            assert split.total_weight_ok(w.length())
            assert all(len(key) == len(a) and c > 0 for key, c in split.items())


@pytest.mark.parametrize("family", ["BC", "D"])
def test_two_counts_agree(family):
    for w in elements(family, 3):
        for a in SEQS:
            seq = DescentSequence(a)
            try:
                one = split_coeffs(w, seq)
            except Incompatible:
                continue
            assert dict(one) == dict(split_coeffs_by_parts(w, seq))


def test_giambelli_examples():
    sp = VariableSpace(nx=3, ny=2)
    seq = DescentSequence((1, 2))
    y2 = schur((1,), sp, plus=[("y", 2)])
    want = theta((2, 1), 1, sp) + theta((1, 1), 1, sp) * y2
    assert giambelli_expansion(P("3,2,1"), seq, sp) == want == schubert(P("3,2,1"), "C-double", sp)
    assert giambelli_expansion(P("1,3,2"), seq, sp) == theta((1,), 1, sp) + y2


def test_giambelli_equals_schubert_single():
    for w in elements("BC", 3):
        for a in SEQS:
            seq = DescentSequence(a)
            sp = VariableSpace(nx=max(w.length(), 1), ny=3)
            try:
                g = giambelli_expansion(w, seq, sp)
            except Incompatible:
                continue
            assert g == schubert(w, "C-double", sp), (str(w), a)


def test_giambelli_double_and_dual():
    a, b = (1, 2), (0, 1)
    for w in elements("BC", 3):
        sp = VariableSpace(nx=max(w.length(), 1), ny=3, nz=3)
        try:
            g = giambelli_expansion(w, DescentSequence(a, b), sp)
        except Incompatible:
            continue
        cs = schubert(w, "C-double", sp)
        assert g == cs, str(w)
        # the inverse expands along the swapped alphabets
        dual = schubert(w.inverse(), "C-double", sp)
        assert dual.swap_axes("y", "z").negate_variables(["y", "z"]) == cs


def test_type_a_splitting():
    sp = VariableSpace(ny=3)
    for w in elements("A", 4):
        for a in [(1, 2, 3), (2, 3), (1, 3), (3,)]:
            try:
                g = giambelli_expansion(w, DescentSequence(a), sp)
            except Incompatible:
                continue
            assert g == schubert(w, "A", sp)


def test_schur_coefficients():
    assert stanley_schur_coeffs(P("3,2,1", "A")) == {Partition((2, 1)): 1}
    assert stanley_schur_coeffs(P("1,4,2,3", "A")) == stanley_schur_coeffs(P("3,1,2", "A"))
    with pytest.raises(FamilyMismatch):
        stanley_schur_coeffs(P("-1"))


def test_giambelli_errors():
    with pytest.raises(FamilyMismatch):
        giambelli_expansion(P("2,1", "D"), DescentSequence((1,)), VariableSpace(nx=1, ny=1))
    with pytest.raises(NeedsMoreVariables):
        giambelli_expansion(P("1,3,2"), DescentSequence((1, 2)), VariableSpace(nx=1, ny=1))
