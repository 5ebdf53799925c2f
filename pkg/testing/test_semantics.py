#
# (c) Copyright 2026 by the pitwo developers.
#
# Running programs: values, evaluation both ways, permutations.
#
import pytest
from itertools import product
from hypothesis import given, settings
from pitwo.syntax import TWO, ONE, Sum, Prod, Id, SwapPlus, SwapStar, Dist, FoldBool, Seq, adjoint, infer
from pitwo.semantics import *
from pitwo.library import NOT, CNOT, TOFFOLI, ID1, ID2, ID3, NOT1, NOT2, NOT3
from pitwo.library import builtin_library, SIGNATURES
from pitwo.exceptions import ValueTypeMismatch, EndpointMismatch, Ambiguous, TypeMismatch, IllTyped
from conftest import typed_combs

def bit(b):
    return ONE2 if b else ZERO2

def test_enumerate_order():
    assert enumerate_type(TWO) == [ZERO2, ONE2]
    assert enumerate_type(Sum(ONE, TWO)) == [InL(UNIT), InR(ZERO2), InR(ONE2)]
    assert enumerate_type(Prod(TWO, TWO)) == [
                Pair(ZERO2, ZERO2), Pair(ZERO2, ONE2), Pair(ONE2, ZERO2), Pair(ONE2, ONE2)]
    assert enumerate_type(Sum(TWO, Prod(TWO, ONE)))[2] == InR(Pair(ZERO2, UNIT))

    for t in [Sum(ONE, TWO), Prod(TWO, Sum(ONE, TWO))]:
        assert all(inhabits(v, t) for v in enumerate_type(t))
    assert not inhabits(UNIT, TWO)
    assert not inhabits(InL(ZERO2), Sum(ONE, TWO))

def test_not():
    assert eval_comb(NOT, ZERO2) == ONE2
    assert eval_comb(NOT, ONE2) == ZERO2

def test_cnot_table():
    for a, b in product([0, 1], repeat=2):
        got = eval_comb(CNOT, Pair(bit(a), bit(b)))
        assert got == Pair(bit(a), bit(b ^ a))

def test_toffoli_table():
    for a, b, c in product([0, 1], repeat=3):
        got = eval_comb(TOFFOLI, Pair(bit(a), Pair(bit(b), bit(c))))
        assert got == Pair(bit(a), Pair(bit(b), bit(c ^ (a & b))))

def test_backward():
    x = Pair(ONE2, Pair(ONE2, ONE2))
    assert eval_comb(TOFFOLI, x, backward=True) == Pair(ONE2, Pair(ONE2, ZERO2))

    # backward input lives in the codomain
    assert eval_comb(Dist(), InR(Pair(ZERO2, UNIT)), dom=Sum(Prod(TWO, ONE), Prod(TWO, ONE)),
                        backward=True) == Pair(InR(ZERO2), UNIT)

def test_value_errors():
    with pytest.raises(ValueTypeMismatch):
        eval_comb(NOT, UNIT)
    with pytest.raises(ValueTypeMismatch):
        eval_comb(CNOT, ONE2)
    with pytest.raises(Ambiguous):
        eval_comb(Id(), ONE2)
    assert eval_comb(Id(), ONE2, dom=TWO) == ONE2

def test_six_programs():
    # two classes of three
    ident = Perm.identity(2)
    flip = Perm([1, 0])
    for c in (ID1, ID2, ID3):
        assert to_perm(c, dom=TWO) == ident
    for c in (NOT1, NOT2, NOT3):
        assert to_perm(c, dom=TWO) == flip

    assert semantically_equal(NOT3, NOT)
    assert semantically_equal(ID1, ID3, dom=TWO)
    assert not semantically_equal(ID2, NOT1)

def test_semantic_eq_needs_matching_types():
    with pytest.raises(EndpointMismatch):
        semantically_equal(NOT, CNOT)

    # one side fixes the type for the other
    assert semantically_equal(Id(), ID2)
    assert not semantically_equal(SwapStar(), Id(), dom=Prod(TWO, TWO))

def test_semantic_eq_ill_typed_side():
    # a side that is wrong on its own is a typing error, whatever the ambient type
    bad = Seq(FoldBool(), FoldBool())
    with pytest.raises(TypeMismatch) as ee:
        semantically_equal(bad, Id(), dom=TWO)
    assert isinstance(ee.value, IllTyped)
    with pytest.raises(TypeMismatch):
        semantically_equal(Id(), bad, dom=TWO)
    with pytest.raises(TypeMismatch):
        semantically_equal(bad, Id())

    # well typed, just not at this type
    with pytest.raises(EndpointMismatch):
        semantically_equal(NOT, Id(), dom=Prod(TWO, TWO))

@given(typed_combs)
@settings(max_examples=500, deadline=None)
def test_right_unit(cd):
    c, dom = cd
    assert semantically_equal(c, Seq(c, Id()), dom=dom)
    assert semantically_equal(Seq(Id(), c), c, dom=dom)

def test_perm():
    p = to_perm(SwapPlus(), dom=Sum(ONE, TWO))
    assert p.map == (2, 0, 1)
    assert p.carrier_size == 3
    assert p.inverse().map == (1, 2, 0)
    assert p.then(p.inverse()).is_identity()
    assert p.then(p).then(p).is_identity()
    assert p.cycles() == [(0, 2, 1)]

def test_perm_render():
    assert to_perm(NOT).render() == '0 -> 1\n1 -> 0\ncycles: (0 1)'
    assert to_perm(Id(), dom=TWO).render() == '0 -> 0\n1 -> 1\ncycles: ()'

    # cnot swaps 10 and 11
    assert to_perm(CNOT).cycles() == [(2, 3)]
    assert to_perm(TOFFOLI).cycles() == [(6, 7)]

    with pytest.raises(AssertionError):
        Perm([0, 0])

def test_builtins_reverse():
    for name, c in builtin_library().items():
        dom = SIGNATURES[name][0]
        inv = adjoint(c)
        for x in enumerate_type(dom):
            assert eval_comb(inv, eval_comb(c, x, dom=dom), dom=SIGNATURES[name][1]) == x, name

@given(typed_combs)
@settings(max_examples=1000, deadline=None)
def test_reversible(cd):
    # running the adjoint undoes the program, on every element
    c, dom = cd
    _, cod = infer(c, dom=dom)
    back = adjoint(c)
    for x in enumerate_type(dom):
        y = eval_comb(c, x, dom=dom)
        assert inhabits(y, cod)
        assert eval_comb(back, y, dom=cod) == x
        assert eval_comb(c, y, dom=cod, backward=True) == x

    assert to_perm(c, dom=dom).then(to_perm(back, dom=cod)).is_identity()

# EOF
