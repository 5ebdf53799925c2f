#
# (c) Copyright 2026 by the pitwo developers.
#
# Types, inference, adjoints, printing and parsing.
#
import pytest
from hypothesis import given, settings
from pitwo.syntax import *
from pitwo.parser import parse_comb, parse_type, parse_value, parse_program
from pitwo.semantics import UNIT, ZERO2, ONE2, InL, InR, Pair
from pitwo.library import NOT, CNOT, TOFFOLI, NOT3, SIGNATURES, builtin_library
from pitwo.exceptions import TypeMismatch, Ambiguous, PiSyntaxError
from conftest import typed_combs

B2 = Prod(TWO, TWO)
B3 = Prod(TWO, B2)

def test_library_types():
    assert infer(NOT) == (TWO, TWO)
    assert infer(CNOT) == (B2, B2)
    assert infer(TOFFOLI) == (B3, B3)

    for name, c in builtin_library().items():
        assert infer(c, dom=SIGNATURES[name][0]) == SIGNATURES[name], name

def test_ambiguous():
    with pytest.raises(Ambiguous):
        infer(Id())
    with pytest.raises(Ambiguous):
        infer(Seq(SwapPlus(), SwapPlus()))

    # context fixes it
    assert infer(Id(), dom=TWO) == (TWO, TWO)
    assert infer(UnitiStar(), dom=TWO) == (TWO, Prod(ONE, TWO))
    assert infer(Seq(SwapPlus(), SwapPlus()), cod=Sum(ONE, TWO)) \
                == (Sum(ONE, TWO), Sum(ONE, TWO))

def test_mismatch():
    with pytest.raises(TypeMismatch):
        infer(Seq(FoldBool(), FoldBool()))
    with pytest.raises(TypeMismatch):
        infer(NOT, dom=B2)
    with pytest.raises(TypeMismatch):
        infer(Seq(UnfoldBool(), SwapStar()))

def test_type_size():
    assert type_size(ZERO) == 0
    assert type_size(B3) == 8
    assert type_size(Sum(ONE, Prod(TWO, Sum(ONE, TWO)))) == 7

def test_adjoint():
    assert adjoint(Dist()) == Factor()
    assert adjoint(Seq(UnitiStar(), SwapStar())) == Seq(SwapStar(), UniteStar())
    assert adjoint(Inv(NOT)) == NOT

    for name, c in builtin_library().items():
        d, e = SIGNATURES[name]
        assert adjoint(adjoint(c)) == c
        assert infer(adjoint(c), dom=e) == (e, d)

def _inv_free(c):
    # same combinator, with every !x written out as adjoint(x)
    if isinstance(c, Inv):
        return adjoint(_inv_free(c.c))
    if isinstance(c, (Seq, ParPlus, ParStar)):
        return type(c)(_inv_free(c.c1), _inv_free(c.c2))
    return c

@given(typed_combs)
@settings(max_examples=300, deadline=None)
def test_adjoint_involution(cd):
    c, dom = cd
    c = _inv_free(c)
    assert not any(isinstance(s, Inv) for s in _subterms(c))
    assert adjoint(adjoint(c)) == c

@given(typed_combs)
@settings(max_examples=300, deadline=None)
def test_adjoint_swaps_type(cd):
    c, dom = cd
    d, e = infer(c, dom=dom)
    assert d == dom
    assert infer(adjoint(c), dom=e) == (e, d)
    assert infer(Inv(c), dom=e) == (e, d)

def _subterms(c):
    todo = [c]
    while todo:
        c = todo.pop()
        yield c
        if isinstance(c, Inv):
            todo.append(c.c)
        elif isinstance(c, (Seq, ParPlus, ParStar)):
            todo.extend([c.c1, c.c2])

@pytest.mark.parametrize('c, text', [
    (Seq(Seq(Id(), Id()), Id()), 'id ; id ; id'),
    (Seq(Id(), Seq(Id(), Id())), 'id ; (id ; id)'),
    (ParPlus(ParStar(Id(), Id()), Id()), 'id * id + id'),
    (ParStar(ParPlus(Id(), Id()), Id()), '(id + id) * id'),
    (Inv(Seq(Id(), Id())), '!(id ; id)'),
    (Inv(Inv(SwapStar())), '!!swap*'),
    (ParStar(Inv(Dist()), UniteStar()), '!dist * unite*'),
    (NOT, 'unfold2 ; swap+ ; fold2'),
])
def test_pretty(c, text):
    assert pretty(c) == text
    assert parse_comb(text) == c

def test_pretty_names():
    names = {'not': NOT, 'cnot': CNOT}
    assert pretty(Seq(NOT, NOT), names) == 'not ; not'
    assert pretty(NOT3, names) == 'uniti* ; (swap* ; (not * id ; (swap* ; unite*)))'
    assert pretty(ParStar(Id(), CNOT), names) == 'id * cnot'

@given(typed_combs)
@settings(max_examples=1000, deadline=None)
def test_pretty_parses_back(cd):
    c, dom = cd
    assert parse_comb(pretty(c)) == c

def test_render_type():
    assert str(Sum(Prod(TWO, TWO), ONE)) == '2 * 2 + 1'
    assert str(Prod(Sum(TWO, ONE), TWO)) == '(2 + 1) * 2'
    assert str(Prod(TWO, Prod(TWO, TWO))) == '2 * (2 * 2)'

@pytest.mark.parametrize('text, t', [
    ('2', TWO),
    ('2 * 2 + 1', Sum(B2, ONE)),
    ('1 + 2 + 0', Sum(Sum(ONE, TWO), ZERO)),
    ('2 * (2 * 2)', B3),
])
def test_parse_type(text, t):
    assert parse_type(text) == t

@pytest.mark.parametrize('text, v', [
    ('()', UNIT),
    ('0b', ZERO2),
    ('inl ()', InL(UNIT)),
    ('inr inl 1b', InR(InL(ONE2))),
    ('(1b,(1b,0b))', Pair(ONE2, Pair(ONE2, ZERO2))),
    ('( 1b , 0b )', Pair(ONE2, ZERO2)),
])
def test_parse_value(text, v):
    assert parse_value(text) == v

def test_render_value():
    assert str(Pair(ONE2, Pair(ONE2, ZERO2))) == '(1b,(1b,0b))'
    assert str(InR(InL(ONE2))) == 'inr inl 1b'
    assert str(UNIT) == '()'

def test_primitives_vs_names():
    # 'id' is a primitive, 'idx' a (missing) name; 'unite' needs its star
    assert parse_comb('id') == Id()
    with pytest.raises(PiSyntaxError, match='unknown name'):
        parse_comb('idx')
    with pytest.raises(PiSyntaxError, match='unknown name'):
        parse_comb('unite')
    assert parse_comb('fold2 ; unfold2') == Seq(FoldBool(), UnfoldBool())

def test_syntax_error():
    with pytest.raises(PiSyntaxError) as ee:
        parse_comb('id ;\n ; id')
    assert ee.value.line == 2
    assert ee.value.column == 2
    assert ee.value.exit_code == 2

    with pytest.raises(PiSyntaxError):
        parse_comb('(id')
    with pytest.raises(PiSyntaxError):
        parse_value('2b')

def test_long_chain():
    # 2000 nots in a row parse to a left-leaning spine
    c = parse_comb(' ; '.join(['not'] * 2000))
    n = 0
    while c != NOT:
        assert c.c2 == NOT
        c = c.c1
        n += 1
    assert n == 1999

    prog = parse_program('def a = not\nmain = ' + ' ; '.join(['a'] * 2000) + '\n')
    assert prog.main.c2 == NOT

def test_program():
    prog = parse_program('''
        -- flip both wires
        def both = not * not
        def twice = both ; both
        main = twice ; cnot
    ''')
    assert list(prog.defs) == ['both', 'twice']
    assert prog.defs['twice'] == Seq(ParStar(NOT, NOT), ParStar(NOT, NOT))
    assert prog.main == Seq(prog.defs['twice'], CNOT)

    # shadowing the library is fine, just not twice in one file
    assert parse_program('def not = id').defs['not'] == Id()
    with pytest.raises(PiSyntaxError, match='defined twice'):
        parse_program('def a = id\ndef a = id')

    # no forward references
    with pytest.raises(PiSyntaxError, match='unknown name') as ee:
        parse_program('def a = b\ndef b = id')
    assert ee.value.line == 1

    assert parse_program('').main is None

# EOF
