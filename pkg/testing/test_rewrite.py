#
# (c) Copyright 2026 by the pitwo developers.
#
# Rewriting at positions and checking whole derivations.
#
import os, random, pytest
from dataclasses import replace
from hypothesis import given, settings
from hypothesis import strategies as st
from pitwo.syntax import TWO, Id, SwapStar, UnitiStar, UniteStar, Inv, Seq, ParStar
from pitwo.rewrite import *
from pitwo.library import NOT, NOT3, NOT_OPT, display_names
from pitwo.parser import parse_derivations, parse_comb
from pitwo.utils import random_derivation
from pitwo.exceptions import BadPosition, PatternMismatch, FinalMismatch
from pitwo.constants import DISPLAY_NAMES
from conftest import typed_combs

BUNDLED = os.path.join(os.path.dirname(__file__), '..', 'pitwo', 'data', 'notopt.pid')

def test_positions():
    c = Seq(Id(), Seq(NOT, Inv(Id())))
    assert subterm_at(c, ()) == c
    assert subterm_at(c, (1, 1, 0)) == Id()
    assert replace_at(c, (1, 0), Id()) == Seq(Id(), Seq(Id(), Inv(Id())))
    assert list(all_positions(Seq(Id(), Inv(Id())))) == [(), (0,), (1,), (1, 0)]

    with pytest.raises(BadPosition):
        subterm_at(c, (2,))
    with pytest.raises(BadPosition):
        replace_at(c, (0, 0), Id())

@pytest.mark.parametrize('rule, direction, before, after', [
    (Rule.AssocL, FWD, 'id ; (not ; id)', 'id ; not ; id'),
    (Rule.AssocR, FWD, 'id ; not ; id', 'id ; (not ; id)'),
    (Rule.AssocL, BWD, 'id ; not ; id', 'id ; (not ; id)'),
    (Rule.IdL, FWD, 'id ; not', 'not'),
    (Rule.IdL, BWD, 'not', 'id ; not'),
    (Rule.IdR, FWD, 'not ; id', 'not'),
    (Rule.CancelAdj, FWD, 'not ; !not', 'id'),
    (Rule.CancelAdj, FWD, '!not ; not', 'id'),
    (Rule.CancelAdj, FWD, 'fold2 ; unfold2', 'id'),
    (Rule.CancelAdj, FWD, 'cnot ; !cnot', 'id'),
    (Rule.SwapNat, FWD, 'swap* ; (not * cnot)', 'cnot * not ; swap*'),
    (Rule.SwapNat, BWD, 'cnot * not ; swap*', 'swap* ; (not * cnot)'),
    (Rule.UnitiNat, FWD, 'uniti* ; (id * not)', 'not ; uniti*'),
    (Rule.UnitiNat, BWD, 'not ; uniti*', 'uniti* ; (id * not)'),
])
def test_rules(rule, direction, before, after):
    got = apply_step(parse_comb(before), Step(rule, (), direction))
    assert got == parse_comb(after)

def test_rule_failures():
    with pytest.raises(PatternMismatch):
        apply_step(NOT, Step(Rule.IdL, (), FWD))
    with pytest.raises(PatternMismatch):
        apply_step(Seq(NOT, NOT), Step(Rule.CancelAdj, (), FWD))

    # cancelAdj has no backward form
    with pytest.raises(PatternMismatch):
        apply_step(Id(), Step(Rule.CancelAdj, (), BWD), dom=TWO)

    with pytest.raises(BadPosition):
        apply_step(NOT, Step(Rule.IdL, (3,), FWD))

def test_applicable():
    found = applicable_steps(Seq(Id(), NOT))
    assert Step(Rule.IdL, (), FWD) in found
    assert Step(Rule.CancelAdj, (), FWD) not in found
    # backward idL / idR fit anywhere
    assert Step(Rule.IdR, (1,), BWD) in found

def test_not_opt():
    trace = check_derivation(NOT_OPT)
    assert len(NOT_OPT.steps) == 11
    assert len(trace) == 12
    assert trace[0] == NOT3
    assert trace[-1] == NOT
    assert trace[1] == Seq(UnitiStar(), Seq(Seq(SwapStar(), ParStar(NOT, Id())),
                                            Seq(SwapStar(), UniteStar())))

def test_bundled_file():
    with open(BUNDLED, 'rt') as fd:
        derivs = parse_derivations(fd.read())
    assert derivs == [NOT_OPT]

def test_render_round_trip():
    text = render_derivation(NOT_OPT, display_names(DISPLAY_NAMES))
    assert text.startswith('derivation notOpt : uniti* ; (swap* ;')
    assert '  step cancelAdj at [1,1,0] fwd\n' in text
    assert '  step idR at [] fwd\n' in text
    assert parse_derivations(text) == [NOT_OPT]

def test_missing_step():
    # drop step 5: step 6 no longer matches, and is reported as step 5
    bad = replace(NOT_OPT, steps=NOT_OPT.steps[:4] + NOT_OPT.steps[5:])
    with pytest.raises(PatternMismatch) as ee:
        check_derivation(bad)
    assert ee.value.step == 5
    assert str(ee.value).startswith('step 5: ')

def test_wrong_end():
    bad = replace(NOT_OPT, claimed_end=Seq(NOT, Id()))
    with pytest.raises(FinalMismatch) as ee:
        check_derivation(bad)
    assert ee.value.step == 11

    # dropping the last step leaves us short
    with pytest.raises(FinalMismatch):
        check_derivation(replace(NOT_OPT, steps=NOT_OPT.steps[:-1]))

def test_ambient_type():
    d = Derivation('ids', Seq(Id(), Id()), (Step(Rule.IdL, (), FWD),), Id(), dom=TWO)
    assert check_derivation(d) == [Seq(Id(), Id()), Id()]

    text = render_derivation(d)
    assert text.startswith('derivation ids at 2 : id ; id => id\n')
    assert parse_derivations(text) == [d]

def test_verbose(quiet_rewrites, capsys):
    quiet_rewrites.VERBOSE = True
    check_derivation(NOT_OPT)
    err = capsys.readouterr().err
    assert '>> assocL at [1] fwd' in err
    assert err.count('<< ') == 12

def test_simplify():
    c = Seq(Id(), Seq(NOT, Inv(NOT)))
    d = simplify(c)
    assert d.claimed_end == Id()
    assert d.dom == TWO
    assert [s.rule for s in d.steps] == [Rule.IdL, Rule.CancelAdj]
    check_derivation(d)

    # nothing to do
    assert simplify(NOT).steps == ()

@given(typed_combs)
@settings(max_examples=100, deadline=None)
def test_simplify_random(cd):
    c, dom = cd
    d = simplify(c, dom=dom)
    check_derivation(d)
    assert not any(s.direction == FWD and s.rule in (Rule.IdL, Rule.IdR, Rule.CancelAdj)
                        for s in applicable_steps(d.claimed_end))

def test_random_derivations():
    rng = random.Random(99)
    for _ in range(25):
        d = random_derivation(rng, NOT3, length=10)
        check_derivation(d)
        assert parse_derivations(render_derivation(d)) == [d]

@given(typed_combs, st.randoms(use_true_random=False))
@settings(max_examples=100, deadline=None)
def test_long_random_derivations(cd, rng):
    c, dom = cd
    d = random_derivation(rng, c, dom=dom, length=20)
    assert len(d.steps) <= 20
    trace = check_derivation(d)
    assert trace[-1] == d.claimed_end
    assert parse_derivations(render_derivation(d)) == [d]

# EOF
