#
# (c) Copyright 2026 by the pitwo developers.
#
# library.py
#
# Builtin circuits: not, controlled f, cnot, toffoli, the six small 2 <-> 2
# programs, and the notOpt derivation (not3 ~> not).
#
from .syntax import TWO, Prod, Id, SwapPlus, SwapStar, UniteStar, UnitiStar, Dist, Factor
from .syntax import FoldBool, UnfoldBool, Seq, ParPlus, ParStar
from .rewrite import Derivation, Rule, Step, FWD

# the one place 'not' is spelled out
NOT = Seq(Seq(UnfoldBool(), SwapPlus()), FoldBool())

def controlled(f):
    # 2 * a <-> 2 * a: identity when the first bit is 0b, f on the rest when 1b
    return Seq(ParStar(UnfoldBool(), Id()),
            Seq(Dist(),
            Seq(ParPlus(Id(), ParStar(Id(), f)),
            Seq(Factor(),
                ParStar(FoldBool(), Id())))))

CNOT = controlled(NOT)
TOFFOLI = controlled(CNOT)

def _through_unit(f):
    # uniti* ; swap* ; (f * id) ; swap* ; unite*   (right-nested)
    return Seq(UnitiStar(),
            Seq(SwapStar(),
            Seq(ParStar(f, Id()),
            Seq(SwapStar(), UniteStar()))))

ID1 = Seq(Id(), Id())
ID2 = Seq(NOT, Seq(Id(), NOT))
ID3 = _through_unit(Id())
NOT1 = Seq(Id(), NOT)
NOT2 = Seq(NOT, Seq(NOT, NOT))
NOT3 = _through_unit(NOT)

_TABLE = {
    'not': NOT,
    'cnot': CNOT,
    'toffoli': TOFFOLI,
    'id1': ID1,
    'id2': ID2,
    'id3': ID3,
    'not1': NOT1,
    'not2': NOT2,
    'not3': NOT3,
}

# declared endpoint types; several entries (id1, id3) can't fix these alone
SIGNATURES = {
    'not': (TWO, TWO),
    'cnot': (Prod(TWO, TWO), Prod(TWO, TWO)),
    'toffoli': (Prod(TWO, Prod(TWO, TWO)), Prod(TWO, Prod(TWO, TWO))),
}
for _n in ('id1', 'id2', 'id3', 'not1', 'not2', 'not3'):
    SIGNATURES[_n] = (TWO, TWO)

def builtin_library():
    # name -> combinator; a fresh dict each call
    return dict(_TABLE)

def display_names(wanted):
    # subset of the library for folding names back when printing
    return {n: _TABLE[n] for n in wanted}

# not3 <-> not, one step per line of the classic derivation
NOT_OPT = Derivation('notOpt', NOT3, (
    Step(Rule.AssocL,    (1,),         FWD),
    Step(Rule.SwapNat,   (1, 0),       FWD),
    Step(Rule.AssocR,    (1,),         FWD),
    Step(Rule.AssocL,    (1, 1),       FWD),
    Step(Rule.CancelAdj, (1, 1, 0),    FWD),
    Step(Rule.IdL,       (1, 1),       FWD),
    Step(Rule.AssocL,    (),           FWD),
    Step(Rule.UnitiNat,  (0,),         FWD),
    Step(Rule.AssocR,    (),           FWD),
    Step(Rule.CancelAdj, (1,),         FWD),
    Step(Rule.IdR,       (),           FWD),
), NOT)

# EOF
