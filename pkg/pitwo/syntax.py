#
# (c) Copyright 2026 by the pitwo developers.
#
# syntax.py
#
# Abstract syntax for the finite Π fragment: types, 1-combinators, type
# inference (by local unification), structural adjoint and the pretty printer.
#
from dataclasses import dataclass
from .exceptions import TypeMismatch, Ambiguous

#
# Types
#
class FinType:
    def __str__(self):
        return render_type(self)

@dataclass(frozen=True)
class Zero(FinType):
    pass

@dataclass(frozen=True)
class One(FinType):
    pass

@dataclass(frozen=True)
class Two(FinType):
    pass

@dataclass(frozen=True)
class Sum(FinType):
    left: FinType
    right: FinType

@dataclass(frozen=True)
class Prod(FinType):
    left: FinType
    right: FinType

ZERO, ONE, TWO = Zero(), One(), Two()

# only ever seen inside infer()
@dataclass(frozen=True)
class _TVar(FinType):
    n: int

def type_size(t):
    # number of values in the carrier
    if isinstance(t, Zero): return 0
    if isinstance(t, One): return 1
    if isinstance(t, Two): return 2
    if isinstance(t, Sum): return type_size(t.left) + type_size(t.right)
    if isinstance(t, Prod): return type_size(t.left) * type_size(t.right)
    raise TypeError(t)

def render_type(t, ctx=0):
    # same precedence as combinators: '*' binds tighter than '+'
    if isinstance(t, Zero): return '0'
    if isinstance(t, One): return '1'
    if isinstance(t, Two): return '2'
    if isinstance(t, _TVar): return 't%d' % t.n

    if isinstance(t, Sum):
        prec, rv = 1, render_type(t.left, 1) + ' + ' + render_type(t.right, 2)
    else:
        prec, rv = 2, render_type(t.left, 2) + ' * ' + render_type(t.right, 3)

    return '(%s)' % rv if prec < ctx else rv

#
# 1-combinators
#
class Comb1E:
    def __str__(self):
        return pretty(self)

@dataclass(frozen=True)
class Id(Comb1E):
    pass

@dataclass(frozen=True)
class SwapPlus(Comb1E):
    pass

@dataclass(frozen=True)
class SwapStar(Comb1E):
    pass

@dataclass(frozen=True)
class UniteStar(Comb1E):
    pass

@dataclass(frozen=True)
class UnitiStar(Comb1E):
    pass

@dataclass(frozen=True)
class Dist(Comb1E):
    pass

@dataclass(frozen=True)
class Factor(Comb1E):
    pass

@dataclass(frozen=True)
class FoldBool(Comb1E):
    pass

@dataclass(frozen=True)
class UnfoldBool(Comb1E):
    pass

@dataclass(frozen=True)
class Inv(Comb1E):
    c: Comb1E

@dataclass(frozen=True)
class Seq(Comb1E):
    c1: Comb1E
    c2: Comb1E

@dataclass(frozen=True)
class ParPlus(Comb1E):
    c1: Comb1E
    c2: Comb1E

@dataclass(frozen=True)
class ParStar(Comb1E):
    c1: Comb1E
    c2: Comb1E

PRIMITIVES = (Id, SwapPlus, SwapStar, UniteStar, UnitiStar, Dist, Factor, FoldBool, UnfoldBool)

# concrete syntax of each primitive
PRIM_TEXT = {
    Id: 'id',
    SwapPlus: 'swap+',
    SwapStar: 'swap*',
    UniteStar: 'unite*',
    UnitiStar: 'uniti*',
    Dist: 'dist',
    Factor: 'factor',
    FoldBool: 'fold2',
    UnfoldBool: 'unfold2',
}
TEXT_PRIM = {v: k for k, v in PRIM_TEXT.items()}

def children(c):
    # sub-combinators in position order (0 = left/only child)
    if isinstance(c, Inv):
        return (c.c,)
    if isinstance(c, (Seq, ParPlus, ParStar)):
        return (c.c1, c.c2)
    return ()

def comb_size(c):
    return 1 + sum(comb_size(k) for k in children(c))

#
# Type inference
#
class _Unifier:
    def __init__(self):
        self.subst = {}
        self.count = 0

    def fresh(self):
        self.count += 1
        return _TVar(self.count)

    def walk(self, t):
        while isinstance(t, _TVar) and t in self.subst:
            t = self.subst[t]
        return t

    def resolve(self, t):
        t = self.walk(t)
        if isinstance(t, (Sum, Prod)):
            return type(t)(self.resolve(t.left), self.resolve(t.right))
        return t

    def occurs(self, v, t):
        t = self.walk(t)
        if t == v:
            return True
        if isinstance(t, (Sum, Prod)):
            return self.occurs(v, t.left) or self.occurs(v, t.right)
        return False

    def unify(self, a, b):
        a, b = self.walk(a), self.walk(b)
        if a == b:
            return True
        if isinstance(a, _TVar):
            if self.occurs(a, b):
                return False
            self.subst[a] = b
            return True
        if isinstance(b, _TVar):
            return self.unify(b, a)
        if isinstance(a, (Sum, Prod)) and type(a) is type(b):
            return self.unify(a.left, b.left) and self.unify(a.right, b.right)
        return False

def _prim_type(c, u):
    # iso type of each primitive, with fresh variables
    a, b, d = u.fresh(), u.fresh(), u.fresh()

    if isinstance(c, Id):           return a, a
    if isinstance(c, SwapPlus):     return Sum(a, b), Sum(b, a)
    if isinstance(c, SwapStar):     return Prod(a, b), Prod(b, a)
    if isinstance(c, UniteStar):    return Prod(ONE, a), a
    if isinstance(c, UnitiStar):    return a, Prod(ONE, a)
    if isinstance(c, Dist):         return Prod(Sum(a, b), d), Sum(Prod(a, d), Prod(b, d))
    if isinstance(c, Factor):       return Sum(Prod(a, d), Prod(b, d)), Prod(Sum(a, b), d)
    if isinstance(c, FoldBool):     return Sum(ONE, ONE), TWO
    if isinstance(c, UnfoldBool):   return TWO, Sum(ONE, ONE)

    raise TypeError(c)

def _infer(c, u):
    if isinstance(c, PRIMITIVES):
        return _prim_type(c, u)

    if isinstance(c, Inv):
        dom, cod = _infer(c.c, u)
        return cod, dom

    if isinstance(c, Seq):
        a, b = _infer(c.c1, u)
        b2, d = _infer(c.c2, u)
        if not u.unify(b, b2):
            raise TypeMismatch('cannot compose %s ; %s: %s is not %s' % (
                        pretty(c.c1), pretty(c.c2), u.resolve(b), u.resolve(b2)))
        return a, d

    if isinstance(c, (ParPlus, ParStar)):
        a1, b1 = _infer(c.c1, u)
        a2, b2 = _infer(c.c2, u)
        ty = Sum if isinstance(c, ParPlus) else Prod
        return ty(a1, a2), ty(b1, b2)

    raise TypeError(c)

def _has_vars(t):
    if isinstance(t, _TVar):
        return True
    if isinstance(t, (Sum, Prod)):
        return _has_vars(t.left) or _has_vars(t.right)
    return False

def infer(c, dom=None, cod=None):
    # Returns (dom, cod). Optional dom/cod are the usage context; they
    # are unified in before we insist every type variable is fixed.
    u = _Unifier()
    d, e = _infer(c, u)

    for want, got, label in [(dom, d, 'domain'), (cod, e, 'codomain')]:
        if want is not None and not u.unify(got, want):
            raise TypeMismatch('%s of %s is %s, not %s' % (label, pretty(c), u.resolve(got), want))

    d, e = u.resolve(d), u.resolve(e)
    if _has_vars(d) or _has_vars(e):
        raise Ambiguous(f'type of {pretty(c)} is not fixed: {d} <-> {e}')

    return d, e

#
# Structural inverse
#
_ADJOINT_PRIM = {
    Id(): Id(),
    SwapPlus(): SwapPlus(),
    SwapStar(): SwapStar(),
    UniteStar(): UnitiStar(),
    UnitiStar(): UniteStar(),
    Dist(): Factor(),
    Factor(): Dist(),
    FoldBool(): UnfoldBool(),
    UnfoldBool(): FoldBool(),
}

def adjoint(c):
    if isinstance(c, PRIMITIVES):
        return _ADJOINT_PRIM[c]
    if isinstance(c, Inv):
        return c.c
    if isinstance(c, Seq):
        return Seq(adjoint(c.c2), adjoint(c.c1))
    if isinstance(c, ParPlus):
        return ParPlus(adjoint(c.c1), adjoint(c.c2))
    if isinstance(c, ParStar):
        return ParStar(adjoint(c.c1), adjoint(c.c2))

    raise TypeError(c)

#
# Pretty printer
#
# precedence: '!' > '*' > '+' > ';' and binary operators are left-associative
PREC_SEQ, PREC_PLUS, PREC_STAR, PREC_UNARY = 1, 2, 3, 4

def pretty(c, names=None):
    # Canonical text, re-parsable by parse_comb. Optional names maps
    # name -> combinator; any subterm equal to one prints as the name.
    rev = {v: k for k, v in names.items()} if names else {}
    return _pp(c, rev, 0)

def _pp(c, rev, ctx):
    if rev and c in rev:
        return rev[c]

    if isinstance(c, PRIMITIVES):
        return PRIM_TEXT[type(c)]

    if isinstance(c, Inv):
        return '!' + _pp(c.c, rev, PREC_UNARY)

    if isinstance(c, Seq):
        prec, op = PREC_SEQ, ' ; '
    elif isinstance(c, ParPlus):
        prec, op = PREC_PLUS, ' + '
    else:
        prec, op = PREC_STAR, ' * '

    rv = _pp(c.c1, rev, prec) + op + _pp(c.c2, rev, prec+1)

    return '(%s)' % rv if prec < ctx else rv

# EOF
