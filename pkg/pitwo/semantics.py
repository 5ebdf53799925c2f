#
# (c) Copyright 2026 by the pitwo developers.
#
# semantics.py
#
# Denotational semantics: finite carriers, forward and backward evaluation,
# permutations, and extensional equality of combinators.
#
from dataclasses import dataclass
from .syntax import Zero, One, Two, Sum, Prod, infer, adjoint
from .syntax import Id, SwapPlus, SwapStar, UniteStar, UnitiStar, Dist, Factor
from .syntax import FoldBool, UnfoldBool, Inv, Seq, ParPlus, ParStar
from .exceptions import ValueTypeMismatch, EndpointMismatch, Ambiguous, TypeMismatch

#
# Values
#
class Value:
    def __str__(self):
        return render_value(self)

@dataclass(frozen=True)
class Unit(Value):
    pass

@dataclass(frozen=True)
class Zero2(Value):
    pass

@dataclass(frozen=True)
class One2(Value):
    pass

@dataclass(frozen=True)
class InL(Value):
    v: Value

@dataclass(frozen=True)
class InR(Value):
    v: Value

@dataclass(frozen=True)
class Pair(Value):
    v1: Value
    v2: Value

UNIT, ZERO2, ONE2 = Unit(), Zero2(), One2()

def render_value(v):
    if isinstance(v, Unit): return '()'
    if isinstance(v, Zero2): return '0b'
    if isinstance(v, One2): return '1b'
    if isinstance(v, InL): return 'inl ' + render_value(v.v)
    if isinstance(v, InR): return 'inr ' + render_value(v.v)
    if isinstance(v, Pair): return '(%s,%s)' % (render_value(v.v1), render_value(v.v2))
    raise TypeError(v)

def inhabits(v, t):
    if isinstance(t, Zero):
        return False
    if isinstance(t, One):
        return isinstance(v, Unit)
    if isinstance(t, Two):
        return isinstance(v, (Zero2, One2))
    if isinstance(t, Sum):
        return (isinstance(v, InL) and inhabits(v.v, t.left)) \
                or (isinstance(v, InR) and inhabits(v.v, t.right))
    if isinstance(t, Prod):
        return isinstance(v, Pair) and inhabits(v.v1, t.left) and inhabits(v.v2, t.right)
    raise TypeError(t)

def enumerate_type(t):
    # Canonical order: left injections first, products lexicographic
    # with the left component outermost. Perm indices refer to this.
    if isinstance(t, Zero):
        return []
    if isinstance(t, One):
        return [UNIT]
    if isinstance(t, Two):
        return [ZERO2, ONE2]
    if isinstance(t, Sum):
        return [InL(v) for v in enumerate_type(t.left)] \
                + [InR(v) for v in enumerate_type(t.right)]
    if isinstance(t, Prod):
        rights = enumerate_type(t.right)
        return [Pair(a, b) for a in enumerate_type(t.left) for b in rights]
    raise TypeError(t)

#
# Evaluation
#
def _bad(c, v):
    raise ValueTypeMismatch(f'{render_value(v)} does not fit {c}')

def _pair(c, v):
    if not isinstance(v, Pair):
        _bad(c, v)
    return v

def _run(c, v):
    # structural; assumes c is well typed and v fits its domain

    if isinstance(c, Id):
        return v

    if isinstance(c, SwapPlus):
        if isinstance(v, InL): return InR(v.v)
        if isinstance(v, InR): return InL(v.v)
        _bad(c, v)

    if isinstance(c, SwapStar):
        v = _pair(c, v)
        return Pair(v.v2, v.v1)

    if isinstance(c, UniteStar):
        v = _pair(c, v)
        if not isinstance(v.v1, Unit): _bad(c, v)
        return v.v2

    if isinstance(c, UnitiStar):
        return Pair(UNIT, v)

    if isinstance(c, Dist):
        a, rest = _pair(c, v).v1, v.v2
        if isinstance(a, InL): return InL(Pair(a.v, rest))
        if isinstance(a, InR): return InR(Pair(a.v, rest))
        _bad(c, v)

    if isinstance(c, Factor):
        if isinstance(v, (InL, InR)) and isinstance(v.v, Pair):
            return Pair(type(v)(v.v.v1), v.v.v2)
        _bad(c, v)

    if isinstance(c, FoldBool):
        if v == InL(UNIT): return ZERO2
        if v == InR(UNIT): return ONE2
        _bad(c, v)

    if isinstance(c, UnfoldBool):
        if isinstance(v, Zero2): return InL(UNIT)
        if isinstance(v, One2): return InR(UNIT)
        _bad(c, v)

    if isinstance(c, Inv):
        return _run(adjoint(c.c), v)

    if isinstance(c, Seq):
        return _run(c.c2, _run(c.c1, v))

    if isinstance(c, ParPlus):
        if isinstance(v, InL): return InL(_run(c.c1, v.v))
        if isinstance(v, InR): return InR(_run(c.c2, v.v))
        _bad(c, v)

    if isinstance(c, ParStar):
        v = _pair(c, v)
        return Pair(_run(c.c1, v.v1), _run(c.c2, v.v2))

    raise TypeError(c)

def eval_comb(c, v, dom=None, backward=False):
    # Run c on v. Backward runs the adjoint, so v must fit the codomain.
    d, e = infer(c, dom=(None if backward else dom), cod=(dom if backward else None))
    if backward:
        c, d = adjoint(c), e

    if not inhabits(v, d):
        raise ValueTypeMismatch(f'{render_value(v)} is not a value of type {d}')

    return _run(c, v)

#
# Permutations
#
class Perm:
    #
    # Bijection between two enumerated carriers of equal size: map[i] is the
    # index of the image of element i.
    #
    def __init__(self, mapping):
        self.map = tuple(mapping)
        self.carrier_size = len(self.map)
        assert sorted(self.map) == list(range(self.carrier_size)), 'not a bijection'

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    def __eq__(self, other):
        return isinstance(other, Perm) and self.map == other.map

    def __hash__(self):
        return hash(self.map)

    def __repr__(self):
        return 'Perm(%r)' % (list(self.map),)

    def then(self, other):
        # self first, then other
        assert self.carrier_size == other.carrier_size
        return Perm(other.map[i] for i in self.map)

    def inverse(self):
        rv = [0] * self.carrier_size
        for i, j in enumerate(self.map):
            rv[j] = i
        return Perm(rv)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.map))

    def cycles(self):
        # non-trivial cycles, each from its smallest member
        seen = set()
        rv = []
        for start in range(self.carrier_size):
            if start in seen or self.map[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            i = self.map[start]
            while i != start:
                cyc.append(i)
                seen.add(i)
                i = self.map[i]
            rv.append(tuple(cyc))
        return rv

    def render(self):
        lines = ['%d -> %d' % (i, j) for i, j in enumerate(self.map)]
        cyc = ''.join('(%s)' % ' '.join(str(i) for i in c) for c in self.cycles())
        lines.append('cycles: ' + (cyc or '()'))
        return '\n'.join(lines)

def to_perm(c, dom=None):
    d, e = infer(c, dom=dom)
    xs = enumerate_type(d)
    index = {y: i for i, y in enumerate(enumerate_type(e))}

    return Perm(index[_run(c, x)] for x in xs)

def _common_dom(c1, c2, dom):
    # pick an ambient domain from whichever side fixes it
    if dom is not None:
        return dom
    try:
        return infer(c1)[0]
    except Ambiguous:
        return infer(c2)[0]

def _type_at(c, dom):
    # c's own typing errors stay TypeMismatch; only a clash with dom is an endpoint problem
    try:
        infer(c)
    except Ambiguous:
        pass
    try:
        return infer(c, dom=dom)
    except TypeMismatch as exc:
        raise EndpointMismatch(f'{c} does not start at {dom}: {exc}')

def semantically_equal(c1, c2, dom=None):
    # extensional: same output on every element of the (finite) domain
    dom = _common_dom(c1, c2, dom)
    t1 = _type_at(c1, dom)
    t2 = _type_at(c2, dom)
    if t1 != t2:
        raise EndpointMismatch(f'{c1} : {t1[0]} <-> {t1[1]} but {c2} : {t2[0]} <-> {t2[1]}')

    return all(_run(c1, x) == _run(c2, x) for x in enumerate_type(dom))

# EOF
