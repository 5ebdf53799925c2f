#
# (c) Copyright 2026 by the pitwo developers.
#
# pi2.py
#
# Level-2 theory of the one-type fragment (id, not, inverse, sequencing):
# level-2 combinators, their endpoints, the canonical-form procedure with
# proof witnesses, and syntactic completeness. Also the s-expression format
# used to print and read witnesses.
#
from enum import Enum
from dataclasses import dataclass, fields
from .syntax import TWO, Id, Inv, Seq
from .semantics import semantically_equal
from .library import NOT
from .parser import parse_sexpr
from .constants import COMB2_TAGS
from .exceptions import EndpointMismatch, NotPi2, SemanticMismatch, SoundnessViolation
from .exceptions import PiSyntaxError

class Which(Enum):
    ID = 'ID'
    NOT = 'NOT'

    def __str__(self):
        return self.value

#
# 1-combinators of the fragment
#
def is_pi2(c):
    # 'not' is an expansion, so look for it before treating Seq as sequencing
    if c == NOT or c == Id():
        return True
    if isinstance(c, Inv):
        return is_pi2(c.c)
    if isinstance(c, Seq):
        return is_pi2(c.c1) and is_pi2(c.c2)
    return False

def pi2_size(c):
    if c == NOT or c == Id():
        return 1
    if isinstance(c, Inv):
        return 1 + pi2_size(c.c)
    if isinstance(c, Seq):
        return 1 + pi2_size(c.c1) + pi2_size(c.c2)
    raise NotPi2(f'{c} is not in the one-type fragment')

def refine(which):
    return Id() if which == Which.ID else NOT

#
# Level-2 combinators
#
class Comb2:
    def __str__(self):
        return render_comb2(self)

@dataclass(frozen=True)
class Id2(Comb2):
    p: object

@dataclass(frozen=True)
class Inv2(Comb2):
    u: Comb2

@dataclass(frozen=True)
class Seq2(Comb2):
    u: Comb2
    v: Comb2

@dataclass(frozen=True)
class Idl(Comb2):
    p: object

@dataclass(frozen=True)
class Idr(Comb2):
    p: object

@dataclass(frozen=True)
class Assoc(Comb2):
    p: object
    q: object
    r: object

@dataclass(frozen=True)
class Par2(Comb2):
    u: Comb2
    v: Comb2

@dataclass(frozen=True)
class InvCong(Comb2):
    u: Comb2

@dataclass(frozen=True)
class InvRightUnit(Comb2):
    p: object

@dataclass(frozen=True)
class InvLeftUnit(Comb2):
    p: object

@dataclass(frozen=True)
class InvId(Comb2):
    pass

@dataclass(frozen=True)
class InvNot(Comb2):
    pass

@dataclass(frozen=True)
class InvSeq(Comb2):
    p: object
    q: object

@dataclass(frozen=True)
class InvInv(Comb2):
    p: object

COMB2_TYPES = (Id2, Inv2, Seq2, Idl, Idr, Assoc, Par2, InvCong,
                InvRightUnit, InvLeftUnit, InvId, InvNot, InvSeq, InvInv)

def comb2_size(u):
    # one per constructor, plus every argument at its own level
    rv = 1
    for f in fields(u):
        arg = getattr(u, f.name)
        rv += comb2_size(arg) if isinstance(arg, Comb2) else pi2_size(arg)
    return rv

def endpoints2(u):
    # (lhs, rhs); only sequencing can fail
    if isinstance(u, Id2):
        return u.p, u.p

    if isinstance(u, Inv2):
        a, b = endpoints2(u.u)
        return b, a

    if isinstance(u, Seq2):
        a, b = endpoints2(u.u)
        b2, c = endpoints2(u.v)
        if b != b2:
            raise EndpointMismatch(f'cannot chain {render_comb2(u.u)} into {render_comb2(u.v)}: '
                                   f'{render_comb1(b)} is not {render_comb1(b2)}')
        return a, c

    if isinstance(u, Idl):
        return Seq(Id(), u.p), u.p
    if isinstance(u, Idr):
        return Seq(u.p, Id()), u.p
    if isinstance(u, Assoc):
        return Seq(Seq(u.p, u.q), u.r), Seq(u.p, Seq(u.q, u.r))

    if isinstance(u, Par2):
        a1, b1 = endpoints2(u.u)
        a2, b2 = endpoints2(u.v)
        return Seq(a1, a2), Seq(b1, b2)

    if isinstance(u, InvCong):
        a, b = endpoints2(u.u)
        return Inv(a), Inv(b)

    if isinstance(u, InvRightUnit):
        return Seq(u.p, Inv(u.p)), Id()
    if isinstance(u, InvLeftUnit):
        return Seq(Inv(u.p), u.p), Id()
    if isinstance(u, InvId):
        return Inv(Id()), Id()
    if isinstance(u, InvNot):
        return Inv(NOT), NOT
    if isinstance(u, InvSeq):
        return Inv(Seq(u.p, u.q)), Seq(Inv(u.q), Inv(u.p))
    if isinstance(u, InvInv):
        return Inv(Inv(u.p)), u.p

    raise TypeError(u)

def check2(u):
    # Well formed, and both sides mean the same. Returns the endpoints.
    lhs, rhs = endpoints2(u)

    for side in (lhs, rhs):
        if not is_pi2(side):
            raise NotPi2(f'{side} is not in the one-type fragment')

    if not semantically_equal(lhs, rhs, dom=TWO):
        raise SoundnessViolation(f'{render_comb2(u)} relates terms that differ: '
                                 f'{render_comb1(lhs)} vs {render_comb1(rhs)}')

    return lhs, rhs

@dataclass(frozen=True)
class Trunc:
    # the one level-3 combinator, between two parallel level-2 terms
    u: Comb2
    v: Comb2

    def __post_init__(self):
        if endpoints2(self.u) != endpoints2(self.v):
            raise EndpointMismatch(f'{self.u} and {self.v} are not parallel')

#
# Canonical forms
#
def not_not_id():
    # not ; not  <=>  !not ; not  <=>  id
    return Seq2(Par2(Inv2(InvNot()), Id2(NOT)), InvLeftUnit(NOT))

# joining two canonical forms under sequencing
_SEQ_TABLE = {
    (Which.ID, Which.ID): (Which.ID, lambda: Idl(Id())),
    (Which.ID, Which.NOT): (Which.NOT, lambda: Idl(NOT)),
    (Which.NOT, Which.ID): (Which.NOT, lambda: Idr(NOT)),
    (Which.NOT, Which.NOT): (Which.ID, not_not_id),
}

def canonical(c):
    # Returns (which, witness) where witness : c <=> refine(which)
    if c == Id():
        return Which.ID, Id2(Id())

    if c == NOT:
        return Which.NOT, Id2(NOT)

    if isinstance(c, Inv):
        which, u = canonical(c.c)
        return which, Seq2(InvCong(u), InvId() if which == Which.ID else InvNot())

    if isinstance(c, Seq):
        w1, u1 = canonical(c.c1)
        w2, u2 = canonical(c.c2)
        which, join = _SEQ_TABLE[(w1, w2)]
        return which, Seq2(Par2(u1, u2), join())

    raise NotPi2(f'{c} is not in the one-type fragment')

def complete1(p, q):
    # a level-2 term p <=> q, if there is one
    wp, up = canonical(p)
    wq, uq = canonical(q)
    if wp != wq:
        raise SemanticMismatch(f'{render_comb1(p)} is {wp} but {render_comb1(q)} is {wq}')
    return Seq2(up, Inv2(uq))

#
# S-expressions
#
_TAG_TYPE = {COMB2_TAGS[t.__name__]: t for t in COMB2_TYPES}

def render_comb1(c):
    if c == Id():
        return 'id'
    if c == NOT:
        return 'not'
    if isinstance(c, Inv):
        return f'(inv {render_comb1(c.c)})'
    if isinstance(c, Seq):
        return f'(seq {render_comb1(c.c1)} {render_comb1(c.c2)})'
    raise NotPi2(f'{c} is not in the one-type fragment')

def render_comb2(u):
    tag = COMB2_TAGS[type(u).__name__]
    args = [getattr(u, f.name) for f in fields(u)]
    if not args:
        return tag
    return '(%s %s)' % (tag, ' '.join(render_comb2(a) if isinstance(a, Comb2) else render_comb1(a)
                                            for a in args))

def _comb1_of(x):
    if x == 'id':
        return Id()
    if x == 'not':
        return NOT
    if isinstance(x, tuple):
        if x[0] == 'inv' and len(x) == 2:
            return Inv(_comb1_of(x[1]))
        if x[0] == 'seq' and len(x) == 3:
            return Seq(_comb1_of(x[1]), _comb1_of(x[2]))
    raise PiSyntaxError(f'not a 1-combinator: {x!r}')

def _comb2_of(x):
    head, args = (x, ()) if isinstance(x, str) else (x[0], x[1:])

    ty = _TAG_TYPE.get(head)
    if ty is None:
        raise PiSyntaxError(f'unknown level-2 constructor {head!r}')

    want = fields(ty)
    if len(args) != len(want):
        raise PiSyntaxError(f'{head} takes {len(want)} arguments, not {len(args)}')

    return ty(*[_comb2_of(a) if f.type is Comb2 else _comb1_of(a) for f, a in zip(want, args)])

def parse_comb2(text):
    return _comb2_of(parse_sexpr(text))

# EOF
