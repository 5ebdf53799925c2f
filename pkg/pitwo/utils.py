#
# (c) Copyright 2026 by the pitwo developers.
#
# utils.py
#
# Term generators: exhaustive enumeration (by size) of one-type terms and of
# level-2 terms, plus random well-typed terms and random derivations.
#
from functools import lru_cache
from .syntax import ONE, TWO, Two, Sum, Prod, type_size
from .syntax import Id, SwapPlus, SwapStar, UniteStar, UnitiStar, Dist, Factor
from .syntax import FoldBool, UnfoldBool, Inv, Seq, ParPlus, ParStar, adjoint, infer
from .library import NOT
from .rewrite import Derivation, applicable_steps, apply_step
from .pi2 import Id2, Inv2, Seq2, Idl, Idr, Assoc, Par2, InvCong, InvRightUnit, InvLeftUnit
from .pi2 import InvId, InvNot, InvSeq, InvInv, endpoints2
from .constants import RANDOM_TERM_DEPTH, MAX_EXHAUSTIVE_CARRIER
from .exceptions import BadPosition, PatternMismatch, IllTypedInstance

# starting points for random extended terms; every carrier has at most 16 elements
RANDOM_START_TYPES = (
    ONE,
    TWO,
    Sum(TWO, TWO),
    Sum(ONE, TWO),
    Prod(TWO, TWO),
    Prod(Sum(ONE, TWO), TWO),
    Sum(Prod(TWO, TWO), TWO),
    Prod(TWO, Prod(TWO, TWO)),
    Prod(Prod(TWO, TWO), Prod(TWO, TWO)),
)
assert all(type_size(t) <= 16 for t in RANDOM_START_TYPES)

#
# One-type terms
#
@lru_cache(maxsize=None)
def _pi2_of_size(n):
    if n < 1:
        return ()
    if n == 1:
        return (Id(), NOT)

    rv = [Inv(c) for c in _pi2_of_size(n-1)]
    for k in range(1, n-1):
        rv.extend(Seq(a, b) for a in _pi2_of_size(k) for b in _pi2_of_size(n-1-k))
    return tuple(rv)

def enumerate_pi2(max_size):
    # every term of size <= max_size, smallest first
    rv = []
    for n in range(1, max_size+1):
        rv.extend(_pi2_of_size(n))
    return rv

def random_pi2(rng, size):
    # a term of exactly this size (size >= 1)
    if size <= 1:
        return rng.choice((Id(), NOT))
    if size == 2 or rng.random() < 0.3:
        return Inv(random_pi2(rng, size-1))

    k = rng.randint(1, size-2)
    return Seq(random_pi2(rng, k), random_pi2(rng, size-1-k))

#
# Level-2 terms
#
_UNARY1 = (Id2, Idl, Idr, InvRightUnit, InvLeftUnit, InvInv)

@lru_cache(maxsize=None)
def _comb2_of_size(n):
    # (term, endpoints) pairs; only well-formed terms are kept
    if n < 1:
        return ()

    rv = []
    if n == 1:
        rv.extend([InvId(), InvNot()])

    for ctor in _UNARY1:
        rv.extend(ctor(p) for p in _pi2_of_size(n-1))

    for i in range(1, n-1):
        for j in range(1, n-1-i):
            k = n-1-i-j
            rv.extend(Assoc(p, q, r) for p in _pi2_of_size(i)
                                     for q in _pi2_of_size(j) for r in _pi2_of_size(k))

    for i in range(1, n-1):
        rv.extend(InvSeq(p, q) for p in _pi2_of_size(i) for q in _pi2_of_size(n-1-i))

    rv = [(u, endpoints2(u)) for u in rv]

    for u, (a, b) in _comb2_of_size(n-1):
        rv.append((Inv2(u), (b, a)))
        rv.append((InvCong(u), (Inv(a), Inv(b))))

    for i in range(1, n-1):
        for u, (a1, b1) in _comb2_of_size(i):
            for v, (a2, b2) in _comb2_of_size(n-1-i):
                rv.append((Par2(u, v), (Seq(a1, a2), Seq(b1, b2))))
                if b1 == a2:
                    rv.append((Seq2(u, v), (a1, b2)))

    return tuple(rv)

def enumerate_comb2(max_size):
    # every well-formed level-2 term of size <= max_size
    rv = []
    for n in range(1, max_size+1):
        rv.extend(u for u, _ in _comb2_of_size(n))
    return rv

#
# Random extended terms
#
def _prim_at(rng, dom):
    # a primitive that accepts dom
    choices = [Id(), UnitiStar()]
    if isinstance(dom, Two):
        choices.append(UnfoldBool())
    if isinstance(dom, Sum):
        choices.append(SwapPlus())
        if dom.left == ONE and dom.right == ONE:
            choices.append(FoldBool())
        if isinstance(dom.left, Prod) and isinstance(dom.right, Prod) \
                and dom.left.right == dom.right.right:
            choices.append(Factor())
    if isinstance(dom, Prod):
        choices.append(SwapStar())
        if dom.left == ONE:
            choices.append(UniteStar())
        if isinstance(dom.left, Sum):
            choices.append(Dist())
    return rng.choice(choices)

def random_comb(rng, dom, depth=RANDOM_TERM_DEPTH):
    # A random combinator with domain dom. Its codomain has the same carrier size.
    assert type_size(dom) <= MAX_EXHAUSTIVE_CARRIER

    if depth <= 0:
        return _prim_at(rng, dom)

    pick = rng.random()
    if pick < 0.2:
        return _prim_at(rng, dom)

    if pick < 0.55:
        c1 = random_comb(rng, dom, depth-1)
        return Seq(c1, random_comb(rng, infer(c1, dom=dom)[1], depth-1))

    if pick < 0.7:
        # domain of !c is the codomain of c
        return Inv(adjoint(random_comb(rng, dom, depth-1)))

    if isinstance(dom, Sum):
        return ParPlus(random_comb(rng, dom.left, depth-1), random_comb(rng, dom.right, depth-1))
    if isinstance(dom, Prod):
        return ParStar(random_comb(rng, dom.left, depth-1), random_comb(rng, dom.right, depth-1))

    return _prim_at(rng, dom)

def random_derivation(rng, start, dom=None, length=8, name='random'):
    # walk `length` valid rewrites from start; stops early if stuck
    dom = infer(start, dom=dom)[0]

    term = start
    steps = []
    for _ in range(length):
        options = applicable_steps(term)
        rng.shuffle(options)
        for step in options:
            try:
                nxt = apply_step(term, step, dom=dom)
            except (BadPosition, PatternMismatch, IllTypedInstance):
                continue
            break
        else:
            break
        steps.append(step)
        term = nxt

    return Derivation(name, start, tuple(steps), term, dom=dom)

# EOF
