#
# (c) Copyright 2026 by the pitwo developers.
#
# rewrite.py
#
# Equational rewriting for the extended fragment: local rules applied at a
# position, replay/checking of whole derivations, and a greedy simplifier.
#
import sys
from enum import Enum
from collections import namedtuple
from dataclasses import dataclass, replace
from .syntax import Id, SwapStar, UnitiStar, Inv, Seq, ParStar, children, adjoint, infer, pretty
from .semantics import to_perm
from .exceptions import PiError, IllTyped, BadPosition, PatternMismatch, IllTypedInstance
from .exceptions import FinalMismatch, SoundnessViolation

# Change this to see each rewrite as it happens (on stderr)
VERBOSE = False

class Rule(Enum):
    AssocL = 'assocL'
    AssocR = 'assocR'
    IdL = 'idL'
    IdR = 'idR'
    CancelAdj = 'cancelAdj'
    SwapNat = 'swapNat'
    UnitiNat = 'unitiNat'

FWD, BWD = 'fwd', 'bwd'

# position: tuple of child indices from the root
Step = namedtuple('Step', 'rule position direction')

@dataclass(frozen=True)
class Derivation:
    name: str
    start: object
    steps: tuple
    claimed_end: object
    dom: object = None          # ambient type, when start alone is ambiguous

#
# Positions
#
def subterm_at(c, position):
    for depth, i in enumerate(position):
        kids = children(c)
        if not (0 <= i < len(kids)):
            raise BadPosition('no child %d at %s in %s' % (i, list(position[:depth]), c))
        c = kids[i]
    return c

def replace_at(c, position, new):
    if not position:
        return new

    i, rest = position[0], position[1:]
    kids = children(c)
    if not (0 <= i < len(kids)):
        raise BadPosition('no child %d in %s' % (i, c))

    if isinstance(c, Inv):
        return Inv(replace_at(c.c, rest, new))

    if i == 0:
        return replace(c, c1=replace_at(c.c1, rest, new))
    return replace(c, c2=replace_at(c.c2, rest, new))

def all_positions(c, prefix=()):
    # pre-order
    yield prefix
    for i, k in enumerate(children(c)):
        yield from all_positions(k, prefix + (i,))

#
# Rules
#
def _cancels(p, q):
    return q == adjoint(p) or q == Inv(p) or p == Inv(q)

def _rewrite(rule, direction, t):
    # Pure pattern step on the redex t. Raises PatternMismatch.
    fwd = (direction == FWD)

    if rule in (Rule.AssocL, Rule.AssocR):
        if (rule == Rule.AssocL) == fwd:
            # p ; (q ; r)  ~>  (p ; q) ; r
            if isinstance(t, Seq) and isinstance(t.c2, Seq):
                return Seq(Seq(t.c1, t.c2.c1), t.c2.c2)
        else:
            if isinstance(t, Seq) and isinstance(t.c1, Seq):
                return Seq(t.c1.c1, Seq(t.c1.c2, t.c2))

    elif rule == Rule.IdL:
        if not fwd:
            return Seq(Id(), t)
        if isinstance(t, Seq) and t.c1 == Id():
            return t.c2

    elif rule == Rule.IdR:
        if not fwd:
            return Seq(t, Id())
        if isinstance(t, Seq) and t.c2 == Id():
            return t.c1

    elif rule == Rule.CancelAdj:
        # id alone does not say what to expand it into
        if fwd and isinstance(t, Seq) and _cancels(t.c1, t.c2):
            return Id()

    elif rule == Rule.SwapNat:
        if fwd:
            # swap* ; (f * g)  ~>  (g * f) ; swap*
            if isinstance(t, Seq) and t.c1 == SwapStar() and isinstance(t.c2, ParStar):
                return Seq(ParStar(t.c2.c2, t.c2.c1), SwapStar())
        else:
            if isinstance(t, Seq) and t.c2 == SwapStar() and isinstance(t.c1, ParStar):
                return Seq(SwapStar(), ParStar(t.c1.c2, t.c1.c1))

    elif rule == Rule.UnitiNat:
        if fwd:
            # uniti* ; (id * f)  ~>  f ; uniti*
            if isinstance(t, Seq) and t.c1 == UnitiStar() \
                    and isinstance(t.c2, ParStar) and t.c2.c1 == Id():
                return Seq(t.c2.c2, UnitiStar())
        else:
            if isinstance(t, Seq) and t.c2 == UnitiStar():
                return Seq(UnitiStar(), ParStar(Id(), t.c1))

    raise PatternMismatch(f'{rule.value} ({direction}) does not match {pretty(t)}')

def apply_step(c, step, dom=None):
    # One rewrite, validated on this instance: same endpoints, same permutation.
    before = infer(c, dom=dom)

    redex = subterm_at(c, step.position)
    rv = replace_at(c, step.position, _rewrite(step.rule, step.direction, redex))

    try:
        after = infer(rv, dom=before[0])
    except IllTyped as exc:
        raise IllTypedInstance(f'{step.rule.value} at {list(step.position)}: {exc}')
    if after != before:
        raise IllTypedInstance('%s at %s changes the type to %s <-> %s' % (
                        step.rule.value, list(step.position), after[0], after[1]))

    if to_perm(rv, dom=before[0]) != to_perm(c, dom=before[0]):
        raise SoundnessViolation(f'{step.rule.value} at {list(step.position)} changed the meaning')

    return rv

def applicable_steps(c):
    # every (rule, position, direction) whose pattern matches somewhere in c
    rv = []
    for pos in all_positions(c):
        t = subterm_at(c, pos)
        for rule in Rule:
            for direction in (FWD, BWD):
                try:
                    _rewrite(rule, direction, t)
                except PatternMismatch:
                    continue
                rv.append(Step(rule, pos, direction))
    return rv

#
# Derivations
#
def _echo(msg):
    if VERBOSE:
        print(msg, file=sys.stderr)

def check_derivation(d):
    # Replay all steps; returns the list of terms visited (start first).
    # Failures carry the 1-based index of the step that broke.
    dom = infer(d.start, dom=d.dom)[0]

    term = d.start
    trace = [term]
    _echo(f'<< {term}')
    for idx, step in enumerate(d.steps, 1):
        _echo(f'>> {step.rule.value} at {list(step.position)} {step.direction}')
        try:
            term = apply_step(term, step, dom=dom)
        except PiError as exc:
            exc.step = idx
            raise
        _echo(f'<< {term}')
        trace.append(term)

    if term != d.claimed_end:
        raise FinalMismatch(f'replay ends at {term}, not {d.claimed_end}', step=len(d.steps))

    # each step was checked already, this is the end-to-end promise
    if to_perm(d.start, dom=dom) != to_perm(d.claimed_end, dom=dom):
        raise SoundnessViolation(f'{d.name}: endpoints differ in meaning')

    return trace

def simplify(c, dom=None, name='simplify'):
    # Greedy: first forward idL / idR / cancelAdj redex, pre-order, until none.
    # Every such step shrinks the term, so this stops.
    dom = infer(c, dom=dom)[0]

    steps = []
    term = c
    while True:
        for step in applicable_steps(term):
            if step.direction == FWD and step.rule in (Rule.IdL, Rule.IdR, Rule.CancelAdj):
                break
        else:
            break
        term = apply_step(term, step, dom=dom)
        steps.append(step)

    return Derivation(name, c, tuple(steps), term, dom=dom)

def render_derivation(d, names=None):
    # text in the .pid format
    at = f' at {d.dom}' if d.dom is not None else ''
    lines = [f'derivation {d.name}{at} : {pretty(d.start, names)} => {pretty(d.claimed_end, names)}']
    for s in d.steps:
        pos = ','.join(str(i) for i in s.position)
        lines.append(f'  step {s.rule.value} at [{pos}] {s.direction}')
    return '\n'.join(lines) + '\n'

# EOF
