#
# (c) Copyright 2026 by the pitwo developers.
#
# correspondence.py
#
# Maps between the one-type language and the model, at every level:
#
#   level 0: the type 2          <-> the base point
#   level 1: 1-combinators       <-> loops
#   level 2: 2-combinators       <-> 2-cells
#   level 3: trunc               <-> (nothing left to say)
#
# plus the soundness/completeness round trips, each producing a witness, and
# a suite that runs all of them over exhaustive and random terms.
#
import random
from collections import namedtuple
from itertools import groupby
from .syntax import TWO, Id, Inv, Seq
from .semantics import to_perm
from .library import NOT
from .pi2 import Which, Seq2, Inv2, Id2, Trunc, canonical, refine, check2, endpoints2
from .pi2 import complete1, render_comb1, render_comb2
from .model import BASE_POINT, ID_LOOP, NOT_LOOP, LOOPS, compose, invert, classify
from .model import mk_two_cell, loop_of
from .utils import enumerate_pi2, enumerate_comb2, random_pi2
from .constants import DEFAULT_MAX_SIZE, MAX_COMB2_SIZE, DEFAULT_SAMPLES, DEFAULT_SEED
from .exceptions import PiError, NotPi2, NoCell, SemanticMismatch, NotQuotedEndpoints, EndpointMismatch
from .exceptions import SoundnessViolation, AgreementViolation

#
# Level 0
#
def interp0(t):
    if t != TWO:
        raise NotPi2(f'only the type 2 has a meaning here, not {t}')
    return BASE_POINT

def quote0(point):
    if point != BASE_POINT:
        raise ValueError(point)
    return TWO

#
# Level 1
#
def interp1(p):
    if p == Id():
        return ID_LOOP
    if p == NOT:
        return NOT_LOOP
    if isinstance(p, Inv):
        return invert(interp1(p.c))
    if isinstance(p, Seq):
        return compose(interp1(p.c1), interp1(p.c2))
    raise NotPi2(f'{p} is not in the one-type fragment')

def quote1(l):
    return refine(classify(l))

def sound1(p):
    # p <=> quote1(interp1 p), from the canonical form; both classifiers must agree
    which, u = canonical(p)
    got = classify(interp1(p))
    if got != which:
        raise AgreementViolation(f'{render_comb1(p)}: canonical says {which}, model says {got}')
    return u

def sound1_model(l):
    # l = interp1(quote1 l), as a cell
    return mk_two_cell(l, interp1(quote1(l)))

def completeness1(p, q):
    # equal loops give p <=> q, routed through the model
    lp, lq = interp1(p), interp1(q)
    if lp != lq:
        raise SemanticMismatch(f'{render_comb1(p)} is {lp} but {render_comb1(q)} is {lq}')
    return Seq2(sound1(p), Seq2(quote2(mk_two_cell(lp, lq)), Inv2(sound1(q))))

#
# Level 2
#
def interp2(u):
    p, q = check2(u)
    try:
        return mk_two_cell(interp1(p), interp1(q))
    except NoCell as exc:
        raise SoundnessViolation(f'{render_comb2(u)} has no cell: {exc}')

def quote2(cell):
    return Id2(quote1(cell.source))

def complete1_sem(u):
    # a 2-combinator between quoted loops means the loops are equal
    p, q = check2(u)
    for side in (p, q):
        if side not in (Id(), NOT):
            raise NotQuotedEndpoints(f'{render_comb1(side)} is not id or not')
    return interp2(u)

def sound2(u):
    # u and the round trip through the model are the same, at level 3
    p, q = endpoints2(u)
    return Trunc(u, Seq2(sound1(p), Seq2(quote2(interp2(u)), Inv2(sound1(q)))))

#
# Level 3
#
def interp3(a):
    # both sides land on the same (unique) cell
    return interp2(a.u)

def quote3(c1, c2):
    if c1 != c2:
        raise NoCell(f'{c1} is not {c2}')
    return Trunc(quote2(c1), quote2(c2))

def triviality_level3(a, b):
    if endpoints2(a.u) != endpoints2(b.u):
        raise EndpointMismatch('level-3 terms are not parallel')
    if interp3(a) != interp3(b):
        raise SoundnessViolation(f'{a} and {b} land on different cells')
    return True

#
# The whole suite
#
CheckResult = namedtuple('CheckResult', 'name passed failed example')

def _run_check(name, cases, pred):
    # pred returns truthy on success; a PiError counts as a failure
    passed = failed = 0
    example = None
    for case in cases:
        try:
            ok = pred(case)
        except PiError as exc:
            ok = False
            why = str(exc)
        else:
            why = 'returned false'
        if ok:
            passed += 1
        else:
            failed += 1
            if example is None:
                example = f'{case}: {why}'
    return CheckResult(name, passed, failed, example)

def _expect_mismatch(f, *args):
    try:
        f(*args)
    except SemanticMismatch:
        return True
    return False

def roundtrip_suite(max_size=DEFAULT_MAX_SIZE, samples=DEFAULT_SAMPLES, seed=DEFAULT_SEED):
    # Every correspondence property over all terms up to max_size, plus
    # `samples` random bigger ones. Returns a list of CheckResult.
    rng = random.Random(seed)

    terms = enumerate_pi2(max_size)
    small = enumerate_pi2(min(max_size, 5))
    bigger = [random_pi2(rng, rng.randint(max_size+1, max_size+8)) for _ in range(samples)]
    pairs = [(p, q) for p in small for q in small] \
                + [(rng.choice(terms), rng.choice(terms)) for _ in range(samples)]
    cells = enumerate_comb2(min(max_size, MAX_COMB2_SIZE))

    def agree(p):
        which, u = canonical(p)
        check2(u)
        return endpoints2(u) == (p, refine(which)) \
                    and (which == Which.ID) == to_perm(p, dom=TWO).is_identity() \
                    and which == classify(interp1(p))

    def sound(p):
        u = sound1(p)
        check2(u)
        return endpoints2(u) == (p, quote1(interp1(p)))

    def homomorphism(pq):
        p, q = pq
        return interp1(Seq(p, q)) == compose(interp1(p), interp1(q)) \
                    and interp1(Inv(p)) == invert(interp1(p)) \
                    and interp1(p) == loop_of(to_perm(p, dom=TWO))

    def complete(pq):
        p, q = pq
        if interp1(p) != interp1(q):
            return _expect_mismatch(complete1, p, q)
        u = complete1(p, q)
        return check2(u) == (p, q)

    def complete_model(pq):
        p, q = pq
        if interp1(p) != interp1(q):
            return _expect_mismatch(completeness1, p, q)
        u = completeness1(p, q)
        return check2(u) == (p, q)

    def coherent(u):
        p, q = endpoints2(u)
        cell = interp2(u)
        back = quote2(cell)
        return check2(back) == (quote1(interp1(p)), quote1(interp1(q)))

    def level2(u):
        t = sound2(u)
        return check2(t.v) == endpoints2(u) and interp3(t) == interp2(u)

    # parallel pairs: group the level-2 terms by endpoints
    by_ends = sorted(((endpoints2(u), u) for u in cells), key=lambda x: str(x[0]))
    parallel = []
    for _, grp in groupby(by_ends, key=lambda x: str(x[0])):
        grp = [u for _, u in grp]
        parallel.extend((Trunc(grp[0], grp[0]), Trunc(grp[0], v)) for v in grp)

    return [
        _run_check('level 0 round trip', [TWO], lambda t: quote0(interp0(t)) == t),
        _run_check('interp1 . quote1 = id', LOOPS, lambda l: interp1(quote1(l)) == l),
        _run_check('sound1 in the model', LOOPS, lambda l: sound1_model(l).source == l),
        _run_check('canonical agrees with permutations', terms, agree),
        _run_check('sound1 (exhaustive)', terms, sound),
        _run_check('sound1 (random)', bigger, sound),
        _run_check('interp1 is a homomorphism', pairs, homomorphism),
        _run_check('complete1 iff same loop', pairs, complete),
        _run_check('completeness1 through the model', pairs, complete_model),
        _run_check('interp2 total, quote2 coherent', cells, coherent),
        _run_check('sound2 at level 3', cells, level2),
        _run_check('level 3 is trivial', parallel, lambda ab: triviality_level3(*ab)),
        _run_check('quote3 of equal cells', [(ID_LOOP, ID_LOOP), (NOT_LOOP, NOT_LOOP)],
                        lambda ls: isinstance(quote3(mk_two_cell(*ls), mk_two_cell(*ls)), Trunc)),
    ]

# EOF
