#
# (c) Copyright 2026 by the pitwo developers.
#
# parser.py
#
# Concrete syntax, all by lark grammars:
#
# - .pi programs: "def NAME = comb" lines and an optional "main = comb"
# - .pid derivations: "derivation NAME : comb => comb" then "step RULE at [..] fwd|bwd"
# - types, values (for the CLI) and s-expressions (for level-2 witnesses)
#
from collections import namedtuple
from dataclasses import dataclass
from lark import Lark
from lark.visitors import Transformer_NonRecursive
from lark.exceptions import UnexpectedInput
from .syntax import ZERO, ONE, TWO, Sum, Prod, TEXT_PRIM, Inv, Seq, ParPlus, ParStar
from .semantics import UNIT, ZERO2, ONE2, InL, InR, Pair
from .rewrite import Derivation, Rule, Step
from .library import builtin_library
from .exceptions import PiSyntaxError

PROGRAM_GRAMMAR = r"""
    program: definition* main?
    definition: "def" NAME "=" comb
    main: "main" "=" comb

    derivations: derivation*
    derivation: "derivation" NAME ["at" type] ":" comb "=>" comb step*
    step: "step" RULE "at" position DIRECTION
    position: "[" (INT ("," INT)*)? "]"

    ?comb: comb ";" plus        -> seq
         | plus
    ?plus: plus "+" times       -> par_plus
         | times
    ?times: times "*" unary     -> par_star
          | unary
    ?unary: "!" unary           -> inv
          | atom
    ?atom: PRIM                 -> prim
         | NAME                 -> ref
         | "(" comb ")"

    ?type: type "+" tprod       -> tsum
         | tprod
    ?tprod: tprod "*" tatom     -> tprod
          | tatom
    ?tatom: "0"                 -> zero
          | "1"                 -> one
          | "2"                 -> two
          | "(" type ")"

    PRIM.2: /(swap\+|swap\*|unite\*|uniti\*)|(unfold2|fold2|dist|factor|id)(?![A-Za-z0-9_'])/
    RULE: /assocL|assocR|idL|idR|cancelAdj|swapNat|unitiNat/
    DIRECTION: /fwd|bwd/
    NAME: /[A-Za-z_][A-Za-z0-9_']*/
    COMMENT: /--[^\n]*/

    %import common.INT
    %import common.WS
    %ignore WS
    %ignore COMMENT
"""

VALUE_GRAMMAR = r"""
    ?value: "(" ")"                     -> unit
          | "0b"                        -> zero2
          | "1b"                        -> one2
          | "inl" value                 -> inl
          | "inr" value                 -> inr
          | "(" value "," value ")"     -> pair

    %import common.WS
    %ignore WS
"""

SEXPR_GRAMMAR = r"""
    ?sexpr: ATOM                    -> atom
          | "(" ATOM sexpr* ")"     -> app

    ATOM: /[a-z][a-z0-9\-]*/

    %import common.WS
    %ignore WS
"""

_program_parser = Lark(PROGRAM_GRAMMAR, parser='lalr',
                        start=['program', 'derivations', 'comb', 'type'])
_value_parser = Lark(VALUE_GRAMMAR, parser='lalr', start='value')
_sexpr_parser = Lark(SEXPR_GRAMMAR, parser='lalr', start='sexpr')

Program = namedtuple('Program', 'defs main')

# unresolved NAME, until we know what is in scope
@dataclass(frozen=True)
class _Ref:
    name: str
    line: int
    column: int

# all transformers are non-recursive, deep trees are ordinary input
class ConstructAST(Transformer_NonRecursive):
    def prim(self, args):
        return TEXT_PRIM[str(args[0])]()

    def ref(self, args):
        tok = args[0]
        return _Ref(str(tok), tok.line, tok.column)

    def inv(self, args):
        return Inv(args[0])

    def seq(self, args):
        return Seq(*args)

    def par_plus(self, args):
        return ParPlus(*args)

    def par_star(self, args):
        return ParStar(*args)

    def zero(self, args):
        return ZERO

    def one(self, args):
        return ONE

    def two(self, args):
        return TWO

    def tsum(self, args):
        return Sum(*args)

    def tprod(self, args):
        return Prod(*args)

    def definition(self, args):
        name, body = args
        return ('def', name, body)

    def main(self, args):
        return ('main', None, args[0])

    def program(self, args):
        return list(args)

    def position(self, args):
        return tuple(int(i) for i in args)

    def step(self, args):
        rule, pos, direction = args
        return Step(Rule(str(rule)), pos, str(direction))

    def derivation(self, args):
        name, dom, start, end = args[0:4]
        return (name, dom, start, end, tuple(args[4:]))

    def derivations(self, args):
        return list(args)

class ConstructValue(Transformer_NonRecursive):
    def unit(self, args):
        return UNIT

    def zero2(self, args):
        return ZERO2

    def one2(self, args):
        return ONE2

    def inl(self, args):
        return InL(args[0])

    def inr(self, args):
        return InR(args[0])

    def pair(self, args):
        return Pair(*args)

class ConstructSexpr(Transformer_NonRecursive):
    # atoms become str, applications (head, arg, ...)
    def atom(self, args):
        return str(args[0])

    def app(self, args):
        return (str(args[0]),) + tuple(args[1:])

def _describe(parser, name):
    # terminal name -> something a human can read
    try:
        pat = parser.get_terminal(name).pattern
    except KeyError:
        return name
    return repr(pat.value) if pat.type == 'str' else name

def _parse(parser, text, start):
    try:
        return parser.parse(text, start=start)
    except UnexpectedInput as exc:
        expected = getattr(exc, 'expected', None) or getattr(exc, 'allowed', None) or ()
        tok = getattr(exc, 'token', None)
        what = ('unexpected %r' % str(tok)) if tok is not None and str(tok) else 'unexpected input'
        raise PiSyntaxError(what, getattr(exc, 'line', None), getattr(exc, 'column', None),
                                [_describe(parser, e) for e in expected])

def _resolve(root, env):
    # Swap every _Ref for its definition. Uses its own stack: a long
    # chain of ';' is a tree as deep as it is long.
    out = []
    todo = [(root, False)]
    while todo:
        c, built = todo.pop()
        if isinstance(c, _Ref):
            if c.name not in env:
                raise PiSyntaxError(f'unknown name {c.name!r}', c.line, c.column)
            out.append(env[c.name])
        elif isinstance(c, Inv):
            if built:
                out.append(Inv(out.pop()))
            else:
                todo.extend([(c, True), (c.c, False)])
        elif isinstance(c, (Seq, ParPlus, ParStar)):
            if built:
                right = out.pop()
                out.append(type(c)(out.pop(), right))
            else:
                todo.extend([(c, True), (c.c2, False), (c.c1, False)])
        else:
            out.append(c)
    return out.pop()

def parse_comb(text, env=None):
    # NAMEs resolve against env, default the builtin library
    tree = _parse(_program_parser, text, 'comb')
    env = builtin_library() if env is None else env
    return _resolve(ConstructAST().transform(tree), env)

def parse_type(text):
    return ConstructAST().transform(_parse(_program_parser, text, 'type'))

def parse_value(text):
    return ConstructValue().transform(_parse(_value_parser, text, 'value'))

def parse_sexpr(text):
    return ConstructSexpr().transform(_parse(_sexpr_parser, text, 'sexpr'))

def parse_program(text):
    # Returns Program(defs, main). Later defs can use earlier ones.
    items = ConstructAST().transform(_parse(_program_parser, text, 'program'))

    env = builtin_library()
    defs = {}
    main = None
    for kind, name, body in items:
        body = _resolve(body, env)
        if kind == 'main':
            main = body
            continue
        if name in defs:
            raise PiSyntaxError(f'{str(name)!r} defined twice', name.line, name.column)
        defs[str(name)] = env[str(name)] = body

    return Program(defs, main)

def parse_derivations(text, env=None):
    items = ConstructAST().transform(_parse(_program_parser, text, 'derivations'))

    env = builtin_library() if env is None else env
    return [Derivation(str(name), _resolve(start, env), steps, _resolve(end, env), dom=dom)
                for name, dom, start, end, steps in items]

# EOF
