#!/usr/bin/env python
#
# (c) Copyright 2026 by the pitwo developers.
#
# To use this, install with:
#
#   pip install --editable .[cli]
#
# That will create the command "pitwo" in your path.
#
#
import click, sys, os
from functools import wraps

from .syntax import TWO, pretty, infer
from .semantics import render_value, enumerate_type, eval_comb, to_perm, semantically_equal
from .parser import parse_comb, parse_program, parse_derivations, parse_type, parse_value
from .library import TOFFOLI, SIGNATURES, display_names
from .rewrite import check_derivation, simplify, render_derivation
from .pi2 import is_pi2, canonical, check2, complete1, render_comb2
from .correspondence import roundtrip_suite
from .constants import *
from .exceptions import PiError, PiSyntaxError, SemanticMismatch, NotPi2, BadInputFile, TooDeep

# the notOpt derivation, as shipped
BUNDLED_DERIVATIONS = os.path.join(os.path.dirname(__file__), 'data', 'notopt' + DERIVATION_SUFFIX)

# Cleanup display (supress traceback) for user-feedback exceptions
_sys_excepthook = sys.excepthook
def my_hook(ty, val, tb):
    if issubclass(ty, PiError):
        print("\n\nFATAL: %s" % val, file=sys.stderr)
    else:
        return _sys_excepthook(ty, val, tb)
sys.excepthook=my_hook

def fail(msg, code=1):
    # show message and stop
    click.echo(msg)
    sys.exit(code)

def display_errors(f):
    # our errors are one-liners, and carry their own exit code
    @wraps(f)
    def wrapper(*args, **kws):
        try:
            try:
                return f(*args, **kws)
            except RecursionError:
                raise TooDeep('program is nested too deeply to handle')
        except PiError as exc:
            click.echo(f'{type(exc).__name__}: {exc}', err=True)
            sys.exit(exc.exit_code)
    return wrapper

def read_text(path):
    # whole file as text; unreadable input is a usage problem
    try:
        with open(path, 'rt', encoding='utf-8') as fd:
            return fd.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise BadInputFile(f'{path}: {exc}')

def names():
    return display_names(DISPLAY_NAMES)

def load_comb(source, inline):
    # -e: source is the program text; otherwise a .pi file: its main, or the last def
    if inline:
        return parse_comb(source)

    prog = parse_program(read_text(source))

    if prog.main is not None:
        return prog.main
    if prog.defs:
        return list(prog.defs.values())[-1]

    raise PiSyntaxError(f'{source}: no main and no definitions')

def type_option(ctx, param, value):
    if value is None:
        return None
    try:
        return parse_type(value)
    except PiSyntaxError as exc:
        raise click.BadParameter(str(exc))

def at_option(f):
    return click.option('--at', 'at', metavar='TYPE', default=None, callback=type_option,
                help="Type to use when the program alone does not fix it, eg. '2 * 2'")(f)

def inline_option(f):
    return click.option('--inline', '-e', is_flag=True,
                help="Program text on the command line, instead of a file name")(f)

# Accept any prefix of a command name.
#
# from <https://click.palletsprojects.com/en/8.0.x/advanced/?#command-aliases>
class AliasedGroup(click.Group):
    def get_command(self, ctx, cmd_name):
        rv = click.Group.get_command(self, ctx, cmd_name)
        if rv is not None:
            return rv
        matches = [x for x in self.list_commands(ctx)
                   if x.startswith(cmd_name)]
        if not matches:
            return None
        elif len(matches) == 1:
            return click.Group.get_command(self, ctx, matches[0])
        ctx.fail(f"Ambiguous command. Pick one of: {' | '.join(sorted(matches))}")

    def resolve_command(self, ctx, args):
        # always return the full command name
        _, cmd, args = super().resolve_command(ctx, args)
        return cmd.name, cmd, args


#
# Options we want for all commands
#
@click.group(cls=AliasedGroup)
@click.option('--verbose', '-v', is_flag=True,
                    help="Show each rewrite as it happens.")
@click.option('--pdb', is_flag=True,
                    help="Prepare patient for surgery to remove bugs.")
def main(**kws):
    '''
    Run, compare and reason about reversible programs over finite types.

    Programs are files (.pi) or, with -e, text on the command line.

    You can use "can", or "c" for "canon": any distinct prefix for all commands.
    '''

    # implement PDB option here
    if kws.pop('pdb', False):
        import pdb, sys
        def doit(ex_cls, ex, tb):
            pdb.pm()
        sys.excepthook = doit

    if kws.get('verbose'):
        import pitwo.rewrite as rr
        rr.VERBOSE = True


@main.command('run')
@click.argument('program')
@click.argument('value')
@inline_option
@at_option
@click.option('--backward', '-b', is_flag=True, help="Run the adjoint: VALUE is an output")
@display_errors
def run_program(program, value, inline, at, backward):
    '''Evaluate PROGRAM on VALUE.

    Values: () 0b 1b (inl v) (inr v) (v,w)
    '''
    c = load_comb(program, inline)
    v = parse_value(value)

    click.echo(render_value(eval_comb(c, v, dom=at, backward=backward)))

@main.command('perm')
@click.argument('program')
@inline_option
@at_option
@display_errors
def show_perm(program, inline, at):
    "Show the permutation PROGRAM computes, on carrier indices."
    c = load_comb(program, inline)
    dom, cod = infer(c, dom=at)

    click.echo(f'{dom} <-> {cod}')
    click.echo(to_perm(c, dom=dom).render())

@main.command('canon')
@click.argument('program')
@inline_option
@display_errors
def show_canon(program, inline):
    "Canonical form (ID or NOT) of a one-type PROGRAM, with its proof."
    c = load_comb(program, inline)
    if not is_pi2(c):
        raise NotPi2(f"{pretty(c, names())} uses more than id, not, ! and ;")

    which, u = canonical(c)
    click.echo(which)
    click.echo(render_comb2(u))
    check2(u)
    click.echo('checked: ok')

@main.command('equiv')
@click.argument('left')
@click.argument('right')
@inline_option
@at_option
@display_errors
def show_equiv(left, right, inline, at):
    "Do two programs compute the same permutation?"
    p = load_comb(left, inline)
    q = load_comb(right, inline)

    one_type = is_pi2(p) and is_pi2(q)
    if at is None and one_type:
        at = TWO

    same = semantically_equal(p, q, dom=at)
    click.echo('equal' if same else 'not equal')

    if one_type:
        try:
            u = complete1(p, q)
        except SemanticMismatch:
            click.echo('no witness exists (classes differ)')
        else:
            check2(u)
            click.echo(render_comb2(u))

    if not same:
        sys.exit(1)

def replay(d):
    # print every term visited, then the verdict
    trace = check_derivation(d)

    click.echo(f'derivation {d.name}')
    click.echo(f'   0: {pretty(trace[0], names())}')
    for idx, (step, term) in enumerate(zip(d.steps, trace[1:]), 1):
        pos = ','.join(str(i) for i in step.position)
        click.echo(f'  {idx:2d}: {pretty(term, names())}')
        click.echo(f'      -- {step.rule.value} at [{pos}] {step.direction}')
    click.echo(f'ok ({len(d.steps)} steps)')

@main.command('check')
@click.argument('filename', type=click.Path(exists=True), required=False,
                    default=BUNDLED_DERIVATIONS)
@display_errors
def check_file(filename):
    '''Replay and check every derivation in a .pid file.

    With no file, checks the bundled notOpt derivation.
    '''
    derivs = parse_derivations(read_text(filename))

    for d in derivs:
        replay(d)

@main.command('simplify')
@click.argument('program')
@inline_option
@at_option
@display_errors
def do_simplify(program, inline, at):
    "Remove identities and cancelling pairs; prints the derivation (.pid)."
    c = load_comb(program, inline)
    d = simplify(c, dom=at)

    click.echo(render_derivation(d, names()), nl=False)

@main.command('roundtrip')
@click.option('--max-size', '-n', type=int, default=DEFAULT_MAX_SIZE,
                    help="Check every term up to this size", show_default=True)
@click.option('--samples', '-s', type=int, default=DEFAULT_SAMPLES,
                    help="Random terms beyond that", show_default=True)
@click.option('--seed', type=int, default=DEFAULT_SEED, show_default=True)
@display_errors
def do_roundtrip(max_size, samples, seed):
    "Run every correspondence check between the language and its model."
    bad = 0
    for r in roundtrip_suite(max_size, samples, seed):
        if r.failed:
            bad += 1
            click.echo(f'FAIL  {r.name}: {r.failed} of {r.passed + r.failed} failed')
            click.echo(f'      first: {r.example}')
        else:
            click.echo(f'ok    {r.name} ({r.passed})')

    if bad:
        fail(f'{bad} checks failed')

@main.command('demo')
@display_errors
def do_demo():
    "Toffoli truth table, canonical form of 'not ; not', and the notOpt replay."
    dom, _ = SIGNATURES['toffoli']
    click.echo('toffoli:')
    for x in enumerate_type(dom):
        click.echo(f'  {render_value(x)} -> {render_value(eval_comb(TOFFOLI, x))}')

    click.echo('')
    click.echo('canon: not ; not')
    show_canon.callback('not ; not', True)

    click.echo('')
    for d in parse_derivations(read_text(BUNDLED_DERIVATIONS)):
        replay(d)

# EOF
