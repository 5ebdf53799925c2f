#
# (c) Copyright 2026 by the pitwo developers.
#
# model.py
#
# The computable side of the universe of types equal to 2: one base point,
# its loops (the two automorphisms of 2, a group of order 2), and 2-cells
# between loops, which exist only between equal loops and are unique.
#
from dataclasses import dataclass
from .semantics import Perm
from .pi2 import Which
from .exceptions import NoCell

@dataclass(frozen=True)
class BasePoint:
    def __str__(self):
        return '2_0'

BASE_POINT = BasePoint()

@dataclass(frozen=True)
class Loop:
    perm: Perm

    def __post_init__(self):
        if self.perm.carrier_size != 2:
            raise ValueError(f'loops live on 2, not a carrier of {self.perm.carrier_size}')

    def __str__(self):
        return 'idLoop' if self.perm.is_identity() else 'notLoop'

ID_LOOP = Loop(Perm((0, 1)))
NOT_LOOP = Loop(Perm((1, 0)))

# all of them
LOOPS = (ID_LOOP, NOT_LOOP)

def loop_of(perm):
    return Loop(perm)

def compose(l1, l2):
    # l1 first
    return Loop(l1.perm.then(l2.perm))

def invert(l):
    return Loop(l.perm.inverse())

def identity():
    return ID_LOOP

_GROUP_OPS = {
    'compose': compose,
    'invert': invert,
    'identity': identity,
}

def loop_group(op, *args):
    return _GROUP_OPS[op](*args)

def classify(l):
    return Which.ID if l.perm.is_identity() else Which.NOT

@dataclass(frozen=True)
class TwoCell:
    source: Loop
    target: Loop

    def __post_init__(self):
        if self.source != self.target:
            raise NoCell(f'no 2-cell from {self.source} to {self.target}')

    def __str__(self):
        return f'cell at {self.source}'

# one cell per loop, and no others
ID_CELL = TwoCell(ID_LOOP, ID_LOOP)
NOT_CELL = TwoCell(NOT_LOOP, NOT_LOOP)
_CELLS = {ID_LOOP: ID_CELL, NOT_LOOP: NOT_CELL}

def mk_two_cell(s, t):
    # the unique cell s => t, or NoCell
    if s != t:
        raise NoCell(f'no 2-cell from {s} to {t}')
    return _CELLS[s]

# EOF
