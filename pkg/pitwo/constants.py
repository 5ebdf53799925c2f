#
# (c) Copyright 2026 by the pitwo developers.
#
# System constants.
#

# exhaustive bound on Π₂ term size (AST nodes, 'not' counts as one)
DEFAULT_MAX_SIZE = 7

# exhaustive bound on level-2 terms, includes the size of embedded 1-combinators
MAX_COMB2_SIZE = 5

# how many random terms for the property-style checks
DEFAULT_SAMPLES = 1000
DEFAULT_SEED = 2017

# random terms: nesting depth, and the (finite!) types we start them from
RANDOM_TERM_DEPTH = 5

# reversibility is checked exhaustively, so keep carriers small
MAX_EXHAUSTIVE_CARRIER = 64

# bundled derivation files
DERIVATION_SUFFIX = '.pid'

# names folded back when we pretty-print for humans
DISPLAY_NAMES = ('toffoli', 'cnot', 'not')

# s-expression tags for level-2 witnesses
COMB2_TAGS = {
    'Id2': 'id2',
    'Inv2': 'inv2',
    'Seq2': 'seq2',
    'Idl': 'idl',
    'Idr': 'idr',
    'Assoc': 'assoc',
    'Par2': 'par2',
    'InvCong': 'inv-cong',
    'InvRightUnit': 'inv-right-unit',
    'InvLeftUnit': 'inv-left-unit',
    'InvId': 'inv-id',
    'InvNot': 'inv-not',
    'InvSeq': 'inv-seq',
    'InvInv': 'inv-inv',
}

# EOF
