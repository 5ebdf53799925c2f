#
# (c) Copyright 2026 by the pitwo developers.
#

__version__ = '0.1.0'

__all__ = [ 'syntax', 'parser', 'semantics', 'rewrite', 'library', 'pi2', 'model',
            'correspondence', 'exceptions', 'constants', 'utils' ]


# building and reading programs
from .syntax import infer, adjoint, pretty
from .parser import parse_comb, parse_program, parse_derivations

# running them
from .semantics import eval_comb, to_perm, semantically_equal

# the one-type fragment and its model
from .pi2 import canonical, complete1, check2
from .correspondence import interp1, quote1, sound1
