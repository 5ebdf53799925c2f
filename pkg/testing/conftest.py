#
# (c) Copyright 2026 by the pitwo developers.
#
import pytest
from hypothesis import strategies as st
from pitwo.syntax import Id, Inv, Seq
from pitwo.library import NOT
from pitwo.utils import RANDOM_START_TYPES, random_comb

# one-type terms, any shape
pi2_terms = st.recursive(
    st.sampled_from([Id(), NOT]),
    lambda kids: st.one_of(st.builds(Inv, kids), st.builds(Seq, kids, kids)),
    max_leaves=12)

# (combinator, its domain) over carriers of at most 16 elements
typed_combs = st.builds(lambda rnd, dom: (random_comb(rnd, dom), dom),
                            st.randoms(use_true_random=False),
                            st.sampled_from(RANDOM_START_TYPES))

@pytest.fixture
def quiet_rewrites(monkeypatch):
    # the -v flag flips a module global; put it back afterwards
    import pitwo.rewrite
    monkeypatch.setattr(pitwo.rewrite, 'VERBOSE', False)
    return pitwo.rewrite

# EOF
