import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from monideal import PolyRing
from monideal.core import MonomialIdeal
from monideal.golden import J as STURMFELS_J


@pytest.fixture
def R6():
    return PolyRing.standard(6)


@pytest.fixture
def J():
    return STURMFELS_J


def exponent_vectors(n, max_exp=2):
    return st.tuples(*[st.integers(0, max_exp)] * n)


@st.composite
def ideals(draw, max_vars=4, max_gens=5, max_exp=2, squarefree=False, nonzero=True):
    n = draw(st.integers(1, max_vars))
    top = 1 if squarefree else max_exp
    gens = draw(
        st.lists(exponent_vectors(n, top).filter(any), min_size=1 if nonzero else 0, max_size=max_gens)
    )
    return MonomialIdeal.from_exponents(PolyRing.standard(n), gens)
