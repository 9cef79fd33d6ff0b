from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from edgereg.ideals import MonomialIdeal
from edgereg.ring import Monomial, VariableSet


def variable_set(n: int) -> VariableSet:
    return VariableSet([f"x{i + 1}" for i in range(n)])


@st.composite
def monomials(draw, n_vars: int | None = None, max_exp: int = 3):
    n = n_vars if n_vars is not None else draw(st.integers(1, 4))
    variables = variable_set(n)
    exps = draw(st.lists(st.integers(0, max_exp), min_size=n, max_size=n))
    return Monomial.from_dense(variables, exps)


@st.composite
def nonunit_monomials(draw, n_vars: int | None = None, max_exp: int = 3):
    m = draw(monomials(n_vars=n_vars, max_exp=max_exp))
    if m.is_unit:
        m = m * Monomial.variable(m.variables, m.variables.names[0])
    return m


@st.composite
def ideals(draw, n_vars: int | None = None, max_gens: int = 4, max_exp: int = 3):
    n = n_vars if n_vars is not None else draw(st.integers(1, 4))
    variables = variable_set(n)
    count = draw(st.integers(1, max_gens))
    gens = []
    for _ in range(count):
        exps = draw(
            st.lists(st.integers(0, max_exp), min_size=n, max_size=n).filter(any)
        )
        gens.append(Monomial.from_dense(variables, exps))
    return MonomialIdeal(variables, gens)


@st.composite
def ideal_pairs(draw, n_vars: int = 3, max_gens: int = 3, max_exp: int = 3):
    """Two nonzero ideals over the same variable set."""
    variables = variable_set(n_vars)

    def gen_list():
        count = draw(st.integers(1, max_gens))
        out = []
        for _ in range(count):
            exps = draw(
                st.lists(st.integers(0, max_exp), min_size=n_vars, max_size=n_vars).filter(any)
            )
            out.append(Monomial.from_dense(variables, exps))
        return out

    return MonomialIdeal(variables, gen_list()), MonomialIdeal(variables, gen_list())


def seeded_random_ideal(seed: str, max_variables=4, max_generators=4, max_exponent=3) -> MonomialIdeal:
    from edgereg.verify import random_monomial_ideal

    return random_monomial_ideal(
        random.Random(seed),
        max_variables=max_variables,
        max_generators=max_generators,
        max_exponent=max_exponent,
    )


@pytest.fixture
def c3():
    from edgereg.digraph import make_cycle

    return make_cycle([2, 2, 2])
