import hypothesis.strategies as st
import pytest
from hypothesis import settings

from bfun.lattice import GeneratorCoords
from bfun.roots import Weight
from bfun.symbolic import FactoredPolynomial, LinearForm

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def weights(n, top=3):
    return st.tuples(*[st.integers(0, top)] * (n - 1)).map(Weight)


def omega_coords(n, top=3):
    return st.lists(st.integers(0, top), min_size=2 * n - 1, max_size=2 * n - 1).map(
        lambda v: GeneratorCoords.from_vector(v, n)
    )


fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def linear_forms(dim):
    return st.builds(
        LinearForm,
        st.lists(st.integers(-3, 3), min_size=dim, max_size=dim).filter(any).map(tuple),
        fractions,
    )


def polys(dim):
    names = tuple(f"x{i}" for i in range(1, dim + 1))
    return st.builds(
        lambda s, fs: FactoredPolynomial(names, s, tuple(fs)),
        fractions.filter(lambda x: x != 0),
        st.lists(linear_forms(dim), max_size=4),
    )


@pytest.fixture
def n2_vars():
    return ("a1", "b1", "b2")


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
