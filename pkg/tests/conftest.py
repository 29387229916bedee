import pytest

from wgb.presentation import Presentation, make_presentation


def wex_raw():
    return make_presentation(
        ["x1", "x2"], ["X1"], G0=["x2*x1"], C=["X1*x1 - x2*X1", "X1*x2 - x1*X1"]
    )


@pytest.fixture(scope="session")
def wex():
    """The two-commutation-rule ring, saturated to degree 6."""
    return wex_raw().saturate(6)


@pytest.fixture(scope="session")
def wex_free():
    """The free ring on the same alphabet, with the relations as module generators."""
    p = wex_raw()
    return Presentation.free(p.alphabet, p.order, p.domain), list(p.relations())


@pytest.fixture(scope="session")
def comm():
    """Z<X,Y> modulo the commutator."""
    return make_presentation([], ["X", "Y"], H=["Y*X - X*Y"]).saturate(4)


@pytest.fixture(scope="session")
def zxy():
    """Z<X,Y> modulo 2X, 3Y, XY, YX."""
    return make_presentation([], ["X", "Y"], H=["2*X", "3*Y", "X*Y", "Y*X"]).saturate(4)


def P(p, text):
    return p.canonical(p.module_ring.parse(text))
