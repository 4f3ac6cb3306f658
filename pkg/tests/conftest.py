import os
import random
from fractions import Fraction as F

import pytest

import lyalg as L
from lyalg import io as lyio

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "fixtures")

# verdict lines recorded by the acceptance suite; echoed after the test run so
# they stay visible even under pytest's output capture
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)

# scalar pool for random linear maps
POOL = [F(-2), F(-1), F(0), F(1), F(2), F(1, 2)]


def fx(name):
    return os.path.join(FIXTURES, name)


def random_matrix(rng, rows, cols):
    return [[rng.choice(POOL) for _ in range(cols)] for _ in range(rows)]


def family_matrix(rng):
    """A map into span{e3, e4} killing e4: the operators in this family all
    satisfy the weight-1 equations over the 4-dim fixture's adjoint action."""
    T = [[F(0)] * 4 for _ in range(4)]
    for i in (2, 3):
        for j in (0, 1, 2):
            T[i][j] = rng.choice(POOL)
    return T


@pytest.fixture(scope="session")
def nilpotent4():
    A = lyio.load_algebra(fx("nilpotent4.json"))
    assert L.check_ly_axioms(A).passed
    return A


@pytest.fixture(scope="session")
def adjoint_action():
    return lyio.load_action(fx("nilpotent4_adjoint.json"))


@pytest.fixture(scope="session")
def p3():
    op = lyio.load_operator(fx("p3_on_nilpotent4.json"))
    op.ensure_verified()
    return op


@pytest.fixture(scope="session")
def tcomplex(p3):
    return L.TComplex(p3)


@pytest.fixture()
def rng():
    return random.Random(20240817)


@pytest.fixture(scope="session")
def oracle_matrices(p3):
    """Dense coboundary matrices from the direct-formula oracle, built once."""
    import oracles
    oc = oracles.OpOracle(p3)
    return {0: oracles.partial_matrix(oc),
            1: oracles.delta1_matrix(oc),
            2: oracles.delta2_matrix(oc)}
