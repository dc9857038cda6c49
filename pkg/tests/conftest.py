import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from auslander.algebra import Arrow, QuiverPresentation, from_quiver, truncated_polynomial_algebra  # noqa: E402
from auslander.approx import make_subcategory  # noqa: E402
from auslander.knit import enumerate_indecomposables  # noqa: E402
from auslander.linalg import GF, QQ  # noqa: E402


def a2(field=QQ):
    return from_quiver(QuiverPresentation(["1", "2"], [Arrow("a", "1", "2")]), field, name="A2")


def a3rad2(field=QQ):
    q = QuiverPresentation(["1", "2", "3"], [Arrow("a", "1", "2"), Arrow("b", "2", "3")], [{("a", "b"): 1}])
    return from_quiver(q, field, name="A3/rad2")


def kx2(field=QQ):
    q = QuiverPresentation(["1"], [Arrow("x", "1", "1")], [{("x", "x"): 1}], max_path_length=3)
    return from_quiver(q, field, name="k[x]/x^2")


@pytest.fixture(scope="session")
def A2():
    return a2()


@pytest.fixture(scope="session")
def A3():
    return a3rad2()


@pytest.fixture(scope="session")
def KX():
    return kx2()


@pytest.fixture(scope="session")
def U2(A2):
    return enumerate_indecomposables(A2)


@pytest.fixture(scope="session")
def U3(A3):
    return enumerate_indecomposables(A3)


@pytest.fixture(scope="session")
def UK(KX):
    return enumerate_indecomposables(KX)


@pytest.fixture(scope="session")
def B2(A2, U2):
    """The Auslander algebra context of A2."""
    return make_subcategory(A2, U2.indecs, U2.names)


@pytest.fixture(scope="session")
def BK(KX, UK):
    return make_subcategory(KX, UK.indecs, UK.names)


@pytest.fixture(scope="session")
def B3(A3, U3):
    names = ["P1", "P2", "S3", "S1"]
    return make_subcategory(A3, [U3.by_name(n) for n in names], names)
