import pytest

from modascent.fields import GF, QQ
from modascent.rings import PolyRing


@pytest.fixture
def R2():
    """GF(32003)[x, y], the default test ring."""
    return PolyRing(("x", "y"), GF(32003))


@pytest.fixture
def R3():
    return PolyRing(("x", "y", "z"), GF(32003))


@pytest.fixture
def RQ():
    return PolyRing(("x", "y"), QQ)
