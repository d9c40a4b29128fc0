import pytest

from pisgraph.ring_model import make_builtin, product_ring


@pytest.fixture(scope="session")
def lat():
    """Builtin lattices used throughout."""
    return {
        "F": make_builtin("field"),
        "c1": make_builtin("chain", 1),
        "c2": make_builtin("chain", 2),
        "c3": make_builtin("chain", 3),
        "tf2": make_builtin("twogen_flat", 2),
        "txy2": make_builtin("twogen_xy", 2),
    }


@pytest.fixture(scope="session")
def rings(lat):
    F, c1, c2 = lat["F"], lat["c1"], lat["c2"]
    return {
        "FF": product_ring([F, F]),
        "FFF": product_ring([F, F, F]),
        "FFFF": product_ring([F, F, F, F]),
        "FFFFF": product_ring([F, F, F, F, F]),
        "Fc1": product_ring([F, c1]),
        "Fc2": product_ring([F, c2]),
        "c1c1": product_ring([c1, c1]),
        "c1FF": product_ring([c1, F, F]),
        "c2c1": product_ring([c2, c1]),
    }
