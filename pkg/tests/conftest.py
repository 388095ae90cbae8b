import pytest

from flagq import qhring, weyl


@pytest.fixture(scope="session")
def s4_table():
    """Every quantum product over S_4 x S_4, keyed by (u, v)."""
    engine = qhring.get_engine(4, True)
    perms = weyl.all_permutations(4)
    table = {}
    for i, u in enumerate(perms):
        for v in perms[i:]:
            p = engine.product(u, v)
            table[(u, v)] = p
            table[(v, u)] = p
    return table


@pytest.fixture(scope="session")
def s3_table():
    engine = qhring.get_engine(3, True)
    perms = weyl.all_permutations(3)
    return {
        (u, v): engine.product(u, v) for u in perms for v in perms
    }
