from __future__ import annotations

import pytest

from slqcalc import catalog
from slqcalc.scalars import PowerBasis


@pytest.fixture(scope="session")
def pb():
    return PowerBasis(2)


@pytest.fixture(scope="session")
def sl2_catalogs():
    return {r: catalog("sl2", r=r) for r in (1, 2, 3, 4)}


@pytest.fixture(scope="session")
def gamma1(pb):
    C = catalog("sl3", alpha=pb.q(-1), beta=pb.q(1))
    C.lemma1_check()
    return C


@pytest.fixture(scope="session")
def gamma2(pb):
    C = catalog("sl3", alpha=pb.q(1), beta=pb.q(-1))
    C.lemma1_check()
    return C


@pytest.fixture(scope="session")
def gamma1_closure(gamma1):
    from slqcalc import closure

    return closure(gamma1)


@pytest.fixture(scope="session")
def gamma2_closure(gamma2):
    from slqcalc import closure

    return closure(gamma2)
