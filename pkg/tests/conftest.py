import pytest

from epnu.potential import EPParams
from epnu.spectrum import MoleculeSpec


@pytest.fixture(scope="session")
def ar2():
    return MoleculeSpec("Ar2", EPParams(De=99.55, sigma=25.23, delta=41.75, alpha=0.6604,
                                        re=3.759), mu=19.9812)


@pytest.fixture(scope="session")
def h2():
    return MoleculeSpec("H2", EPParams(De=38281.0, sigma=426.826, delta=463.102, alpha=0.9327,
                                       re=0.7414), mu=0.50407)
