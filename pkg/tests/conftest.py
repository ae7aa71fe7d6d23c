import pytest


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="also run slow exhaustive checks (n = 13 census)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="slow; pass --runslow to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def census12():
    from qspec.census import bicyclic_census
    return list(bicyclic_census(12))


@pytest.fixture(scope="session")
def census8():
    from qspec.census import bicyclic_census
    return list(bicyclic_census(8))
