import pytest

from gorenstein_kit.dataset import load_group_fixture, load_ring_fixture


@pytest.fixture(scope="session")
def ku():
    return load_ring_fixture("ku").to_presentation()


@pytest.fixture(scope="session")
def tmf2():
    return load_ring_fixture("tmf2").to_presentation()


@pytest.fixture(scope="session")
def taf_d6():
    return load_ring_fixture("taf_d6").to_presentation()


@pytest.fixture(scope="session")
def all_ring_fixtures():
    from gorenstein_kit.dataset import RING_FIXTURES

    return {name: load_ring_fixture(name).to_presentation() for name in RING_FIXTURES}


@pytest.fixture(scope="session")
def c2_group():
    group, table = load_group_fixture("c2_negation").build()
    return group


@pytest.fixture(scope="session")
def c2_table():
    _, table = load_group_fixture("c2_negation").build()
    return table


@pytest.fixture(scope="session")
def sigma3_group():
    group, _ = load_group_fixture("sigma3_standard").build()
    return group


@pytest.fixture(scope="session")
def sigma3_table():
    _, table = load_group_fixture("sigma3_standard").build()
    return table


@pytest.fixture(scope="session")
def all_group_fixtures():
    from gorenstein_kit.dataset import GROUP_FIXTURES

    out = {}
    for name in GROUP_FIXTURES:
        group, _ = load_group_fixture(name).build()
        out[name] = group
    return out
