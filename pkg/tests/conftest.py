"""Shared fixtures: the class lists for p = 2 and p = 3 are reused everywhere."""

import pytest

from cyclesets import enumerate_classes, to_cycle_set


@pytest.fixture(scope="session")
def p2_params():
    return enumerate_classes(2)


@pytest.fixture(scope="session")
def p2_members(p2_params):
    return [to_cycle_set(params) for params in p2_params]


@pytest.fixture(scope="session")
def p3_params():
    return enumerate_classes(3)


@pytest.fixture(scope="session")
def p3_members(p3_params):
    return [to_cycle_set(params) for params in p3_params]
