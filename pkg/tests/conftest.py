"""
共用測試夾具：由標準乘法表載入的有限群
"""
import random

import pytest

from group_catalog.finite import load_finite_group
from group_catalog.tables import STANDARD_TABLES


def _load(name):
    return load_finite_group(STANDARD_TABLES[name](), name=name)


@pytest.fixture(scope='session')
def finite_groups():
    return {name: _load(name) for name in STANDARD_TABLES}


@pytest.fixture(scope='session')
def z2():
    return _load('Z2')


@pytest.fixture(scope='session')
def z6():
    return _load('Z6')


@pytest.fixture(scope='session')
def s3():
    return _load('S3')


@pytest.fixture(scope='session')
def d8():
    return _load('D8')


@pytest.fixture(scope='session')
def s4():
    return _load('S4')


@pytest.fixture
def rng():
    return random.Random(20240101)
