"""Shared fixtures: bundled categories loaded once per session."""

from __future__ import annotations

import numpy as np
import pytest

from fuscat.data_io import bundled_path, load_category


def _load(name):
    return load_category(bundled_path(name))


@pytest.fixture(scope="session")
def trivial_cat():
    return _load("trivial")


@pytest.fixture(scope="session")
def z2_semion():
    return _load("z2_semion")


@pytest.fixture(scope="session")
def z3_anyons():
    return _load("z3_anyons")


@pytest.fixture(scope="session")
def fibonacci():
    return _load("fibonacci")


@pytest.fixture(scope="session")
def ising():
    return _load("ising")


@pytest.fixture(scope="session")
def toric_code():
    return _load("toric_code")


@pytest.fixture(scope="session")
def su2_4():
    return _load("su2_4")


@pytest.fixture(scope="session")
def all_bundled(trivial_cat, z2_semion, z3_anyons, fibonacci, ising,
                toric_code, su2_4):
    return [trivial_cat, z2_semion, z3_anyons, fibonacci, ising, toric_code,
            su2_4]


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
