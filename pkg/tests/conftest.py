"""
Shared fixtures: the published parameter families and their fields.
"""

import os
import sys

import pytest

# Add src directory to path
sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src"))

from codes.grs_codes import code_family, validate_params
from finite_fields.gf import make_fields


@pytest.fixture(scope="session")
def q11_params():
    return validate_params(11, 5, 3, 4, 3)


@pytest.fixture(scope="session")
def q29_params():
    return validate_params(29, 28, 5, 30, 2)


@pytest.fixture(scope="session")
def q83_params():
    return validate_params(83, 41, 6, 84, 2)


@pytest.fixture(scope="session")
def q11_family(q11_params):
    return code_family(q11_params)


@pytest.fixture(scope="session")
def field11():
    return make_fields(11)
