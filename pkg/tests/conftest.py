"""
Shared test fixtures for the plateaued-code test suite.
"""

import os
import sys
from pathlib import Path

import pytest

# Ensure project root is on sys.path so algebra.* / codes.* imports resolve
PROJECT_ROOT = str(Path(__file__).parent.parent)
if PROJECT_ROOT not in sys.path:
    sys.path.insert(0, PROJECT_ROOT)

# Keep the test run independent of a developer's .env
os.environ.setdefault("PLATEAU_WORKERS", "1")
os.environ.setdefault("PLATEAU_LOG_LEVEL", "WARNING")


@pytest.fixture(scope="session")
def gf9():
    from algebra.gf import field_new
    return field_new(3, 2)


@pytest.fixture(scope="session")
def gf64():
    from algebra.gf import field_new
    return field_new(2, 6)


@pytest.fixture(scope="session")
def ternary_example(gf9):
    """f(x) = tr(alpha x^4 + alpha^8 x^2) on GF(9), 1-plateaued."""
    from formats.codec import parse_coeffs
    return parse_coeffs(gf9, "a8,a1").to_function()


@pytest.fixture(scope="session")
def ternary_profile(ternary_example):
    from functions.walsh import analyse
    return analyse(ternary_example)


@pytest.fixture(scope="session")
def ternary_bundle(ternary_example, ternary_profile):
    from codes.construct import construct_bundle
    return construct_bundle(ternary_example, ternary_profile)


@pytest.fixture(scope="session")
def binary_bent(gf64):
    """tr(alpha x^3) on GF(64); alpha is not a cube, so the form is bent."""
    from formats.codec import parse_coeffs
    return parse_coeffs(gf64, "0,a1,0,0").to_function()


@pytest.fixture(scope="session")
def binary_bent_profile(binary_bent):
    from functions.walsh import analyse
    return analyse(binary_bent)
