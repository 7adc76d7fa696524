"""Shared pytest configuration: repository root on sys.path, common fixtures."""

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from pasting.generator_block import make_block, promote  # noqa: E402
from utils.code_io import load_fixture  # noqa: E402


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long sweeps over many lengths")


@pytest.fixture
def five_qubit_code():
    """The perfect [[5,1,3]] from its fixture."""
    return promote(make_block(load_fixture("five_qubit.txt")), provenance="[5]")


@pytest.fixture
def gottesman_8_code():
    return promote(make_block(load_fixture("gottesman_8.txt")), provenance="[2^3]")
