"""Pytest configuration and fixtures for rlab testing."""

import shutil
import tempfile
from pathlib import Path

import pytest

from rlab.core.config import load_field
from rlab.core.field import make_field
from rlab.core.presets import F0, Q3, Q5_ZETA5, cubic_radical_embedding
from rlab.core.reciprocity import CyclotomicContext


@pytest.fixture
def temp_dir():
    """Create a temporary directory for test files."""
    temp_path = tempfile.mkdtemp()
    yield Path(temp_path)
    shutil.rmtree(temp_path)


@pytest.fixture
def fixtures_dir():
    """Directory holding the field description fixtures."""
    return Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def f0():
    """Q_3(zeta_3) presented by pi = zeta - 1."""
    return make_field(F0)


@pytest.fixture(scope="session")
def f0_ctx(f0):
    return CyclotomicContext.create(f0)


@pytest.fixture(scope="session")
def q3():
    return make_field(Q3)


@pytest.fixture(scope="session")
def q5():
    return make_field(Q5_ZETA5)


@pytest.fixture(scope="session")
def cubic_embedding():
    """Q_3(zeta_3) inside its cubic radical extension."""
    return cubic_radical_embedding()


@pytest.fixture(scope="session")
def f0_config():
    return load_field("f0")
