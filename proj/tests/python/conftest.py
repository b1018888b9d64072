import os
import pathlib
import shutil

import pytest

TESTS = pathlib.Path(__file__).resolve().parents[1]


@pytest.fixture(scope="session")
def data_dir():
    return TESTS / "data"


@pytest.fixture(scope="session")
def oracle_dir():
    return TESTS / "oracles"


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("SETLAB_CLI") or shutil.which("setlab")
    if not path:
        pytest.skip("setlab executable not available")
    return path
