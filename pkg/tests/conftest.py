from pathlib import Path

import pytest


@pytest.fixture(autouse=True)
def _run_from_tests_dir(monkeypatch):
    # Test data paths (./src/...) are relative to this directory, as in `cd tests; pytest`.
    monkeypatch.chdir(Path(__file__).parent)
