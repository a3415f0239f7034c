import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from walgebra.report import run_pipeline


@pytest.fixture(scope="session")
def g2_short():
    """Full pipeline for the G2 short-root orbit (the golden case)."""
    return run_pipeline("G", 2, orbit="~A1", mode="present")


@pytest.fixture(scope="session")
def g2_long():
    return run_pipeline("G", 2, orbit="A1", mode="present")
