"""
Pytest configuration and fixtures.
"""

import logging
import random
from fractions import Fraction

import pytest

from ep_scanner.core import config
from ep_scanner.core.constants import UNFOLDING_DIMENSION, UNFOLDING_PATHS
from ep_scanner.core.models.hamiltonians import CouplingVector


@pytest.fixture(autouse=True)
def setup_test_environment(tmp_path, monkeypatch):
    """Keep logs and outputs of every test inside its tmp_path."""
    monkeypatch.setattr(config, "log_dir", str(tmp_path / "logs"))
    monkeypatch.setattr(config, "output_dir", str(tmp_path / "ep_output"))
    monkeypatch.setattr(config, "no_timestamp", "false")
    monkeypatch.setattr(config, "log_level", "WARNING")
    yield
    # Cleanup: handlers installed by main() hold files inside tmp_path
    root_logger = logging.getLogger()
    for handler in list(root_logger.handlers):
        if getattr(handler, "_ep_scanner", False):
            root_logger.removeHandler(handler)
            handler.close()


@pytest.fixture
def test_output_dir(tmp_path):
    """Create and return test output directory."""
    output_dir = tmp_path / "test_output"
    output_dir.mkdir(parents=True, exist_ok=True)
    return output_dir


@pytest.fixture
def rng():
    """Seeded random source for property tests."""
    return random.Random(20251019)


@pytest.fixture
def full_path_couplings():
    """lambda = (t, -t, t, -t) at t = 1/2."""
    half = Fraction(1, 2)
    return CouplingVector((half, -half, half, -half))


@pytest.fixture
def unfolding_paths():
    """The five N = 11 coupling paths of the scenario batch."""
    return dict(UNFOLDING_PATHS)


@pytest.fixture
def unfolding_size():
    return UNFOLDING_DIMENSION


@pytest.fixture
def boundary_well_spec_file(tmp_path):
    """ModelSpec JSON of the N = 11, k = 4 boundary well at t = 1/2."""
    path = tmp_path / "spec.json"
    path.write_text(
        '{"family": "boundary_well", "N": 11, "shift": "0", "couplings": ["1/2", "-1/2", "1/2", "-1/2"]}',
        encoding="utf-8",
    )
    return path
