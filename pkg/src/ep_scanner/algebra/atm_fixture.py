"""
src/ep_scanner/algebra/atm_fixture.py
Loader for the shipped ATM boundary polynomial (big-integer coefficients + SHA-256 sidecar)
"""

import hashlib
import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

from sympy import Poly

from .polynomials import degree, from_lines
from ..core.constants import FIXTURE_FILES
from ..core.exceptions import FixtureIntegrityError

logger = logging.getLogger(__name__)

FIXTURE_DIR = Path(__file__).parent / "fixtures"


def _read_expected_digest(checksum_path: Path) -> str:
    if not checksum_path.exists():
        raise FixtureIntegrityError(f"Checksum file missing: {checksum_path}")
    line = checksum_path.read_text(encoding="utf-8").strip()
    if not line:
        raise FixtureIntegrityError(f"Checksum file is empty: {checksum_path}")
    # sha256sum format: "<hex digest>  <file name>"
    return line.split()[0].lower()


def file_sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def load_atm_fixture(fixture_dir: Optional[Union[str, Path]] = None) -> Tuple[Poly, Dict[str, Any]]:
    """
    Read the coefficient file after checking it against its SHA-256 sidecar.

    Returns:
        (polynomial in D, metadata dict)

    Raises:
        FixtureIntegrityError: missing file, checksum mismatch or unreadable coefficients
    """
    directory = Path(fixture_dir) if fixture_dir is not None else FIXTURE_DIR
    coefficient_path = directory / FIXTURE_FILES["atm_coefficients"]
    checksum_path = directory / FIXTURE_FILES["atm_checksum"]
    metadata_path = directory / FIXTURE_FILES["atm_metadata"]

    if not coefficient_path.exists():
        raise FixtureIntegrityError(f"Fixture missing: {coefficient_path}")

    expected = _read_expected_digest(checksum_path)
    actual = file_sha256(coefficient_path)
    if actual != expected:
        raise FixtureIntegrityError(
            f"Checksum mismatch for {coefficient_path.name}: expected {expected}, got {actual}"
        )

    try:
        polynomial = from_lines(coefficient_path.read_text(encoding="utf-8"))
    except ValueError as e:
        raise FixtureIntegrityError(f"Unreadable coefficient in {coefficient_path.name}: {e}") from e

    metadata: Dict[str, Any] = {}
    if metadata_path.exists():
        metadata = json.loads(metadata_path.read_text(encoding="utf-8"))
    metadata["sha256"] = actual

    if metadata.get("degree_printed") not in (None, degree(polynomial)):
        logger.warning(
            f"Fixture degree {degree(polynomial)} differs from recorded degree {metadata['degree_printed']}"
        )
    logger.info(f"Loaded ATM fixture: degree {degree(polynomial)}, checksum ok")
    return polynomial, metadata
