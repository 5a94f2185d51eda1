"""
src/ep_scanner/builders/spec_document.py
JSON ModelSpec documents, validated with pydantic and converted to exact ModelSpec values

{"family": "boundary_well", "N": 11, "shift": "0", "couplings": ["9/10", "-9/10", "9/10", "-9/10"]}
{"family": "atm", "N": 8, "couplings": ["7", "1", "2", "3"]}
{"family": "gegenbauer", "N": 6, "a": "1/2"}
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from .rational_parser import parse_rational
from ..core.exceptions import ConstraintError
from ..core.models.hamiltonians import CouplingVector, ModelFamily, ModelSpec

logger = logging.getLogger(__name__)

# Rationals travel as strings; plain JSON integers are accepted too
RationalText = Union[str, int]


def _check_rational(value: RationalText) -> None:
    """pydantic collects ValueError only; parse failures are re-raised as one"""
    try:
        parse_rational(value)
    except ConstraintError as e:
        raise ValueError(str(e)) from e


class ModelSpecDocument(BaseModel):
    """Schema of a ModelSpec JSON file"""
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    family: Literal["boundary_well", "atm", "gegenbauer"]
    size: int = Field(alias="N", ge=2)
    shift: RationalText = "0"
    couplings: List[RationalText] = Field(default_factory=list)
    a: Optional[RationalText] = None

    @field_validator("shift", "a")
    @classmethod
    def _exact_scalar(cls, value):
        if value is not None:
            _check_rational(value)
        return value

    @field_validator("couplings")
    @classmethod
    def _exact_couplings(cls, values):
        for value in values:
            _check_rational(value)
        return values

    def to_model_spec(self) -> ModelSpec:
        family = ModelFamily(self.family)
        couplings = tuple(parse_rational(value) for value in self.couplings)
        if family is ModelFamily.BOUNDARY_WELL:
            vector = CouplingVector(couplings)
            vector.check_fits(self.size)
            return ModelSpec(family, self.size, couplings=vector, shift=parse_rational(self.shift))
        if family is ModelFamily.ATM:
            return ModelSpec(family, self.size, atm_couplings=couplings)
        if self.a is None:
            raise ConstraintError("Gegenbauer spec needs the field 'a'")
        return ModelSpec(family, self.size, gegenbauer_a=parse_rational(self.a))


def parse_model_spec(document: Dict[str, Any]) -> ModelSpec:
    """
    Validate a decoded JSON document into a ModelSpec.

    Raises:
        ConstraintError: schema violations (field path + reason) and bad rationals
    """
    try:
        parsed = ModelSpecDocument.model_validate(document)
    except ValidationError as e:
        details = "; ".join(
            f"{'.'.join(str(part) for part in error['loc']) or '<root>'}: {error['msg']}"
            for error in e.errors()
        )
        raise ConstraintError(f"Invalid model spec: {details}") from e
    return parsed.to_model_spec()


def load_model_spec(path: Union[str, Path]) -> ModelSpec:
    """Read and validate a ModelSpec JSON file"""
    path = Path(path)
    if not path.exists():
        raise ConstraintError(f"Model spec file not found: {path}")
    try:
        document = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ConstraintError(f"Model spec {path} is not valid JSON: {e}") from e
    spec = parse_model_spec(document)
    logger.info(f"Loaded {spec.family.value} spec (N={spec.size}) from {path}")
    return spec
