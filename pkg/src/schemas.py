"""Versioned JSON wire schemas.

Documents are validated with pydantic first; semantic checks (distinct
labels, total maps, valid actions) happen when the models are turned into
domain objects. Both kinds of failure surface as ValidationError with a
dotted path to the offending value.
"""

import json
from typing import Any, Callable, Dict, List, Optional, TypeVar

from pydantic import BaseModel, Field
from pydantic import ValidationError as PydanticValidationError

from .utils.errors import ValidationError

T = TypeVar("T")

JFUNCTOR_SCHEMA = "jfunctor.v1"
TDATUM_SCHEMA = "tdatum.v1"
SYMSEQ_SCHEMA = "symseq.v1"
SPECTRUM_SCHEMA = "spectrum.v1"


class WireModel(BaseModel):
    class Config:
        allow_population_by_field_name = True
        extra = "forbid"


class MorphismModel(WireModel):
    src: List[int]
    dst: List[int]
    phi: List[int] = []
    psi: List[int] = []
    alpha: List[int] = []


class ActionModel(WireModel):
    degrees: List[int]
    generators: Dict[str, Dict[str, str]] = {}


class EdgeModel(WireModel):
    morphism: MorphismModel
    table: Dict[str, str]


class JFunctorModel(WireModel):
    schema_id: str = Field(JFUNCTOR_SCHEMA, alias="schema")
    window: List[int]
    carriers: Dict[str, List[str]]
    edges: List[EdgeModel] = []


class TDatumModel(WireModel):
    schema_id: str = Field(TDATUM_SCHEMA, alias="schema")
    window: List[int]
    carriers: Dict[str, List[str]]
    actions: Dict[str, ActionModel]
    shifts: Dict[str, Dict[str, str]] = {}


class SymSeqModel(WireModel):
    schema_id: str = Field(SYMSEQ_SCHEMA, alias="schema")
    levels: List[List[str]]
    actions: List[ActionModel]


class SpectrumModel(WireModel):
    schema_id: str = Field(SPECTRUM_SCHEMA, alias="schema")
    K: List[str]
    levels: List[List[str]]
    actions: List[ActionModel]
    bondings: List[Dict[str, str]]


def _reject_duplicates(pairs):
    seen = {}
    for key, value in pairs:
        if key in seen:
            raise ValidationError(f"Duplicate key {key!r} in JSON object", key)
        seen[key] = value
    return seen


def load_json(text: str) -> Any:
    """Parse JSON, rejecting objects with repeated keys."""
    try:
        return json.loads(text, object_pairs_hook=_reject_duplicates)
    except json.JSONDecodeError as e:
        raise ValidationError(f"Invalid JSON: {e.msg} at line {e.lineno} column {e.colno}", "document")


def dump_json(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def parse_model(model: Callable[..., T], data: Any, expected_schema: Optional[str] = None) -> T:
    """Validate a decoded document against a wire model."""
    if not isinstance(data, dict):
        raise ValidationError("Document must be a JSON object", "document")
    try:
        parsed = model.parse_obj(data)
    except PydanticValidationError as e:
        first = e.errors()[0]
        path = ".".join(str(part) for part in first["loc"])
        raise ValidationError(f"{first['msg']} at {path}", path)
    if expected_schema and getattr(parsed, "schema_id", expected_schema) != expected_schema:
        raise ValidationError(f"Expected schema {expected_schema!r}, got {parsed.schema_id!r}", "schema")
    return parsed


def within(path: str, build: Callable[[], T]) -> T:
    """Run a constructor, prefixing the path of any ValidationError it raises."""
    try:
        return build()
    except ValidationError as e:
        inner = (e.data or {}).get("field")
        field = f"{path}.{inner}" if inner else path
        raise ValidationError(e.message, field)


def object_key(text: str, path: str) -> List[int]:
    """Decode an object key such as "1,2"."""
    parts = text.split(",")
    if len(parts) != 2 or not all(part.isdigit() for part in parts):
        raise ValidationError(f"Object keys look like 'm,n', got {text!r}", path)
    return [int(part) for part in parts]


def generator_key(text: str, path: str) -> List[int]:
    """Decode a generator key "factor.k"."""
    parts = text.split(".")
    if len(parts) != 2 or not all(part.isdigit() for part in parts):
        raise ValidationError(f"Generator keys look like 'factor.k', got {text!r}", path)
    return [int(part) for part in parts]


def dump_model(model: BaseModel) -> Dict[str, Any]:
    return model.dict(by_alias=True)
