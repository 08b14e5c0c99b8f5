"""Argument decoding shared by the tool classes."""

from typing import Any, Dict, Union

from ..basecat import FinCarrier
from ..config import config
from ..diagrams import JFunctor, SymSeq, TDatum, jfunctor_from_json, symseq_from_json, tdatum_from_json
from ..equivalence import tdatum_to_functor
from ..jcat import JMorphism, JObject, Window, morphism_from_json, morphism_from_key
from ..schemas import JFUNCTOR_SCHEMA, SPECTRUM_SCHEMA, SYMSEQ_SCHEMA, TDATUM_SCHEMA, load_json
from ..utils.errors import ValidationError
from ..utils.validation import parse_labels, parse_pair, validate_window

Document = Union[JFunctor, TDatum, SymSeq]


def window_argument(value: Any, field: str = "window", limit: int = None) -> Window:
    """
    Decode a window given as "M,N" or [M, N].

    Args:
        value: the raw argument; None selects the configured default
        field: argument name reported on failure
        limit: largest accepted bound, MAX_WINDOW by default

    Returns:
        Window: the decoded window
    """
    if value is None:
        return Window(config.WINDOW_M, config.WINDOW_N)
    M, N = parse_pair(value, field)
    limit = config.MAX_WINDOW if limit is None else limit
    if not validate_window(M, N, limit):
        raise ValidationError(f"Window ({M},{N}) exceeds MAX_WINDOW={limit}", field)
    return Window(M, N)


def object_argument(value: Any, field: str) -> JObject:
    m, n = parse_pair(value, field)
    return JObject(m, n)


def morphism_argument(value: Any, field: str) -> JMorphism:
    """A morphism as its key string ("1,1>2,2:1/2/2") or as a JSON object."""
    if isinstance(value, str):
        try:
            return morphism_from_key(value)
        except ValidationError as e:
            raise ValidationError(e.message, field)
    if isinstance(value, dict):
        try:
            return morphism_from_json(value)
        except ValidationError as e:
            inner = (e.data or {}).get("field")
            raise ValidationError(e.message, f"{field}.{inner}" if inner else field)
    raise ValidationError(f"Expected a morphism key or object, got {type(value).__name__}", field)


def carrier_argument(value: Any, field: str = "K") -> FinCarrier:
    """A finite set given as "a,b,c" or a list of labels."""
    if isinstance(value, (list, tuple)):
        labels = [str(v) for v in value]
        if len(set(labels)) != len(labels):
            raise ValidationError(f"Duplicate labels in {labels}", field)
    elif isinstance(value, str):
        labels = parse_labels(value, field)
    else:
        raise ValidationError("Expected a label list", field)
    return FinCarrier(tuple(labels))


def document_argument(value: Any, field: str = "document") -> Dict[str, Any]:
    """A JSON document, either decoded already or as text, no larger than MAX_WINDOW allows."""
    if isinstance(value, str):
        value = load_json(value)
    if not isinstance(value, dict):
        raise ValidationError("Document must be a JSON object", field)
    require_bounded(value, field)
    return value


def require_bounded(data: Dict[str, Any], field: str = "document") -> None:
    """
    Refuse documents beyond MAX_WINDOW before decoding them: a window [M, N]
    for functors and T-data, more than MAX_WINDOW + 1 levels for symmetric
    sequences and spectra. Malformed members are left to the decoder.
    """
    limit = config.MAX_WINDOW
    schema = data.get("schema")
    if schema in (JFUNCTOR_SCHEMA, TDATUM_SCHEMA):
        window = data.get("window")
        if isinstance(window, list) and len(window) == 2 and all(isinstance(v, int) for v in window):
            if not validate_window(window[0], window[1], limit):
                raise ValidationError(f"Document window {window} is outside 0..MAX_WINDOW={limit}", f"{field}.window")
    elif schema in (SYMSEQ_SCHEMA, SPECTRUM_SCHEMA):
        levels = data.get("levels")
        if isinstance(levels, list) and len(levels) > limit + 1:
            raise ValidationError(f"Document has {len(levels)} levels, more than MAX_WINDOW+1={limit + 1}", f"{field}.levels")


def load_document(value: Any, field: str = "document") -> Document:
    """Dispatch on the document's "schema" member."""
    data = document_argument(value, field)
    schema = data.get("schema")
    if schema == JFUNCTOR_SCHEMA:
        return jfunctor_from_json(data)
    if schema == TDATUM_SCHEMA:
        return tdatum_from_json(data)
    if schema == SYMSEQ_SCHEMA:
        return symseq_from_json(data)
    raise ValidationError(
        f"Unknown schema {schema!r}; expected one of {JFUNCTOR_SCHEMA}, {TDATUM_SCHEMA}, {SYMSEQ_SCHEMA}",
        f"{field}.schema",
    )


def load_functor(value: Any, field: str = "document") -> JFunctor:
    """A 𝒥-functor document, or a T-datum document read as its functor."""
    document = load_document(value, field)
    if isinstance(document, TDatum):
        return tdatum_to_functor(document)
    if isinstance(document, JFunctor):
        return document
    raise ValidationError("Expected a jfunctor.v1 or tdatum.v1 document", f"{field}.schema")
