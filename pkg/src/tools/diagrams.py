"""Validation and conversion tools for 𝒥-functors and T-data."""

import logging
from typing import Any, Dict

from ..config import config
from ..diagrams import JFunctor, TDatum, jfunctor_to_json, tdatum_to_json
from ..equivalence import functor_to_tdatum, roundtrip_check, tdatum_to_functor
from ..generators import random_tdatum
from ..utils.errors import ValidationError
from .arguments import load_document, window_argument

logger = logging.getLogger(__name__)

CONVERSION_TARGETS = ("functor", "tdatum")


class DiagramTools:
    """Validators, the two conversions, and seeded sample data."""

    async def check_functor(self, document: Any) -> Dict[str, Any]:
        """
        Check identities and composition of a jfunctor.v1 document exhaustively.

        Args:
            document: the functor, as decoded JSON or as text

        Returns:
            Dict form of the functoriality report
        """
        functor = load_document(document)
        if not isinstance(functor, JFunctor):
            raise ValidationError("check_functor expects a jfunctor.v1 document", "document.schema")
        return functor.report.dict()

    async def check_tdatum(self, document: Any) -> Dict[str, Any]:
        """
        Check shift equivariance and Σ_p-invariance of a tdatum.v1 document.

        Returns:
            Dict form of the report; the first violation names (i, n, p, g)
        """
        datum = load_document(document)
        if not isinstance(datum, TDatum):
            raise ValidationError("check_tdatum expects a tdatum.v1 document", "document.schema")
        return datum.report.dict()

    async def convert(self, document: Any, to: str) -> Dict[str, Any]:
        """
        Convert between the two presentations.

        Args:
            document: a tdatum.v1 or jfunctor.v1 document
            to: "functor" or "tdatum"

        Returns:
            The converted document; refuses inputs that fail validation
        """
        if to not in CONVERSION_TARGETS:
            raise ValidationError(f"Conversion target must be one of {CONVERSION_TARGETS}, got {to!r}", "to")
        source = load_document(document)
        if to == "functor":
            if isinstance(source, JFunctor):
                return jfunctor_to_json(source)
            if not isinstance(source, TDatum):
                raise ValidationError("Only T-data convert to functors", "document.schema")
            return jfunctor_to_json(tdatum_to_functor(source).materialize())
        if isinstance(source, TDatum):
            return tdatum_to_json(source)
        if not isinstance(source, JFunctor):
            raise ValidationError("Only functors convert to T-data", "document.schema")
        return tdatum_to_json(functor_to_tdatum(source))

    async def check_roundtrip(self, document: Any) -> Dict[str, Any]:
        """Run datum -> functor -> datum, or functor -> datum -> functor, and compare."""
        source = load_document(document)
        if not isinstance(source, (JFunctor, TDatum)):
            raise ValidationError("Roundtrips need a tdatum.v1 or jfunctor.v1 document", "document.schema")
        return roundtrip_check(source).dict()

    async def random_tdatum(self, seed: int = None, window: Any = None) -> Dict[str, Any]:
        """
        A seeded random valid T-datum.

        Args:
            seed: random seed, the configured SEED when omitted
            window: "M,N", the configured default when omitted

        Returns:
            The datum as a tdatum.v1 document
        """
        seed = config.SEED if seed is None else seed
        if not isinstance(seed, int) or isinstance(seed, bool):
            raise ValidationError(f"Seed must be an integer, got {seed!r}", "seed")
        w = window_argument(window)
        logger.info(f"Random T-datum on ({w}) from seed {seed}")
        return tdatum_to_json(random_tdatum(seed, w))
