"""Prolongation tools: f^K on symmetric sequences and on T-data."""

import logging
from typing import Any, Dict

from ..config import config
from ..diagrams import JFunctor, SymSeq, TDatum
from ..equivalence import functor_to_tdatum
from ..spectra import burnside_count, f_K_spt, prolong_symseq, spectrum_from_json, spectrum_to_json, validate_spectrum
from ..utils.errors import ValidationError
from .arguments import carrier_argument, document_argument, load_document

logger = logging.getLogger(__name__)


class SpectraTools:
    """Build and check symmetric K-spectra."""

    async def prolong(self, document: Any, K: Any) -> Dict[str, Any]:
        """
        Apply f^K.

        Args:
            document: a tdatum.v1 or jfunctor.v1 document (yields a spectrum.v1
                document) or a symseq.v1 document (yields the orbit set)
            K: the finite set, "a,b" or a list of labels

        Returns:
            Dict: a spectrum document, or the size, classes and orbit-count oracle
        """
        carrier = carrier_argument(K)
        source = load_document(document)
        if isinstance(source, SymSeq):
            classes, _ = prolong_symseq(source, carrier)
            return {
                "K": carrier.to_json(),
                "size": len(classes),
                "burnside": burnside_count(source, carrier),
                "classes": classes.to_json(),
            }
        datum = functor_to_tdatum(source) if isinstance(source, JFunctor) else source
        if not isinstance(datum, TDatum):
            raise ValidationError("prolong expects a tdatum, jfunctor or symseq document", "document.schema")
        spectrum = f_K_spt(datum, carrier)
        logger.info(f"Prolonged datum on ({datum.window}) with |K| = {len(carrier)}")
        return spectrum_to_json(spectrum)

    async def check_spectrum(self, document: Any, p_max: int = None) -> Dict[str, Any]:
        """
        Check Σ_i × Σ_p-equivariance of the iterated bondings of a spectrum.v1 document.

        Args:
            document: the spectrum
            p_max: largest iterate checked, the configured SPECTRUM_P_MAX when omitted

        Returns:
            Dict form of the report
        """
        p_max = config.SPECTRUM_P_MAX if p_max is None else p_max
        if not isinstance(p_max, int) or p_max < 1:
            raise ValidationError(f"p_max must be a positive integer, got {p_max!r}", "p_max")
        spectrum = spectrum_from_json(document_argument(document))
        return validate_spectrum(spectrum, p_max).dict()
