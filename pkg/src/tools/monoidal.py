"""Day convolution and monoidal-structure tools."""

import logging
from typing import Any, Dict, List

from ..dayconv import (
    check_braiding,
    check_monoidal_comparison,
    check_sym_t,
    check_unit_laws,
    day_convolve,
    presentation_to_json,
    require_same_window,
    sym_T,
    unit_sym_t_iso,
)
from ..jcat import check_monoidal_laws
from ..utils.report import Report
from .arguments import load_functor, object_argument, window_argument

logger = logging.getLogger(__name__)


def _summary(reports: List[Report], **extra: Any) -> Dict[str, Any]:
    data = dict(extra)
    data["passed"] = all(r.passed for r in reports)
    data["reports"] = [r.dict() for r in reports]
    return data


class MonoidalTools:
    """Coend presentations, unit and braiding laws, and the comparison with Sym(T)-modules."""

    async def convolve(self, left: Any, right: Any, at: Any, classes: bool = False) -> Dict[str, Any]:
        """
        Compute (X⊛Y)(at) as a finite coend.

        Args:
            left: X, a jfunctor.v1 or tdatum.v1 document
            right: Y, on the same window
            at: the object "k,l"
            classes: include every class with its sorted members

        Returns:
            Dict with the size, presentation counts and class representatives
        """
        X, Y = load_functor(left, "left"), load_functor(right, "right")
        require_same_window(X, Y)
        a = object_argument(at, "at")
        presentation = day_convolve(X, Y, a)
        return presentation_to_json(presentation, a, classes)

    async def check_monoidal(self, left: Any = None, right: Any = None, window: Any = None) -> Dict[str, Any]:
        """
        Check monoidal structure.

        With two documents: unit laws for each, the braiding, and the comparison
        with the module smash over Sym(T) at every object. Without documents:
        the monoidal laws of 𝒥 on the window, Sym(T) and its identification
        with the restricted unit.

        Args:
            left: optional X document
            right: optional Y document
            window: "M,N" for the document-free checks

        Returns:
            Dict with the combined verdict and one report per check
        """
        if left is not None or right is not None:
            X = load_functor(left, "left") if left is not None else None
            Y = load_functor(right, "right") if right is not None else X
            X = X or Y
            require_same_window(X, Y)
            reports = [check_unit_laws(X)]
            if Y is not X:
                reports.append(check_unit_laws(Y))
            reports += [check_braiding(X, Y), check_monoidal_comparison(X, Y)]
            logger.info(f"Monoidal checks for {X.name} and {Y.name}: {[r.passed for r in reports]}")
            return _summary(reports, window=X.window.to_json())
        w = window_argument(window)
        top = min(w.M, w.N)
        reports = [check_monoidal_laws(w), check_sym_t(sym_T(top)), unit_sym_t_iso(w)[1]]
        return _summary(reports, window=w.to_json())
