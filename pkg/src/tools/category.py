"""Tools over the category 𝒥 itself."""

import logging
from typing import Any, Dict

from ..config import config
from ..jcat import (
    check_category_axioms,
    check_decomposition,
    check_hom_counts,
    category_dot,
    compose_j,
    count_hom,
    decompose,
    enumerate_hom,
    recompose,
)
from ..utils.errors import ValidationError
from ..utils.validation import validate_window
from .arguments import morphism_argument, object_argument, window_argument

logger = logging.getLogger(__name__)

# enumerate_hom answers are capped; count_hom has no cap.
MAX_LISTED_MORPHISMS = 5000


class CategoryTools:
    """Enumeration, composition and axiom checks for 𝒥."""

    async def count_hom(self, src: Any, dst: Any) -> Dict[str, Any]:
        """
        Count morphisms with the closed form k!·l!/p!.

        Args:
            src: source object "m,n"
            dst: target object "k,l"

        Returns:
            Dict with the objects and the count
        """
        a, b = object_argument(src, "src"), object_argument(dst, "dst")
        return {"src": a.to_json(), "dst": b.to_json(), "count": count_hom(a, b)}

    async def enumerate_hom(self, src: Any, dst: Any) -> Dict[str, Any]:
        """
        List Hom(src, dst) in canonical order.

        Args:
            src: source object "m,n"
            dst: target object "k,l"

        Returns:
            Dict with the count and every morphism as key and as (phi, psi, alpha)
        """
        a, b = object_argument(src, "src"), object_argument(dst, "dst")
        if not validate_window(b.m, b.n, config.MAX_WINDOW):
            raise ValidationError(f"Target ({b}) lies beyond MAX_WINDOW={config.MAX_WINDOW}", "dst")
        count = count_hom(a, b)
        if count > MAX_LISTED_MORPHISMS:
            raise ValidationError(f"Hom({a}; {b}) has {count} morphisms, more than {MAX_LISTED_MORPHISMS}", "dst")
        morphisms = enumerate_hom(a, b)
        return {
            "src": a.to_json(),
            "dst": b.to_json(),
            "count": len(morphisms),
            "morphisms": [dict(f.to_json(), key=f.key) for f in morphisms],
        }

    async def compose(self, g: Any, f: Any) -> Dict[str, Any]:
        """
        Compose g after f.

        Args:
            g: the second morphism (key or object)
            f: the first morphism (key or object)

        Returns:
            Dict describing g∘f
        """
        first, second = morphism_argument(f, "f"), morphism_argument(g, "g")
        composite = compose_j(second, first)
        return dict(composite.to_json(), key=composite.key)

    async def decompose(self, morphism: Any) -> Dict[str, Any]:
        """
        Factor a morphism canonically as (a, b) ∘ Ψ_{i,n,p}.

        Returns:
            Dict with a, b, p and the recomposition check
        """
        f = morphism_argument(morphism, "morphism")
        a, b, p = decompose(f)
        return {
            "morphism": f.key,
            "a": list(a.images),
            "b": list(b.images),
            "p": p,
            "recomposes": recompose(a, b, p) == f,
        }

    async def check_category(self, window: Any = None, bound: int = 4) -> Dict[str, Any]:
        """
        Exhaustive category axioms, hom counts and decomposition on a window.

        Args:
            window: "M,N", the configured default when omitted
            bound: largest entry for the hom-count comparison

        Returns:
            Dict with the combined verdict and one report per check
        """
        w = window_argument(window)
        if not isinstance(bound, int) or bound < 0 or bound > 5:
            raise ValidationError(f"Hom-count bound must be between 0 and 5, got {bound!r}", "bound")
        reports = [check_category_axioms(w), check_hom_counts(bound), check_decomposition(w)]
        logger.info(f"Category checks on ({w}): {[r.passed for r in reports]}")
        return {
            "window": w.to_json(),
            "passed": all(r.passed for r in reports),
            "reports": [r.dict() for r in reports],
        }

    async def describe_window(self, window: Any = None) -> Dict[str, Any]:
        """Objects, hom counts and a DOT rendering of the truncated category."""
        w = window_argument(window)
        objects = w.objects()
        return {
            "window": w.to_json(),
            "objects": [a.to_json() for a in objects],
            "hom_counts": {f"{a}>{b}": count_hom(a, b) for a in objects for b in objects if count_hom(a, b)},
            "dot": category_dot(w),
        }
