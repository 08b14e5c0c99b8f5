"""Connected components of truncated 𝒥."""

from typing import Any, Dict

from ..topo import component_invariant_check, component_members, components_dot
from .arguments import window_argument


class TopologyTools:
    """The π₀ shadow of the classifying space."""

    async def pi0(self, window: Any = None, dot: bool = False) -> Dict[str, Any]:
        """
        Components of the window, named by n − m.

        Args:
            window: "M,N", the configured default when omitted
            dot: include a Graphviz rendering coloured by component

        Returns:
            Dict with the component count, the members of each component and the invariant check
        """
        w = window_argument(window)
        members = component_members(w)
        report = component_invariant_check(w)
        result = {
            "window": w.to_json(),
            "components": len(members),
            "members": {str(c): [a.to_json() for a in objects] for c, objects in members.items()},
            "passed": report.passed,
            "report": report.dict(),
        }
        if dot:
            result["dot"] = components_dot(w)
        return result
