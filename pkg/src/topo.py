"""Connected components of truncated 𝒥.

Morphisms only join objects with the same n − m, so that difference is a complete
invariant for components: the finite shadow of π₀QS⁰ = ℤ.
"""

import collections
import logging
from typing import Dict, List

from .jcat import JObject, Window, count_hom
from .utils.report import Report

logger = logging.getLogger(__name__)

# Graphviz X11 names, cycled by component id.
_COLOURS = ("lightblue", "lightpink", "palegreen", "khaki", "plum", "lightsalmon", "lightcyan", "wheat", "thistle")


def adjacent(a: JObject, b: JObject) -> bool:
    return a != b and (count_hom(a, b) > 0 or count_hom(b, a) > 0)


def components(window: Window) -> Dict[JObject, int]:
    """Breadth-first search over the hom-existence graph; each component is named by its n − m."""
    objects = window.objects()
    labels: Dict[JObject, int] = {}
    for start in objects:
        if start in labels:
            continue
        labels[start] = start.difference
        queue = collections.deque([start])
        while queue:
            a = queue.popleft()
            for b in objects:
                if b not in labels and adjacent(a, b):
                    labels[b] = start.difference
                    queue.append(b)
    logger.debug(f"Window ({window}) has {len(set(labels.values()))} components")
    return labels


def component_members(window: Window) -> Dict[int, List[JObject]]:
    grouped: Dict[int, List[JObject]] = collections.defaultdict(list)
    for a, c in components(window).items():
        grouped[c].append(a)
    return {c: sorted(grouped[c]) for c in sorted(grouped)}


def component_invariant_check(window: Window) -> Report:
    """Two objects are connected exactly when their n − m agree; ids are −M..N."""
    labels = components(window)
    ids = sorted(set(labels.values()))
    report = Report(check="pi0", details={"window": window.to_json(), "components": len(ids), "ids": ids})
    objects = window.objects()
    for a in objects:
        report.checked += 1
        if labels[a] != a.difference:
            report.fail(law="label", object=str(a), component=labels[a])
        for b in objects:
            if b <= a:
                continue
            report.checked += 1
            if (labels[a] == labels[b]) != (a.difference == b.difference):
                report.fail(law="invariant", left=str(a), right=str(b))
            if a.difference != b.difference and (count_hom(a, b) or count_hom(b, a)):
                report.fail(law="hom_across_components", left=str(a), right=str(b))
    if ids != list(range(-window.M, window.N + 1)):
        report.fail(law="ids", ids=ids, expected=[-window.M, window.N])
    return report


def components_dot(window: Window) -> str:
    """DOT graph with one filled colour per component and an edge for each nonempty hom-set."""
    labels = components(window)
    lines = ["graph pi0 {", "  node [style=filled];"]
    for a in window.objects():
        colour = _COLOURS[labels[a] % len(_COLOURS)]
        lines.append(f'  "{a}" [label="({a})\\n{labels[a]}", fillcolor={colour}];')
    objects = window.objects()
    for a in objects:
        for b in objects:
            if a < b and adjacent(a, b):
                lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
