"""Truncated diagram containers and their validators.

Everything lives on a rectangular window of 𝒥. Shift maps exist exactly where
both endpoints lie in the window, and every invariance condition is checked
only where its iterate fits.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Tuple

from .basecat import FinCarrier, FinMap, GroupAction
from .fincomb import Permutation, enumerate_permutations
from .jcat import (
    JMorphism,
    JObject,
    Window,
    compose_j,
    iota_embed,
    morphism_from_json,
)
from .schemas import (
    ActionModel,
    JFUNCTOR_SCHEMA,
    JFunctorModel,
    SYMSEQ_SCHEMA,
    SymSeqModel,
    TDATUM_SCHEMA,
    TDatumModel,
    generator_key,
    object_key,
    parse_model,
    within,
)
from .utils.errors import JSpecError, ValidationError, WindowError
from .utils.report import Report

logger = logging.getLogger(__name__)


def action_from_model(model: ActionModel, carrier: FinCarrier, path: str) -> GroupAction:
    generators = {}
    for key, table in model.generators.items():
        factor, k = generator_key(key, f"{path}.generators")
        generators[(factor, k)] = within(f"{path}.generators.{key}", lambda: FinMap(carrier, carrier, table))
    return within(path, lambda: GroupAction(carrier, tuple(model.degrees), generators))


@dataclass(frozen=True)
class SymSeq:
    """A symmetric sequence: level n is a carrier with a Σ_n-action."""

    carriers: Tuple[FinCarrier, ...]
    actions: Tuple[GroupAction, ...]

    def __post_init__(self):
        object.__setattr__(self, "carriers", tuple(self.carriers))
        object.__setattr__(self, "actions", tuple(self.actions))
        if len(self.carriers) != len(self.actions):
            raise ValidationError("Every level needs exactly one action", "actions")
        for n, (carrier, action) in enumerate(zip(self.carriers, self.actions)):
            if action.carrier != carrier or action.degrees != (n,):
                raise ValidationError(f"Level {n} must carry a Σ_{n}-action on its own carrier", f"actions[{n}]")

    @property
    def top(self) -> int:
        return len(self.carriers) - 1

    def carrier(self, n: int) -> FinCarrier:
        return self.carriers[n] if n < len(self.carriers) else FinCarrier.empty()

    def action(self, n: int) -> GroupAction:
        if n < len(self.actions):
            return self.actions[n]
        return GroupAction.trivial(FinCarrier.empty(), (n,))

    @classmethod
    def concentrated(cls, carrier: FinCarrier, degree: int, top: int = None, action: GroupAction = None) -> "SymSeq":
        """The sequence with `carrier` in one degree (trivial action by default) and ∅ elsewhere."""
        top = degree if top is None else top
        carriers, actions = [], []
        for n in range(top + 1):
            if n == degree:
                carriers.append(carrier)
                actions.append(action or GroupAction.trivial(carrier, (n,)))
            else:
                carriers.append(FinCarrier.empty())
                actions.append(GroupAction.trivial(FinCarrier.empty(), (n,)))
        return cls(tuple(carriers), tuple(actions))

    @classmethod
    def T(cls, top: int = 1) -> "SymSeq":
        """The tensor unit in degree one, ∅ elsewhere."""
        return cls.concentrated(FinCarrier.point(), 1, top)


@dataclass(frozen=True)
class BisymSeq:
    """A bisymmetric sequence: X_{i,n} with a Σ_i × Σ_n-action, for (i,n) in the window."""

    window: Window
    carriers: Mapping[JObject, FinCarrier]
    actions: Mapping[JObject, GroupAction]

    def __post_init__(self):
        object.__setattr__(self, "carriers", dict(self.carriers))
        object.__setattr__(self, "actions", dict(self.actions))
        for a in self.window.objects():
            if a not in self.carriers:
                raise ValidationError(f"Missing carrier at ({a})", f"carriers.{a}")
            if a not in self.actions:
                raise ValidationError(f"Missing action at ({a})", f"actions.{a}")
            action = self.actions[a]
            if action.carrier != self.carriers[a] or action.degrees != (a.m, a.n):
                raise ValidationError(f"Action at ({a}) must be a Σ_{a.m}×Σ_{a.n}-action on X_{a}", f"actions.{a}")
        extra = [a for a in self.carriers if a not in self.window]
        if extra:
            raise ValidationError(f"Carrier at ({extra[0]}) lies outside the window", f"carriers.{extra[0]}")

    def act(self, a: JObject, g: Tuple[Permutation, Permutation]) -> FinMap:
        return self.actions[a].act(g)


@dataclass(frozen=True)
class TDatum(BisymSeq):
    """
    A T-datum: a bisymmetric sequence with shift maps φ_{i,n}: X_{i,n} -> X_{i+1,n+1}.

    Construction checks shapes only; equivariance and Σ_p-invariance are
    certified by validate_tdatum (available as the cached `report`).
    """

    shifts: Mapping[JObject, FinMap] = None

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "shifts", dict(self.shifts or {}))
        for a in self.window.objects():
            b = JObject(a.m + 1, a.n + 1)
            if b not in self.window:
                if a in self.shifts:
                    raise ValidationError(f"Shift at ({a}) leaves the window", f"shifts.{a}")
                continue
            if a not in self.shifts:
                raise ValidationError(f"Missing shift at ({a})", f"shifts.{a}")
            shift = self.shifts[a]
            if shift.src != self.carriers[a] or shift.dst != self.carriers[b]:
                raise ValidationError(f"Shift at ({a}) must map X_{a} to X_{b}", f"shifts.{a}")

    def shift_sources(self) -> Iterator[JObject]:
        for a in self.window.objects():
            if a in self.shifts:
                yield a

    def iterate(self, i: int, n: int, p: int) -> FinMap:
        """Φ_{i,n,p} = φ_{i+p-1,n+p-1} ∘ ... ∘ φ_{i,n}."""
        key = (i, n, p)
        cached = self._iterates.get(key)
        if cached is not None:
            return cached
        if JObject(i + p, n + p) not in self.window:
            raise WindowError(f"Iterate Φ_{{{i},{n},{p}}} leaves the window ({self.window})")
        if p == 0:
            result = FinMap.identity(self.carriers[JObject(i, n)])
        else:
            result = self.shifts[JObject(i + p - 1, n + p - 1)].compose(self.iterate(i, n, p - 1))
        self._iterates[key] = result
        return result

    @cached_property
    def _iterates(self) -> Dict[Tuple[int, int, int], FinMap]:
        return {}

    @cached_property
    def report(self) -> Report:
        return validate_tdatum(self)

    @property
    def is_valid(self) -> bool:
        return self.report.passed


class JFunctor:
    """
    A functor from the window of 𝒥 to finite sets.

    Raw functors store every edge map; datum-backed functors compute edges on
    demand through an evaluator. Both answer `on(f)` for f in the window.
    """

    def __init__(
        self,
        window: Window,
        at: Mapping[JObject, FinCarrier],
        edges: Optional[Mapping[JMorphism, FinMap]] = None,
        evaluator: Optional[Callable[[JMorphism], FinMap]] = None,
        name: str = "functor",
    ):
        if (edges is None) == (evaluator is None):
            raise ValidationError("A functor needs either stored edges or an evaluator")
        self.window = window
        self.at = dict(at)
        self.name = name
        self._edges = dict(edges) if edges is not None else None
        self._evaluator = evaluator
        self._cache: Dict[JMorphism, FinMap] = {}
        for a in window.objects():
            if a not in self.at:
                raise ValidationError(f"Missing carrier at ({a})", f"carriers.{a}")

    @property
    def is_raw(self) -> bool:
        return self._edges is not None

    def on(self, f: JMorphism) -> FinMap:
        self.window.require(f)
        if self._edges is not None:
            try:
                return self._edges[f]
            except KeyError:
                raise ValidationError(f"No edge map stored for {f.key}", f"edges.{f.key}")
        cached = self._cache.get(f)
        if cached is None:
            cached = self._evaluator(f)
            self._cache[f] = cached
        return cached

    def materialize(self) -> "JFunctor":
        """A raw copy with every edge map computed."""
        return JFunctor(self.window, self.at, {f: self.on(f) for f in self.window.morphisms()}, name=self.name)

    def size(self, a: JObject) -> int:
        return len(self.at[a])

    @cached_property
    def report(self) -> Report:
        return validate_functor(self)


def validate_functor(F: JFunctor) -> Report:
    """Identities and composition, exhaustively over the window; lists every violation."""
    report = Report(check="functor", details={"window": F.window.to_json(), "name": F.name})
    edges: Dict[JMorphism, FinMap] = {}
    for f in F.window.morphisms():
        report.checked += 1
        try:
            edge = F.on(f)
        except JSpecError as e:
            report.fail(law="edge", morphism=f.key, error=e.message)
            continue
        if edge.src != F.at[f.src] or edge.dst != F.at[f.dst]:
            report.fail(law="edge", morphism=f.key, error="edge map has the wrong source or target")
            continue
        edges[f] = edge
        if f.is_identity() and not edge.is_identity():
            report.fail(law="identity", morphism=f.key)
        if f.src == f.dst and f.shift == 0 and not edge.is_bijective():
            report.fail(law="isomorphism", morphism=f.key)
    for f, g in F.window.composable_pairs():
        if f not in edges or g not in edges:
            continue
        gf = compose_j(g, f)
        if gf not in edges:
            continue
        report.checked += 1
        first, second, composite = edges[f], edges[g], edges[gf]
        for x in first.src:
            if composite(x) != second(first(x)):
                report.fail(law="composition", f=f.key, g=g.key, element=x)
                break
    if not report.passed:
        logger.warning(f"Functor {F.name} fails {len(report.violations)} functoriality checks")
    return report


def transposition_pairs(a: JObject) -> Iterator[Tuple[Tuple[int, int], Tuple[Permutation, Permutation]]]:
    """The adjacent transposition generators of Σ_m × Σ_n as permutation pairs."""
    for k in range(1, a.m):
        yield (0, k), (Permutation.transposition(a.m, k), Permutation.identity(a.n))
    for k in range(1, a.n):
        yield (1, k), (Permutation.identity(a.m), Permutation.transposition(a.n, k))


def front_embed(g: Tuple[Permutation, Permutation], p: int = 1) -> Tuple[Permutation, Permutation]:
    """Σ_i × Σ_n -> Σ_{i+p} × Σ_{n+p}, fixing the last p elements."""
    a, b = g
    return a.direct_sum(Permutation.identity(p)), b.direct_sum(Permutation.identity(p))


def validate_tdatum(D: TDatum) -> Report:
    """Equivariance of every shift and Σ_p-invariance of every iterate; the first failure names (i,n,p,g)."""
    report = Report(check="tdatum", details={"window": D.window.to_json()})
    for a in D.shift_sources():
        b = JObject(a.m + 1, a.n + 1)
        shift = D.shifts[a]
        for key, g in transposition_pairs(a):
            report.checked += 1
            left = shift.compose(D.act(a, g))
            right = D.act(b, front_embed(g)).compose(shift)
            if left != right:
                element, _, _ = left.first_difference(right)
                report.fail(law="equivariance", i=a.m, n=a.n, generator=list(key), element=element)
    for a in D.window.objects():
        p = 2
        while JObject(a.m + p, a.n + p) in D.window:
            target = JObject(a.m + p, a.n + p)
            iterate = D.iterate(a.m, a.n, p)
            for g in enumerate_permutations(p):
                if g.is_identity():
                    continue
                report.checked += 1
                moved = D.act(target, iota_embed(g, a.m, a.n)).compose(iterate)
                if moved != iterate:
                    element, _, _ = moved.first_difference(iterate)
                    report.fail(law="invariance", i=a.m, n=a.n, p=p, g=list(g.images), element=element)
            p += 1
    if not report.passed:
        logger.warning(f"T-datum fails at {report.witness}")
    return report


@dataclass(frozen=True)
class DatumMap:
    """A map of T-data: equivariant components commuting with the shifts."""

    source: TDatum
    target: TDatum
    components: Mapping[JObject, FinMap]

    def __post_init__(self):
        object.__setattr__(self, "components", dict(self.components))
        if self.source.window != self.target.window:
            raise ValidationError("Source and target of a datum map must share a window", "window")
        for a in self.source.window.objects():
            component = self.components.get(a)
            if component is None:
                raise ValidationError(f"Missing component at ({a})", f"components.{a}")
            if component.src != self.source.carriers[a] or component.dst != self.target.carriers[a]:
                raise ValidationError(f"Component at ({a}) has the wrong source or target", f"components.{a}")


def validate_datum_map(h: DatumMap) -> Report:
    report = Report(check="datum_map", details={"window": h.source.window.to_json()})
    for a in h.source.window.objects():
        component = h.components[a]
        for key, g in transposition_pairs(a):
            report.checked += 1
            if component.compose(h.source.act(a, g)) != h.target.act(a, g).compose(component):
                report.fail(law="equivariance", object=str(a), generator=list(key))
        if a in h.source.shifts:
            b = JObject(a.m + 1, a.n + 1)
            report.checked += 1
            if h.components[b].compose(h.source.shifts[a]) != h.target.shifts[a].compose(component):
                report.fail(law="shift", object=str(a))
    return report


# -- serialization -----------------------------------------------------------

def _window_from(values: List[int]) -> Window:
    if len(values) != 2 or any(v < 0 for v in values):
        raise ValidationError(f"Window must be two naturals, got {values}", "window")
    return Window(values[0], values[1])


def _carriers_from(raw: Dict[str, List[str]]) -> Dict[JObject, FinCarrier]:
    carriers = {}
    for key, labels in raw.items():
        m, n = object_key(key, f"carriers.{key}")
        carriers[JObject(m, n)] = within(f"carriers.{key}", lambda: FinCarrier(tuple(labels)))
    return carriers


def tdatum_to_json(D: TDatum) -> Dict[str, object]:
    return {
        "schema": TDATUM_SCHEMA,
        "window": D.window.to_json(),
        "carriers": {str(a): D.carriers[a].to_json() for a in sorted(D.carriers)},
        "actions": {str(a): D.actions[a].to_json() for a in sorted(D.actions)},
        "shifts": {str(a): D.shifts[a].to_json() for a in sorted(D.shifts)},
    }


def tdatum_from_json(data: Dict[str, object]) -> TDatum:
    model = parse_model(TDatumModel, data, TDATUM_SCHEMA)
    window = _window_from(model.window)
    carriers = _carriers_from(model.carriers)
    actions = {}
    for key, action in model.actions.items():
        m, n = object_key(key, f"actions.{key}")
        a = JObject(m, n)
        if a not in carriers:
            raise ValidationError(f"Action at ({a}) has no carrier", f"actions.{key}")
        actions[a] = action_from_model(action, carriers[a], f"actions.{key}")
    shifts = {}
    for key, table in model.shifts.items():
        m, n = object_key(key, f"shifts.{key}")
        a, b = JObject(m, n), JObject(m + 1, n + 1)
        if a not in carriers or b not in carriers:
            raise ValidationError(f"Shift at ({a}) has no carrier at one of its ends", f"shifts.{key}")
        shifts[a] = within(f"shifts.{key}", lambda: FinMap(carriers[a], carriers[b], table))
    return TDatum(window, carriers, actions, shifts)


def jfunctor_to_json(F: JFunctor) -> Dict[str, object]:
    edges = sorted(F.window.morphisms(), key=lambda f: f.key)
    return {
        "schema": JFUNCTOR_SCHEMA,
        "window": F.window.to_json(),
        "carriers": {str(a): F.at[a].to_json() for a in sorted(F.at)},
        "edges": [{"morphism": f.to_json(), "table": F.on(f).to_json()} for f in edges],
    }


def jfunctor_from_json(data: Dict[str, object]) -> JFunctor:
    model = parse_model(JFunctorModel, data, JFUNCTOR_SCHEMA)
    window = _window_from(model.window)
    carriers = _carriers_from(model.carriers)
    edges = {}
    for position, edge in enumerate(model.edges):
        path = f"edges[{position}]"
        f = within(f"{path}.morphism", lambda: morphism_from_json(edge.morphism.dict()))
        if not window.contains_morphism(f):
            raise ValidationError(f"Edge {f.key} lies outside the window", path)
        if f in edges:
            raise ValidationError(f"Duplicate edge {f.key}", path)
        if f.src not in carriers or f.dst not in carriers:
            raise ValidationError(f"Edge {f.key} has no carrier at one of its ends", path)
        edges[f] = within(f"{path}.table", lambda: FinMap(carriers[f.src], carriers[f.dst], edge.table))
    return within("functor", lambda: JFunctor(window, carriers, edges, name="document"))


def symseq_to_json(X: SymSeq) -> Dict[str, object]:
    return {
        "schema": SYMSEQ_SCHEMA,
        "levels": [carrier.to_json() for carrier in X.carriers],
        "actions": [action.to_json() for action in X.actions],
    }


def symseq_from_json(data: Dict[str, object]) -> SymSeq:
    model = parse_model(SymSeqModel, data, SYMSEQ_SCHEMA)
    if len(model.levels) != len(model.actions):
        raise ValidationError("Every level needs exactly one action", "actions")
    carriers = [within(f"levels[{n}]", lambda: FinCarrier(tuple(labels))) for n, labels in enumerate(model.levels)]
    actions = [action_from_model(model.actions[n], carriers[n], f"actions[{n}]") for n in range(len(carriers))]
    return within("symseq", lambda: SymSeq(tuple(carriers), tuple(actions)))

