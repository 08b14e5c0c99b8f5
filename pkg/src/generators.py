"""Seeded sample data: free and point functors, random valid T-data, and hand-built counterexamples.

Random functors are coproducts of representables Hom_𝒥(c, −) on a few random
generators (plus, sometimes, a point functor on an up-closed support), divided
by a random congruence. The congruence is closed under every edge map, so the
quotient is again a functor and the projection is a natural transformation.
Everything is reproducible from the seed.
"""

import logging
import random
from dataclasses import dataclass
from typing import Dict, List, Mapping, Sequence, Tuple

from .basecat import DisjointSet, FinCarrier, FinMap, GroupAction, compound_label, coproduct
from .diagrams import DatumMap, JFunctor, SymSeq, TDatum
from .equivalence import functor_to_tdatum
from .fincomb import Permutation, enumerate_permutations
from .jcat import JObject, Window, compose_j, enumerate_hom
from .utils.errors import ValidationError

logger = logging.getLogger(__name__)


def representable(c: JObject, window: Window) -> JFunctor:
    """Hom_𝒥(c, −), labelled by morphism keys, acting by postcomposition."""
    if c not in window:
        raise ValidationError(f"Generator ({c}) lies outside the window ({window})", "generators")
    at = {a: FinCarrier(tuple(s.key for s in enumerate_hom(c, a))) for a in window.objects()}
    edges = {}
    for f in window.morphisms():
        edges[f] = FinMap(at[f.src], at[f.dst], {s.key: compose_j(f, s).key for s in enumerate_hom(c, f.src)})
    return JFunctor(window, at, edges, name=f"Hom({c},-)")


def point_functor(window: Window, support: Sequence[JObject] = None) -> JFunctor:
    """One point on `support` (all of the window by default), empty elsewhere.

    The support must be closed upwards along morphisms, otherwise some edge map
    would have to leave a point for the empty set.
    """
    support = set(window.objects() if support is None else support)
    point, empty = FinCarrier.point(), FinCarrier.empty()
    at = {a: point if a in support else empty for a in window.objects()}
    edges = {}
    for f in window.morphisms():
        if f.src in support and f.dst not in support:
            raise ValidationError(f"Support is not closed upwards: ({f.src}) maps to ({f.dst})", "support")
        edges[f] = FinMap(at[f.src], at[f.dst], {x: "*" for x in at[f.src]})
    return JFunctor(window, at, edges, name="point")


def diagonal_support(window: Window, difference: int, start: int = 0) -> List[JObject]:
    """The objects with n − m = difference and m >= start, an up-closed support."""
    return [a for a in window.objects() if a.difference == difference and a.m >= start]


def coproduct_functor(parts: Sequence[JFunctor], tags: Sequence[str] = None, name: str = "coproduct") -> JFunctor:
    """Objectwise tagged disjoint union of functors on a common window."""
    if not parts:
        raise ValidationError("A coproduct of functors needs at least one part", "parts")
    window = parts[0].window
    if any(part.window != window for part in parts):
        raise ValidationError("Coproduct parts must share a window", "parts")
    tags = list(tags) if tags is not None else [f"g{position}" for position in range(len(parts))]
    at, injections = {}, {}
    for a in window.objects():
        at[a], injections[a] = coproduct([part.at[a] for part in parts], tags)
    edges = {}
    for f in window.morphisms():
        table = {}
        for tag, part in zip(tags, parts):
            edge = part.on(f)
            for x in part.at[f.src]:
                table[f"{tag}:{x}"] = f"{tag}:{edge(x)}"
        edges[f] = FinMap(at[f.src], at[f.dst], table)
    return JFunctor(window, at, edges, name=name)


def free_functor(window: Window, generators: Sequence[JObject]) -> JFunctor:
    """The free functor on one element at each listed object."""
    return coproduct_functor([representable(c, window) for c in generators], name="free")


def congruence_quotient(F: JFunctor, seeds: Sequence[Tuple[JObject, str, str]]) -> Tuple[JFunctor, Dict[JObject, FinMap]]:
    """
    Divide a raw functor by the smallest congruence containing the seed pairs.

    Closure repeats x ~ y  =>  F(f)x ~ F(f)y over every edge until stable.
    Returns the quotient functor and the objectwise projections.
    """
    classes: Dict[JObject, DisjointSet[str]] = {}
    for a in F.window.objects():
        classes[a] = DisjointSet()
        for x in F.at[a]:
            classes[a].make_set(x)
    for a, x, y in seeds:
        classes[a].union(x, y)
    morphisms = list(F.window.morphisms())
    changed = True
    rounds = 0
    while changed:
        changed = False
        rounds += 1
        for f in morphisms:
            edge = F.on(f)
            source, target = classes[f.src], classes[f.dst]
            for x in F.at[f.src]:
                root = source.find(x)
                if root == x:
                    continue
                if target.find(edge(x)) != target.find(edge(root)):
                    target.union(edge(x), edge(root))
                    changed = True
    logger.debug(f"Congruence on {F.name} closed after {rounds} rounds")
    at, projections = {}, {}
    for a in F.window.objects():
        representative = {}
        for members in classes[a].sets():
            for member in members:
                representative[member] = members[0]
        at[a] = FinCarrier(tuple(sorted(set(representative.values()))))
        projections[a] = FinMap(F.at[a], at[a], representative)
    edges = {}
    for f in morphisms:
        edge = F.on(f)
        edges[f] = FinMap(at[f.src], at[f.dst], {x: projections[f.dst](edge(x)) for x in at[f.src]})
    return JFunctor(F.window, at, edges, name=f"{F.name}/~"), projections


@dataclass(frozen=True)
class RandomSample:
    """A random free functor, its quotient, and the projection between them."""

    seed: int
    free: JFunctor
    functor: JFunctor
    projection: Mapping[JObject, FinMap]


# Generators stay small so that carriers in windows up to (3,3) remain desk-sized.
_GENERATOR_POOL = (JObject(0, 0), JObject(1, 0), JObject(0, 1), JObject(1, 1))


def random_functor(seed: int, window: Window) -> RandomSample:
    rng = random.Random(seed)
    pool = [c for c in _GENERATOR_POOL if c in window] or [JObject(0, 0)]
    chosen = sorted(rng.choice(pool) for _ in range(rng.randint(1, 2)))
    parts = [representable(c, window) for c in chosen]
    tags = [f"g{position}" for position in range(len(parts))]
    if rng.random() < 0.5:
        difference = rng.randint(-window.M, window.N)
        support = diagonal_support(window, difference, rng.randint(0, 1))
        parts.append(point_functor(window, support))
        tags.append("pt")
    free = coproduct_functor(parts, tags, name=f"random[{seed}]")
    seeds = []
    candidates = [a for a in window.objects() if len(free.at[a]) >= 2]
    for _ in range(rng.randint(0, 2)):
        if not candidates:
            break
        a = rng.choice(candidates)
        x, y = rng.sample(list(free.at[a]), 2)
        seeds.append((a, x, y))
    functor, projection = congruence_quotient(free, seeds)
    logger.debug(
        f"Random functor {seed}: generators {[str(c) for c in chosen]}, {len(seeds)} seed relations, "
        f"{sum(len(functor.at[a]) for a in window.objects())} elements"
    )
    return RandomSample(seed, free, functor, projection)


def random_tdatum(seed: int, window: Window) -> TDatum:
    return functor_to_tdatum(random_functor(seed, window).functor)


def random_datum_map(seed: int, window: Window) -> DatumMap:
    """The projection of a random free functor onto its quotient, as a map of T-data."""
    sample = random_functor(seed, window)
    return DatumMap(functor_to_tdatum(sample.free), functor_to_tdatum(sample.functor), sample.projection)


def invariance_counterexample() -> TDatum:
    """
    A datum on window (2,2) with equivariant shifts whose iterate Φ_{0,0,2} is
    not fixed by Σ_2: X_{2,2} = {a, b} with the first factor swapping and the
    second acting trivially, so ι(swap) = (swap, swap) moves the image a.
    """
    window = Window(2, 2)
    point, pair = FinCarrier.point(), FinCarrier(("a", "b"))
    carriers = {a: FinCarrier.empty() for a in window.objects()}
    carriers[JObject(0, 0)] = point
    carriers[JObject(1, 1)] = point
    carriers[JObject(2, 2)] = pair
    actions = {a: GroupAction.trivial(carriers[a], (a.m, a.n)) for a in window.objects()}
    swap = FinMap(pair, pair, {"a": "b", "b": "a"})
    actions[JObject(2, 2)] = GroupAction(pair, (2, 2), {(0, 1): swap, (1, 1): FinMap.identity(pair)})
    shifts = {JObject(1, 1): FinMap(point, pair, {"*": "a"})}
    for a in window.objects():
        b = JObject(a.m + 1, a.n + 1)
        if b in window and a not in shifts:
            shifts[a] = FinMap(carriers[a], carriers[b], {x: "*" for x in carriers[a]})
    return TDatum(window, carriers, actions, shifts)


def mutate_shift(D: TDatum, at: JObject, element: str, image: str) -> TDatum:
    """A copy of D with φ_at(element) replaced by image."""
    if at not in D.shifts:
        raise ValidationError(f"No shift at ({at})", f"shifts.{at}")
    shift = D.shifts[at]
    table = dict(shift.table)
    table[element] = image
    shifts = dict(D.shifts)
    shifts[at] = FinMap(shift.src, shift.dst, table)
    return TDatum(D.window, D.carriers, D.actions, shifts)


def shift_mutations(D: TDatum):
    """Every single-value change of one shift table, in enumeration order."""
    for a in D.shift_sources():
        shift = D.shifts[a]
        for x in shift.src:
            for y in shift.dst:
                if y != shift(x):
                    yield (a, x, y), mutate_shift(D, a, x, y)


# -- symmetric sequences -----------------------------------------------------

def regular_action(n: int, tag: str = "r") -> GroupAction:
    """Σ_n acting on itself by left multiplication."""
    perms = enumerate_permutations(n)
    labels = {g: compound_label(tag, list(g.images)) for g in perms}
    carrier = FinCarrier(tuple(labels[g] for g in perms))
    generators = {}
    for k in range(1, n):
        s = Permutation.transposition(n, k)
        generators[(0, k)] = FinMap(carrier, carrier, {labels[g]: labels[s.compose(g)] for g in perms})
    return GroupAction(carrier, (n,), generators)


def natural_action(n: int, tag: str = "v") -> GroupAction:
    """Σ_n permuting {1..n}."""
    labels = [compound_label(tag, j) for j in range(1, n + 1)]
    carrier = FinCarrier(tuple(labels))
    generators = {}
    for k in range(1, n):
        s = Permutation.transposition(n, k)
        generators[(0, k)] = FinMap(carrier, carrier, {labels[j - 1]: labels[s(j) - 1] for j in range(1, n + 1)})
    return GroupAction(carrier, (n,), generators)


def orbit_sum(n: int, free: int = 0, fixed: int = 0, natural: int = 0) -> GroupAction:
    """A Σ_n-set assembled from regular orbits, fixed points and natural orbits."""
    parts: List[GroupAction] = []
    parts += [regular_action(n, f"r{c}") for c in range(free)]
    parts += [GroupAction.trivial(FinCarrier.point(compound_label("f", c)), (n,)) for c in range(fixed)]
    parts += [natural_action(n, f"v{c}") for c in range(natural)]
    elements = tuple(x for part in parts for x in part.carrier)
    carrier = FinCarrier(elements)
    generators = {}
    for k in range(1, n):
        table = {}
        for part in parts:
            table.update(part.generators[(0, k)].table)
        generators[(0, k)] = FinMap(carrier, carrier, table)
    return GroupAction(carrier, (n,), generators)


def random_symseq(seed: int, top: int) -> SymSeq:
    rng = random.Random(seed)
    actions = []
    for n in range(top + 1):
        free = rng.randint(0, 1) if n <= 3 else 0
        natural = rng.randint(0, 1) if n >= 2 else 0
        actions.append(orbit_sum(n, free=free, fixed=rng.randint(0, 2), natural=natural))
    return SymSeq(tuple(action.carrier for action in actions), tuple(actions))
