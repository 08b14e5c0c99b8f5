"""Finite coends and Day convolution.

A coend is presented by generators and generating relations and computed as a
disjoint-set quotient. Every generator of a 𝒥-convolution (X⊛Y)(c) is a tuple
(A, B, u: A⊗B -> c, x ∈ X(A), y ∈ Y(B)) and is labelled by the canonical JSON
array of those parts; the module smash over Sym(T) uses the same labels for
its (permutation-pair) generators, which is what lets the monoidal comparison
map one presentation into the other by label.

Relations are generated by one-sided moves f⊗id and id⊗g. Since
f⊗g = (f⊗id)∘(id⊗g), they generate the same equivalence as all pairs (f, g).
"""

import logging
import random
from dataclasses import dataclass
from functools import cached_property
from math import factorial
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .basecat import FinCarrier, FinMap, GroupAction, compound_label, quotient, split_label
from .diagrams import BisymSeq, JFunctor, SymSeq, TDatum, transposition_pairs
from .equivalence import evaluate, functor_to_tdatum
from .fincomb import Permutation, block_shuffle, enumerate_permutations
from .jcat import (
    JMorphism,
    JObject,
    Window,
    compose_j,
    enumerate_hom,
    identity_j,
    morphism_from_key,
    permutation_pair,
    symmetry_iso,
    tensor_mor,
    tensor_obj,
)
from .utils.errors import JSpecError, ValidationError, VerificationError, WindowError
from .utils.report import Report

logger = logging.getLogger(__name__)

UNIT = JObject(0, 0)


@dataclass(frozen=True)
class CoendPresentation:
    """Generators, generating relations, and the resulting classes with their projection."""

    generators: FinCarrier
    relations: Tuple[Tuple[str, str], ...]
    classes: FinCarrier
    projection: FinMap

    @classmethod
    def build(
        cls,
        generators: Sequence[str],
        relations: Sequence[Tuple[str, str]],
        shuffle_seed: Optional[int] = None,
    ) -> "CoendPresentation":
        generators, relations = list(generators), list(relations)
        if shuffle_seed is not None:
            rng = random.Random(shuffle_seed)
            rng.shuffle(generators)
            rng.shuffle(relations)
        carrier = FinCarrier(tuple(generators))
        classes, projection = quotient(carrier, relations)
        logger.debug(f"Coend: {len(carrier)} generators, {len(relations)} relations, {len(classes)} classes")
        return cls(carrier, tuple(relations), classes, projection)

    def class_of(self, generator: str) -> str:
        return self.projection(generator)

    @cached_property
    def members(self) -> Dict[str, List[str]]:
        grouped: Dict[str, List[str]] = {c: [] for c in self.classes}
        for g in sorted(self.generators):
            grouped[self.projection(g)].append(g)
        return grouped

    def to_json(self, classes: bool = False) -> Dict[str, object]:
        data = {
            "size": len(self.classes),
            "generators": len(self.generators),
            "relations": len(self.relations),
            "representatives": list(self.classes.elements),
        }
        if classes:
            data["classes"] = {c: self.members[c] for c in self.classes}
        return data


def _object(text: str) -> JObject:
    m, n = text.split(",")
    return JObject(int(m), int(n))


def day_label(A: JObject, B: JObject, u: JMorphism, x: str, y: str) -> str:
    return compound_label(str(A), str(B), u.key, x, y)


def parse_day_label(label: str) -> Tuple[JObject, JObject, JMorphism, str, str]:
    A, B, key, x, y = split_label(label)
    return _object(A), _object(B), morphism_from_key(key), x, y


def below(a: JObject) -> Iterator[JObject]:
    """Objects with a morphism into a."""
    for m in range(a.m + 1):
        n = a.n - (a.m - m)
        if n >= 0:
            yield JObject(m, n)


def contributing_pairs(at: JObject) -> Iterator[Tuple[JObject, JObject]]:
    """Index pairs (A, B) with Hom(A⊗B, at) nonempty."""
    for m1 in range(at.m + 1):
        for n1 in range(at.n + 1):
            for m2 in range(at.m - m1 + 1):
                for n2 in range(at.n - n1 + 1):
                    if at.m - m1 - m2 == at.n - n1 - n2:
                        yield JObject(m1, n1), JObject(m2, n2)


def _require_in(window: Window, at: JObject, what: str) -> None:
    if at not in window:
        raise WindowError(f"({at}) lies outside the window ({window}) of {what}")


def day_convolve(X: JFunctor, Y: JFunctor, at: JObject, shuffle_seed: Optional[int] = None) -> CoendPresentation:
    """(X⊛Y)(at) = ∫^{A,B} Hom(A⊗B, at) × X(A) × Y(B)."""
    _require_in(X.window, at, X.name)
    _require_in(Y.window, at, Y.name)
    pairs = list(contributing_pairs(at))
    generators = []
    for A, B in pairs:
        for u in enumerate_hom(tensor_obj(A, B), at):
            for x in X.at[A]:
                for y in Y.at[B]:
                    generators.append(day_label(A, B, u, x, y))
    relations = []
    for A2, B in pairs:
        targets = enumerate_hom(tensor_obj(A2, B), at)
        for A in below(A2):
            for f in enumerate_hom(A, A2):
                if f.is_identity():
                    continue
                edge, lift = X.on(f), tensor_mor(f, identity_j(B))
                for u in targets:
                    v = compose_j(u, lift)
                    for x in X.at[A]:
                        for y in Y.at[B]:
                            relations.append((day_label(A2, B, u, edge(x), y), day_label(A, B, v, x, y)))
    for A, B2 in pairs:
        targets = enumerate_hom(tensor_obj(A, B2), at)
        for B in below(B2):
            for g in enumerate_hom(B, B2):
                if g.is_identity():
                    continue
                edge, lift = Y.on(g), tensor_mor(identity_j(A), g)
                for u in targets:
                    v = compose_j(u, lift)
                    for x in X.at[A]:
                        for y in Y.at[B]:
                            relations.append((day_label(A, B2, u, x, edge(y)), day_label(A, B, v, x, y)))
    return CoendPresentation.build(generators, relations, shuffle_seed)


def day_functor(X: JFunctor, Y: JFunctor, window: Window = None) -> JFunctor:
    """X⊛Y as a raw functor on `window`; h acts on a class [A, B, u, x, y] as [A, B, h∘u, x, y]."""
    window = window or X.window
    presentations = {a: day_convolve(X, Y, a) for a in window.objects()}
    at = {a: presentations[a].classes for a in window.objects()}
    edges = {}
    for h in window.morphisms():
        table = {}
        for c in at[h.src]:
            A, B, u, x, y = parse_day_label(c)
            table[c] = presentations[h.dst].class_of(day_label(A, B, compose_j(h, u), x, y))
        edges[h] = FinMap(at[h.src], at[h.dst], table)
    return JFunctor(window, at, edges, name=f"({X.name}*{Y.name})")


def unit_object(window: Window) -> JFunctor:
    """𝟏 = Hom_𝒥((0,0), −): n! elements at (n,n), nothing elsewhere."""
    at = {a: FinCarrier(tuple(s.key for s in enumerate_hom(UNIT, a))) for a in window.objects()}
    edges = {}
    for f in window.morphisms():
        edges[f] = FinMap(at[f.src], at[f.dst], {s.key: compose_j(f, s).key for s in enumerate_hom(UNIT, f.src)})
    return JFunctor(window, at, edges, name="1")


def _class_map(presentation: CoendPresentation, target: FinCarrier, image, what: str) -> FinMap:
    """Push every generator through `image` and insist that classes map to single values."""
    table: Dict[str, str] = {}
    witness: Dict[str, str] = {}
    for g in presentation.generators:
        c, value = presentation.class_of(g), image(g)
        if c in table and table[c] != value:
            raise VerificationError(
                f"{what} is not well defined on class {c}",
                {"class": c, "generators": [witness[c], g], "images": [table[c], value]},
            )
        table.setdefault(c, value)
        witness.setdefault(c, g)
    return FinMap(presentation.classes, target, table)


def unitor(Y: JFunctor, at: JObject) -> FinMap:
    """𝟏⊛Y(at) -> Y(at): [A, B, u, s, y] ↦ Y(u∘(s⊗id_B))(y)."""
    presentation = day_convolve(unit_object(Y.window), Y, at)

    def image(g: str) -> str:
        _, B, u, s_key, y = parse_day_label(g)
        s = morphism_from_key(s_key)
        return Y.on(compose_j(u, tensor_mor(s, identity_j(B))))(y)

    return _class_map(presentation, Y.at[at], image, "left unitor")


def right_unitor(Y: JFunctor, at: JObject) -> FinMap:
    """Y⊛𝟏(at) -> Y(at): [A, B, u, y, s] ↦ Y(u∘(id_A⊗s))(y)."""
    presentation = day_convolve(Y, unit_object(Y.window), at)

    def image(g: str) -> str:
        A, _, u, y, s_key = parse_day_label(g)
        s = morphism_from_key(s_key)
        return Y.on(compose_j(u, tensor_mor(identity_j(A), s)))(y)

    return _class_map(presentation, Y.at[at], image, "right unitor")


def braiding(X: JFunctor, Y: JFunctor, at: JObject) -> FinMap:
    """X⊛Y(at) -> Y⊛X(at): [A, B, u, x, y] ↦ [B, A, u∘σ_{B,A}, y, x]."""
    source = day_convolve(X, Y, at)
    target = day_convolve(Y, X, at)

    def image(g: str) -> str:
        A, B, u, x, y = parse_day_label(g)
        return target.class_of(day_label(B, A, compose_j(u, symmetry_iso(B, A)), y, x))

    return _class_map(source, target.classes, image, "braiding")


# -- law checks ---------------------------------------------------------------

def check_unit_laws(Y: JFunctor, objects: Sequence[JObject] = None) -> Report:
    report = Report(check="unit_laws", details={"functor": Y.name})
    for a in objects or Y.window.objects():
        for name, build in (("left", unitor), ("right", right_unitor)):
            report.checked += 1
            try:
                if not build(Y, a).is_bijective():
                    report.fail(law=f"{name}_unitor_bijective", at=str(a))
            except VerificationError as e:
                report.fail(law=f"{name}_unitor_well_defined", at=str(a), **e.data)
    return report


def check_braiding(X: JFunctor, Y: JFunctor, objects: Sequence[JObject] = None) -> Report:
    """Well defined, bijective, and an involution up to relabelling: β_{Y,X} ∘ β_{X,Y} = id."""
    report = Report(check="braiding", details={"left": X.name, "right": Y.name})
    for a in objects or X.window.objects():
        report.checked += 1
        try:
            forward, backward = braiding(X, Y, a), braiding(Y, X, a)
        except VerificationError as e:
            report.fail(law="well_defined", at=str(a), **e.data)
            continue
        if not forward.is_bijective():
            report.fail(law="bijective", at=str(a))
        elif not backward.compose(forward).is_identity():
            report.fail(law="involution", at=str(a))
    return report


def check_commutativity_sizes(X: JFunctor, Y: JFunctor) -> Report:
    report = Report(check="commutativity_sizes", details={"left": X.name, "right": Y.name})
    for a in X.window.objects():
        report.checked += 1
        left, right = len(day_convolve(X, Y, a).classes), len(day_convolve(Y, X, a).classes)
        if left != right:
            report.fail(at=str(a), left=left, right=right)
    return report


def check_associativity_sizes(X: JFunctor, Y: JFunctor, Z: JFunctor) -> Report:
    """|(X⊛Y)⊛Z| = |X⊛(Y⊛Z)| objectwise."""
    report = Report(check="associativity_sizes", details={"functors": [X.name, Y.name, Z.name]})
    left = day_functor(day_functor(X, Y), Z)
    right = day_functor(X, day_functor(Y, Z))
    for a in X.window.objects():
        report.checked += 1
        if left.size(a) != right.size(a):
            report.fail(at=str(a), left=left.size(a), right=right.size(a))
    return report


def check_order_independence(X: JFunctor, Y: JFunctor, at: JObject, seeds: Sequence[int]) -> Report:
    """Shuffling generators and relations before the quotient leaves the classes unchanged."""
    report = Report(check="order_independence", details={"at": str(at), "seeds": list(seeds)})
    reference = day_convolve(X, Y, at).to_json(classes=True)
    for seed in seeds:
        report.checked += 1
        if day_convolve(X, Y, at, shuffle_seed=seed).to_json(classes=True) != reference:
            report.fail(seed=seed)
    return report


# -- restriction and extension along j: Σ×Σ -> 𝒥 -------------------------------

def j_star(X: JFunctor) -> BisymSeq:
    """Restriction to permutation pairs."""
    actions = {}
    for a in X.window.objects():
        generators = {key: X.on(permutation_pair(*g)) for key, g in transposition_pairs(a)}
        actions[a] = GroupAction(X.at[a], (a.m, a.n), generators)
    return BisymSeq(X.window, X.at, actions)


def j_shriek(Y: BisymSeq, window: Window = None) -> JFunctor:
    """
    Left Kan extension along permutation pairs:
    (j_!Y)(c) = ∫^A Hom_𝒥(A, c) × Y(A), with (u, g·y) ~ (u∘g, y).
    """
    window = window or Y.window
    if window.M > Y.window.M or window.N > Y.window.N:
        raise WindowError(f"Window ({window}) exceeds the bisymmetric sequence's window ({Y.window})")
    presentations = {}
    for c in window.objects():
        generators, relations = [], []
        for A in window.objects():
            homs = enumerate_hom(A, c)
            if not homs:
                continue
            for u in homs:
                for y in Y.carriers[A]:
                    generators.append(compound_label(str(A), u.key, y))
            for _, g in transposition_pairs(A):
                moved = Y.act(A, g)
                pair = permutation_pair(*g)
                for u in homs:
                    v = compose_j(u, pair)
                    for y in Y.carriers[A]:
                        relations.append((compound_label(str(A), u.key, moved(y)), compound_label(str(A), v.key, y)))
        presentations[c] = CoendPresentation.build(generators, relations)
    at = {c: presentations[c].classes for c in window.objects()}
    edges = {}
    for h in window.morphisms():
        table = {}
        for label in at[h.src]:
            A, key, y = split_label(label)
            table[label] = presentations[h.dst].class_of(compound_label(A, compose_j(h, morphism_from_key(key)).key, y))
        edges[h] = FinMap(at[h.src], at[h.dst], table)
    return JFunctor(window, at, edges, name="j_!")


def point_bisym(window: Window, at: JObject) -> BisymSeq:
    """A single point at one object, with trivial action, and ∅ elsewhere."""
    carriers = {a: FinCarrier.point() if a == at else FinCarrier.empty() for a in window.objects()}
    actions = {a: GroupAction.trivial(carriers[a], (a.m, a.n)) for a in window.objects()}
    return BisymSeq(window, carriers, actions)


# -- Day convolution over Σ and Sym(T) ---------------------------------------------

def _sym_label(a: int, b: int, u: Permutation, x: str, y: str) -> str:
    return compound_label(a, b, list(u.images), x, y)


def sym_presentation(X: SymSeq, Y: SymSeq, c: int) -> CoendPresentation:
    """Degree c of X⊛Y over Σ: generators [u, x, y] with u ∈ Σ_c, x ∈ X_a, y ∈ Y_b, a + b = c."""
    perms = enumerate_permutations(c)
    generators, relations = [], []
    for a in range(c + 1):
        b = c - a
        Xa, Yb = X.carrier(a), Y.carrier(b)
        for u in perms:
            for x in Xa:
                for y in Yb:
                    generators.append(_sym_label(a, b, u, x, y))
        for k in range(1, a):
            s = X.action(a).generators[(0, k)]
            lift = Permutation.transposition(a, k).direct_sum(Permutation.identity(b))
            for u in perms:
                for x in Xa:
                    for y in Yb:
                        relations.append((_sym_label(a, b, u, s(x), y), _sym_label(a, b, u.compose(lift), x, y)))
        for k in range(1, b):
            t = Y.action(b).generators[(0, k)]
            lift = Permutation.identity(a).direct_sum(Permutation.transposition(b, k))
            for u in perms:
                for x in Xa:
                    for y in Yb:
                        relations.append((_sym_label(a, b, u, x, t(y)), _sym_label(a, b, u.compose(lift), x, y)))
    return CoendPresentation.build(generators, relations)


def convolve_sym(X: SymSeq, Y: SymSeq, top: int = None) -> SymSeq:
    """
    (X⊛Y)_c = ∐_{a+b=c} Σ_c ×_{Σ_a×Σ_b} (X_a × Y_b), with Σ_c acting by
    h·[u, x, y] = [h∘u, x, y].
    """
    top = X.top + Y.top if top is None else top
    carriers, actions = [], []
    for c in range(top + 1):
        presentation = sym_presentation(X, Y, c)
        generators_of_action = {}
        for k in range(1, c):
            h = Permutation.transposition(c, k)
            table = {}
            for label in presentation.classes:
                a, b, images, x, y = split_label(label)
                table[label] = presentation.class_of(_sym_label(a, b, h.compose(Permutation(c, tuple(images))), x, y))
            generators_of_action[(0, k)] = FinMap(presentation.classes, presentation.classes, table)
        carriers.append(presentation.classes)
        actions.append(GroupAction(presentation.classes, (c,), generators_of_action))
    return SymSeq(tuple(carriers), tuple(actions))


def permutation_label(g: Permutation) -> str:
    return compound_label(*g.images)


def permutation_from_label(label: str) -> Permutation:
    """Inverse of permutation_label: "[2,1]" is the transposition of 1..2."""
    images = split_label(label)
    return Permutation(len(images), tuple(images))


def torsor(n: int) -> FinCarrier:
    return FinCarrier(tuple(permutation_label(g) for g in enumerate_permutations(n)))


@dataclass(frozen=True)
class SymTMonoid:
    """
    Sym(T) up to degree `top`: the convolution powers T^{⊗p}, each concentrated
    in degree p, and coordinates identifying level p with the Σ_p-torsor.

    In coordinates the multiplication is the block sum u⊕v, the unit is the
    empty permutation, and the bisymmetric action of (a, b) is w ↦ b∘w∘a⁻¹.
    """

    top: int
    powers: Tuple[SymSeq, ...]
    coordinates: Tuple[FinMap, ...]

    def level(self, p: int) -> FinCarrier:
        return self.powers[p].carrier(p)

    @staticmethod
    def multiply(u: Permutation, v: Permutation) -> Permutation:
        return u.direct_sum(v)

    @staticmethod
    def unit() -> Permutation:
        return Permutation.identity(0)

    @staticmethod
    def act(a: Permutation, b: Permutation, w: Permutation) -> Permutation:
        return b.compose(w).compose(a.inverse())

    def bisym(self, window: Window) -> BisymSeq:
        carriers, actions = {}, {}
        for obj in window.objects():
            if obj.m == obj.n and obj.m <= self.top:
                n = obj.m
                carrier = torsor(n)
                perms = enumerate_permutations(n)
                generators = {}
                for k in range(1, n):
                    s = Permutation.transposition(n, k)
                    generators[(0, k)] = FinMap(carrier, carrier, {permutation_label(w): permutation_label(w.compose(s)) for w in perms})
                    generators[(1, k)] = FinMap(carrier, carrier, {permutation_label(w): permutation_label(s.compose(w)) for w in perms})
                carriers[obj], actions[obj] = carrier, GroupAction(carrier, (n, n), generators)
            else:
                carriers[obj] = FinCarrier.empty()
                actions[obj] = GroupAction.trivial(carriers[obj], (obj.m, obj.n))
        return BisymSeq(window, carriers, actions)


def sym_T(top: int) -> SymTMonoid:
    """T^{⊗p} = T ⊛ T^{⊗(p−1)} by the Σ-engine, with coordinates π[u, *, w] = u∘(id_1 ⊕ π(w))."""
    T = SymSeq.T(top)
    powers = [SymSeq.concentrated(FinCarrier.point(), 0, top)]
    coordinates = [FinMap(powers[0].carrier(0), torsor(0), {"*": permutation_label(Permutation.identity(0))})]
    for p in range(1, top + 1):
        power = convolve_sym(T, powers[-1], top)
        previous = coordinates[-1]
        table = {}
        for label in power.carrier(p):
            _, _, images, _, w = split_label(label)
            inner = permutation_from_label(previous(w))
            table[label] = permutation_label(Permutation(p, tuple(images)).compose(Permutation.identity(1).direct_sum(inner)))
        coordinate = FinMap(power.carrier(p), torsor(p), table)
        if not coordinate.is_bijective():
            raise VerificationError(f"Coordinates of T^{p} are not a bijection onto Σ_{p}", {"level": p})
        powers.append(power)
        coordinates.append(coordinate)
    logger.debug(f"Sym(T) computed up to degree {top}")
    return SymTMonoid(top, tuple(powers), tuple(coordinates))


def check_sym_t(monoid: SymTMonoid) -> Report:
    """Level sizes, equivariant coordinates, and the monoid laws in coordinates."""
    report = Report(check="sym_t", details={"top": monoid.top})
    for p, power in enumerate(monoid.powers):
        for c in range(monoid.top + 1):
            report.checked += 1
            expected = factorial(p) if c == p else 0
            if len(power.carrier(c)) != expected:
                report.fail(law="level_size", power=p, degree=c, size=len(power.carrier(c)), expected=expected)
        coordinate = monoid.coordinates[p]
        for k in range(1, p):
            h = Permutation.transposition(p, k)
            moved = power.action(p).generators[(0, k)]
            for e in power.carrier(p):
                report.checked += 1
                w = permutation_from_label(coordinate(e))
                if coordinate(moved(e)) != permutation_label(h.compose(w)):
                    report.fail(law="equivariance", power=p, generator=k, element=e)
    levels = [enumerate_permutations(n) for n in range(monoid.top + 1)]
    unit = monoid.unit()
    for n in range(monoid.top + 1):
        for u in levels[n]:
            report.checked += 1
            if monoid.multiply(unit, u) != u or monoid.multiply(u, unit) != u:
                report.fail(law="unit", element=list(u.images))
    for m in range(monoid.top + 1):
        for n in range(monoid.top + 1 - m):
            chi = block_shuffle(m, n)
            for u in levels[m]:
                for v in levels[n]:
                    report.checked += 1
                    if monoid.act(chi, chi, monoid.multiply(u, v)) != monoid.multiply(v, u):
                        report.fail(law="commutativity", left=list(u.images), right=list(v.images))
                    for r in range(monoid.top + 1 - m - n):
                        for w in levels[r]:
                            report.checked += 1
                            if monoid.multiply(monoid.multiply(u, v), w) != monoid.multiply(u, monoid.multiply(v, w)):
                                report.fail(law="associativity", elements=[list(u.images), list(v.images), list(w.images)])
    return report


def unit_sym_t_iso(window: Window, monoid: SymTMonoid = None) -> Tuple[Dict[int, FinMap], Report]:
    """
    The levelwise bijection j*(𝟏)(n,n) -> T^{⊗n}_n, (∅, ∅, α) ↦ coordinate⁻¹(α),
    certified bijective, Σ_n×Σ_n-equivariant and multiplicative (s⊗t ↦ α_s ⊕ α_t).
    """
    top = min(window.M, window.N)
    monoid = monoid or sym_T(top)
    restricted = j_star(unit_object(window))
    report = Report(check="unit_sym_t_iso", details={"window": window.to_json(), "top": top})

    def alpha(key: str) -> Permutation:
        s = morphism_from_key(key)
        return Permutation(s.dst.m, s.alpha.images)

    for a in window.objects():
        if a.m != a.n:
            report.checked += 1
            if len(restricted.carriers[a]):
                report.fail(law="off_diagonal", at=str(a), size=len(restricted.carriers[a]))
    maps = {}
    for n in range(min(top, monoid.top) + 1):
        obj = JObject(n, n)
        carrier = restricted.carriers[obj]
        to_torsor = FinMap(carrier, torsor(n), {key: permutation_label(alpha(key)) for key in carrier})
        report.checked += 1
        if not to_torsor.is_bijective():
            report.fail(law="bijective", level=n)
            continue
        maps[n] = monoid.coordinates[n].inverse().compose(to_torsor)
        for key, (a, b) in transposition_pairs(obj):
            moved = restricted.act(obj, (a, b))
            for s in carrier:
                report.checked += 1
                if to_torsor(moved(s)) != permutation_label(monoid.act(a, b, alpha(s))):
                    report.fail(law="equivariance", level=n, generator=list(key), element=s)
    for m in maps:
        for n in maps:
            if m + n not in maps:
                continue
            presentation = sym_presentation(monoid.powers[m], monoid.powers[n], m + n)
            report.checked += 1
            try:
                product = product_coordinates(monoid, presentation, m + n)
            except VerificationError as e:
                report.fail(law="product_well_defined", left=m, right=n, **e.data)
                continue
            if not product.is_bijective():
                report.fail(law="product_bijective", left=m, right=n)
                continue
            identity = Permutation.identity(m + n)
            for s in restricted.carriers[JObject(m, m)]:
                for t in restricted.carriers[JObject(n, n)]:
                    report.checked += 1
                    tensor = tensor_mor(morphism_from_key(s), morphism_from_key(t)).key
                    convolved = presentation.class_of(_sym_label(m, n, identity, maps[m](s), maps[n](t)))
                    if product(convolved) != monoid.coordinates[m + n](maps[m + n](tensor)):
                        report.fail(law="multiplicative", left=s, right=t)
    return maps, report


def product_coordinates(monoid: SymTMonoid, presentation: CoendPresentation, c: int) -> FinMap:
    """(T^{⊗m} ⊛ T^{⊗n})_c -> Σ_c, [u, x, y] ↦ u∘(π(x) ⊕ π(y)); raises VerificationError if not well defined."""

    def image(g: str) -> str:
        a, b, images, x, y = split_label(g)
        inner = monoid.multiply(
            permutation_from_label(monoid.coordinates[a](x)),
            permutation_from_label(monoid.coordinates[b](y)),
        )
        return permutation_label(Permutation(c, tuple(images)).compose(inner))

    return _class_map(presentation, torsor(c), image, "product coordinates")


# -- modules over Sym(T) ------------------------------------------------------------

def module_smash(M: TDatum, N: TDatum, at: JObject) -> CoendPresentation:
    """
    M ∧_{Sym(T)} N at `at`: the Σ×Σ Day convolution of the two bisymmetric
    sequences, further divided by moving Sym(T) factors across,
    (A⊗P, B, u, M(id_A⊗s)x, y) ~ (A, P⊗B, u, x, N(s⊗id_B)y) for P = (p,p), s ∈ 𝟏(P).
    """
    _require_in(M.window, at, "left module")
    _require_in(N.window, at, "right module")
    automorphisms = [permutation_pair(a, b) for a in enumerate_permutations(at.m) for b in enumerate_permutations(at.n)]
    splits = [(JObject(m, n), JObject(at.m - m, at.n - n)) for m in range(at.m + 1) for n in range(at.n + 1)]
    generators, relations = [], []
    for A, B in splits:
        for u in automorphisms:
            for x in M.carriers[A]:
                for y in N.carriers[B]:
                    generators.append(day_label(A, B, u, x, y))
        for _, g in transposition_pairs(A):
            moved, lift = M.act(A, g), tensor_mor(permutation_pair(*g), identity_j(B))
            for u in automorphisms:
                v = compose_j(u, lift)
                for x in M.carriers[A]:
                    for y in N.carriers[B]:
                        relations.append((day_label(A, B, u, moved(x), y), day_label(A, B, v, x, y)))
        for _, g in transposition_pairs(B):
            moved, lift = N.act(B, g), tensor_mor(identity_j(A), permutation_pair(*g))
            for u in automorphisms:
                v = compose_j(u, lift)
                for x in M.carriers[A]:
                    for y in N.carriers[B]:
                        relations.append((day_label(A, B, u, x, moved(y)), day_label(A, B, v, x, y)))
    for A, rest in splits:
        for p in range(1, min(rest.m, rest.n) + 1):
            P = JObject(p, p)
            B = JObject(rest.m - p, rest.n - p)
            AP, PB = tensor_obj(A, P), tensor_obj(P, B)
            for s in enumerate_hom(UNIT, P):
                left = evaluate(M, tensor_mor(identity_j(A), s))
                right = evaluate(N, tensor_mor(s, identity_j(B)))
                for u in automorphisms:
                    for x in M.carriers[A]:
                        for y in N.carriers[B]:
                            relations.append((day_label(AP, B, u, left(x), y), day_label(A, PB, u, x, right(y))))
    return CoendPresentation.build(generators, relations)


def compare_monoidal(X: JFunctor, Y: JFunctor, at: JObject) -> Tuple[Optional[FinMap], Report]:
    """
    The map module_smash(E(X), E(Y)) -> (X⊛Y)(at) sending each smash class to the
    Day class of any of its generators; returned when it is a well-defined bijection.
    """
    report = Report(check="compare_monoidal", details={"left": X.name, "right": Y.name, "at": str(at)})
    smash = module_smash(functor_to_tdatum(X), functor_to_tdatum(Y), at)
    day = day_convolve(X, Y, at)
    table: Dict[str, str] = {}
    for g in smash.generators:
        if g not in day.generators:
            report.fail(law="generator", generator=g)
            continue
        c, target = smash.class_of(g), day.class_of(g)
        if table.setdefault(c, target) != target:
            report.fail(law="well_defined", smash_class=c, generator=g)
    report.checked = len(smash.classes)
    report.details.update(smash_size=len(smash.classes), day_size=len(day.classes))
    if not report.passed:
        return None, report
    comparison = FinMap(smash.classes, day.classes, table)
    if not comparison.is_injective():
        seen: Dict[str, str] = {}
        for c in smash.classes:
            if comparison(c) in seen:
                report.fail(law="injective", classes=[seen[comparison(c)], c], image=comparison(c))
                break
            seen[comparison(c)] = c
    if not comparison.is_surjective():
        missing = sorted(set(day.classes) - set(comparison.table.values()))
        report.fail(law="surjective", missing=missing[0])
    if not report.passed:
        logger.warning(f"Monoidal comparison fails at ({at}): {report.witness}")
        return None, report
    return comparison, report


def check_monoidal_comparison(X: JFunctor, Y: JFunctor, objects: Sequence[JObject] = None) -> Report:
    report = Report(check="monoidal_comparison", details={"left": X.name, "right": Y.name})
    for a in objects or X.window.objects():
        try:
            _, result = compare_monoidal(X, Y, a)
        except JSpecError as e:
            report.fail(at=str(a), error=e.message)
            continue
        report.absorb(result)
    return report


def presentation_to_json(presentation: CoendPresentation, at: JObject, classes: bool = False) -> Dict[str, object]:
    data = presentation.to_json(classes)
    data["at"] = at.to_json()
    return data


def require_same_window(X: JFunctor, Y: JFunctor) -> None:
    if X.window != Y.window:
        raise ValidationError(f"Functors live on different windows ({X.window}) and ({Y.window})", "window")
