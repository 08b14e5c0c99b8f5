"""Symmetric K-spectra in finite sets and the prolongation f^K.

The base functor is the identity of finite sets, so f^K(X) = ∐_n (X_n × K^n)/Σ_n
with Σ_n acting diagonally: by the stored action on X_n and by permuting the
coordinates of K^n, σ·(k_1, ..., k_n) = (k_{σ⁻¹(1)}, ..., k_{σ⁻¹(n)}).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, List, Sequence, Tuple

from .basecat import FinCarrier, FinMap, GroupAction, compound_label, power, product, quotient, split_label
from .dayconv import convolve_sym
from .diagrams import DatumMap, SymSeq, TDatum, action_from_model
from .fincomb import Permutation, enumerate_permutations
from .jcat import JObject
from .schemas import SPECTRUM_SCHEMA, SpectrumModel, parse_model, within
from .utils.errors import InvalidDatumError, ValidationError, VerificationError
from .utils.report import Report

logger = logging.getLogger(__name__)


def permute_coordinates(sigma: Permutation, ks: Sequence[str]) -> Tuple[str, ...]:
    """σ·k with (σ·k)_j = k_{σ⁻¹(j)}."""
    result = [""] * len(ks)
    for j, k in enumerate(ks, start=1):
        result[sigma(j) - 1] = k
    return tuple(result)


@dataclass(frozen=True)
class SymSpectrum:
    """
    Levels with Σ_i-actions and bonding maps level_i × K -> level_{i+1}; a bonding
    table is keyed by the product labels of basecat.product(level_i, K).
    """

    K: FinCarrier
    levels: Tuple[FinCarrier, ...]
    actions: Tuple[GroupAction, ...]
    bondings: Tuple[FinMap, ...]

    def __post_init__(self):
        for name in ("levels", "actions", "bondings"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if len(self.actions) != len(self.levels):
            raise ValidationError("Every level needs exactly one action", "actions")
        if len(self.bondings) != max(len(self.levels) - 1, 0):
            raise ValidationError("Bondings connect consecutive levels", "bondings")
        for i, (level, action) in enumerate(zip(self.levels, self.actions)):
            if action.carrier != level or action.degrees != (i,):
                raise ValidationError(f"Level {i} must carry a Σ_{i}-action", f"actions[{i}]")
        for i, bonding in enumerate(self.bondings):
            source, _ = product(self.levels[i], self.K)
            if bonding.src != source or bonding.dst != self.levels[i + 1]:
                raise ValidationError(f"Bonding {i} must map level {i} × K to level {i + 1}", f"bondings[{i}]")

    @property
    def top(self) -> int:
        return len(self.levels) - 1

    def bond(self, i: int, x: str, k: str) -> str:
        return self.bondings[i](compound_label(x, k))

    def iterate(self, i: int, x: str, ks: Sequence[str]) -> str:
        """level_i × K^p -> level_{i+p}, appending k_1 first."""
        for offset, k in enumerate(ks):
            x = self.bond(i + offset, x, k)
        return x


def validate_spectrum(S: SymSpectrum, p_max: int) -> Report:
    """
    Σ_i × Σ_p-equivariance of every iterated bonding with p <= p_max: Σ_i acts in
    front, Σ_p permutes the K factors and acts on level i+p through the last p letters.
    Checked on generators of both factors.
    """
    report = Report(check="spectrum", details={"p_max": p_max, "levels": S.top})
    for i in range(S.top + 1):
        for p in range(1, p_max + 1):
            if i + p > S.top:
                break
            tuples = power(S.K, p)
            target = S.actions[i + p]
            for k in range(1, i):
                a = Permutation.transposition(i, k)
                lifted = target.act((a.direct_sum(Permutation.identity(p)),))
                moved = S.actions[i].generators[(0, k)]
                for x in S.levels[i]:
                    for ks in tuples:
                        report.checked += 1
                        if S.iterate(i, moved(x), ks) != lifted(S.iterate(i, x, ks)):
                            report.fail(i=i, p=p, g=[list(a.images), list(range(1, p + 1))], element=x, K=list(ks))
            for k in range(1, p):
                g = Permutation.transposition(p, k)
                lifted = target.act((Permutation.identity(i).direct_sum(g),))
                for x in S.levels[i]:
                    for ks in tuples:
                        report.checked += 1
                        if S.iterate(i, x, permute_coordinates(g, ks)) != lifted(S.iterate(i, x, ks)):
                            report.fail(i=i, p=p, g=[list(range(1, i + 1)), list(g.images)], element=x, K=list(ks))
    if not report.passed:
        logger.warning(f"Spectrum fails equivariance at {report.witness}")
    return report


def _summand(
    n: int,
    carrier: FinCarrier,
    inner: Dict[int, FinMap],
    K: FinCarrier,
    tag: object,
) -> Tuple[List[str], List[Tuple[str, str]]]:
    """Generators and relations of (carrier × K^n)/Σ_n; `inner` holds the adjacent transpositions acting on carrier."""
    generators, relations = [], []
    tuples = power(K, n)
    for x in carrier:
        for ks in tuples:
            generators.append(compound_label(tag, n, x, list(ks)))
    for k, s in inner.items():
        swap = Permutation.transposition(n, k)
        for x in carrier:
            for ks in tuples:
                relations.append((compound_label(tag, n, x, list(ks)), compound_label(tag, n, s(x), list(permute_coordinates(swap, ks)))))
    return generators, relations


def prolong_symseq(X: SymSeq, K: FinCarrier) -> Tuple[FinCarrier, FinMap]:
    """f^K(X) as a quotient of ∐_n X_n × K^n, with its projection."""
    generators, relations = [], []
    for n in range(X.top + 1):
        inner = {k: X.action(n).generators[(0, k)] for k in range(1, n)}
        more, rel = _summand(n, X.carrier(n), inner, K, "x")
        generators += more
        relations += rel
    classes, projection = quotient(FinCarrier(tuple(generators)), relations)
    return classes, projection


def f_K(X: SymSeq, K: FinCarrier) -> FinCarrier:
    return prolong_symseq(X, K)[0]


def burnside_count(X: SymSeq, K: FinCarrier) -> int:
    """Σ_n (1/n!) Σ_σ |Fix_{X_n}(σ)| · |K|^{cycles(σ)}."""
    total = Fraction(0)
    for n in range(X.top + 1):
        action = X.action(n)
        for sigma in enumerate_permutations(n):
            moved = action.act((sigma,))
            fixed = sum(1 for x in X.carrier(n) if moved(x) == x)
            total += Fraction(fixed * len(K) ** sigma.cycle_count(), factorial(n))
    if total.denominator != 1:
        raise VerificationError(f"Orbit count {total} is not an integer", {"count": str(total)})
    return int(total)


def spectrum_bounds(D: TDatum) -> List[int]:
    """Largest n contributing to each level i = 0..M: n <= N − M + i."""
    return [D.window.N - D.window.M + i for i in range(D.window.M + 1)]


def _level(D: TDatum, i: int, K: FinCarrier) -> Tuple[FinCarrier, FinMap]:
    generators, relations = [], []
    for n in range(max(spectrum_bounds(D)[i], -1) + 1):
        obj = JObject(i, n)
        inner = {k: D.actions[obj].generators[(1, k)] for k in range(1, n)}
        more, rel = _summand(n, D.carriers[obj], inner, K, i)
        generators += more
        relations += rel
    return quotient(FinCarrier(tuple(generators)), relations)


def f_K_spt(D: TDatum, K: FinCarrier) -> SymSpectrum:
    """
    Level i = ∐_n (X_{i,n} × K^n)/Σ_n for n <= N − M + i, with the residual Σ_i
    acting on X_{i,n}; the bonding sends [n, x, k], k' to [n+1, φ_{i,n}(x), (k, k')].
    """
    if not D.is_valid:
        raise InvalidDatumError(f"T-datum fails validation at {D.report.witness}", D.report.witness)
    M = D.window.M
    quotients = [_level(D, i, K) for i in range(M + 1)]
    levels = [classes for classes, _ in quotients]
    actions = []
    for i, (classes, projection) in enumerate(quotients):
        generators = {}
        for k in range(1, i):
            table = {}
            for label in classes:
                _, n, x, ks = split_label(label)
                moved = D.actions[JObject(i, n)].generators[(0, k)](x)
                table[label] = projection(compound_label(i, n, moved, ks))
            generators[(0, k)] = FinMap(classes, classes, table)
        actions.append(GroupAction(classes, (i,), generators))
    bondings = []
    for i in range(M):
        classes, projection = quotients[i]
        _, next_projection = quotients[i + 1]
        source, _ = product(classes, K)
        table: Dict[str, str] = {}
        for label in projection.src:
            _, n, x, ks = split_label(label)
            shifted = D.shifts[JObject(i, n)](x)
            for k in K:
                key = compound_label(projection(label), k)
                image = next_projection(compound_label(i + 1, n + 1, shifted, ks + [k]))
                if table.setdefault(key, image) != image:
                    raise VerificationError(
                        f"Bonding at level {i} is not well defined on {projection(label)}",
                        {"level": i, "class": projection(label), "generator": label},
                    )
        bondings.append(FinMap(source, levels[i + 1], table))
    logger.debug(f"Prolonged datum on ({D.window}) with |K| = {len(K)}: level sizes {[len(c) for c in levels]}")
    return SymSpectrum(K, tuple(levels), tuple(actions), tuple(bondings))


def suspension_spectrum(K: FinCarrier, levels: int) -> SymSpectrum:
    """Level i = K^i with Σ_i permuting coordinates; bondings append."""
    carriers, actions, bondings = [], [], []
    for i in range(levels + 1):
        tuples = power(K, i)
        carrier = FinCarrier(tuple(compound_label(*ks) for ks in tuples))
        generators = {}
        for k in range(1, i):
            swap = Permutation.transposition(i, k)
            generators[(0, k)] = FinMap(carrier, carrier, {
                compound_label(*ks): compound_label(*permute_coordinates(swap, ks)) for ks in tuples
            })
        carriers.append(carrier)
        actions.append(GroupAction(carrier, (i,), generators))
    for i in range(levels):
        source, _ = product(carriers[i], K)
        table = {compound_label(compound_label(*ks), k): compound_label(*ks, k) for ks in power(K, i) for k in K}
        bondings.append(FinMap(source, carriers[i + 1], table))
    return SymSpectrum(K, tuple(carriers), tuple(actions), tuple(bondings))


@dataclass(frozen=True)
class SpectrumMap:
    source: SymSpectrum
    target: SymSpectrum
    components: Tuple[FinMap, ...]


def prolong_map(h: DatumMap, K: FinCarrier) -> SpectrumMap:
    """f^K_Spt on a map of T-data: [n, x, k] ↦ [n, h(x), k]."""
    source, target = f_K_spt(h.source, K), f_K_spt(h.target, K)
    components = []
    for i in range(len(source.levels)):
        _, target_projection = _level(h.target, i, K)
        table = {}
        for label in source.levels[i]:
            _, n, x, ks = split_label(label)
            table[label] = target_projection(compound_label(i, n, h.components[JObject(i, n)](x), ks))
        components.append(FinMap(source.levels[i], target.levels[i], table))
    return SpectrumMap(source, target, tuple(components))


def validate_spectrum_map(f: SpectrumMap) -> Report:
    """Levelwise equivariance and compatibility with the bondings."""
    report = Report(check="spectrum_map", details={"levels": f.source.top})
    for i, component in enumerate(f.components):
        for key, move in f.source.actions[i].generators.items():
            report.checked += 1
            if component.compose(move) != f.target.actions[i].generators[key].compose(component):
                report.fail(law="equivariance", level=i, generator=list(key))
        if i + 1 < len(f.components):
            for x in f.source.levels[i]:
                for k in f.source.K:
                    report.checked += 1
                    if f.components[i + 1](f.source.bond(i, x, k)) != f.target.bond(i, component(x), k):
                        report.fail(law="bonding", level=i, element=x, K=k)
    return report


def check_burnside(X: SymSeq, K: FinCarrier) -> Report:
    report = Report(check="burnside", details={"levels": X.top, "K": len(K)})
    report.checked = 1
    size, expected = len(f_K(X, K)), burnside_count(X, K)
    report.details.update(size=size, expected=expected)
    if size != expected:
        report.fail(size=size, expected=expected)
    return report


# -- serialization -----------------------------------------------------------

def spectrum_to_json(S: SymSpectrum) -> Dict[str, object]:
    return {
        "schema": SPECTRUM_SCHEMA,
        "K": S.K.to_json(),
        "levels": [level.to_json() for level in S.levels],
        "actions": [action.to_json() for action in S.actions],
        "bondings": [bonding.to_json() for bonding in S.bondings],
    }


def spectrum_from_json(data: Dict[str, object]) -> SymSpectrum:
    model = parse_model(SpectrumModel, data, SPECTRUM_SCHEMA)
    K = within("K", lambda: FinCarrier(tuple(model.K)))
    levels = [within(f"levels[{i}]", lambda: FinCarrier(tuple(labels))) for i, labels in enumerate(model.levels)]
    if len(model.actions) != len(levels):
        raise ValidationError("Every level needs exactly one action", "actions")
    actions = [action_from_model(model.actions[i], levels[i], f"actions[{i}]") for i in range(len(levels))]
    if len(model.bondings) != max(len(levels) - 1, 0):
        raise ValidationError("Bondings connect consecutive levels", "bondings")
    bondings = []
    for i, table in enumerate(model.bondings):
        source, _ = product(levels[i], K)
        bondings.append(within(f"bondings[{i}]", lambda: FinMap(source, levels[i + 1], table)))
    return within("spectrum", lambda: SymSpectrum(K, tuple(levels), tuple(actions), tuple(bondings)))


def check_monoidal_prolongation(X: SymSeq, Y: SymSeq, K: FinCarrier) -> Report:
    """f^K is strong monoidal on cardinalities, and sends T to K."""
    report = Report(check="prolongation_monoidal", details={"K": len(K)})
    report.checked += 1
    convolved = len(f_K(convolve_sym(X, Y), K))
    expected = len(f_K(X, K)) * len(f_K(Y, K))
    if convolved != expected:
        report.fail(law="strong_monoidal", size=convolved, expected=expected)
    report.checked += 1
    image = f_K(SymSeq.T(), K)
    if len(image) != len(K):
        report.fail(law="T_to_K", size=len(image), expected=len(K))
    return report
