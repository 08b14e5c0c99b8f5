"""The two inverse functors between T-data and 𝒥-functors.

A datum becomes a functor by evaluating each morphism f through its canonical
decomposition f = (a, b) ∘ Ψ_{i,n,p}, i.e. F(f) = (a, b) ∘ Φ_{i,n,p}. A functor
becomes a datum by restricting to permutation pairs (the actions) and to the
standard maps Ψ_{i,n,1} (the shifts).
"""

import logging
from typing import Union

from .basecat import FinMap, GroupAction
from .diagrams import DatumMap, JFunctor, TDatum, transposition_pairs
from .fincomb import enumerate_permutations
from .jcat import JMorphism, JObject, Window, decompose, iota_embed, permutation_pair, standard_map
from .utils.errors import InvalidDatumError, InvalidFunctorError, ValidationError
from .utils.report import Report

logger = logging.getLogger(__name__)


def _require_valid_datum(D: TDatum) -> None:
    if not D.is_valid:
        raise InvalidDatumError(f"T-datum fails validation at {D.report.witness}", D.report.witness)


def evaluate(D: TDatum, f: JMorphism) -> FinMap:
    """The map (a, b) ∘ Φ_{i,n,p} assigned to f."""
    _require_valid_datum(D)
    D.window.require(f)
    a, b, p = decompose(f)
    iterate = D.iterate(f.src.m, f.src.n, p)
    return D.act(f.dst, (a, b)).compose(iterate)


def tdatum_to_functor(D: TDatum) -> JFunctor:
    _require_valid_datum(D)
    return JFunctor(D.window, D.carriers, evaluator=lambda f: evaluate(D, f), name="datum")


def functor_to_tdatum(F: JFunctor) -> TDatum:
    """Actions from permutation pairs, shifts from F(Ψ_{i,n,1})."""
    if not F.report.passed:
        raise InvalidFunctorError(f"Functor {F.name} fails validation at {F.report.witness}", F.report.witness)
    actions = {}
    for a in F.window.objects():
        generators = {key: F.on(permutation_pair(*g)) for key, g in transposition_pairs(a)}
        actions[a] = GroupAction(F.at[a], (a.m, a.n), generators)
    shifts = {}
    for a in F.window.objects():
        if JObject(a.m + 1, a.n + 1) in F.window:
            shifts[a] = F.on(standard_map(a.m, a.n, 1))
    return TDatum(F.window, F.at, actions, shifts)


def functors_agree(F: JFunctor, G: JFunctor, report: Report) -> Report:
    """On-the-nose comparison of carriers and of every edge map in the window."""
    if F.window != G.window:
        report.fail(law="window", left=F.window.to_json(), right=G.window.to_json())
        return report
    for a in F.window.objects():
        report.checked += 1
        if F.at[a] != G.at[a]:
            report.fail(law="carrier", object=str(a))
    for f in F.window.morphisms():
        report.checked += 1
        if F.on(f) != G.on(f):
            element, _, _ = F.on(f).first_difference(G.on(f))
            report.fail(law="edge", morphism=f.key, element=element)
    return report


def roundtrip_check(x: Union[TDatum, JFunctor], window: Window = None) -> Report:
    """
    datum -> functor -> datum must return the datum itself; functor -> datum ->
    functor must agree with the original on every object and morphism.
    """
    report = Report(check="roundtrip")
    if isinstance(x, TDatum):
        if window is not None and window != x.window:
            raise ValidationError(f"Datum window ({x.window}) differs from ({window})", "window")
        report.details = {"kind": "tdatum", "window": x.window.to_json()}
        functor = tdatum_to_functor(x)
        report.absorb(functor.report)
        back = functor_to_tdatum(functor)
        report.checked += 1
        if back != x:
            differing = [str(a) for a in x.window.objects()
                         if back.carriers[a] != x.carriers[a] or back.actions[a] != x.actions[a]
                         or back.shifts.get(a) != x.shifts.get(a)]
            report.fail(law="datum_identity", objects=differing)
        return report
    if window is not None and window != x.window:
        raise ValidationError(f"Functor window ({x.window}) differs from ({window})", "window")
    report.details = {"kind": "jfunctor", "window": x.window.to_json()}
    datum = functor_to_tdatum(x)
    report.absorb(datum.report)
    return functors_agree(x, tdatum_to_functor(datum), report)


def datum_map_to_transformation(h: DatumMap) -> Report:
    """A map of T-data is natural for the associated functors, on every morphism in the window."""
    report = Report(check="naturality", details={"window": h.source.window.to_json()})
    source = tdatum_to_functor(h.source)
    target = tdatum_to_functor(h.target)
    for f in h.source.window.morphisms():
        report.checked += 1
        if h.components[f.dst].compose(source.on(f)) != target.on(f).compose(h.components[f.src]):
            report.fail(morphism=f.key)
    return report


def decomposition_independence(D: TDatum, f: JMorphism) -> Report:
    """act(a', b') ∘ Φ agrees for every decomposition (a', b') = (a, b) ∘ ι(g) of f."""
    report = Report(check="decomposition_independence", details={"morphism": f.key})
    a, b, p = decompose(f)
    iterate = D.iterate(f.src.m, f.src.n, p)
    reference = D.act(f.dst, (a, b)).compose(iterate)
    for g in enumerate_permutations(p):
        ga, gb = iota_embed(g, f.src.m, f.src.n)
        report.checked += 1
        if D.act(f.dst, (a.compose(ga), b.compose(gb))).compose(iterate) != reference:
            report.fail(g=list(g.images))
    return report

