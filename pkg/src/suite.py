"""The acceptance suite: every exhaustive and seeded check, collected into one report."""

import logging
import time
from math import factorial
from typing import Callable, List

from .basecat import FinCarrier
from .config import Config, config
from .dayconv import (
    check_associativity_sizes,
    check_braiding,
    check_commutativity_sizes,
    check_monoidal_comparison,
    check_order_independence,
    check_sym_t,
    check_unit_laws,
    sym_T,
    unit_object,
    unit_sym_t_iso,
)
from .diagrams import JFunctor, validate_datum_map
from .equivalence import (
    datum_map_to_transformation,
    decomposition_independence,
    evaluate,
    functor_to_tdatum,
    roundtrip_check,
    tdatum_to_functor,
)
from .generators import (
    diagonal_support,
    invariance_counterexample,
    point_functor,
    random_datum_map,
    random_functor,
    random_symseq,
    representable,
    shift_mutations,
)
from .jcat import (
    JObject,
    Window,
    check_category_axioms,
    check_decomposition,
    check_hom_counts,
    check_monoidal_laws,
    enumerate_hom,
    standard_map,
)
from .spectra import (
    check_burnside,
    check_monoidal_prolongation,
    f_K_spt,
    prolong_map,
    suspension_spectrum,
    validate_spectrum,
    validate_spectrum_map,
)
from .topo import component_invariant_check
from .utils.errors import InvalidDatumError, JSpecError
from .utils.report import Report, SuiteReport

logger = logging.getLogger(__name__)

# Mutation checks stop after this many altered data per seed.
MUTATION_LIMIT = 60


def data_window(window: Window, settings: Config = config) -> Window:
    """Random data live one step beyond the suite window, capped by MAX_WINDOW."""
    return Window(min(window.M + 1, settings.MAX_WINDOW), min(window.N + 1, settings.MAX_WINDOW))


def check_roundtrips(window: Window, seed: int, count: int) -> Report:
    report = Report(check="roundtrips", details={"window": window.to_json(), "seed": seed, "count": count})
    for offset in range(count):
        sample = random_functor(seed + offset, window)
        report.absorb(roundtrip_check(sample.functor), prefix=f"functor[{seed + offset}]")
        datum = functor_to_tdatum(sample.functor)
        report.absorb(roundtrip_check(datum), prefix=f"tdatum[{seed + offset}]")
    return report


def check_datum_maps(window: Window, seed: int, count: int) -> Report:
    report = Report(check="datum_maps", details={"window": window.to_json(), "seed": seed, "count": count})
    for offset in range(count):
        h = random_datum_map(seed + offset, window)
        report.absorb(validate_datum_map(h))
        report.absorb(datum_map_to_transformation(h))
    return report


def check_invariance_exactness(seed: int) -> Report:
    """
    The counterexample is rejected and cannot be evaluated; each single-value
    mutation of a random datum's shifts either fails validation (and is then
    refused by evaluate) or still yields a functor.
    """
    report = Report(check="invariance_exactness", details={"seed": seed})
    counterexample = invariance_counterexample()
    report.checked += 1
    witness = counterexample.report.witness or {}
    if counterexample.is_valid or witness.get("law") != "invariance" or witness.get("g") != [2, 1]:
        report.fail(law="counterexample", witness=witness)
    report.checked += 1
    try:
        evaluate(counterexample, standard_map(0, 0, 2))
        report.fail(law="evaluate_refused")
    except InvalidDatumError:
        pass
    window = Window(2, 2)
    data = [
        functor_to_tdatum(random_functor(seed, window).functor),
        functor_to_tdatum(representable(JObject(0, 0), window)),
    ]
    caught = 0
    for datum in data:
        for position, (mutation, mutated) in enumerate(shift_mutations(datum)):
            if position >= MUTATION_LIMIT:
                break
            report.checked += 1
            if mutated.is_valid:
                if not tdatum_to_functor(mutated).report.passed:
                    report.fail(law="accepted_non_functor", mutation=[str(mutation[0]), mutation[1], mutation[2]])
                continue
            caught += 1
            try:
                evaluate(mutated, next(iter(enumerate_hom(JObject(0, 0), JObject(0, 0)))))
                report.fail(law="evaluate_refused", mutation=[str(mutation[0]), mutation[1], mutation[2]])
            except InvalidDatumError:
                pass
    report.details["caught"] = caught
    return report


def check_unit_sizes(bound: int) -> Report:
    window = Window(bound, bound)
    unit = unit_object(window)
    report = Report(check="unit_sizes", details={"bound": bound})
    for a in window.objects():
        report.checked += 1
        expected = factorial(a.n) if a.m == a.n else 0
        if unit.size(a) != expected:
            report.fail(at=str(a), size=unit.size(a), expected=expected)
    report.absorb(unit.report)
    return report


def check_evaluation(window: Window, seed: int) -> Report:
    """Decomposition independence of evaluate for one random datum, on every morphism of the window."""
    report = Report(check="evaluation", details={"window": window.to_json(), "seed": seed})
    datum = functor_to_tdatum(random_functor(seed, window).functor)
    for f in window.morphisms():
        report.absorb(decomposition_independence(datum, f))
    return report


def point_functors(window: Window) -> List[JFunctor]:
    """One-point-support functors: the terminal functor and points on diagonals."""
    functors = [point_functor(window)]
    for difference in (-1, 0, 1):
        for start in (0, 1):
            support = diagonal_support(window, difference, start)
            if support:
                functors.append(point_functor(window, support))
    return functors


def check_day_laws(window: Window, seed: int, count: int) -> Report:
    report = Report(check="day_laws", details={"window": window.to_json(), "seed": seed, "count": count})
    functors = [random_functor(seed + offset, window).functor for offset in range(count)]
    for F in functors:
        report.absorb(check_unit_laws(F))
    for left, right in zip(functors, functors[1:]):
        report.absorb(check_braiding(left, right))
        report.absorb(check_commutativity_sizes(left, right))
    points = point_functors(window)
    for X in points[:3]:
        for Y in points[:3]:
            for Z in points[:3]:
                report.absorb(check_associativity_sizes(X, Y, Z))
    if len(functors) >= 2:
        top = JObject(window.M, window.N)
        report.absorb(check_order_independence(functors[0], functors[1], top, [seed, seed + 1, seed + 2]))
    return report


def check_comparisons(window: Window, seed: int, count: int) -> Report:
    report = Report(check="monoidal_equivalence", details={"window": window.to_json(), "seed": seed, "count": count})
    unit = unit_object(window)
    report.absorb(check_monoidal_comparison(unit, unit))
    for offset in range(count):
        X = random_functor(seed + 2 * offset, window).functor
        Y = random_functor(seed + 2 * offset + 1, window).functor
        report.absorb(check_monoidal_comparison(X, Y))
    return report


def check_prolongation(window: Window, seed: int, p_max: int) -> Report:
    report = Report(check="prolongation", details={"seed": seed, "p_max": p_max})
    for size in (1, 2, 3):
        K = FinCarrier(tuple(f"k{j}" for j in range(size)))
        for offset in range(3):
            report.absorb(check_burnside(random_symseq(seed + offset, 3), K))
        report.absorb(check_monoidal_prolongation(random_symseq(seed, 2), random_symseq(seed + 1, 1), K))
        report.absorb(validate_spectrum(suspension_spectrum(K, 3), p_max))
    K = FinCarrier(("k0", "k1"))
    for offset in range(3):
        datum = functor_to_tdatum(random_functor(seed + offset, window).functor)
        report.absorb(validate_spectrum(f_K_spt(datum, K), p_max))
    h = random_datum_map(seed, window)
    report.absorb(validate_spectrum_map(prolong_map(h, K)))
    return report


def check_pi0(bound: int) -> Report:
    report = Report(check="pi0_windows", details={"bound": bound})
    for M in range(bound + 1):
        for N in range(bound + 1):
            report.absorb(component_invariant_check(Window(M, N)))
    return report


def run_suite(window: Window, seed: int, settings: Config = config) -> SuiteReport:
    """All acceptance checks, sequentially, in a fixed order."""
    suite = SuiteReport(seed=seed, window=window.to_json())
    wide = data_window(window, settings)
    sections: List[Callable[[], Report]] = [
        lambda: check_category_axioms(window),
        lambda: check_hom_counts(4),
        lambda: check_decomposition(window),
        lambda: check_monoidal_laws(window),
        lambda: check_roundtrips(wide, seed, settings.RANDOM_DATA_COUNT),
        lambda: check_datum_maps(window, seed, max(1, settings.RANDOM_DATA_COUNT // 10)),
        lambda: check_evaluation(window, seed),
        lambda: check_invariance_exactness(seed),
        lambda: check_unit_sizes(3),
        lambda: check_sym_t(sym_T(3)),
        lambda: unit_sym_t_iso(Window(3, 3))[1],
        lambda: check_day_laws(window, seed, settings.RANDOM_PAIR_COUNT),
        lambda: check_comparisons(window, seed, settings.RANDOM_PAIR_COUNT),
        lambda: check_prolongation(window, seed, settings.SPECTRUM_P_MAX),
        lambda: check_pi0(4),
    ]
    for section in sections:
        started = time.monotonic()
        try:
            report = section()
        except JSpecError as e:
            report = Report(check="section_error", passed=False, violations=[{"error": e.message, "data": e.data}])
        report.details["seconds"] = round(time.monotonic() - started, 3)
        logger.info(f"{report.check}: {'pass' if report.passed else 'FAIL'} ({report.checked} instances)")
        suite.reports.append(report)
    return suite
