from dataclasses import replace
from math import factorial

import pytest
from hypothesis import given, settings

from src.basecat import FinMap, compound_label
from src.diagrams import SymSeq
from src.fincomb import Permutation
from src.generators import point_functor, random_functor, representable
from src.jcat import JObject, Window, count_hom, standard_map, tensor_obj
from src.dayconv import (
    check_associativity_sizes,
    check_braiding,
    check_commutativity_sizes,
    check_monoidal_comparison,
    check_order_independence,
    check_sym_t,
    check_unit_laws,
    compare_monoidal,
    convolve_sym,
    day_convolve,
    day_functor,
    day_label,
    j_shriek,
    j_star,
    module_smash,
    parse_day_label,
    permutation_from_label,
    permutation_label,
    point_bisym,
    product_coordinates,
    sym_T,
    sym_presentation,
    unit_object,
    unit_sym_t_iso,
    unitor,
)
from src.equivalence import functor_to_tdatum
from src.utils.errors import WindowError

from tests.strategies import seeds

WINDOW = Window(2, 2)


def test_unit_object_sizes():
    unit = unit_object(Window(3, 3))
    for a in Window(3, 3).objects():
        assert unit.size(a) == (factorial(a.m) if a.m == a.n else 0)
    assert unit.report.passed


@pytest.mark.parametrize("a, b, at", [
    ((1, 0), (0, 1), (1, 1)),
    ((1, 0), (0, 1), (2, 2)),
    ((0, 0), (1, 1), (2, 2)),
    ((1, 1), (0, 1), (1, 2)),
])
def test_convolving_representables_gives_the_representable_of_the_tensor(a, b, at):
    X = representable(JObject(*a), WINDOW)
    Y = representable(JObject(*b), WINDOW)
    presentation = day_convolve(X, Y, JObject(*at))
    assert len(presentation.classes) == count_hom(tensor_obj(JObject(*a), JObject(*b)), JObject(*at))


def test_unit_is_neutral_on_sizes():
    Y = representable(JObject(0, 1), WINDOW)
    unit = unit_object(WINDOW)
    for a in WINDOW.objects():
        assert len(day_convolve(unit, Y, a).classes) == Y.size(a)
        assert len(day_convolve(Y, unit, a).classes) == Y.size(a)


def test_unitor_is_a_bijection():
    Y = representable(JObject(1, 1), WINDOW)
    assert unitor(Y, JObject(2, 2)).is_bijective()
    assert check_unit_laws(Y).passed


def test_braiding_is_an_involution():
    X = representable(JObject(1, 0), WINDOW)
    Y = point_functor(WINDOW)
    assert check_braiding(X, Y).passed
    assert check_commutativity_sizes(X, Y).passed


@settings(max_examples=5, deadline=None)
@given(seeds())
def test_convolution_of_random_functors_is_a_functor(seed):
    X = random_functor(seed, Window(1, 1)).functor
    Y = random_functor(seed + 1, Window(1, 1)).functor
    assert day_functor(X, Y).report.passed
    assert check_commutativity_sizes(X, Y).passed


def test_classes_do_not_depend_on_enumeration_order():
    X = representable(JObject(0, 0), WINDOW)
    Y = point_functor(WINDOW)
    assert check_order_independence(X, Y, JObject(2, 2), [1, 2, 3]).passed


def test_presentation_json_lists_classes():
    X = representable(JObject(0, 0), WINDOW)
    data = day_convolve(X, X, JObject(1, 1)).to_json(classes=True)
    assert data["size"] == 1
    assert sorted(data["classes"]) == data["representatives"]


def test_day_labels_decode():
    u = standard_map(0, 0, 1)
    A, B, v, x, y = parse_day_label(day_label(JObject(0, 0), JObject(0, 0), u, "x", "y"))
    assert (A, B, v, x, y) == (JObject(0, 0), JObject(0, 0), u, "x", "y")


def test_convolution_outside_the_window():
    X = point_functor(WINDOW)
    with pytest.raises(WindowError):
        day_convolve(X, X, JObject(3, 3))


def test_left_kan_extension_of_a_point():
    Y = j_shriek(point_bisym(Window(3, 3), JObject(1, 1)))
    assert [Y.size(JObject(k, k)) for k in range(4)] == [0, 1, 4, 18]
    assert Y.report.passed


def test_restriction_keeps_carriers():
    X = representable(JObject(1, 1), WINDOW)
    restricted = j_star(X)
    assert restricted.carriers == X.at
    g = (Permutation(2, (2, 1)), Permutation.identity(2))
    assert restricted.act(JObject(2, 2), g).is_bijective()


def test_convolving_T_with_itself():
    TT = convolve_sym(SymSeq.T(1), SymSeq.T(1))
    assert TT.top == 2
    assert [len(TT.carrier(c)) for c in range(3)] == [0, 0, 2]


def test_sym_t_levels_are_torsors():
    monoid = sym_T(3)
    assert [len(monoid.level(p)) for p in range(4)] == [1, 1, 2, 6]
    assert check_sym_t(monoid).passed


def test_sym_t_action_in_coordinates():
    a = Permutation(2, (2, 1))
    b = Permutation.identity(2)
    w = Permutation.identity(2)
    assert sym_T(2).act(a, b, w) == Permutation(2, (2, 1))


def test_unit_restricts_to_sym_t():
    maps, report = unit_sym_t_iso(WINDOW)
    assert report.passed
    assert sorted(maps) == [0, 1, 2]
    assert all(f.is_bijective() for f in maps.values())


def test_module_smash_matches_day_convolution():
    X = representable(JObject(1, 0), WINDOW)
    Y = representable(JObject(0, 1), WINDOW)
    at = JObject(1, 1)
    smash = module_smash(functor_to_tdatum(X), functor_to_tdatum(Y), at)
    assert len(smash.classes) == len(day_convolve(X, Y, at).classes)
    comparison, report = compare_monoidal(X, Y, at)
    assert report.passed
    assert comparison.is_bijective()


def test_monoidal_comparison_on_every_object():
    X = point_functor(WINDOW)
    Y = representable(JObject(0, 0), WINDOW)
    assert check_monoidal_comparison(X, Y).passed


def test_left_kan_extension_of_the_origin_is_the_unit():
    J = j_shriek(point_bisym(WINDOW, JObject(0, 0)))
    unit = unit_object(WINDOW)

    def relabel(s):
        return compound_label("0,0", s, "*")

    for a in WINDOW.objects():
        assert J.size(a) == unit.size(a)
    for h in WINDOW.morphisms():
        for s in unit.at[h.src]:
            assert J.on(h)(relabel(s)) == relabel(unit.on(h)(s))


def test_free_module_law():
    free = functor_to_tdatum(unit_object(WINDOW))
    N = functor_to_tdatum(representable(JObject(1, 0), WINDOW))
    for a in WINDOW.objects():
        assert len(module_smash(free, N, a).classes) == len(N.carriers[a])
    assert len(module_smash(free, free, JObject(2, 2)).classes) == 2


def test_associativity_on_sizes():
    window = Window(1, 1)
    X = point_functor(window)
    Y = representable(JObject(0, 1), window)
    Z = representable(JObject(1, 0), window)
    report = check_associativity_sizes(X, Y, Z)
    assert report.passed
    assert report.checked == len(window.objects())


def test_permutation_labels():
    g = Permutation(3, (2, 3, 1))
    assert permutation_label(g) == "[2,3,1]"
    assert permutation_label(Permutation.identity(0)) == "[]"
    assert permutation_from_label(permutation_label(g)) == g


def test_products_of_powers_have_torsor_coordinates():
    monoid = sym_T(2)
    presentation = sym_presentation(monoid.powers[1], monoid.powers[1], 2)
    assert len(presentation.classes) == 2
    assert product_coordinates(monoid, presentation, 2).is_bijective()


def test_non_equivariant_coordinates_are_caught():
    monoid = sym_T(3)
    s = Permutation(3, (2, 1, 3))
    coordinate = monoid.coordinates[3]
    shifted = FinMap(coordinate.src, coordinate.dst, {
        e: permutation_label(s.compose(permutation_from_label(coordinate(e)))) for e in coordinate.src
    })
    tampered = replace(monoid, coordinates=monoid.coordinates[:3] + (shifted,))
    _, report = unit_sym_t_iso(Window(3, 3), tampered)
    assert not report.passed
    assert report.witness["law"] == "product_well_defined"
    assert (report.witness["left"], report.witness["right"]) == (0, 3)
