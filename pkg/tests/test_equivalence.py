import pytest
from hypothesis import given, settings

from src.equivalence import (
    datum_map_to_transformation,
    decomposition_independence,
    evaluate,
    functor_to_tdatum,
    roundtrip_check,
    tdatum_to_functor,
)
from src.fincomb import Permutation
from src.generators import invariance_counterexample, random_datum_map, random_functor, random_tdatum, representable
from src.jcat import JObject, Window, permutation_pair, standard_map
from src.utils.errors import InvalidDatumError, InvalidFunctorError, ValidationError, WindowError

from tests.strategies import seeds

WINDOW = Window(2, 2)


def test_evaluate_standard_maps_gives_iterates():
    D = random_tdatum(1, WINDOW)
    assert evaluate(D, standard_map(0, 0, 2)) == D.iterate(0, 0, 2)
    assert evaluate(D, standard_map(1, 1, 0)).is_identity()


def test_evaluate_permutation_pairs_gives_the_action():
    D = random_tdatum(2, WINDOW)
    g = (Permutation(2, (2, 1)), Permutation.identity(2))
    assert evaluate(D, permutation_pair(*g)) == D.act(JObject(2, 2), g)


def test_evaluate_refuses_invalid_data():
    with pytest.raises(InvalidDatumError) as info:
        evaluate(invariance_counterexample(), standard_map(0, 0, 1))
    assert info.value.data["law"] == "invariance"


def test_evaluate_outside_the_window():
    with pytest.raises(WindowError):
        evaluate(random_tdatum(1, WINDOW), standard_map(2, 2, 1))


def test_datum_to_functor_is_a_functor():
    assert tdatum_to_functor(random_tdatum(4, WINDOW)).report.passed


def test_functor_to_datum_refuses_invalid_functors(broken_functor):
    with pytest.raises(InvalidFunctorError):
        functor_to_tdatum(broken_functor)


@settings(max_examples=10, deadline=None)
@given(seeds())
def test_datum_roundtrip(seed):
    assert roundtrip_check(random_tdatum(seed, WINDOW)).passed


@settings(max_examples=10, deadline=None)
@given(seeds())
def test_functor_roundtrip(seed):
    assert roundtrip_check(random_functor(seed, WINDOW).functor).passed


def test_roundtrip_on_a_wider_window():
    assert roundtrip_check(representable(JObject(1, 0), Window(3, 3))).passed
    assert roundtrip_check(random_tdatum(9, Window(3, 3))).passed


def test_roundtrip_window_mismatch():
    with pytest.raises(ValidationError):
        roundtrip_check(random_tdatum(1, WINDOW), Window(1, 1))


def test_datum_maps_become_natural_transformations():
    assert datum_map_to_transformation(random_datum_map(6, WINDOW)).passed


def test_evaluation_ignores_the_choice_of_decomposition():
    D = random_tdatum(8, WINDOW)
    for f in WINDOW.morphisms():
        assert decomposition_independence(D, f).passed
