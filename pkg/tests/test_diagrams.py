import pytest

from src.basecat import FinCarrier, GroupAction
from src.diagrams import (
    SymSeq,
    TDatum,
    front_embed,
    jfunctor_from_json,
    jfunctor_to_json,
    symseq_from_json,
    symseq_to_json,
    tdatum_from_json,
    tdatum_to_json,
    validate_datum_map,
    validate_functor,
    validate_tdatum,
)
from src.equivalence import functor_to_tdatum
from src.fincomb import Permutation
from src.generators import (
    invariance_counterexample,
    mutate_shift,
    point_functor,
    random_datum_map,
    random_symseq,
    random_tdatum,
    representable,
    shift_mutations,
)
from src.jcat import JObject, Window
from src.schemas import dump_json, load_json
from src.utils.errors import ValidationError, WindowError

WINDOW = Window(2, 2)
SWAP = Permutation(2, (2, 1))


def test_symseq_T():
    T = SymSeq.T(2)
    assert T.top == 2
    assert T.carrier(1) == FinCarrier.point()
    assert len(T.carrier(0)) == 0
    assert len(T.carrier(5)) == 0
    assert T.action(5).degrees == (5,)


def test_symseq_levels_need_matching_degrees():
    point = FinCarrier.point()
    with pytest.raises(ValidationError) as info:
        SymSeq((point,), (GroupAction.trivial(point, (1,)),))
    assert info.value.data == {"field": "actions[0]"}


def test_tdatum_requires_every_shift():
    D = functor_to_tdatum(point_functor(WINDOW))
    shifts = dict(D.shifts)
    del shifts[JObject(0, 0)]
    with pytest.raises(ValidationError) as info:
        TDatum(WINDOW, D.carriers, D.actions, shifts)
    assert info.value.data == {"field": "shifts.0,0"}


def test_point_datum_is_valid():
    D = functor_to_tdatum(point_functor(WINDOW))
    assert D.is_valid
    assert D.iterate(0, 0, 2).table == {"*": "*"}
    with pytest.raises(WindowError):
        D.iterate(1, 1, 2)


def test_counterexample_fails_invariance():
    report = validate_tdatum(invariance_counterexample())
    assert not report.passed
    witness = report.witness
    assert witness["law"] == "invariance"
    assert (witness["i"], witness["n"], witness["p"]) == (0, 0, 2)
    assert witness["g"] == [2, 1]
    D = invariance_counterexample()
    assert D.shifts[JObject(1, 1)]("*") == "a"


def test_shift_mutation_on_a_free_orbit_breaks_equivariance():
    D = functor_to_tdatum(representable(JObject(1, 1), Window(3, 3)))
    assert D.is_valid
    at = JObject(2, 2)
    x = D.carriers[at].elements[0]
    y = next(z for z in D.carriers[JObject(3, 3)] if z != D.shifts[at](x))
    witness = validate_tdatum(mutate_shift(D, at, x, y)).witness
    assert witness["law"] == "equivariance"
    assert (witness["i"], witness["n"]) == (2, 2)


def test_shift_mutations_change_one_value():
    D = functor_to_tdatum(representable(JObject(0, 0), WINDOW))
    mutations = list(shift_mutations(D))
    assert len(mutations) == 1
    (at, x, y), mutated = mutations[0]
    assert at == JObject(1, 1)
    assert mutated.shifts[at](x) == y != D.shifts[at](x)


def test_representable_is_a_functor():
    F = representable(JObject(1, 1), WINDOW)
    assert validate_functor(F).passed
    assert F.size(JObject(2, 2)) == 4
    assert F.size(JObject(0, 0)) == 0


def test_broken_functor_fails_composition(broken_functor):
    report = validate_functor(broken_functor)
    assert not report.passed
    assert any(violation["law"] == "composition" for violation in report.violations)


def test_front_embed_fixes_the_tail():
    a, b = front_embed((SWAP, Permutation.identity(1)), 2)
    assert a.images == (2, 1, 3, 4)
    assert b.images == (1, 2, 3)


def test_random_datum_map_is_equivariant_and_commutes():
    assert validate_datum_map(random_datum_map(5, WINDOW)).passed


def test_documents_decode_to_the_same_objects():
    D = random_tdatum(3, WINDOW)
    assert tdatum_from_json(tdatum_to_json(D)) == D
    F = representable(JObject(0, 1), WINDOW)
    G = jfunctor_from_json(jfunctor_to_json(F))
    assert all(G.on(f) == F.on(f) for f in WINDOW.morphisms())
    X = random_symseq(2, 3)
    assert symseq_from_json(symseq_to_json(X)) == X


def test_empty_window_datum_reserializes_identically():
    point = FinCarrier.point()
    origin = JObject(0, 0)
    D = TDatum(Window(0, 0), {origin: point}, {origin: GroupAction.trivial(point, (0, 0))}, {})
    text = dump_json(tdatum_to_json(D))
    again = tdatum_from_json(load_json(text))
    assert again == D
    assert dump_json(tdatum_to_json(again)) == text


def test_bad_object_key_names_its_path():
    document = {"schema": "tdatum.v1", "window": [0, 0], "carriers": {"1;1": []}, "actions": {}}
    with pytest.raises(ValidationError) as info:
        tdatum_from_json(document)
    assert info.value.data == {"field": "carriers.1;1"}


def test_wrong_schema_is_rejected():
    document = {"schema": "tdatum.v2", "window": [0, 0], "carriers": {"0,0": []}, "actions": {"0,0": {"degrees": [0, 0]}}}
    with pytest.raises(ValidationError) as info:
        tdatum_from_json(document)
    assert info.value.data == {"field": "schema"}


def test_unknown_fields_are_rejected():
    document = {"schema": "symseq.v1", "levels": [[]], "actions": [{"degrees": [0]}], "extra": 1}
    with pytest.raises(ValidationError):
        symseq_from_json(document)


def test_duplicate_json_keys_are_rejected():
    with pytest.raises(ValidationError):
        load_json('{"a": 1, "a": 2}')
    with pytest.raises(ValidationError) as info:
        load_json("{not json")
    assert info.value.data == {"field": "document"}
