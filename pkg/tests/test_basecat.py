import pytest
from hypothesis import given

from src.basecat import (
    DisjointSet,
    FinCarrier,
    FinMap,
    GroupAction,
    compound_label,
    coproduct,
    power,
    product,
    quotient,
    split_label,
)
from src.fincomb import Permutation
from src.generators import natural_action, regular_action
from src.utils.errors import CompositionError, ValidationError

from tests.strategies import permutation_pairs

ABC = FinCarrier(("a", "b", "c"))


def test_compound_labels_are_canonical_json():
    label = compound_label("a", 1, ["x"])
    assert label == '["a",1,["x"]]'
    assert split_label(label) == ["a", 1, ["x"]]


def test_duplicate_label_names_its_position():
    with pytest.raises(ValidationError) as info:
        FinCarrier(("a", "b", "a"))
    assert info.value.data == {"field": "elements[2]"}


def test_point_and_empty():
    assert FinCarrier.point().to_json() == ["*"]
    assert len(FinCarrier.empty()) == 0


def test_map_must_be_total():
    with pytest.raises(ValidationError):
        FinMap(ABC, ABC, {"a": "a", "b": "b"})


def test_map_images_must_lie_in_target():
    with pytest.raises(ValidationError) as info:
        FinMap(ABC, ABC, {"a": "a", "b": "b", "c": "z"})
    assert info.value.data == {"field": "table.c"}


def test_compose_is_self_after_other():
    shift = FinMap(ABC, ABC, {"a": "b", "b": "c", "c": "a"})
    collapse = FinMap(ABC, ABC, {"a": "a", "b": "a", "c": "c"})
    assert collapse.compose(shift).table == {"a": "a", "b": "c", "c": "a"}
    assert shift.compose(shift.inverse()).is_identity()


def test_compose_mismatch_and_non_bijective_inverse():
    pair = FinCarrier(("x", "y"))
    constant = FinMap(ABC, pair, {"a": "x", "b": "x", "c": "x"})
    with pytest.raises(CompositionError):
        constant.compose(constant)
    with pytest.raises(CompositionError):
        constant.inverse()
    assert not constant.is_surjective()
    assert not constant.is_injective()


def test_first_difference():
    left = FinMap(ABC, ABC, {"a": "a", "b": "b", "c": "c"})
    right = FinMap(ABC, ABC, {"a": "a", "b": "c", "c": "b"})
    assert left.first_difference(right) == ("b", "b", "c")


def test_generator_must_be_an_involution():
    cycle = FinMap(ABC, ABC, {"a": "b", "b": "c", "c": "a"})
    with pytest.raises(ValidationError):
        GroupAction(ABC, (2,), {(0, 1): cycle})


def test_braid_relation_is_enforced():
    carrier = FinCarrier(("a", "b", "c", "d"))
    first = FinMap(carrier, carrier, {"a": "b", "b": "a", "c": "c", "d": "d"})
    second = FinMap(carrier, carrier, {"a": "a", "b": "b", "c": "d", "d": "c"})
    with pytest.raises(ValidationError):
        GroupAction(carrier, (3,), {(0, 1): first, (0, 2): second})


def test_missing_generator_is_rejected():
    with pytest.raises(ValidationError):
        GroupAction(ABC, (3,), {(0, 1): FinMap.identity(ABC)})


def test_natural_action_moves_coordinates():
    action = natural_action(3)
    g = Permutation(3, (2, 3, 1))
    moved = action.act((g,))
    for j in range(1, 4):
        assert moved(compound_label("v", j)) == compound_label("v", g(j))


@given(permutation_pairs(max_degree=4))
def test_action_is_a_left_action(pair):
    g, h = pair
    action = regular_action(g.degree)
    assert action.act((g.compose(h),)) == action.act((g,)).compose(action.act((h,)))


def test_act_rejects_wrong_degrees():
    with pytest.raises(CompositionError):
        GroupAction.trivial(ABC, (2,)).act((Permutation.identity(3),))


def test_action_json_keys():
    data = natural_action(2).to_json()
    assert data["degrees"] == [2]
    assert list(data["generators"]) == ["0.1"]


def test_disjoint_set():
    classes = DisjointSet()
    for e in "abcd":
        classes.make_set(e)
    classes.union("d", "b")
    assert classes.find("b") == classes.find("d")
    assert classes.sets() == [("a",), ("b", "d"), ("c",)]


def test_quotient_uses_least_representatives():
    carrier = FinCarrier(("d", "c", "b", "a"))
    classes, projection = quotient(carrier, [("b", "a"), ("d", "c")])
    assert classes.to_json() == ["a", "c"]
    assert projection("b") == "a"
    assert projection("d") == "c"


def test_quotient_rejects_unknown_labels():
    with pytest.raises(ValidationError) as info:
        quotient(ABC, [("a", "z")])
    assert info.value.data == {"field": "relations[0][1]"}


def test_coproduct_tags():
    total, injections = coproduct([FinCarrier(("x",)), FinCarrier(("x", "y"))])
    assert total.to_json() == ["0:x", "1:x", "1:y"]
    assert injections[1]("y") == "1:y"
    with pytest.raises(ValidationError):
        coproduct([ABC], ["a:b"])


def test_product_and_power():
    pair = FinCarrier(("x", "y"))
    total, (first, second) = product(ABC, pair)
    assert len(total) == 6
    label = compound_label("b", "y")
    assert first(label) == "b"
    assert second(label) == "y"
    assert power(pair, 2) == [("x", "x"), ("x", "y"), ("y", "x"), ("y", "y")]
    assert power(pair, 0) == [()]
