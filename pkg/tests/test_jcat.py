import pytest
from hypothesis import given, settings

from src.fincomb import Permutation, enumerate_permutations
from src.jcat import (
    JObject,
    Window,
    category_dot,
    check_category_axioms,
    check_decomposition,
    check_hom_counts,
    check_monoidal_laws,
    compose_j,
    count_hom,
    decompose,
    enumerate_hom,
    identity_j,
    iota_embed,
    morphism_from_json,
    morphism_from_key,
    permutation_pair,
    recompose,
    standard_map,
    symmetry_iso,
    tensor_mor,
    tensor_obj,
)
from src.utils.errors import CompositionError, ValidationError, WindowError

from tests.strategies import composable_triples, morphisms, objects

WINDOW = Window(2, 2)


@pytest.mark.parametrize("src, dst, expected", [
    ((0, 0), (2, 2), 2),
    ((1, 1), (2, 2), 4),
    ((1, 1), (3, 3), 18),
    ((1, 0), (2, 2), 0),
    ((2, 2), (1, 1), 0),
    ((0, 1), (1, 2), 2),
])
def test_count_hom(src, dst, expected):
    assert count_hom(JObject(*src), JObject(*dst)) == expected


def test_negative_object_is_rejected():
    with pytest.raises(ValidationError):
        JObject(-1, 0)


def test_enumeration_matches_count():
    for a in Window(3, 3).objects():
        for b in Window(3, 3).objects():
            listed = enumerate_hom(a, b)
            assert len(listed) == count_hom(a, b)
            assert len(set(listed)) == len(listed)


def test_decompose_example():
    f = morphism_from_json({"src": [1, 0], "dst": [2, 1], "phi": [2], "psi": [], "alpha": [1]})
    a, b, p = decompose(f)
    assert a == Permutation(2, (2, 1))
    assert b == Permutation.identity(1)
    assert p == 1
    assert recompose(a, b, p) == f


@given(morphisms(Window(3, 3)))
def test_recompose_inverts_decompose(f):
    assert recompose(*decompose(f)) == f


@given(morphisms(WINDOW))
def test_keys_decode(f):
    assert morphism_from_key(f.key) == f


def test_standard_map_key():
    assert standard_map(0, 0, 2).key == "0,0>2,2://1.2"
    assert standard_map(1, 1, 0).is_identity()


def test_malformed_morphisms():
    with pytest.raises(ValidationError):
        morphism_from_key("1,1>2,2")
    with pytest.raises(ValidationError):
        morphism_from_json({"src": [1, 1], "dst": [2, 2], "phi": [1], "psi": [1], "alpha": [1]})
    with pytest.raises(ValidationError):
        morphism_from_json({"src": [1, 1]})


@pytest.mark.parametrize("key", ["1,1>2,2:1/2", "1,1>2,2:1/2/2/1", "1,1>2,2:", "1;1>2,2:1/2/2"])
def test_keys_need_three_tables(key):
    with pytest.raises(ValidationError) as info:
        morphism_from_key(key)
    assert info.value.data == {"field": "key"}


def test_every_decomposition_of_a_three_step_map_is_a_coset():
    source, target = JObject(1, 1), JObject(3, 3)
    for f in enumerate_hom(source, target):
        a, b, p = decompose(f)
        assert p == 2
        assert recompose(a, b, p) == f
        psi = standard_map(1, 1, p)
        valid = {
            (x.images, y.images)
            for x in enumerate_permutations(3)
            for y in enumerate_permutations(3)
            if compose_j(permutation_pair(x, y), psi) == f
        }
        coset = {
            (a.compose(ga).images, b.compose(gb).images)
            for ga, gb in (iota_embed(g, 1, 1) for g in enumerate_permutations(p))
        }
        assert valid == coset
        assert len(coset) == 2


@settings(max_examples=50)
@given(composable_triples(WINDOW))
def test_composition_is_associative(triple):
    f, g, h = triple
    assert compose_j(h, compose_j(g, f)) == compose_j(compose_j(h, g), f)


@given(morphisms(WINDOW))
def test_identities_are_neutral(f):
    assert compose_j(identity_j(f.dst), f) == f
    assert compose_j(f, identity_j(f.src)) == f


def test_compose_mismatch():
    with pytest.raises(CompositionError):
        compose_j(standard_map(0, 0, 1), standard_map(0, 0, 1))


def test_permutation_pairs_compose_like_the_group():
    a = Permutation(2, (2, 1))
    b = Permutation(3, (2, 3, 1))
    composite = compose_j(permutation_pair(a, b), permutation_pair(a, b))
    assert composite == permutation_pair(a.compose(a), b.compose(b))


@given(objects(2), objects(2))
def test_symmetry_is_an_involution(a, b):
    assert compose_j(symmetry_iso(b, a), symmetry_iso(a, b)).is_identity()
    assert tensor_mor(identity_j(a), identity_j(b)) == identity_j(tensor_obj(a, b))


def test_window_rejects_outside_morphisms():
    with pytest.raises(WindowError):
        WINDOW.require(standard_map(2, 2, 1))
    assert JObject(3, 0) not in WINDOW
    assert len(WINDOW.objects()) == 9


def test_exhaustive_checks_pass():
    assert check_category_axioms(WINDOW).passed
    assert check_hom_counts(3).passed
    assert check_decomposition(WINDOW).passed
    assert check_monoidal_laws(Window(1, 1)).passed


def test_category_dot_labels_hom_counts():
    dot = category_dot(WINDOW)
    assert dot.startswith("digraph J {")
    assert '"0,0" -> "2,2" [label="2"];' in dot
    assert '"1,1" -> "2,2" [label="4"];' in dot
