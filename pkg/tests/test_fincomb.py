import pytest
from hypothesis import given

from src.fincomb import (
    Injection,
    PartialBijection,
    Permutation,
    block_shuffle,
    compose_injection,
    enumerate_bijections,
    enumerate_injections,
    enumerate_permutations,
    sorted_complement,
    word_product,
)
from src.utils.errors import CompositionError, ValidationError

from tests.strategies import injections, permutation_pairs, permutations


def test_injection_rejects_repeated_images():
    with pytest.raises(ValidationError):
        Injection(2, 3, (1, 1))


def test_injection_rejects_out_of_range_image():
    with pytest.raises(ValidationError) as info:
        Injection(2, 3, (1, 4))
    assert info.value.data == {"field": "img[1]"}


def test_compose_is_self_after_other():
    a = Permutation(3, (2, 1, 3))
    b = Permutation(3, (1, 3, 2))
    assert a.compose(b).images == (2, 3, 1)


def test_compose_rejects_mismatched_degrees():
    with pytest.raises(CompositionError):
        Permutation.identity(2).compose(Permutation.identity(3))


@given(permutations())
def test_inverse_cancels(g):
    assert g.compose(g.inverse()).is_identity()
    assert g.inverse().compose(g).is_identity()


@given(permutations())
def test_adjacent_word_realizes_permutation(g):
    assert word_product(g.degree, reversed(g.adjacent_word())) == g


@given(permutation_pairs())
def test_inverse_reverses_products(pair):
    g, h = pair
    assert g.compose(h).inverse() == h.inverse().compose(g.inverse())


def test_cycle_count():
    assert Permutation.identity(3).cycle_count() == 3
    assert Permutation(3, (2, 3, 1)).cycle_count() == 1
    assert Permutation.transposition(3, 1).cycle_count() == 2
    assert Permutation.identity(0).cycle_count() == 0


def test_transposition_out_of_range():
    with pytest.raises(ValidationError):
        Permutation.transposition(2, 2)


def test_direct_sum_shifts_second_block():
    assert Permutation(2, (2, 1)).direct_sum(Permutation.identity(1)).images == (2, 1, 3)
    assert Permutation.identity(1).direct_sum(Permutation(2, (2, 1))).images == (1, 3, 2)


def test_block_shuffle():
    assert block_shuffle(1, 2).images == (3, 1, 2)
    assert block_shuffle(2, 0).is_identity()


def test_sorted_complement():
    assert sorted_complement(Injection(1, 3, (2,))) == (1, 3)
    assert sorted_complement(Injection.identity(2)) == ()


def test_enumeration_counts_and_order():
    assert len(enumerate_injections(2, 3)) == 6
    assert enumerate_injections(3, 2) == ()
    assert enumerate_injections(1, 3)[0].images == (1,)
    assert len(enumerate_permutations(4)) == 24
    assert enumerate_permutations(3)[0].is_identity()
    assert len(enumerate_bijections((1, 3), (2, 5))) == 2
    assert enumerate_bijections((1,), (2, 5)) == []


@given(injections())
def test_composing_with_identity(f):
    assert compose_injection(Injection.identity(f.codomain_size), f) == f
    assert compose_injection(f, Injection.identity(f.domain_size)) == f


def test_compose_injection_mismatch():
    with pytest.raises(CompositionError):
        compose_injection(Injection.identity(2), Injection.front(1, 3))


def test_partial_bijection_requires_permutation_of_targets():
    with pytest.raises(ValidationError):
        PartialBijection((1, 2), (3, 4), (3, 5))
    alpha = PartialBijection.from_mapping({2: 4, 1: 3})
    assert alpha.table == {1: 3, 2: 4}
    assert len(PartialBijection.empty()) == 0
