"""Hypothesis strategies for combinatorial and diagrammatic test data."""

from hypothesis import strategies as st

from src.fincomb import enumerate_injections, enumerate_permutations
from src.jcat import JObject, Window, enumerate_hom


def degrees(max_degree: int = 4):
    return st.integers(min_value=0, max_value=max_degree)


def permutations(max_degree: int = 4):
    return degrees(max_degree).flatmap(lambda n: st.sampled_from(enumerate_permutations(n)))


def permutation_pairs(max_degree: int = 4):
    """Two permutations of the same degree."""
    return degrees(max_degree).flatmap(
        lambda n: st.tuples(st.sampled_from(enumerate_permutations(n)), st.sampled_from(enumerate_permutations(n)))
    )


def injections(max_size: int = 4):
    return st.tuples(degrees(max_size), degrees(max_size)).filter(lambda mk: mk[0] <= mk[1]).flatmap(
        lambda mk: st.sampled_from(enumerate_injections(*mk))
    )


def objects(bound: int = 3):
    return st.builds(JObject, degrees(bound), degrees(bound))


def morphisms(window: Window):
    return st.sampled_from(list(window.morphisms()))


def composable_triples(window: Window):
    """(f, g, h) with h ∘ g ∘ f defined."""
    def extend(pair):
        f, g = pair
        continuations = [h for c in window.objects() for h in enumerate_hom(g.dst, c)]
        return st.tuples(st.just(f), st.just(g), st.sampled_from(continuations))

    return st.sampled_from(list(window.composable_pairs())).flatmap(extend)


def seeds():
    return st.integers(min_value=0, max_value=10_000)
