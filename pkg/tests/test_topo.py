import pytest

from src.jcat import JObject, Window
from src.topo import adjacent, component_invariant_check, component_members, components, components_dot


def test_window_two_two_has_five_components():
    members = component_members(Window(2, 2))
    assert sorted(members) == [-2, -1, 0, 1, 2]
    assert members[0] == [JObject(0, 0), JObject(1, 1), JObject(2, 2)]
    assert members[2] == [JObject(0, 2)]


def test_trivial_window():
    assert components(Window(0, 0)) == {JObject(0, 0): 0}


def test_adjacency_needs_a_morphism():
    assert adjacent(JObject(0, 1), JObject(1, 2))
    assert not adjacent(JObject(0, 1), JObject(1, 1))
    assert not adjacent(JObject(1, 1), JObject(1, 1))


@pytest.mark.parametrize("M, N", [(0, 3), (2, 2), (3, 1), (4, 4)])
def test_difference_is_a_complete_invariant(M, N):
    report = component_invariant_check(Window(M, N))
    assert report.passed
    assert report.details["components"] == M + N + 1


def test_dot_output():
    dot = components_dot(Window(1, 1))
    assert dot.startswith("graph pi0 {")
    assert '"0,0" -- "1,1";' in dot
    assert '"0,1" -- "1,0";' not in dot
