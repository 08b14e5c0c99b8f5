import pytest

from src.basecat import FinMap
from src.diagrams import JFunctor
from src.fincomb import Permutation
from src.generators import representable
from src.jcat import JObject, Window, permutation_pair


@pytest.fixture
def broken_functor() -> JFunctor:
    """Hom((0,0), -) on window (2,2) with the swap on (2,2) replaced by the identity."""
    window = Window(2, 2)
    F = representable(JObject(0, 0), window)
    edges = {f: F.on(f) for f in window.morphisms()}
    swap = permutation_pair(Permutation(2, (2, 1)), Permutation.identity(2))
    edges[swap] = FinMap.identity(F.at[JObject(2, 2)])
    return JFunctor(window, F.at, edges, name="broken")
