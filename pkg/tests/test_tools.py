import asyncio
import logging

import pytest

from src.diagrams import symseq_to_json, tdatum_to_json
from src.generators import invariance_counterexample, random_symseq
from src.jcat import standard_map
from src.tools.arguments import carrier_argument, load_document, window_argument
from src.tools.category import CategoryTools
from src.tools.diagrams import DiagramTools
from src.tools.monoidal import MonoidalTools
from src.tools.spectra import SpectraTools
from src.tools.topology import TopologyTools
from src.utils.errors import InvalidDatumError, ValidationError


def run(coroutine):
    return asyncio.run(coroutine)


def test_count_and_enumerate():
    tools = CategoryTools()
    assert run(tools.count_hom("1,1", [2, 2]))["count"] == 4
    listed = run(tools.enumerate_hom("0,0", "2,2"))
    assert listed["count"] == 2
    assert [f["key"] for f in listed["morphisms"]] == ["0,0>2,2://1.2", "0,0>2,2://2.1"]


def test_enumeration_is_capped():
    with pytest.raises(ValidationError):
        run(CategoryTools().enumerate_hom("0,0", "6,6"))
    assert run(CategoryTools().count_hom("0,0", "6,6"))["count"] == 720


def test_compose_standard_maps():
    result = run(CategoryTools().compose(standard_map(1, 1, 1).key, standard_map(0, 0, 1).key))
    assert result["key"] == standard_map(0, 0, 2).key


def test_decompose_key():
    result = run(CategoryTools().decompose("1,0>2,1:2//1"))
    assert (result["a"], result["b"], result["p"]) == ([2, 1], [1], 1)
    assert result["recomposes"]


def test_bad_object_argument():
    with pytest.raises(ValidationError) as info:
        run(CategoryTools().count_hom("1;1", "2,2"))
    assert info.value.data == {"field": "src"}


def test_check_category_bound():
    with pytest.raises(ValidationError):
        run(CategoryTools().check_category("1,1", 9))
    assert run(CategoryTools().check_category("1,1", 2))["passed"]


def test_window_argument_respects_the_limit():
    with pytest.raises(ValidationError):
        window_argument("9,9")
    assert window_argument("1,2").to_json() == [1, 2]


def test_carrier_argument():
    assert carrier_argument("a,b").to_json() == ["a", "b"]
    with pytest.raises(ValidationError):
        carrier_argument(["a", "a"])


def test_unknown_schema():
    with pytest.raises(ValidationError) as info:
        load_document({"schema": "nothing.v1"})
    assert info.value.data == {"field": "document.schema"}


def test_counterexample_is_reported_and_refused():
    tools = DiagramTools()
    document = tdatum_to_json(invariance_counterexample())
    report = run(tools.check_tdatum(document))
    assert not report["passed"]
    assert report["violations"][0]["g"] == [2, 1]
    with pytest.raises(InvalidDatumError):
        run(tools.convert(document, "functor"))


def test_random_datum_converts_and_round_trips():
    tools = DiagramTools()
    datum = run(tools.random_tdatum(7, "2,2"))
    assert run(tools.random_tdatum(7, "2,2")) == datum
    functor = run(tools.convert(datum, "functor"))
    assert functor["schema"] == "jfunctor.v1"
    assert run(tools.check_functor(functor))["passed"]
    assert run(tools.convert(functor, "tdatum")) == datum
    assert run(tools.check_roundtrip(functor))["passed"]


def test_random_datum_rejects_non_integer_seed():
    with pytest.raises(ValidationError):
        run(DiagramTools().random_tdatum("7", "1,1"))


def test_convolve_documents():
    datum = run(DiagramTools().random_tdatum(3, "1,1"))
    result = run(MonoidalTools().convolve(datum, datum, "1,1", classes=True))
    assert result["at"] == [1, 1]
    assert result["size"] == len(result["classes"])


def test_monoidal_checks_without_documents():
    result = run(MonoidalTools().check_monoidal(window="1,1"))
    assert result["passed"]
    assert [r["check"] for r in result["reports"]] == ["monoidal_laws", "sym_t", "unit_sym_t_iso"]


def test_monoidal_checks_with_one_document():
    datum = run(DiagramTools().random_tdatum(5, "1,1"))
    assert run(MonoidalTools().check_monoidal(datum))["passed"]


def test_prolong_symseq_reports_orbit_count():
    result = run(SpectraTools().prolong(symseq_to_json(random_symseq(4, 3)), "a,b"))
    assert result["size"] == result["burnside"] == len(result["classes"])


def test_prolong_datum_gives_a_spectrum():
    datum = run(DiagramTools().random_tdatum(6, "2,2"))
    spectrum = run(SpectraTools().prolong(datum, ["a", "b"]))
    assert spectrum["schema"] == "spectrum.v1"
    assert run(SpectraTools().check_spectrum(spectrum, 2))["passed"]
    with pytest.raises(ValidationError):
        run(SpectraTools().check_spectrum(spectrum, 0))


def test_pi0_tool():
    result = run(TopologyTools().pi0("2,2", dot=True))
    assert result["components"] == 5
    assert result["members"]["0"] == [[0, 0], [1, 1], [2, 2]]
    assert result["dot"].startswith("graph pi0")


def test_decompose_rejects_short_keys():
    with pytest.raises(ValidationError) as info:
        run(CategoryTools().decompose("1,1>2,2:1/2"))
    assert info.value.data == {"field": "morphism"}


@pytest.mark.parametrize(
    "document, field",
    [
        ({"schema": "tdatum.v1", "window": [7, 7], "carriers": {}, "actions": {}, "shifts": {}}, "document.window"),
        ({"schema": "jfunctor.v1", "window": [0, 9], "at": {}, "edges": {}}, "document.window"),
        ({"schema": "symseq.v1", "levels": [[] for _ in range(9)]}, "document.levels"),
    ],
)
def test_documents_beyond_the_window_limit(document, field):
    with pytest.raises(ValidationError) as info:
        load_document(document)
    assert info.value.data == {"field": field}


def test_oversized_spectrum_is_refused():
    document = {"schema": "spectrum.v1", "K": ["a"], "levels": [[] for _ in range(9)], "actions": [], "bondings": []}
    with pytest.raises(ValidationError) as info:
        run(SpectraTools().check_spectrum(document, 2))
    assert info.value.data == {"field": "document.levels"}


def test_random_datum_logs_its_seed(caplog):
    caplog.set_level(logging.INFO)
    run(DiagramTools().random_tdatum(11, "1,1"))
    assert "seed 11" in caplog.text
