from src.config import Config
from src.jcat import Window
from src.suite import (
    check_invariance_exactness,
    check_pi0,
    check_roundtrips,
    check_unit_sizes,
    data_window,
    point_functors,
    run_suite,
)

SMALL = Config(RANDOM_DATA_COUNT=2, RANDOM_PAIR_COUNT=2)

SECTIONS = [
    "category_axioms",
    "hom_counts",
    "decomposition",
    "monoidal_laws",
    "roundtrips",
    "datum_maps",
    "evaluation",
    "invariance_exactness",
    "unit_sizes",
    "sym_t",
    "unit_sym_t_iso",
    "day_laws",
    "monoidal_equivalence",
    "prolongation",
    "pi0_windows",
]


def test_data_window_is_capped():
    assert data_window(Window(2, 2), SMALL) == Window(3, 3)
    assert data_window(Window(4, 3), SMALL) == Window(4, 4)


def test_counterexample_and_mutations():
    report = check_invariance_exactness(7)
    assert report.passed
    assert report.checked > 2


def test_unit_sizes_and_components():
    assert check_unit_sizes(3).passed
    assert check_pi0(3).passed


def test_roundtrips_on_seeded_data():
    assert check_roundtrips(Window(2, 2), 20100101, 3).passed


def test_point_functors_are_functors():
    assert all(F.report.passed for F in point_functors(Window(2, 2)))


def test_small_suite_passes():
    suite = run_suite(Window(1, 1), 11, SMALL)
    assert [report.check for report in suite.reports] == SECTIONS
    assert suite.passed, [report.witness for report in suite.reports if not report.passed]
    assert all("seconds" in report.details for report in suite.reports)


def test_suite_report_json():
    suite = run_suite(Window(1, 1), 3, Config(RANDOM_DATA_COUNT=1, RANDOM_PAIR_COUNT=1))
    data = suite.dict()
    assert data["seed"] == 3
    assert data["window"] == [1, 1]
    assert '"passed": true' in suite.to_json()
