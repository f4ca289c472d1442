import csv
import io
import json

import jsonschema
import pytest

from simplexnet import closed_form as cf
from simplexnet.generator import FamilyParams
from simplexnet.oracles import OracleBudget
from simplexnet.verify import (
    CHECKS,
    FAIL,
    NOT_APPLICABLE,
    PASS,
    REPORT_SCHEMA,
    SKIPPED,
    CellResult,
    CheckSpec,
    VerificationReport,
    report_from_json,
    report_render,
    run_cell,
    run_grid,
)


def test_checkspec_rejects_unknown_name():
    with pytest.raises(ValueError, match="unknown check"):
        CheckSpec("girth", FamilyParams(1, 0))


def test_small_grid_has_no_failures():
    report = run_grid([1, 2], [0, 1])
    assert len(report.cells) == 4 * len(CHECKS)
    assert report.ok, report_render(report).decode()


def test_default_grid_has_no_failures():
    report = run_grid()
    cells = {(c.spec.params.q, c.spec.params.g) for c in report.cells}
    assert cells == {(1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (3, 0), (3, 1)}
    assert report.count(FAIL) == 0


def test_small_edge_budget_skips_with_reason():
    cell = run_cell(CheckSpec("acyclic", FamilyParams(1, 1), OracleBudget(max_edges=4)))
    assert cell.status == SKIPPED
    assert cell.closed_form == 162
    assert cell.oracle is None
    assert "max_edges=4" in cell.reason


def test_construction_equivalence_at_2_1():
    cell = run_cell(CheckSpec("construction-equivalence", FamilyParams(2, 1)))
    assert cell.status == PASS


def test_odd_q_matching_statuses():
    odd_n = run_cell(CheckSpec("perfect-matchings", FamilyParams(1, 0)))
    assert (odd_n.status, odd_n.closed_form, odd_n.oracle) == (PASS, 0, 0)
    even_n = run_cell(CheckSpec("perfect-matchings", FamilyParams(1, 1)))
    assert even_n.status == NOT_APPLICABLE
    assert run_cell(CheckSpec("matching-profile", FamilyParams(3, 0))).status == NOT_APPLICABLE


def test_corrupted_formula_is_reported_as_failure(monkeypatch):
    monkeypatch.setattr(cf, "independence_number", lambda p: 4)
    cell = run_cell(CheckSpec("independence", FamilyParams(1, 1)))
    assert cell.status == FAIL
    assert (cell.closed_form, cell.oracle) == (4, 3)


def test_results_ordered_by_q_g_check_and_independent_of_workers():
    serial = run_grid([1, 2], [0, 1], ["spanning-trees", "independence"], timed=False)
    keys = [(c.spec.params.q, c.spec.params.g, c.spec.check) for c in serial.cells]
    assert keys == sorted(keys)
    parallel = run_grid([1, 2], [0, 1], ["spanning-trees", "independence"], workers=2, timed=False)
    assert report_render(parallel, "json") == report_render(serial, "json")


def test_empty_ranges_rejected():
    with pytest.raises(ValueError):
        run_grid([], [0])


def test_csv_of_empty_report_is_header_only():
    assert report_render(VerificationReport([]), "csv") == b"q,g,check,status,closed_form,oracle,ms,reason\n"


def test_csv_one_row_per_cell():
    cell = CellResult(CheckSpec("independence", FamilyParams(1, 1)), PASS, 3, 3)
    rows = list(csv.DictReader(io.StringIO(report_render(VerificationReport([cell]), "csv").decode())))
    assert len(rows) == 1 and rows[0]["status"] == "pass"


def test_json_matches_schema_and_round_trips():
    report = run_grid([1, 3], [0, 1], timed=False)
    blob = report_render(report, "json")
    jsonschema.validate(json.loads(blob), REPORT_SCHEMA)
    assert report_render(report_from_json(blob), "json") == blob


def test_big_integers_serialized_as_decimal_strings():
    report = run_grid([3], [1], ["spanning-trees"], timed=False)
    cell = json.loads(report_render(report, "json"))["cells"][0]
    assert cell["closed_form"] == str(cf.spanning_trees(FamilyParams(3, 1)))


def test_rendering_is_deterministic():
    for fmt in ("text", "json", "csv"):
        a = report_render(run_grid([1, 2], [0, 1], timed=False), fmt)
        b = report_render(run_grid([1, 2], [0, 1], timed=False), fmt)
        assert a == b


def test_unknown_render_format():
    with pytest.raises(ValueError):
        report_render(VerificationReport([]), "xml")


def test_size_guard_turns_into_skipped_cell(monkeypatch):
    run_cell(CheckSpec("independence", FamilyParams(2, 1)))
    monkeypatch.setenv("SIMPLEX_MAX_NODES", "10")
    cell = run_cell(CheckSpec("independence", FamilyParams(2, 1)))
    assert cell.status == SKIPPED and cell.closed_form == 6
