import pytest

from ed_config import EdConfig, get_config, set_config_file
from ed_errors import DimensionMismatch, ElemDivError
from ed_util import dumps_canonical, matrix_from_json, matrix_to_json
from report_schema import matrix_file_schema, probe_report_schema, validate_json_output
from ring_matrix import Matrix
from run_logger import RunLogger


def test_config_defaults_without_a_file():
    config = get_config()
    assert config.search_bound() == EdConfig.SEARCH_BOUND_DEFAULT
    assert config.max_exponent() == 65536


def test_config_file_overrides(tmp_path):
    path = tmp_path / "custom.conf"
    path.write_text("# comment\nSEARCH_BOUND = 16  # small\nNSIMPLE_MAX = 2\nBROKEN\nSTRICT = yes\n")
    config = set_config_file(str(path))
    assert config is get_config()
    assert config.search_bound() == 16
    assert config.nsimple_max() == 2
    assert not config.has_key("BROKEN")
    assert config.get_bool("STRICT") and not config.get_bool("ABSENT")
    assert config.get_float("SEARCH_BOUND") == 16.0
    assert config.get_int("STRICT", 5) == 5

    path.write_text("SEARCH_BOUND = 32\n")
    config.reload()
    assert config.get_all() == {"SEARCH_BOUND": "32"}


def test_missing_named_config_raises():
    with pytest.raises(FileNotFoundError):
        set_config_file("absent.conf")


def test_canonical_dumps_sort_keys():
    assert dumps_canonical({"b": 1, "a": [1, 2]}, indent=None) == '{"a": [1, 2], "b": 1}\n'
    assert dumps_canonical({"b": 1, "a": 2}) == dumps_canonical({"a": 2, "b": 1})


def test_matrix_file_dimensions_are_checked(zz):
    data = matrix_to_json(Matrix.from_ints(zz, [[1, 2], [3, 4]]))
    data["rows"] = 3
    with pytest.raises(DimensionMismatch):
        matrix_from_json(data)


def test_matrix_file_schema_rejects_unknown_ring():
    data = {"ring": {"kind": "Gaussian"}, "rows": 1, "cols": 1, "entries": [["1"]]}
    assert not validate_json_output(data, matrix_file_schema())
    with pytest.raises(ElemDivError):
        matrix_from_json(data)


def test_probe_schema_status_enum():
    report = {"tool": {"name": "elemdiv", "version": "1"}, "options": {}, "ring": {"kind": "Int"},
              "condition": "sr1", "inputs": ["2", "3"], "witness": {"t": "-1"}, "bound": 64,
              "status": "found"}
    assert validate_json_output(report, probe_report_schema())
    report["status"] = "maybe"
    assert not validate_json_output(report, probe_report_schema())


def test_run_log_counts(tmp_path):
    runs = RunLogger(str(tmp_path / "runs"))
    runs.log_run("reduce", "ok", {"verb": "reduce"})
    runs.log_run("probe", "failed", {"verb": "probe"}, {"error": "exhausted"})
    runs.log_run("probe", "ok")
    stats = runs.get_run_stats(days=1)
    assert stats["total_runs"] == 3
    assert stats["failed_runs"] == 1
    assert stats["commands"] == {"reduce": 1, "probe": 2}
    assert stats["statuses"] == {"ok": 2, "failed": 1}
