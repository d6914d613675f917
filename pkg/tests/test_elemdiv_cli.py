import pytest

from ed_util import matrix_to_json, read_json, write_json
from elemdiv import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main
from ring_matrix import Matrix

ZMOD12 = '{"kind": "IntMod", "params": {"n": 12}}'
INT = '{"kind": "Int"}'


@pytest.fixture
def int_matrix(zz):
    return write_json("a.json", matrix_to_json(Matrix.from_ints(zz, [[2, 4], [6, 8]])))


def test_reduce_writes_a_verified_report(int_matrix):
    assert main(["-o", "r.json", "reduce", "--matrix", int_matrix]) == EXIT_OK
    report = read_json("r.json")
    assert report["D"] == [["2", "0"], ["0", "4"]]
    assert report["verified"] is True
    assert report["chain"] == [True]


def test_reduce_output_is_reproducible(int_matrix):
    assert main(["-o", "r1.json", "reduce", "--matrix", int_matrix]) == EXIT_OK
    assert main(["-o", "r2.json", "reduce", "--matrix", int_matrix]) == EXIT_OK
    with open("r1.json", "rb") as f1, open("r2.json", "rb") as f2:
        assert f1.read() == f2.read()


def test_verify_accepts_report_and_rejects_tampering(int_matrix):
    main(["-o", "r.json", "reduce", "--matrix", int_matrix])
    assert main(["verify", "--report", "r.json"]) == EXIT_OK

    report = read_json("r.json")
    report["D"][1][1] = "8"
    write_json("forged.json", report)
    assert main(["verify", "--report", "forged.json", "--matrix", int_matrix]) == EXIT_FAILED


def test_hermite_verb(zz):
    path = write_json("row.json", matrix_to_json(Matrix.from_ints(zz, [[4, 6, 10]])))
    assert main(["-o", "h.json", "hermite", "--matrix", path]) == EXIT_OK
    report = read_json("h.json")
    assert report["form"] == "hermite"
    assert report["D"] == [["2", "0", "0"]]


def test_reduce_rejects_ring_mismatch(int_matrix):
    assert main(["reduce", "--matrix", int_matrix, "--ring", ZMOD12]) == EXIT_USAGE


def test_probe_simple_range_over_zmod():
    assert main(["-o", "p.json", "probe", "--ring", ZMOD12, "--kind", "simple2",
                 "--elements", "2,3,4"]) == EXIT_OK
    report = read_json("p.json")
    assert report["status"] == "found"
    assert (report["witness"]["p"], report["witness"]["q"]) == ("1", "1")
    assert main(["verify", "--report", "p.json"]) == EXIT_OK


def test_exhausted_probe_fails_with_report():
    assert main(["-o", "p.json", "probe", "--ring", INT, "--kind", "sr1",
                 "--elements", "5,7", "--bound", "10"]) == EXIT_FAILED
    report = read_json("p.json")
    assert report["status"] == "exhausted"
    assert report["witness"] is None


def test_construction_hypothesis_failure_is_reported():
    assert main(["-o", "c.json", "probe", "--ring", INT, "--kind", "construction",
                 "--elements", "5,7,1", "--bound", "20"]) == EXIT_FAILED
    assert read_json("c.json")["status"] == "hypothesis_failed"


@pytest.mark.parametrize("kind, elements", [
    ("from-reduction", "2,4,6"),
    ("simple2", "2,4,6"),
    ("sr1", "2,4"),
])
def test_failed_hypotheses_are_failures_not_usage_errors(kind, elements):
    assert main(["probe", "--ring", INT, "--kind", kind, "--elements", elements]) == EXIT_FAILED


def test_output_option_after_the_verb(int_matrix):
    assert main(["reduce", "--matrix", int_matrix, "-o", "out.json"]) == EXIT_OK
    assert read_json("out.json")["D"] == [["2", "0"], ["0", "4"]]
    assert main(["verify", "--report", "out.json", "--output", "v.json"]) == EXIT_OK
    assert main(["-o", "early.json", "stats", "--table"]) == EXIT_OK
    assert read_json("early.json")["total_runs"] == 2


def test_komarnytsky_counterexample_is_success():
    assert main(["-o", "k.json", "probe", "--ring", '{"kind": "QuatPoly"}',
                 "--kind", "komarnytsky"]) == EXIT_OK
    assert read_json("k.json")["witness"]["factor"] == "x + i"


@pytest.mark.parametrize("argv", [
    ["probe", "--ring", INT, "--kind", "sr1", "--elements", "2,3", "--bound", "0"],
    ["probe", "--ring", INT, "--kind", "sr1", "--elements", "2,,3"],
    ["probe", "--ring", INT, "--kind", "sr1", "--elements", "2,3,4"],
    ["--config", "missing.conf", "stats"],
    ["verify", "--report", "nowhere.json"],
])
def test_usage_errors(argv):
    assert main(argv) == EXIT_USAGE


def test_bad_ring_spec_is_an_argparse_error():
    with pytest.raises(SystemExit) as info:
        main(["probe", "--ring", '{"kind": "IntMod"}', "--kind", "sr1", "--elements", "1,2"])
    assert info.value.code == 2


def test_oracle_verbs(int_matrix):
    assert main(["-o", "m.json", "oracle", "--matrix", int_matrix]) == EXIT_OK
    assert read_json("m.json")["factors"] == ["2", "4"]
    assert main(["-o", "o.json", "oracle", "--ring", ZMOD12, "--kind", "sr1",
                 "--elements", "3,4"]) == EXIT_OK
    assert read_json("o.json")["witness"] == {"t": "1"}


def test_stats_counts_logged_runs(int_matrix):
    main(["-o", "r.json", "reduce", "--matrix", int_matrix])
    main(["-o", "p.json", "probe", "--ring", INT, "--kind", "sr1", "--elements", "5,7", "--bound", "10"])
    assert main(["-o", "s.json", "stats"]) == EXIT_OK
    stats = read_json("s.json")
    assert stats["commands"] == {"reduce": 1, "probe": 1}
    assert stats["failed_runs"] == 1
