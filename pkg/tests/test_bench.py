import csv
import io
import json

import pytest

from hypergt.cli.bench import BenchSettings, RunReport, load_sweep, reports_to_csv, run_bench
from hypergt.cli.formats import emit_hypergraph
from hypergt.errors import ParseError
from hypergt.generators import traditional


def _rows(text: str):
    return list(csv.DictReader(io.StringIO(text)))


def test_empty_sweep_is_header_only() -> None:
    reports = run_bench(load_sweep("{}"))
    assert reports == []
    assert reports_to_csv(reports) == ",".join(RunReport.columns(timing=False)) + "\n"


def test_traditional_sweep() -> None:
    sweep = load_sweep(json.dumps({
        "instances": [{"kind": "traditional", "n": n, "d": 2} for n in (8, 16, 32)],
        "methods": ["construct", "adaptive"],
        "seeds": [0],
    }))
    rows = _rows(reports_to_csv(run_bench(sweep)))
    assert len(rows) == 6
    assert [(row["instance"], row["method"]) for row in rows[:2]] == [
        ("traditional(n=8,d=2)", "construct"), ("traditional(n=8,d=2)", "adaptive"),
    ]
    for row in rows:
        assert row["status"] == "ok"
        assert row["beta"] == "1"
        assert int(row["k"]) >= int(row["info_lower_bound"])
        assert row["traditional_reference"] != ""
        if row["method"] == "construct":
            assert row["k"] == row["required_k"]
        else:
            assert int(row["adaptive_worst"]) == int(row["k"])
            assert float(row["adaptive_mean"]) <= int(row["adaptive_worst"])


def test_bench_is_deterministic_across_workers() -> None:
    text = json.dumps({
        "instances": [{"kind": "traditional", "n": 4, "d": 2}, {"kind": "adaptive_lb", "d": 3}],
        "methods": ["construct", "adaptive", "optimal"],
        "seeds": [0, 1],
    })
    single = reports_to_csv(run_bench(load_sweep(text), num_workers=1))
    again = reports_to_csv(run_bench(load_sweep(text), num_workers=1))
    pooled = reports_to_csv(run_bench(load_sweep(text), num_workers=2))
    assert single == again == pooled
    rows = _rows(single)
    assert len(rows) == 12
    optimal = [row for row in rows if row["method"] == "optimal"]
    assert all(row["k"] == "3" for row in optimal[:2])


def test_timing_column_only_on_request() -> None:
    reports = run_bench(load_sweep(json.dumps({"instances": [{"kind": "adaptive_lb", "d": 2}],
                                                "methods": ["construct"]})))
    assert "wall_time" not in reports_to_csv(reports).splitlines()[0]
    header = reports_to_csv(reports, timing=True).splitlines()[0]
    assert header.split(",")[-1] == "wall_time"


def test_file_instances(tmp_path) -> None:
    (tmp_path / "x.hg").write_text(emit_hypergraph(traditional(5, 2)))
    sweep = load_sweep(json.dumps({"instances": [{"file": "x.hg"}], "methods": ["construct"], "seeds": [3]}),
                       base_dir=tmp_path)
    rows = _rows(reports_to_csv(run_bench(sweep, BenchSettings(alpha=2.0))))
    assert len(rows) == 1
    assert rows[0]["instance"] == "x.hg"
    assert rows[0]["seed"] == "3"
    assert rows[0]["edges"] == "10"
    assert rows[0]["traditional_reference"] == ""


def test_failures_become_status() -> None:
    sweep = load_sweep(json.dumps({"instances": [{"kind": "traditional", "n": 20, "d": 2}],
                                   "methods": ["optimal"]}))
    rows = _rows(reports_to_csv(run_bench(sweep)))
    assert rows[0]["status"] == "TooLargeError"
    assert rows[0]["k"] == ""


def test_bad_sweeps() -> None:
    with pytest.raises(ParseError):
        load_sweep("{not json")
    with pytest.raises(ValueError):
        load_sweep(json.dumps({"methods": ["guess"]}))
    with pytest.raises(ValueError):
        load_sweep(json.dumps({"instances": [{"kind": "traditional", "size": 3}]}))
    with pytest.raises(ValueError):
        load_sweep("[]")
