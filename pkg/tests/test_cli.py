import io
import json

import pytest

from hypergt.adaptive import HiddenEdgeOracle, adaptive_identify
from hypergt.cli.formats import (
    emit_coloring,
    emit_graph,
    emit_hypergraph,
    emit_outcomes,
    emit_tests,
    parse_coloring,
    parse_graph,
    parse_hypergraph,
    parse_tests,
    parse_transcript,
)
from hypergt.cli.main import EXIT_INVALID, EXIT_IO, EXIT_OK, EXIT_USAGE, main
from hypergt.construct import required_k
from hypergt.core import Hypergraph, TestFamily, outcomes, verify
from hypergt.generators import traditional
from hypergt.reduction import Coloring, Graph, reduce_3col_to_gt, verify_coloring


def run(capsys, *argv: str):
    code = main(list(argv))
    return code, capsys.readouterr().out


@pytest.fixture
def trad_file(tmp_path):
    path = tmp_path / "trad.hg"
    path.write_text(emit_hypergraph(traditional(10, 2)))
    return path


@pytest.fixture
def petersen_files(tmp_path, petersen, petersen_coloring):
    graph = tmp_path / "petersen.g"
    graph.write_text(emit_graph(petersen))
    coloring = tmp_path / "petersen.col"
    coloring.write_text(emit_coloring(petersen_coloring))
    return graph, coloring


def test_gen(capsys) -> None:
    code, out = run(capsys, "gen", "traditional", "--n", "5", "--d", "2")
    assert code == EXIT_OK
    assert parse_hypergraph(out) == traditional(5, 2)


def test_gen_random_uses_global_seed(capsys) -> None:
    _, first = run(capsys, "--seed", "4", "gen", "random", "--n", "9", "--d", "3", "--m", "6")
    _, second = run(capsys, "--seed", "4", "gen", "random", "--n", "9", "--d", "3", "--m", "6")
    assert first == second


def test_gen_too_large(capsys) -> None:
    code, _ = run(capsys, "gen", "traditional", "--n", "30", "--d", "10", "--max-edges", "100")
    assert code == EXIT_USAGE


def test_stats(capsys, trad_file) -> None:
    code, out = run(capsys, "stats", str(trad_file))
    assert code == EXIT_OK
    lines = out.splitlines()
    assert "edges: 45" in lines
    assert "d: 2" in lines
    assert "beta: 1" in lines
    assert "info_lower_bound: 6" in lines
    assert f"required_k: {required_k(45, 2, 1, 3.0)}" in lines
    assert any(line.startswith("traditional_reference: ") for line in lines)


def test_construct_then_verify(capsys, tmp_path, trad_file) -> None:
    tests_path = tmp_path / "trad.tests"
    code, _ = run(capsys, "--seed", "42", "--output", str(tests_path), "construct", str(trad_file))
    assert code == EXIT_OK
    first = tests_path.read_bytes()
    assert parse_tests(first.decode()).k == required_k(45, 2, 1, 3.0)

    run(capsys, "--seed", "42", "--output", str(tests_path), "construct", str(trad_file))
    assert tests_path.read_bytes() == first

    code, out = run(capsys, "verify", str(trad_file), str(tests_path))
    assert (code, out) == (EXIT_OK, "valid\n")


def test_construct_single_edge(capsys, tmp_path) -> None:
    path = tmp_path / "one.hg"
    path.write_text("3 1\n0 2\n")
    code, out = run(capsys, "construct", str(path))
    assert (code, out) == (EXIT_OK, "0 3\n")


def test_verify_invalid(capsys, tmp_path) -> None:
    hypergraph = tmp_path / "three.hg"
    hypergraph.write_text("3 3\n0\n1\n2\n")
    family = tmp_path / "bad.tests"
    family.write_text("1 3\n110\n")
    code, out = run(capsys, "verify", str(hypergraph), str(family))
    assert (code, out) == (EXIT_INVALID, "invalid 0 1\n")


def test_decode(capsys, tmp_path, trad_file) -> None:
    tests_path = tmp_path / "trad.tests"
    run(capsys, "--output", str(tests_path), "construct", str(trad_file))
    family = parse_tests(tests_path.read_text())
    y_path = tmp_path / "y.out"
    y_path.write_text(emit_outcomes(outcomes(family, traditional(10, 2).edges[7])))
    code, out = run(capsys, "decode", str(trad_file), str(tests_path), str(y_path))
    assert code == EXIT_OK
    assert out == "index: 7\nvertices: 0 8\n"


def test_decode_no_match(capsys, tmp_path) -> None:
    hypergraph = tmp_path / "three.hg"
    hypergraph.write_text("3 3\n0\n1\n2\n")
    family = tmp_path / "f.tests"
    family.write_text("2 3\n100\n010\n")
    y_path = tmp_path / "y.out"
    y_path.write_text("11\n")
    code, _ = run(capsys, "decode", str(hypergraph), str(family), str(y_path))
    assert code == EXIT_INVALID


def test_optimal(capsys, tmp_path) -> None:
    path = tmp_path / "three.hg"
    path.write_text("3 3\n0\n1\n2\n")
    code, out = run(capsys, "optimal", str(path))
    assert code == EXIT_OK
    family = parse_tests(out)
    assert family.k == 2
    assert verify(Hypergraph(3, ({0}, {1}, {2})), family).valid
    code, _ = run(capsys, "optimal", str(path), "--k-max", "1")
    assert code == EXIT_INVALID


def test_adaptive_with_hidden_edge(capsys, tmp_path) -> None:
    hypergraph = traditional(8, 2)
    path = tmp_path / "trad8.hg"
    path.write_text(emit_hypergraph(hypergraph))
    transcript_path = tmp_path / "run.csv"
    code, out = run(capsys, "adaptive", str(path), "--oracle-edge", "3", "--transcript", str(transcript_path))
    assert code == EXIT_OK
    assert out.splitlines()[0] == "edge: 3"
    transcript = parse_transcript(transcript_path.read_text())
    assert transcript.replays_against(hypergraph.edges[3])
    assert f"tests: {transcript.num_tests}" in out.splitlines()


def test_adaptive_interactive(capsys, monkeypatch, tmp_path) -> None:
    hypergraph = traditional(8, 2)
    path = tmp_path / "trad8.hg"
    path.write_text(emit_hypergraph(hypergraph))
    _, expected = adaptive_identify(hypergraph, HiddenEdgeOracle(hypergraph.edges[5]))
    answers = "".join(f"{int(step.outcome)}\n" for step in expected.steps)
    monkeypatch.setattr("sys.stdin", io.StringIO(answers))
    code, out = run(capsys, "adaptive", str(path), "--interactive")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert sum(line.startswith("TEST") for line in lines) == expected.num_tests
    assert "edge: 5" in lines


def test_adaptive_bad_edge_index(capsys, trad_file) -> None:
    code, _ = run(capsys, "adaptive", str(trad_file), "--oracle-edge", "45")
    assert code == EXIT_USAGE


def test_reduce(capsys, petersen_files) -> None:
    graph, _ = petersen_files
    code, out = run(capsys, "reduce", str(graph))
    assert code == EXIT_OK
    hypergraph = parse_hypergraph(out)
    assert (hypergraph.n, hypergraph.m) == (25, 45)


def test_reduce_needs_padding(capsys, tmp_path) -> None:
    graph = tmp_path / "path.g"
    graph.write_text("5 4\n0 1\n1 2\n2 3\n3 4\n")
    code, _ = run(capsys, "reduce", str(graph))
    assert code == EXIT_USAGE

    padded = tmp_path / "padded.g"
    code, out = run(capsys, "reduce", str(graph), "--pad", "--padded-graph", str(padded))
    assert code == EXIT_OK
    assert parse_graph(padded.read_text()).m == 7
    assert parse_hypergraph(out).m == 21


def test_coloring_round_trip_through_tests(capsys, tmp_path, petersen, petersen_files) -> None:
    graph, coloring = petersen_files
    tests_path = tmp_path / "petersen.tests"
    code, _ = run(capsys, "--output", str(tests_path), "tests-from-coloring", str(graph), str(coloring))
    assert code == EXIT_OK
    family = parse_tests(tests_path.read_text())
    assert family.k == 6

    code, out = run(capsys, "extract-coloring", str(graph), str(tests_path))
    assert code == EXIT_OK
    extracted = parse_coloring(out)
    assert verify_coloring(petersen, extracted)
    assert extracted.num_colors <= 4


def test_extract_support_too_large(capsys, tmp_path, petersen, petersen_files) -> None:
    graph, _ = petersen_files
    instance = reduce_3col_to_gt(petersen)
    nodes = frozenset(instance.node_vertex(i) for i in range(petersen.n))
    family = TestFamily(25, tuple(frozenset(t) | nodes for t in [(), (), (), (), (), ()]))
    tests_path = tmp_path / "wide.tests"
    tests_path.write_text(emit_tests(family))
    code, _ = run(capsys, "extract-coloring", str(graph), str(tests_path))
    assert code == EXIT_INVALID


def test_tests_from_two_coloring(capsys, tmp_path) -> None:
    graph = tmp_path / "path.g"
    graph.write_text("4 3\n0 1\n1 2\n2 3\n")
    coloring = tmp_path / "path.col"
    coloring.write_text(emit_coloring(Coloring.from_sequence([0, 1, 0, 1])))
    code, _ = run(capsys, "tests-from-coloring", str(graph), str(coloring))
    assert code == EXIT_USAGE
    code, out = run(capsys, "tests-from-coloring", str(graph), str(coloring), "--force-3chromatic")
    assert code == EXIT_OK
    assert parse_tests(out).k == 5


def test_bench(capsys, tmp_path) -> None:
    sweep = tmp_path / "sweep.json"
    sweep.write_text(json.dumps({"instances": [{"kind": "adaptive_lb", "d": 2}], "methods": ["construct"],
                                 "seeds": [0, 1]}))
    code, out = run(capsys, "bench", str(sweep))
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0].startswith("instance,method,seed")
    assert len(lines) == 3


def test_error_exit_codes(capsys, tmp_path) -> None:
    broken = tmp_path / "broken.hg"
    broken.write_text("2 2\n0\nzero\n")
    assert run(capsys, "stats", str(broken))[0] == EXIT_IO
    duplicate = tmp_path / "dup.hg"
    duplicate.write_text("2 2\n0\n0\n")
    assert run(capsys, "stats", str(duplicate))[0] == EXIT_IO
    assert run(capsys, "stats", str(tmp_path / "missing.hg"))[0] == EXIT_IO
    assert run(capsys)[0] == EXIT_USAGE
    assert run(capsys, "construct")[0] == EXIT_USAGE
    assert run(capsys, "--alpha", "-1", "construct", str(broken))[0] == EXIT_IO


def test_negative_alpha_is_a_usage_error(capsys, trad_file) -> None:
    assert run(capsys, "--alpha", "-1", "construct", str(trad_file))[0] == EXIT_USAGE
