"""
File Formats

Text formats for every value the CLI reads or writes. `#` starts a comment
in the line-based formats; blank lines are ignored.

  .hg        `n m`, then m lines of sorted vertex ids, one edge per line
  .tests     `k n`, then k lines of exactly n characters from {0,1}
  .out       one line of k characters from {0,1}
  .g         `n m`, then m lines `u v`
  .col       lines `vertex color`
  transcript CSV with columns step,phase,epsilon,test_bits,outcome
"""
import csv
import io
import re
from fractions import Fraction
from typing import Iterator, List, Tuple

from ..adaptive import FALLBACK, LOOP, Round, Transcript, TranscriptStep
from ..adaptive.identify import INITIAL_EPSILON
from ..core import Hypergraph, OutcomeVector, TestFamily
from ..errors import InvariantViolation, ParseError
from ..reduction import Coloring, Graph

TRANSCRIPT_COLUMNS = ["step", "phase", "epsilon", "test_bits", "outcome"]

_TOKEN = re.compile(r"\S+")


def _content_lines(text: str) -> Iterator[Tuple[int, str]]:
    """(1-based line number, line without comment) for every non-blank line."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            yield number, line


def _ints(number: int, line: str) -> List[Tuple[int, int]]:
    """(value, 1-based column) for each token; ParseError on a non-integer token."""
    values = []
    for match in _TOKEN.finditer(line):
        token = match.group()
        if not re.fullmatch(r"-?\d+", token):
            raise ParseError(number, f"expected an integer, got {token!r}", match.start() + 1)
        values.append((int(token), match.start() + 1))
    return values


def _header(lines: Iterator[Tuple[int, str]], names: str) -> Tuple[int, int]:
    try:
        number, line = next(lines)
    except StopIteration:
        raise ParseError(1, f"missing header `{names}`")
    values = _ints(number, line)
    if len(values) != 2:
        raise ParseError(number, f"header must be `{names}`")
    for value, column in values:
        if value < 0:
            raise ParseError(number, "header values must be non-negative", column)
    return values[0][0], values[1][0]


def _no_trailing(lines: Iterator[Tuple[int, str]], what: str):
    for number, _ in lines:
        raise ParseError(number, f"unexpected line after the declared {what}")


def _bit_row(number: int, line: str, width: int) -> List[bool]:
    row = line.strip()
    for column, char in enumerate(row, start=1):
        if char not in "01":
            raise ParseError(number, f"invalid character {char!r}, expected 0 or 1", column)
    if width >= 0 and len(row) != width:
        raise ParseError(number, f"expected {width} characters, got {len(row)}")
    return [char == "1" for char in row]


def emit_hypergraph(hypergraph: Hypergraph) -> str:
    lines = [f"{hypergraph.n} {hypergraph.m}"]
    lines += [" ".join(str(v) for v in sorted(edge)) for edge in hypergraph.edges]
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    lines = _content_lines(text)
    n, m = _header(lines, "n m")
    edges = []
    seen = {}
    last_number = 1
    for _ in range(m):
        try:
            number, line = next(lines)
        except StopIteration:
            raise ParseError(last_number, f"expected {m} edges, found {len(edges)}")
        last_number = number
        values = _ints(number, line)
        previous = None
        for value, column in values:
            if not 0 <= value < n:
                raise InvariantViolation(f"line {number}, column {column}: vertex {value} outside 0..{n - 1}")
            if previous is not None and value <= previous:
                raise ParseError(number, "vertex ids must be strictly increasing", column)
            previous = value
        edge = frozenset(value for value, _ in values)
        if edge in seen:
            raise InvariantViolation(f"line {number}: duplicate of the edge on line {seen[edge]}")
        seen[edge] = number
        edges.append(edge)
    _no_trailing(lines, "edges")
    return Hypergraph(n, tuple(edges))


def emit_tests(family: TestFamily) -> str:
    lines = [f"{family.k} {family.n}"]
    lines += ["".join("1" if bit else "0" for bit in row) for row in family.matrix]
    return "\n".join(lines) + "\n"


def parse_tests(text: str) -> TestFamily:
    lines = _content_lines(text)
    k, n = _header(lines, "k n")
    rows = []
    last_number = 1
    for _ in range(k):
        try:
            number, line = next(lines)
        except StopIteration:
            raise ParseError(last_number, f"expected {k} test rows, found {len(rows)}")
        last_number = number
        row = _bit_row(number, line, n)
        rows.append(frozenset(j for j, bit in enumerate(row) if bit))
    _no_trailing(lines, "test rows")
    return TestFamily(n, tuple(rows))


def emit_outcomes(y: OutcomeVector) -> str:
    return "".join("1" if bit else "0" for bit in y.bits) + "\n"


def parse_outcomes(text: str) -> OutcomeVector:
    lines = list(_content_lines(text))
    if not lines:
        return OutcomeVector(())
    if len(lines) > 1:
        raise ParseError(lines[1][0], "an outcome vector is a single line of bits")
    number, line = lines[0]
    return OutcomeVector(tuple(_bit_row(number, line, -1)))


def emit_graph(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.m}"] + [f"{u} {v}" for u, v in graph.edges]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    n, m = _header(lines, "n m")
    edges = []
    last_number = 1
    for _ in range(m):
        try:
            number, line = next(lines)
        except StopIteration:
            raise ParseError(last_number, f"expected {m} edges, found {len(edges)}")
        last_number = number
        values = _ints(number, line)
        if len(values) != 2:
            raise ParseError(number, "an edge line must be `u v`")
        edges.append((values[0][0], values[1][0]))
    _no_trailing(lines, "edges")
    return Graph(n, tuple(edges))


def emit_coloring(coloring: Coloring) -> str:
    return "".join(f"{v} {c}\n" for v, c in sorted(coloring.colors.items()))


def parse_coloring(text: str) -> Coloring:
    colors = {}
    for number, line in _content_lines(text):
        values = _ints(number, line)
        if len(values) != 2:
            raise ParseError(number, "a coloring line must be `vertex color`")
        (vertex, column), (color, color_column) = values
        if vertex < 0:
            raise ParseError(number, "vertex ids must be non-negative", column)
        if color < 0:
            raise ParseError(number, "colors must be non-negative", color_column)
        if vertex in colors:
            raise ParseError(number, f"vertex {vertex} is colored twice", column)
        colors[vertex] = color
    return Coloring(colors)


def _format_epsilon(epsilon: Fraction) -> str:
    # Dyadic fractions print exactly as decimals.
    return repr(float(epsilon))


def emit_transcript(transcript: Transcript, n: int) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(TRANSCRIPT_COLUMNS)
    for index, step in enumerate(transcript.steps, start=1):
        bits = "".join("1" if v in step.test else "0" for v in range(n))
        writer.writerow([index, step.phase, _format_epsilon(step.epsilon), bits, int(step.outcome)])
    return buffer.getvalue()


def _rebuild_rounds(steps: List[TranscriptStep]) -> List[Round]:
    """Halving schedule implied by the steps; rounds without tests are restored."""
    rounds = [Round(INITIAL_EPSILON)]
    for step in steps:
        while rounds[-1].epsilon > step.epsilon:
            rounds.append(Round(rounds[-1].epsilon / 2))
        if step.phase == LOOP:
            rounds[-1].sub_rounds += 1
    return rounds


def parse_transcript(text: str) -> Transcript:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != TRANSCRIPT_COLUMNS:
        raise ParseError(1, f"expected header {','.join(TRANSCRIPT_COLUMNS)}")
    steps = []
    for number, record in enumerate(reader, start=2):
        if not record:
            continue
        if len(record) != len(TRANSCRIPT_COLUMNS):
            raise ParseError(number, f"expected {len(TRANSCRIPT_COLUMNS)} fields, got {len(record)}")
        step, phase, epsilon, bits, answer = record
        if step != str(len(steps) + 1):
            raise ParseError(number, f"expected step {len(steps) + 1}, got {step!r}", 1)
        if phase not in (LOOP, FALLBACK):
            raise ParseError(number, f"phase must be {LOOP} or {FALLBACK}, got {phase!r}")
        try:
            epsilon_value = Fraction(epsilon)
        except ValueError:
            raise ParseError(number, f"invalid epsilon {epsilon!r}")
        if answer not in ("0", "1"):
            raise ParseError(number, f"outcome must be 0 or 1, got {answer!r}")
        row = _bit_row(number, bits, -1)
        test = frozenset(j for j, bit in enumerate(row) if bit)
        steps.append(TranscriptStep(test, answer == "1", phase, epsilon_value))
    return Transcript(steps, _rebuild_rounds(steps), None)
