"""
Contamination Oracles

An oracle answers one pooled test at a time. HiddenEdgeOracle wraps a known
contaminated set; StreamOracle talks a line protocol to an external party:
it writes `TEST v1 v2 ...` and reads back `0` or `1`.
"""
import logging
from typing import AbstractSet, Iterable, Protocol, TextIO

from ..core import outcome
from ..errors import ParseError

logger = logging.getLogger(__name__)


class ContaminationOracle(Protocol):
    def answer(self, test: AbstractSet[int]) -> bool:
        ...


class HiddenEdgeOracle:
    """Answers every test against a fixed contaminated set."""

    def __init__(self, contaminated: Iterable[int]):
        self.contaminated = frozenset(contaminated)
        self.queries = 0

    def answer(self, test: AbstractSet[int]) -> bool:
        self.queries += 1
        return outcome(test, self.contaminated)


class StreamOracle:
    """Interactive oracle over a pair of text streams (stdin/stdout by default in the CLI)."""

    def __init__(self, instream: TextIO, outstream: TextIO):
        self.instream = instream
        self.outstream = outstream
        self.queries = 0

    def answer(self, test: AbstractSet[int]) -> bool:
        self.queries += 1
        vertices = " ".join(str(v) for v in sorted(test))
        self.outstream.write(f"TEST {vertices}".rstrip() + "\n")
        self.outstream.flush()
        reply = self.instream.readline()
        if not reply:
            raise ParseError(self.queries, "oracle closed the stream before answering")
        reply = reply.strip()
        if reply not in ("0", "1"):
            raise ParseError(self.queries, f"expected '0' or '1', got {reply!r}")
        logger.debug(f"Oracle answered {reply} to test {self.queries}")
        return reply == "1"
