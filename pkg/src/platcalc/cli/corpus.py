"""Batch runs over a directory of plat records."""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from functools import partial
from pathlib import Path

from platcalc.cli.errors import EmptyCorpusError, InputFileError
from platcalc.invariants import CrossingBudgetExceededError, unknot_evidence
from platcalc.plat import MoveKind, component_count, read_plat
from platcalc.simplifier import SearchConfig, simplify

logger = logging.getLogger(__name__)

CORPUS_COLUMNS: tuple[str, ...] = (
    "record",
    "strands",
    "crossings",
    "components",
    "unknot",
    "outcome",
    "steps",
    "flips",
)


@dataclass(frozen=True)
class CorpusRow:
    """Summary of one corpus record.

    Args:
        record: File name of the record.
        strands: Strand count 2n.
        crossings: Length of the input word.
        components: Components of the closure.
        unknot: Unknot evidence, ``None`` when the bracket budget was exceeded.
        outcome: Simplifier outcome.
        steps: Moves in the simplification trace.
        flips: Flip and microflip moves among them.
    """

    record: str
    strands: int
    crossings: int
    components: int
    unknot: bool | None
    outcome: str
    steps: int
    flips: int

    def cells(self) -> tuple[str, ...]:
        unknot = "skipped" if self.unknot is None else ("yes" if self.unknot else "no")
        return (
            self.record,
            str(self.strands),
            str(self.crossings),
            str(self.components),
            unknot,
            self.outcome,
            str(self.steps),
            str(self.flips),
        )


def corpus_records(directory: Path | str) -> list[Path]:
    """The ``*.plat`` files of a directory in name order.

    Raises:
        InputFileError: If the directory does not exist.
        EmptyCorpusError: If it holds no plat records.
    """
    root = Path(directory)
    if not root.is_dir():
        raise InputFileError(path=str(directory), reason="not a directory")
    records = sorted(root.glob("*.plat"))
    if not records:
        raise EmptyCorpusError(directory=str(directory))
    return records


def run_record(path: Path, config: SearchConfig) -> CorpusRow:
    """Evaluate and simplify one record.

    Without an explicit cap the search runs under the record's own crossing count.
    """
    p = read_plat(path)
    try:
        unknot = unknot_evidence(p)
    except CrossingBudgetExceededError:
        unknot = None
    if config.crossing_cap is None:
        config = replace(config, crossing_cap=len(p.word))
    trace = simplify(p, config)
    logger.info("Corpus record %s: %s in %d moves", path.name, trace.outcome.value, len(trace.moves))
    return CorpusRow(
        record=path.name,
        strands=p.strand_count,
        crossings=len(p.word),
        components=component_count(p),
        unknot=unknot,
        outcome=trace.outcome.value,
        steps=len(trace.moves),
        flips=trace.count(MoveKind.FLIP, MoveKind.MICROFLIP),
    )


def run_corpus(directory: Path | str, config: SearchConfig | None = None, *, jobs: int = 1) -> list[CorpusRow]:
    """Run every record, in a process pool when ``jobs > 1``. Rows come back in record order."""
    config = config or SearchConfig()
    records = corpus_records(directory)
    worker = partial(run_record, config=config)
    if jobs <= 1:
        return [worker(path) for path in records]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, records))


def format_corpus_table(rows: list[CorpusRow]) -> str:
    """Left-aligned columns, one row per record."""
    table = [CORPUS_COLUMNS, *(row.cells() for row in rows)]
    widths = [max(len(line[i]) for line in table) for i in range(len(CORPUS_COLUMNS))]
    lines = ["  ".join(cell.ljust(width) for cell, width in zip(line, widths, strict=True)).rstrip() for line in table]
    return "\n".join(lines) + "\n"
