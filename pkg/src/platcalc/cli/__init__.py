"""Command-line surface of platcalc."""

from platcalc.cli.app import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, build_parser, main, run
from platcalc.cli.corpus import CORPUS_COLUMNS, CorpusRow, format_corpus_table, run_corpus, run_record
from platcalc.cli.errors import CliError, EmptyCorpusError, InputFileError
from platcalc.cli.render import render_ascii, render_svg

__all__ = [
    "CORPUS_COLUMNS",
    "CliError",
    "CorpusRow",
    "EXIT_FAILURE",
    "EXIT_OK",
    "EXIT_USAGE",
    "EmptyCorpusError",
    "InputFileError",
    "build_parser",
    "format_corpus_table",
    "main",
    "render_ascii",
    "render_svg",
    "run",
    "run_corpus",
    "run_record",
]
