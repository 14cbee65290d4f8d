"""Error types for the command-line surface."""

from dataclasses import dataclass


class CliError(Exception):
    """Base error for command-line usage problems."""


@dataclass
class InputFileError(CliError):
    """Raised when an input file or directory cannot be read.

    Args:
        path: The path given on the command line.
        reason: What went wrong.
    """

    path: str
    reason: str

    def __str__(self) -> str:
        return f"Cannot read '{self.path}': {self.reason}."


@dataclass
class EmptyCorpusError(CliError):
    """Raised when a corpus directory holds no plat records."""

    directory: str

    def __str__(self) -> str:
        return f"No *.plat records found in '{self.directory}'."
