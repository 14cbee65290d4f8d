"""Tests for corpus runs."""

import shutil
from pathlib import Path

import pytest

from platcalc.cli import CorpusRow, EmptyCorpusError, InputFileError, format_corpus_table, run_corpus, run_record
from platcalc.plat import read_plat
from platcalc.simplifier import SearchConfig

from .conftest import CORPUS


class TestCorpusRow:
    @pytest.mark.parametrize(("unknot", "cell"), [(True, "yes"), (False, "no"), (None, "skipped")])
    def test_unknot_cell(self, unknot: bool | None, cell: str) -> None:
        row = CorpusRow("r.plat", 4, 2, 2, unknot, "budget-exhausted", 0, 0)
        assert row.cells()[4] == cell


class TestRunRecord:
    def test_kink(self) -> None:
        row = run_record(CORPUS / "kink.plat", SearchConfig())
        assert row == CorpusRow("kink.plat", 4, 1, 1, True, "reached-standard", 1, 0)

    def test_flip_hard_counts_flips(self) -> None:
        row = run_record(CORPUS / "flip_hard.plat", SearchConfig(crossing_cap=9))
        assert row.outcome == "reached-standard"
        assert row.flips >= 1

    def test_own_crossing_count_is_the_default_cap(self) -> None:
        row = run_record(CORPUS / "flip_hard.plat", SearchConfig(node_budget=2))
        assert row.flips == 0

    def test_budget_exceeded_is_skipped(self, plat_file) -> None:
        path = plat_file("long.plat", 1, (1,) * 70)
        assert len(read_plat(path).word) == 70
        row = run_record(Path(path), SearchConfig(node_budget=1))
        assert row.unknot is None


class TestRunCorpus:
    def test_rows_in_name_order(self, tmp_path) -> None:
        for name in ("trefoil.plat", "kink.plat", "trivial_1.plat"):
            shutil.copy(CORPUS / name, tmp_path / name)
        rows = run_corpus(tmp_path, SearchConfig(node_budget=20))
        assert [row.record for row in rows] == ["kink.plat", "trefoil.plat", "trivial_1.plat"]
        assert [row.unknot for row in rows] == [True, False, True]

    def test_process_pool_matches_serial(self, tmp_path) -> None:
        for name in ("kink.plat", "hopf.plat", "trivial_2.plat"):
            shutil.copy(CORPUS / name, tmp_path / name)
        config = SearchConfig(node_budget=20)
        assert run_corpus(tmp_path, config, jobs=2) == run_corpus(tmp_path, config)

    def test_empty(self, tmp_path) -> None:
        with pytest.raises(EmptyCorpusError):
            run_corpus(tmp_path)

    def test_missing(self, tmp_path) -> None:
        with pytest.raises(InputFileError):
            run_corpus(tmp_path / "missing")


class TestFormatCorpusTable:
    def test_aligned(self) -> None:
        rows = [
            CorpusRow("kink.plat", 4, 1, 1, True, "reached-standard", 1, 0),
            CorpusRow("hopf.plat", 4, 2, 2, False, "budget-exhausted", 0, 0),
        ]
        lines = format_corpus_table(rows).splitlines()
        assert len(lines) == 3
        assert lines[1].index("4") == lines[0].index("strands")
        assert all(line == line.rstrip() for line in lines)
