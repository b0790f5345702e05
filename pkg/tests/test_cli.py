"""Command-line behavior: exit codes, streams, and end-to-end runs."""

from __future__ import annotations

import subprocess
import sys

import pytest

from reswiki.cli import main

from conftest import GOLDEN_BIBLIOGRAPHY_CSV, build_golden_wiki


@pytest.fixture()
def golden_dir(tmp_path):
    return build_golden_wiki(tmp_path / "wiki").root_path


def run_cli(*argv: str) -> subprocess.CompletedProcess:
    return subprocess.run(
        [sys.executable, "-m", "reswiki.cli", *argv],
        capture_output=True,
        text=True,
    )


class TestScaffoldCommand:
    def test_scaffold_then_lint_is_clean(self, tmp_path, capsys):
        target = tmp_path / "wiki"
        assert main(["scaffold", str(target)]) == 0
        out = capsys.readouterr().out
        assert "pages/phd/bibliography/author.txt" in out
        assert main(["lint", str(target)]) == 0
        lint_out = capsys.readouterr().out
        assert "error\t" not in lint_out

    def test_scaffold_refuses_non_empty(self, tmp_path, capsys):
        target = tmp_path / "wiki"
        assert main(["scaffold", str(target)]) == 0
        capsys.readouterr()
        assert main(["scaffold", str(target)]) == 1
        assert "error:" in capsys.readouterr().err


class TestLintCommand:
    def test_exit_one_on_errors(self, golden_dir, capsys):
        bad = golden_dir / "pages" / "phd" / "bibliography" / "Bad_Name.txt"
        bad.write_text("====== Bad ======\n", encoding="utf-8")
        assert main(["lint", str(golden_dir)]) == 1
        out = capsys.readouterr().out
        assert "error\tR01\tphd:bibliography:bad_name" in out

    def test_warnings_do_not_fail(self, golden_dir, capsys):
        assert main(["lint", str(golden_dir)]) == 0
        out = capsys.readouterr().out
        assert "warning\tR02\t" in out
        assert "error\t" not in out

    def test_diagnostic_line_format(self, golden_dir, capsys):
        main(["lint", str(golden_dir)])
        line = capsys.readouterr().out.splitlines()[0]
        severity, code, page_id, message = line.split("\t", 3)
        assert severity == "warning"
        assert code == "R02"
        assert page_id.startswith("phd:bibliography:")
        assert message

    def test_missing_wiki_is_fatal(self, tmp_path, capsys):
        assert main(["lint", str(tmp_path / "missing")]) == 1
        assert "error:" in capsys.readouterr().err


class TestExportCsvCommand:
    def test_golden_export(self, golden_dir, registry_dir, tmp_path):
        out_csv = tmp_path / "out.csv"
        result = run_cli(
            "export-csv",
            str(golden_dir),
            "--core",
            str(registry_dir / "core.csv"),
            "--scimago",
            str(registry_dir / "scimago.csv"),
            "-o",
            str(out_csv),
        )
        assert result.returncode == 0, result.stderr
        assert out_csv.read_bytes() == GOLDEN_BIBLIOGRAPHY_CSV.encode("utf-8")

    def test_missing_registry_is_fatal(self, golden_dir, tmp_path, capsys):
        code = main(
            [
                "export-csv",
                str(golden_dir),
                "--core",
                str(tmp_path / "nope.csv"),
                "--scimago",
                str(tmp_path / "nope2.csv"),
                "-o",
                str(tmp_path / "out.csv"),
            ]
        )
        assert code == 1
        assert "error:" in capsys.readouterr().err

    def test_threshold_flag(self, golden_dir, registry_dir, tmp_path, capsys):
        out_csv = tmp_path / "strict.csv"
        code = main(
            [
                "export-csv",
                str(golden_dir),
                "--core",
                str(registry_dir / "core.csv"),
                "--scimago",
                str(registry_dir / "scimago.csv"),
                "--threshold",
                "0.9",
                "-o",
                str(out_csv),
            ]
        )
        capsys.readouterr()
        assert code == 0
        text = out_csv.read_text()
        # At 0.9 the 7/8 CIKM match is rejected: no rank, extracted name kept.
        assert "International Conference on Information and Knowledge Management,A," not in text
        assert "ACM International Conference on Information and Knowledge Management,," in text


class TestAnalyzeCommand:
    def test_writes_fixed_file_set(self, golden_dir, tmp_path, capsys):
        out_dir = tmp_path / "output"
        assert main(["analyze", str(golden_dir), "--output", str(out_dir)]) == 0
        printed = capsys.readouterr().out.splitlines()
        assert len(printed) == 9
        names = sorted(p.name for p in out_dir.iterdir())
        assert names == sorted(
            [
                "bibliography.csv",
                "changes-phd-bibliography.svg",
                "changes-phd-bibliography.csv",
                "term-frequency.svg",
                "term-frequency.csv",
                "counts-by-author.csv",
                "counts-by-conference.csv",
                "counts-by-journal.csv",
                "counts-by-year.csv",
            ]
        )

    def test_namespace_flag(self, golden_dir, tmp_path, capsys):
        out_dir = tmp_path / "output"
        assert (
            main(["analyze", str(golden_dir), "--namespace", "phd:experiments", "--output", str(out_dir)])
            == 0
        )
        capsys.readouterr()
        assert (out_dir / "changes-phd-experiments.csv").is_file()


class TestBacklinksCommand:
    def test_two_linking_sheets_one_per_line(self, golden_dir, capsys):
        assert main(["backlinks", str(golden_dir), "phd:bibliography:author:w-bruce-croft"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out == [
            "phd:bibliography:hypergraph-models-for-entity-search",
            "phd:bibliography:ranking-entities-in-networks",
        ]

    def test_isolated_page_prints_nothing(self, golden_dir, capsys):
        assert main(["backlinks", str(golden_dir), "start"]) == 0
        assert capsys.readouterr().out == ""


class TestIndexCommand:
    def test_author_index(self, golden_dir, capsys):
        assert main(["index", str(golden_dir), "author"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 3
        entity, sheets = lines[0].split("\t")
        assert entity == "phd:bibliography:author:emine-yilmaz"
        assert sheets.split(",") == [
            "phd:bibliography:evaluating-retrieval-over-sessions",
            "phd:bibliography:graph-signals-on-citation-networks",
        ]

    def test_invalid_kind_is_usage_error(self, golden_dir):
        result = run_cli("index", str(golden_dir), "topic")
        assert result.returncode == 2


class TestUsage:
    def test_unknown_command(self):
        result = run_cli("frobnicate")
        assert result.returncode == 2

    def test_unknown_flag(self, tmp_path):
        result = run_cli("lint", str(tmp_path), "--bogus")
        assert result.returncode == 2

    def test_no_command(self):
        result = run_cli()
        assert result.returncode == 2

    @pytest.mark.parametrize(
        "command", ["scaffold", "lint", "export-csv", "analyze", "backlinks", "index"]
    )
    def test_help_exits_zero_and_documents_flags(self, command):
        result = run_cli(command, "--help")
        assert result.returncode == 0
        assert command in result.stdout

    def test_top_level_help(self):
        result = run_cli("--help")
        assert result.returncode == 0
        for command in ("scaffold", "lint", "export-csv", "analyze", "backlinks", "index"):
            assert command in result.stdout
