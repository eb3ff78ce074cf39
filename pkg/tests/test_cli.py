"""CLI surface: formats, exit codes, cache wiring, determinism."""

import json

import pytest

from pathcensus import cli
from pathcensus.analysis import ConjectureVerdict, ScanReport, report_from_json
from pathcensus.engine import memo_load


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# eval ---------------------------------------------------------------------

def test_eval_listing_default_input(capsys):
    code, out, err = run(capsys, "eval", "1,2,1,1")
    assert code == 0
    assert out == "40\n"
    assert "took" in err  # timing goes to the diagnostics stream


def test_eval_paper_value(capsys):
    code, out, _ = run(capsys, "eval", "2,11,5")
    assert (code, out) == (0, "637924\n")


def test_eval_single_block(capsys):
    code, out, _ = run(capsys, "eval", "7")
    assert (code, out) == (0, "1\n")


@pytest.mark.parametrize("arg", ["1,0,1", "x", "", "1,-2"])
def test_eval_usage_errors(capsys, arg):
    code, out, err = run(capsys, "eval", arg)
    assert code == 2
    assert out == ""
    assert "error:" in err


def test_eval_json(capsys):
    code, out, _ = run(capsys, "eval", "1,2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data == {"report": "eval", "composition": "1,2", "value": "3"}


def test_eval_csv(capsys):
    code, out, _ = run(capsys, "eval", "1,2", "--format", "csv")
    assert (code, out) == (0, "1,2;3\n")


# census ---------------------------------------------------------------------

def test_census_symmetric(capsys):
    code, out, _ = run(capsys, "census", "-n", "3", "1,-1")
    assert (code, out) == (0, "1 symmetric\n")


def test_census_non_symmetric(capsys):
    code, out, _ = run(capsys, "census", "-n", "8", "3,-4")
    assert (code, out) == (0, "35 non-symmetric\n")


def test_census_order_mismatch_is_usage_error(capsys):
    code, out, err = run(capsys, "census", "-n", "4", "1,-1")
    assert code == 2
    assert "error:" in err


def test_census_small_n_is_usage_error(capsys):
    code, _, _ = run(capsys, "census", "-n", "2", "1")
    assert code == 2


def test_census_json(capsys):
    code, out, _ = run(capsys, "census", "-n", "3", "1,-1", "--format", "json")
    data = json.loads(out)
    assert data["symmetric"] is True
    assert data["value"] == "1"


def test_census_negative_leading_type_via_separator(capsys):
    code, out, _ = run(capsys, "census", "-n", "3", "--", "-1,1")
    assert (code, out) == (0, "1 symmetric\n")


# scan -----------------------------------------------------------------------

def test_scan_csv_rows(capsys):
    code, out, _ = run(capsys, "scan", "-p", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["3;1", "1,2;3", "2,1;3", "1,1,1;5"]


def test_scan_text_rows(capsys):
    code, out, _ = run(capsys, "scan", "-p", "2")
    assert out.splitlines() == ["2 => 1", "1,1 => 2"]


def test_scan_sort_by_composition(capsys):
    _, out, _ = run(capsys, "scan", "-p", "3", "--sort", "composition", "--format", "csv")
    assert out.splitlines() == ["1,1,1;5", "1,2;3", "2,1;3", "3;1"]


def test_scan_json_roundtrips(capsys):
    code, out, _ = run(capsys, "scan", "-p", "4", "--format", "json")
    report = report_from_json(out)
    assert isinstance(report, ScanReport)
    assert report.max_row == ((1, 1, 1, 1), 16)


def test_scan_over_limit_needs_force(capsys):
    code, _, err = run(capsys, "scan", "-p", "19")
    assert code == 2
    assert "error:" in err


def test_scan_p1_is_usage_error(capsys):
    assert run(capsys, "scan", "-p", "1")[0] == 2


def test_scan_jobs_identical_output(capsys):
    _, serial, _ = run(capsys, "scan", "-p", "8")
    _, parallel, _ = run(capsys, "scan", "-p", "8", "--jobs", "2")
    assert serial == parallel


def test_scan_deterministic_bytes(capsys):
    _, first, _ = run(capsys, "scan", "-p", "7", "--format", "json")
    _, second, _ = run(capsys, "scan", "-p", "7", "--format", "json")
    assert first == second


# conjecture ---------------------------------------------------------------------

def test_conjecture_small_run(capsys):
    code, out, _ = run(capsys, "conjecture", "--max-p", "5")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3
    assert lines[0].startswith("p=3 all_ones_max=yes")


def test_conjecture_json_verdicts_roundtrip(capsys):
    code, out, _ = run(capsys, "conjecture", "--max-p", "4", "--format", "json")
    data = json.loads(out)
    assert data["report"] == "conjecture-run"
    verdicts = [ConjectureVerdict.from_json_dict(v) for v in data["verdicts"]]
    assert [v.p for v in verdicts] == [3, 4]
    assert all(v.ok for v in verdicts)


def test_conjecture_csv(capsys):
    _, out, _ = run(capsys, "conjecture", "--max-p", "4", "--format", "csv")
    assert out.splitlines() == ["3;true;true;true", "4;true;true;true"]


def test_conjecture_over_limit_needs_force(capsys):
    assert run(capsys, "conjecture", "--max-p", "19")[0] == 2


def test_conjecture_full_default_range(capsys):
    code, out, _ = run(capsys, "conjecture", "--max-p", "18")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 16
    assert all("=NO" not in line for line in lines)


def test_conjecture_violation_exits_one(capsys, monkeypatch):
    fake = ConjectureVerdict(
        p=3,
        all_ones_is_max=False,
        runner_up_is_1_2_ones=True,
        runner_up_exceeds_half_max=True,
        witnesses=[(3,)],
    )
    monkeypatch.setattr(cli, "check_conjecture", lambda *a, **k: fake)
    code, out, _ = run(capsys, "conjecture", "--max-p", "3")
    assert code == 1
    assert "witnesses=3" in out


# verify ----------------------------------------------------------------------------

def test_verify_transitive_clean(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "5")
    assert code == 0
    assert "discrepancies=0" in out


def test_verify_transitive_default_range(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "8")
    assert code == 0
    assert "discrepancies=0" in out


def test_verify_nearly(capsys):
    assert run(capsys, "verify", "--max-n", "5", "--kind", "nearly")[0] == 0


def test_verify_random_seeded(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "5", "--kind", "random", "--seed", "1")
    assert code == 0
    _, again, _ = run(capsys, "verify", "--max-n", "5", "--kind", "random", "--seed", "1")
    assert out == again


def test_verify_json(capsys):
    _, out, _ = run(capsys, "verify", "--max-n", "4", "--format", "json")
    report = report_from_json(out)
    assert report.ok and report.max_n == 4


def test_verify_over_limit_needs_force(capsys):
    assert run(capsys, "verify", "--max-n", "11")[0] == 2


def test_verify_discrepancy_exits_one(capsys, monkeypatch):
    from pathcensus.analysis import Discrepancy, OracleDiffReport

    fake = OracleDiffReport(
        kind="transitive",
        max_n=4,
        seed=None,
        checks=1,
        discrepancies=[Discrepancy(4, "3", 1, 2, "transitive-census")],
    )
    monkeypatch.setattr(cli, "verify_against_oracle", lambda *a, **k: fake)
    code, out, _ = run(capsys, "verify", "--max-n", "4")
    assert code == 1
    assert "n=4 type=3 oracle=1 expected=2" in out


# bench ------------------------------------------------------------------------------

def test_bench_reports_summary(capsys):
    code, out, err = run(capsys, "bench", "-p", "6")
    assert code == 0
    assert out.startswith("p=6 compositions=32 max=1,1,1,1,1,1:")
    assert "cache" in err


# cache file -----------------------------------------------------------------------------

def test_cache_file_persists_and_reloads(capsys, tmp_path):
    cache = tmp_path / "memo.txt"
    code, out, _ = run(capsys, "eval", "1,2,1", "--cache-file", str(cache))
    assert (code, out) == (0, "11\n")
    assert cache.exists()
    table = memo_load(cache)
    assert table.lookup((1, 2, 1)) == 11

    code, out, err = run(capsys, "eval", "1,2,1", "--cache-file", str(cache))
    assert (code, out) == (0, "11\n")
    assert "hits=1" in err  # answered straight from the loaded table


def test_cache_env_var_sets_default(capsys, tmp_path, monkeypatch):
    cache = tmp_path / "env-memo.txt"
    monkeypatch.setenv("PATHCENSUS_CACHE", str(cache))
    code, out, _ = run(capsys, "eval", "1,1")
    assert (code, out) == (0, "2\n")
    assert cache.exists()


def test_cache_flag_overrides_env(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("PATHCENSUS_CACHE", str(tmp_path / "ignored.txt"))
    explicit = tmp_path / "explicit.txt"
    run(capsys, "eval", "1,1", "--cache-file", str(explicit))
    assert explicit.exists()
    assert not (tmp_path / "ignored.txt").exists()


# parser ----------------------------------------------------------------------------------

def test_missing_subcommand_is_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        cli.main([])
    assert err.value.code == 2


def test_console_entry_point_importable():
    from pathcensus.cli import main  # the [project.scripts] target

    assert callable(main)
