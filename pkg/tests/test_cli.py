"""The batch driver: reports, determinism and exit codes."""

import subprocess
import sys

import pytest

from quotloc.chars import T1, T2
from quotloc.cli import EXIT_PASS, EXIT_SUITE_FAILURE, EXIT_USAGE, main
from quotloc.points import seeded_point
from quotloc.rational import rat_str


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCompute:
    def test_report_structure_and_values(self, capsys):
        code, out, err = run_cli(
            ["compute", "--r1", "1", "--r2", "0", "--order", "2", "--seed", "7"], capsys
        )
        assert code == EXIT_PASS
        assert out.startswith("command: compute\n")
        assert "wall time" in err and "wall time" not in out
        # the q^1 coefficient is (1 - t1 t2)/(1 - t2) at the seed-7 point
        point = seeded_point((T1, T2, ("w", 1, 1)), 7)
        t1, t2 = point.value(T1), point.value(T2)
        expected = rat_str((1 - t1 * t2) / (1 - t2))
        assert f"q^1: {expected}" in out
        assert out.count(f"q^1: {expected}") == 2  # localized and closed form

    def test_order_zero(self, capsys):
        code, out, _ = run_cli(["compute", "--r1", "0", "--r2", "1", "--order", "0"], capsys)
        assert code == EXIT_PASS
        assert "q^0: 1/1" in out and "q^1" not in out

    def test_invalid_ranks_exit_usage(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["compute", "--r1", "0", "--r2", "0"])
        assert exc.value.code == EXIT_USAGE

    def test_deterministic_reports(self, tmp_path):
        args = ["compute", "--r1", "1", "--r2", "1", "--order", "3", "--seed", "11"]
        first = tmp_path / "a.txt"
        second = tmp_path / "b.txt"
        assert main(args + ["--out", str(first)]) == EXIT_PASS
        assert main(args + ["--out", str(second)]) == EXIT_PASS
        assert first.read_bytes() == second.read_bytes()


class TestVerify:
    def test_pass_report(self, capsys):
        code, out, _ = run_cli(
            ["verify", "euler-count", "--r1", "2", "--r2", "1", "--order", "8"], capsys
        )
        assert code == EXIT_PASS
        assert "suite: euler-count\nconfig:" in out
        assert "checks: 9" in out and "failures: 0" in out
        assert out.rstrip().endswith("status: pass")

    def test_suite_via_option_flag(self, capsys):
        code, out, _ = run_cli(
            ["verify", "--suite", "smooth-chi-y", "--order", "2"], capsys
        )
        assert code == EXIT_PASS and "suite: smooth-chi-y" in out

    def test_small_closed_form(self, capsys):
        code, out, _ = run_cli(
            ["verify", "closed-form", "--r1", "2", "--r2", "1", "--order", "3",
             "--num-points", "2"],
            capsys,
        )
        assert code == EXIT_PASS
        assert "checks: 2" in out

    def test_unknown_suite_exits_usage(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "not-a-suite"])
        assert exc.value.code == EXIT_USAGE

    def test_missing_suite_exits_usage(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify"])
        assert exc.value.code == EXIT_USAGE

    def test_smooth_suite_rejects_positive_r1(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "smooth-chi-y", "--r1", "1", "--r2", "0"])
        assert exc.value.code == EXIT_USAGE

    def test_failure_exit_code_and_counterexample(self, capsys, monkeypatch):
        from quotloc import cli
        from quotloc.suites import SuiteReport

        def broken_suite(**kw):
            return SuiteReport("closed-form", 3, ["r=1,0 q^1 differs: 1/2 vs 1/3"])

        monkeypatch.setitem(cli.CLI_SUITES, "closed-form", broken_suite)
        code, out, _ = run_cli(["verify", "closed-form"], capsys)
        assert code == EXIT_SUITE_FAILURE
        assert "status: fail" in out
        assert "first-counterexample" in out and "1/2 vs 1/3" in out

    def test_point_exhaustion_exit_code(self, capsys, monkeypatch):
        from quotloc import cli
        from quotloc.cli import EXIT_EXHAUSTED
        from quotloc.points import PointExhausted

        def starved_suite(**kw):
            raise PointExhausted("no usable points")

        monkeypatch.setitem(cli.CLI_SUITES, "framing", starved_suite)
        code, out, err = run_cli(["verify", "framing"], capsys)
        assert code == EXIT_EXHAUSTED
        assert out == "" and "no usable points" in err


class TestSubprocessEntry:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "quotloc.cli", "verify", "euler-count",
             "--r1", "1", "--r2", "0", "--order", "5"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == EXIT_PASS
        assert "status: pass" in proc.stdout

    def test_thread_cap_does_not_change_report(self):
        import os

        env = dict(os.environ)
        args = [sys.executable, "-m", "quotloc.cli", "compute", "--r1", "1",
                "--r2", "1", "--order", "3", "--seed", "5"]
        base = subprocess.run(args, capture_output=True, text=True, env=env)
        env["ORIGAMI_THREADS"] = "2"
        capped = subprocess.run(args, capture_output=True, text=True, env=env)
        assert base.returncode == capped.returncode == EXIT_PASS
        assert base.stdout == capped.stdout
