"""Batch driver: compute series coefficients and run verification suites.

Two subcommands::

    quotloc compute --r1 R1 --r2 R2 --order N --seed S [--num-points K] [--out PATH]
    quotloc verify SUITE [--r1 R1 --r2 R2] [--order N --seed S --num-points K --out PATH]

Reports are structured key/value text with a stable field order and exact
rationals serialized as ``numerator/denominator``; a report is
byte-identical across runs with the same configuration (wall time goes to
stderr).  Exit codes: 0 pass, 1 suite failure, 2 usage error, 3 evaluation
exhausted its point budget.  The environment variable ``ORIGAMI_THREADS``
caps the worker count used for coefficient evaluation.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from .points import EvalContext, PointExhausted, rational_stream, retry_points
from .rational import rat_str
from .series import eval_forms, localized_forms, z_closed
from .suites import CLI_SUITES, SuiteReport
from .vertex import Ranks

EXIT_PASS = 0
EXIT_SUITE_FAILURE = 1
EXIT_USAGE = 2
EXIT_EXHAUSTED = 3


@dataclass
class RunConfig:
    command: str
    suite: str | None
    r1: int | None
    r2: int | None
    order: int | None
    seed: int
    num_points: int | None
    out: str | None

    def ranks(self) -> Ranks | None:
        if self.r1 is None and self.r2 is None:
            return None
        return Ranks(self.r1 or 0, self.r2 or 0)


def _render(node, indent: int = 0, lines=None) -> list:
    """Render nested (key, value) pair lists as indented ``key: value`` text."""
    if lines is None:
        lines = []
    pad = "  " * indent
    for key, value in node:
        if isinstance(value, list):
            lines.append(f"{pad}{key}:")
            _render(value, indent + 1, lines)
        else:
            lines.append(f"{pad}{key}: {value}")
    return lines


def render_report(tree) -> str:
    return "\n".join(_render(tree)) + "\n"


def _config_tree(cfg: RunConfig) -> list:
    show = lambda v: "-" if v is None else v
    return [
        ("r1", show(cfg.r1)),
        ("r2", show(cfg.r2)),
        ("order", show(cfg.order)),
        ("seed", cfg.seed),
        ("num-points", show(cfg.num_points)),
    ]


def _point_tree(point) -> list:
    from .chars import var_name

    return [(var_name(v), rat_str(q)) for v, q in point.items()]


def cmd_compute(cfg: RunConfig) -> tuple[str, int]:
    """Evaluate the localized and closed-form series at seeded points."""
    ranks = cfg.ranks() or Ranks(1, 0)
    order = 6 if cfg.order is None else cfg.order
    num_points = cfg.num_points or 1
    forms = localized_forms(ranks, order)
    stream = rational_stream(cfg.seed)
    point_blocks = []
    for index in range(1, num_points + 1):
        point, localized = retry_points(
            ranks.variables(), stream, lambda p: eval_forms(forms, p)
        )
        closed = z_closed(ranks, EvalContext(point, cfg.seed, order))
        point_blocks.append(
            (
                f"point {index}",
                [
                    ("assignment", _point_tree(point)),
                    (
                        "localized",
                        [(f"q^{n}", rat_str(c)) for n, c in enumerate(localized.coefficients)],
                    ),
                    (
                        "closed-form",
                        [(f"q^{n}", rat_str(c)) for n, c in enumerate(closed.coefficients)],
                    ),
                ],
            )
        )
    tree = [
        ("command", "compute"),
        ("config", _config_tree(cfg)),
        ("coefficients", point_blocks),
        ("status", "ok"),
    ]
    return render_report(tree), EXIT_PASS


def _suite_kwargs(cfg: RunConfig) -> dict:
    """Translate the flat CLI configuration into suite keyword arguments."""
    name = cfg.suite
    ranks = cfg.ranks()
    kw: dict = {"seed": cfg.seed}
    if name in ("closed-form", "factorization", "oracle", "cohomological"):
        if ranks is not None:
            kw["ranks_list"] = (ranks,)
        if cfg.order is not None:
            kw["order"] = cfg.order
        if cfg.num_points is not None:
            kw["num_points"] = cfg.num_points
    elif name == "framing":
        if ranks is not None:
            kw["ranks"] = ranks
        if cfg.order is not None:
            kw["order"] = cfg.order
        if cfg.num_points is not None:
            kw["num_assignments"] = cfg.num_points
    elif name == "limits":
        if ranks is not None:
            kw["ranks"] = ranks
        if cfg.order is not None:
            kw["max_len"] = cfg.order
    elif name == "no-twist":
        if ranks is not None:
            kw["det_ranks"] = (ranks,)
            kw["ranks_list"] = (ranks,)
        if cfg.order is not None:
            kw["order"] = cfg.order
            kw["det_len"] = cfg.order
        if cfg.num_points is not None:
            kw["num_points"] = cfg.num_points
    elif name == "cy-vanishing":
        if ranks is not None:
            kw["ranks_list"] = (ranks,)
        if cfg.order is not None:
            kw["max_len"] = cfg.order
        if cfg.num_points is not None:
            kw["num_seeds"] = cfg.num_points
    elif name == "euler-count":
        kw.pop("seed")
        if ranks is not None:
            kw["ranks_list"] = (ranks,)
        if cfg.order is not None:
            kw["max_len"] = cfg.order
    elif name == "smooth-chi-y":
        kw.pop("seed")
        if ranks is not None:
            kw["ranks_list"] = (ranks,)
        if cfg.order is not None:
            kw["max_len"] = cfg.order
    return kw


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    """Run one named suite and report pass/fail with counterexamples."""
    suite_fn = CLI_SUITES[cfg.suite]
    report: SuiteReport = suite_fn(**_suite_kwargs(cfg))
    tree = [
        ("command", "verify"),
        ("suite", cfg.suite),
        ("config", _config_tree(cfg)),
        ("checks", report.checks),
        ("failures", len(report.failures)),
    ]
    if report.failures:
        tree.append(
            ("first-counterexample", [(f"check {k + 1}", text) for k, text in enumerate(report.failures)])
        )
    tree.append(("status", "pass" if report.passed else "fail"))
    return render_report(tree), EXIT_PASS if report.passed else EXIT_SUITE_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quotloc",
        description="Exact localization engine: compute partition-function "
        "coefficients and verify the structural identities behind them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--r1", type=int, default=None, help="rank on the first line")
        p.add_argument("--r2", type=int, default=None, help="rank on the second line")
        p.add_argument("--order", type=int, default=None, help="q-series truncation order")
        p.add_argument("--seed", type=int, default=1, help="seed of the evaluation-point stream")
        p.add_argument("--num-points", type=int, default=None, help="points / assignments / seeds per check")
        p.add_argument("--out", default=None, help="write the report here instead of stdout")

    p_compute = sub.add_parser("compute", help="evaluate series coefficients at seeded points")
    common(p_compute)

    p_verify = sub.add_parser("verify", help="run a named verification suite")
    p_verify.add_argument(
        "suite_pos", nargs="?", default=None, metavar="SUITE",
        help=f"one of: {', '.join(sorted(CLI_SUITES))}",
    )
    p_verify.add_argument("--suite", dest="suite_opt", default=None, help=argparse.SUPPRESS)
    common(p_verify)

    return parser


def _validate(parser, args) -> RunConfig:
    suite = None
    if args.command == "verify":
        suite = args.suite_pos or args.suite_opt
        if suite is None:
            parser.error("verify needs a suite name")
        if args.suite_pos and args.suite_opt and args.suite_pos != args.suite_opt:
            parser.error("conflicting suite names given")
        if suite not in CLI_SUITES:
            parser.error(f"unknown suite {suite!r}; choose from {', '.join(sorted(CLI_SUITES))}")
    cfg = RunConfig(
        command=args.command,
        suite=suite,
        r1=args.r1,
        r2=args.r2,
        order=args.order,
        seed=args.seed,
        num_points=args.num_points,
        out=args.out,
    )
    if (cfg.r1 is not None or cfg.r2 is not None) and (cfg.r1 or 0) + (cfg.r2 or 0) < 1:
        parser.error("total rank r1 + r2 must be at least 1")
    if (cfg.r1 or 0) < 0 or (cfg.r2 or 0) < 0:
        parser.error("ranks must be nonnegative")
    if cfg.order is not None and cfg.order < 0:
        parser.error("order must be nonnegative")
    if cfg.num_points is not None and cfg.num_points < 1:
        parser.error("num-points must be at least 1")
    if cfg.suite == "smooth-chi-y" and cfg.r1:
        parser.error("the smooth-chi-y suite requires r1 = 0")
    return cfg


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = _validate(parser, args)
    started = time.monotonic()
    try:
        if cfg.command == "compute":
            text, code = cmd_compute(cfg)
        else:
            text, code = cmd_verify(cfg)
    except PointExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    elapsed = time.monotonic() - started
    print(f"wall time: {elapsed:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
