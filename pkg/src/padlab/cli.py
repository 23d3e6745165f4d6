"""Command-line front end and parameter-grid sweep orchestration.

Every checker is registered by name with its parameter list; run_check
dispatches a flat {param: int} record and turns math-level ValueErrors
into errored reports (unknown names or parameters raise instead).
run_sweep expands each check's grid as a Cartesian product in sorted
parameter order, so report order is deterministic regardless of the
parallelism degree.

Exit codes: 0 all hold, 1 at least one violation, 2 configuration or
parameter errors only.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import congruence_suite, jet, powersum, spectrum
from .bernoulli import adams_check, bernoulli, prewarm, von_staudt_clausen_check
from .params import ParameterSet, StrongParameterSet
from .report import CheckReport

__version__ = "0.1.0"


def _ps(args: dict) -> ParameterSet:
    return ParameterSet(args["p"], args["a"], args["t"], args["k"])


def _strong_ps(args: dict) -> StrongParameterSet:
    return StrongParameterSet(args["p"], args["a"], args["t"], args["k"])


@dataclass(frozen=True)
class CheckerSpec:
    run: callable
    params: tuple[str, ...]
    optional: tuple[str, ...] = ()


REGISTRY: dict[str, CheckerSpec] = {
    "kummer": CheckerSpec(
        lambda a: congruence_suite.kummer_check(a["p"], a["a"], a["r"], a["s"]),
        ("p", "a", "r", "s"),
    ),
    "theorem2": CheckerSpec(
        lambda a: congruence_suite.theorem2_check(_strong_ps(a), a["r"]),
        ("p", "a", "t", "k", "r"),
    ),
    "corollary2": CheckerSpec(
        lambda a: congruence_suite.corollary2_check(
            a["p"], a["a"], a["t"], a["b"], a.get("v")
        ),
        ("p", "a", "t", "b"),
        optional=("v",),
    ),
    "case1": CheckerSpec(
        lambda a: congruence_suite.case1_step_check(a["p"], a["a"], a["r"]),
        ("p", "a", "r"),
    ),
    "case2": CheckerSpec(
        lambda a: congruence_suite.case2_check(_strong_ps(a), a["b"]),
        ("p", "a", "t", "k", "b"),
    ),
    "case3": CheckerSpec(
        lambda a: congruence_suite.case3_branch_check(_strong_ps(a)),
        ("p", "a", "t", "k"),
    ),
    "lemma1": CheckerSpec(
        lambda a: powersum.lemma1_check(a["p"], a["a"], a["r"]),
        ("p", "a", "r"),
    ),
    "lemma2": CheckerSpec(
        lambda a: powersum.lemma2_check(a["p"], a["a"], a["rr"], a["kk"]),
        ("p", "a", "rr", "kk"),
    ),
    "lemma4": CheckerSpec(
        lambda a: jet.lemma4_check(_ps(a), a["m"], a["n"]),
        ("p", "a", "t", "k", "m", "n"),
    ),
    "lemma5": CheckerSpec(
        lambda a: jet.lemma5_count(_ps(a), a["s"]),
        ("p", "a", "t", "k", "s"),
    ),
    "corollary3": CheckerSpec(
        lambda a: jet.corollary3_check(_ps(a), a["s0"], a["kk"], a["x"]),
        ("p", "a", "t", "k", "s0", "kk", "x"),
    ),
    "theorem1": CheckerSpec(
        lambda a: spectrum.theorem1_check(_ps(a)),
        ("p", "a", "t", "k"),
    ),
    "theorem3": CheckerSpec(
        lambda a: spectrum.theorem3_check(_ps(a)),
        ("p", "a", "t", "k"),
    ),
    "transport": CheckerSpec(
        lambda a: spectrum.transport_check(_ps(a), a["g"], a["xprime"], a["n"]),
        ("p", "a", "t", "k", "g", "xprime", "n"),
    ),
    "corollary1": CheckerSpec(
        lambda a: spectrum.corollary1_check(_ps(a), a["x"], a["mu"]),
        ("p", "a", "t", "k", "x", "mu"),
    ),
    "adams": CheckerSpec(
        lambda a: adams_check(a["r"], a["p"]),
        ("r", "p"),
    ),
    "von_staudt_clausen": CheckerSpec(
        lambda a: von_staudt_clausen_check(a["n"]),
        ("n",),
    ),
}


def run_check(name: str, args: dict) -> CheckReport:
    """Dispatch a registered checker; math errors become errored reports."""
    checker = REGISTRY.get(name)
    if checker is None:
        raise ValueError(f"unknown checker name: {name!r}")
    allowed = set(checker.params) | set(checker.optional)
    unknown = set(args) - allowed
    if unknown:
        raise ValueError(f"unknown parameters for {name!r}: {sorted(unknown)}")
    missing = set(checker.params) - set(args)
    if missing:
        raise ValueError(f"missing parameters for {name!r}: {sorted(missing)}")
    try:
        return checker.run(args)
    except (ValueError, ArithmeticError) as exc:
        return CheckReport(name=name, inputs=dict(args), holds=False, error=str(exc))


# ---------------------------------------------------------------------------
# sweeps


@dataclass
class SweepConfig:
    checks: list[dict]  # each {"name": str, "grid": {param: [values]}}
    jobs: int = 1

    @classmethod
    def from_dict(cls, raw: dict) -> "SweepConfig":
        if not isinstance(raw, dict) or "checks" not in raw:
            raise ValueError("sweep config must be an object with a 'checks' list")
        checks = raw["checks"]
        if not isinstance(checks, list):
            raise ValueError("'checks' must be a list")
        for entry in checks:
            name = entry.get("name")
            checker = REGISTRY.get(name)
            if checker is None:
                raise ValueError(f"unknown checker name: {name!r}")
            grid = entry.get("grid")
            if not isinstance(grid, dict) or not grid:
                raise ValueError(f"check {name!r} needs a nonempty 'grid' object")
            allowed = set(checker.params) | set(checker.optional)
            for key, values in grid.items():
                if key not in allowed:
                    raise ValueError(f"{key!r} is not a parameter of {name!r}")
                if not isinstance(values, list) or not values:
                    raise ValueError(f"grid entry {name}.{key} must be a nonempty list")
            missing = set(checker.params) - set(grid)
            if missing:
                raise ValueError(f"check {name!r} is missing grid keys {sorted(missing)}")
        return cls(checks=checks, jobs=int(raw.get("jobs", 1)))


@dataclass
class SweepReport:
    config: dict
    reports: list[CheckReport]
    summary: dict = field(init=False)

    def __post_init__(self):
        errored = sum(1 for r in self.reports if r.error is not None)
        held = sum(1 for r in self.reports if r.error is None and r.holds)
        failed = len(self.reports) - held - errored
        self.summary = {
            "total": len(self.reports),
            "held": held,
            "failed": failed,
            "errored": errored,
        }

    def exit_code(self) -> int:
        if self.summary["failed"] > 0:
            return 1
        if self.summary["errored"] > 0:
            return 2
        return 0

    def to_json_dict(self) -> dict:
        return {
            "tool": "padlab",
            "version": __version__,
            "config": self.config,
            "reports": [r.to_json_dict() for r in self.reports],
            "summary": self.summary,
        }


def grid_points(config: SweepConfig):
    """Yield (name, args) in deterministic order: checks as listed, then the
    Cartesian product lexicographically over sorted parameter names."""
    for entry in config.checks:
        keys = sorted(entry["grid"])
        for combo in itertools.product(*(entry["grid"][key] for key in keys)):
            yield entry["name"], dict(zip(keys, combo))


def _run_point(point: tuple[str, dict]) -> CheckReport:
    return run_check(point[0], point[1])


def _bernoulli_demand(name: str, args: dict) -> int:
    """Largest Bernoulli index a grid point will touch, for pre-warming."""
    if name in ("kummer",):
        return max(args["r"], args["s"])
    if name == "adams":
        return args["r"]
    if name == "von_staudt_clausen":
        return args["n"]
    if name == "lemma1":
        return args["r"]
    if name == "case1":
        return args["r"] + args["p"] ** args["a"] * (args["p"] - 1)
    if name == "case2":
        shift = args["p"] ** args["a"] * (args["p"] - 1)
        return (args["k"] + max(abs(args["b"]), 1) * shift) * args["p"] ** args["t"]
    return 0


def run_sweep(config: SweepConfig) -> SweepReport:
    points = list(grid_points(config))
    demand = max((_bernoulli_demand(n, a) for n, a in points), default=0)
    if demand:
        prewarm(demand)
    if config.jobs > 1:
        with ProcessPoolExecutor(
            max_workers=config.jobs,
            initializer=prewarm,
            initargs=(demand,),
        ) as pool:
            reports = list(pool.map(_run_point, points))
    else:
        reports = [_run_point(pt) for pt in points]
    raw_config = {"checks": config.checks, "jobs": config.jobs}
    return SweepReport(config=raw_config, reports=reports)


def canonical_body(report_dict: dict) -> dict:
    """The comparison canon for determinism: drop elapsed timing fields."""
    if isinstance(report_dict, dict):
        return {
            k: canonical_body(v)
            for k, v in report_dict.items()
            if k not in ("elapsed_ms",)
        }
    if isinstance(report_dict, list):
        return [canonical_body(v) for v in report_dict]
    return report_dict


# ---------------------------------------------------------------------------
# argument parsing


def _dump(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


_CLI_CHECKS: dict[str, tuple[tuple[str, ...], tuple[str, ...]]] = {
    # subcommand -> (required flags, optional flags); flag --k feeds param kk
    "kummer": (("p", "a", "r", "s"), ()),
    "theorem2": (("p", "a", "t", "k", "r"), ()),
    "corollary2": (("p", "a", "t", "b"), ("v",)),
    "case1": (("p", "a", "r"), ()),
    "case2": (("p", "a", "t", "k", "b"), ()),
    "case3": (("p", "a", "t", "k"), ()),
    "lemma1": (("p", "a", "r"), ()),
    "lemma2": (("p", "a", "rr", "k"), ()),
    "lemma4": (("p", "a", "t", "k", "m", "n"), ()),
    "lemma5": (("p", "a", "t", "k", "s"), ()),
    "corollary3": (("p", "a", "t", "k", "s0", "kk", "x"), ()),
    "theorem1": (("p", "a", "t", "k"), ()),
    "theorem3": (("p", "a", "t", "k"), ()),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padlab",
        description="Exact verification of congruences between power sums, "
        "Bernoulli numbers, and unit-group orbits modulo odd prime powers.",
    )
    parser.add_argument("--version", action="version", version=f"padlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, (required, optional) in _CLI_CHECKS.items():
        sp = sub.add_parser(name, help=f"run the {name} checker")
        for flag in required:
            sp.add_argument(f"--{flag}", type=int, required=True)
        for flag in optional:
            sp.add_argument(f"--{flag}", type=int, default=None)

    sp = sub.add_parser("stabilizer", help="stabilizer order and generator of S")
    for flag in ("p", "a", "t", "k"):
        sp.add_argument(f"--{flag}", type=int, required=True)

    sp = sub.add_parser("balance", help="test whether S is j-balanced")
    for flag in ("p", "a", "t", "k", "j"):
        sp.add_argument(f"--{flag}", type=int, required=True)

    sp = sub.add_parser("bernoulli", help="print B_n as numerator/denominator")
    sp.add_argument("--n", type=int, required=True)

    sp = sub.add_parser("sweep", help="run a grid of checks from a JSON config")
    sp.add_argument("--config", required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--jobs", type=int, default=None)

    return parser


def _check_exit_code(report: CheckReport) -> int:
    if report.error is not None:
        return 2
    return 0 if report.holds else 1


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cmd = args.command

    if cmd in _CLI_CHECKS:
        required, optional = _CLI_CHECKS[cmd]
        record = {}
        for flag in required + optional:
            value = getattr(args, flag)
            if value is None:
                continue
            record["kk" if cmd == "lemma2" and flag == "k" else flag] = value
        report = run_check(cmd, record)
        print(_dump(report.to_json_dict()))
        return _check_exit_code(report)

    if cmd in ("stabilizer", "balance"):
        try:
            ps = ParameterSet(args.p, args.a, args.t, args.k)
            s = spectrum.build_S(ps)
            if cmd == "stabilizer":
                sub = spectrum.stabilizer(s)
                print(
                    _dump(
                        {
                            "parameters": {k: str(v) for k, v in ps.as_dict().items()},
                            "order": str(sub.order),
                            "generator": str(sub.generator.value),
                            "modulus": {"p": str(ps.p), "exp": ps.M},
                        }
                    )
                )
            else:
                print(
                    _dump(
                        {
                            "parameters": {k: str(v) for k, v in ps.as_dict().items()},
                            "j": args.j,
                            "balanced": spectrum.j_balanced(s, args.j),
                        }
                    )
                )
            return 0
        except ValueError as exc:
            print(_dump({"error": str(exc)}), file=sys.stderr)
            return 2

    if cmd == "bernoulli":
        if args.n < 0:
            print(_dump({"error": "n must be nonnegative"}), file=sys.stderr)
            return 2
        value = bernoulli(args.n)
        print(f"{value.numerator}/{value.denominator}")
        return 0

    if cmd == "sweep":
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                raw = json.load(fh)
            config = SweepConfig.from_dict(raw)
        except (OSError, json.JSONDecodeError, ValueError) as exc:
            print(_dump({"error": str(exc)}), file=sys.stderr)
            return 2
        if args.jobs is not None:
            config.jobs = args.jobs
        sweep = run_sweep(config)
        body = _dump(sweep.to_json_dict()) + "\n"
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(body)
        except OSError as exc:
            print(_dump({"error": str(exc)}), file=sys.stderr)
            return 2
        print(_dump({"out": args.out, "summary": sweep.summary}))
        return sweep.exit_code()

    raise AssertionError(f"unhandled command {cmd!r}")


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
