"""Batch command line: one binary, noun-verb subcommands.

    complexkit life run --pattern glider.rle --gens 4 --seed 1 --out final.rle
    complexkit life classify --pattern blinker.rle --horizon 16 --seed 1
    complexkit cas run --config scenario.json --ticks 100 --metrics m.csv
    complexkit ga run --problem onemax --length 64 --seed 3 --metrics ga.csv
    complexkit complexity profile --pattern p.rle --gens 10 --scales 1,2,4 --seed 1
    complexkit dynamics lyapunov --map logistic --r 4.0 --x0 0.3 --seed 1
    complexkit dynamics sweep --r-from 2.5 --r-to 4.0 --r-step 0.1 --seed 1

Every run requires an explicit seed (flag or config file); flag values
override config-file values. Exit codes: 0 success, 1 domain error,
2 I/O, usage, or parse error. Metrics are CSV only and never share a
stream with log text.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import random
import sys
from pathlib import Path

from .automaton import CONWAY_LIFE, RuleError, RuleSet, classify_pattern, run
from .cas import DegenerateStrategyError, FrameError
from .complexity import complexity_profile
from .coevolve import episode_fitness
from .dynamics import DivergenceError, divergence_rate, logistic_map
from .evolution import EvaluationError, EvolutionConfig, evolve
from .grid import Grid, Topology
from .patterns import (
    PatternFormatError,
    UnsupportedFormatError,
    decode_pattern,
    encode_pattern,
)
from .scenario import ScenarioError, build_environment, run_scenario


def _add_shared(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=None, help="explicit run seed (required)")
    p.add_argument("--out", default=None, help="primary output path")
    p.add_argument("--metrics", default=None, help="metrics CSV path")
    p.add_argument("--config", default=None, help="JSON config file; flags override it")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="complexkit", description=__doc__.splitlines()[0])
    nouns = parser.add_subparsers(dest="noun", required=True)

    life = nouns.add_parser("life", help="cellular automaton runs")
    life_verbs = life.add_subparsers(dest="verb", required=True)
    p = life_verbs.add_parser("run", help="step a pattern forward")
    p.add_argument("--pattern", default=None, help="RLE (.rle) or plaintext pattern file")
    p.add_argument("--rule", default=None, help="rule string like B3/S23")
    p.add_argument("--gens", type=int, default=None)
    p.add_argument("--topology", choices=["square", "hex"], default="square")
    p.add_argument("--states", type=int, default=None)
    p.add_argument("--frames", default=None, help="directory for per-generation plaintext dumps")
    _add_shared(p)
    p = life_verbs.add_parser("classify", help="classify a pattern's behavior")
    p.add_argument("--pattern", default=None)
    p.add_argument("--rule", default=None)
    p.add_argument("--horizon", type=int, default=64)
    _add_shared(p)

    cas = nouns.add_parser("cas", help="agent-based scenario runs")
    cas_verbs = cas.add_subparsers(dest="verb", required=True)
    p = cas_verbs.add_parser("run", help="run a scenario for n ticks")
    p.add_argument("--ticks", type=int, default=None)
    _add_shared(p)

    ga = nouns.add_parser("ga", help="genetic algorithm runs")
    ga_verbs = ga.add_subparsers(dest="verb", required=True)
    p = ga_verbs.add_parser("run")
    p.add_argument("--problem", choices=["onemax", "coevolve"], default=None)
    p.add_argument("--length", type=int, default=None)
    p.add_argument("--pop", type=int, default=None)
    p.add_argument("--gens", type=int, default=None)
    p.add_argument("--mut", type=float, default=None)
    p.add_argument("--cx", type=float, default=None)
    p.add_argument("--elite", type=int, default=None)
    p.add_argument("--tournament", type=int, default=None)
    _add_shared(p)

    cpx = nouns.add_parser("complexity", help="information-vs-scale profiles")
    cpx_verbs = cpx.add_subparsers(dest="verb", required=True)
    p = cpx_verbs.add_parser("profile")
    p.add_argument("--pattern", default=None)
    p.add_argument("--rule", default=None)
    p.add_argument("--gens", type=int, default=None)
    p.add_argument("--scales", default=None, help="comma-separated, e.g. 1,2,4")
    _add_shared(p)

    dyn = nouns.add_parser("dynamics", help="iterative-map diagnostics")
    dyn_verbs = dyn.add_subparsers(dest="verb", required=True)
    p = dyn_verbs.add_parser("lyapunov")
    p.add_argument("--map", dest="map_name", choices=["logistic"], default="logistic")
    p.add_argument("--r", type=float, default=None)
    p.add_argument("--x0", type=float, default=None)
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--burnin", type=int, default=None)
    _add_shared(p)
    p = dyn_verbs.add_parser("sweep")
    p.add_argument("--r-from", dest="r_from", type=float, default=None)
    p.add_argument("--r-to", dest="r_to", type=float, default=None)
    p.add_argument("--r-step", dest="r_step", type=float, default=None)
    p.add_argument("--x0", type=float, default=None)
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--burnin", type=int, default=None)
    _add_shared(p)
    return parser


def _merge_config(args: argparse.Namespace) -> dict:
    """Fill flag values left unset from the JSON config file; returns the
    raw document for subcommands (cas) that read structured sections."""
    doc: dict = {}
    if args.config:
        doc = json.loads(Path(args.config).read_text())
        if not isinstance(doc, dict):
            raise ScenarioError("config file must contain a JSON object")
        for key, value in doc.items():
            attr = key.replace("-", "_")
            if hasattr(args, attr) and getattr(args, attr) is None:
                setattr(args, attr, value)
    if args.seed is None:
        raise ScenarioError("an explicit seed is required (flag --seed or config 'seed')")
    return doc


@contextlib.contextmanager
def _csv_out(path: str | None):
    if path is None:
        yield csv.writer(sys.stdout, lineterminator="\n")
    else:
        with open(path, "w", newline="") as fh:
            yield csv.writer(fh, lineterminator="\n")


def _load_pattern(args) -> tuple[Grid, RuleSet | None, str]:
    if not args.pattern:
        raise ScenarioError("a --pattern file is required")
    path = Path(args.pattern)
    fmt = "rle" if path.suffix.lower() == ".rle" else "plaintext"
    grid, rule = decode_pattern(path.read_text(), fmt)
    return grid, rule, fmt


def _resolve_rule(args, header_rule: RuleSet | None) -> RuleSet:
    if args.rule:
        rule = RuleSet.parse(args.rule)
    elif header_rule is not None:
        rule = header_rule
    elif getattr(args, "topology", "square") == "hex":
        raise RuleError("hexagonal runs have no default rule; pass --rule explicitly")
    else:
        rule = CONWAY_LIFE
    states = getattr(args, "states", None)
    if states is not None:
        rule = RuleSet(birth=rule.birth, survival=rule.survival, states=states)
    return rule


def _cmd_life_run(args) -> int:
    grid, header_rule, _ = _load_pattern(args)
    rule = _resolve_rule(args, header_rule)
    if args.topology == "hex":
        grid = Grid(dict(grid.cells), topology=Topology.HEX)
    gens = args.gens if args.gens is not None else 0
    history = run(grid, rule, gens)
    if args.frames:
        frames_dir = Path(args.frames)
        frames_dir.mkdir(parents=True, exist_ok=True)
        for i, g in enumerate(history):
            (frames_dir / f"frame_{i:06d}.txt").write_text(encode_pattern(g, "plaintext"))
    if args.out:
        out_path = Path(args.out)
        fmt = "rle" if out_path.suffix.lower() == ".rle" else "plaintext"
        text = encode_pattern(history[-1], fmt, rule=rule if fmt == "rle" else None)
        out_path.write_text(text)
    if args.metrics:
        with _csv_out(args.metrics) as w:
            w.writerow(["generation", "population"])
            for i, g in enumerate(history):
                w.writerow([i, g.population])
    return 0


def _cmd_life_classify(args) -> int:
    grid, header_rule, _ = _load_pattern(args)
    rule = _resolve_rule(args, header_rule)
    print(classify_pattern(grid, rule, args.horizon))
    return 0


def _cmd_cas_run(args, doc: dict) -> int:
    if not doc:
        raise ScenarioError("cas run needs a scenario --config file")
    doc = dict(doc)
    doc["seed"] = args.seed
    env = build_environment(doc)
    ticks = args.ticks if args.ticks is not None else int(doc.get("ticks", 0))
    env, metrics = run_scenario(env, ticks)
    with _csv_out(args.metrics) as w:
        w.writerow(["tick", "agents", "mean_response", "mean_reward"])
        for row in metrics:
            w.writerow([row["tick"], row["agents"], row["mean_response"], row["mean_reward"]])
    return 0


def _cmd_ga_run(args) -> int:
    problem = args.problem or "onemax"
    length = args.length if args.length is not None else (16 if problem == "coevolve" else 64)
    cfg = EvolutionConfig(
        genome_length=length,
        population_size=args.pop if args.pop is not None else 100,
        generations=args.gens if args.gens is not None else 100,
        mutation_rate=args.mut if args.mut is not None else 0.01,
        crossover_rate=args.cx if args.cx is not None else 0.9,
        tournament_size=args.tournament if args.tournament is not None else 3,
        elitism=args.elite if args.elite is not None else 2,
        seed=args.seed,
    )
    if problem == "onemax":
        fitness = lambda genome: float(sum(1 for s in genome if s == "1"))
    else:
        fitness = episode_fitness()
    best, stats = evolve(cfg, fitness)
    with _csv_out(args.metrics) as w:
        w.writerow(["generation", "best", "mean"])
        for s in stats:
            w.writerow([s.generation, s.best, s.mean])
    print(f"best fitness {best.fitness} genome {''.join(best.genome)}", file=sys.stderr)
    return 0


def _cmd_complexity_profile(args) -> int:
    grid, header_rule, _ = _load_pattern(args)
    rule = _resolve_rule(args, header_rule)
    gens = args.gens if args.gens is not None else 0
    scales_text = args.scales or "1,2,4"
    scales = [int(s) for s in str(scales_text).split(",") if s.strip()]
    history = run(grid, rule, gens)
    profile = complexity_profile(history, scales)
    with _csv_out(args.metrics or args.out) as w:
        w.writerow(["scale", "omega", "bits"])
        for census in profile:
            w.writerow([census.scale, census.omega, census.bits])
    return 0


def _cmd_dynamics_lyapunov(args) -> int:
    r = args.r if args.r is not None else 4.0
    x0 = args.x0 if args.x0 is not None else 0.3
    steps = args.steps if args.steps is not None else 100_000
    burnin = args.burnin if args.burnin is not None else 1000
    rng = random.Random(args.seed)
    lam = divergence_rate(logistic_map(r), x0, steps, burn_in=burnin, rng=rng)
    with _csv_out(args.metrics or args.out) as w:
        w.writerow(["map", "r", "x0", "steps", "burnin", "lyapunov"])
        w.writerow([args.map_name, r, x0, steps, burnin, lam])
    return 0


def _cmd_dynamics_sweep(args) -> int:
    if args.r_from is None or args.r_to is None or args.r_step is None:
        raise ScenarioError("sweep needs --r-from, --r-to and --r-step")
    if args.r_step <= 0:
        raise ValueError("--r-step must be positive")
    x0 = args.x0 if args.x0 is not None else 0.3
    steps = args.steps if args.steps is not None else 2000
    burnin = args.burnin if args.burnin is not None else 500
    rng = random.Random(args.seed)
    with _csv_out(args.metrics or args.out) as w:
        w.writerow(["r", "lyapunov"])
        k = 0
        r = args.r_from
        while r <= args.r_to + 1e-12:
            lam = divergence_rate(logistic_map(r), x0, steps, burn_in=burnin, rng=rng)
            w.writerow([r, lam])
            k += 1
            r = args.r_from + k * args.r_step
    return 0


def execute(argv: list[str]) -> int:
    """Parse argv, run the subcommand, and map failures to exit codes."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        doc = _merge_config(args)
        command = (args.noun, args.verb)
        if command == ("life", "run"):
            return _cmd_life_run(args)
        if command == ("life", "classify"):
            return _cmd_life_classify(args)
        if command == ("cas", "run"):
            return _cmd_cas_run(args, doc)
        if command == ("ga", "run"):
            return _cmd_ga_run(args)
        if command == ("complexity", "profile"):
            return _cmd_complexity_profile(args)
        if command == ("dynamics", "lyapunov"):
            return _cmd_dynamics_lyapunov(args)
        if command == ("dynamics", "sweep"):
            return _cmd_dynamics_sweep(args)
        parser.error(f"unknown command {command}")
        return 2
    except (PatternFormatError, ScenarioError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (
        RuleError,
        DegenerateStrategyError,
        FrameError,
        EvaluationError,
        UnsupportedFormatError,
        DivergenceError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(execute(sys.argv[1:]))


if __name__ == "__main__":
    main()
