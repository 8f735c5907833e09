"""Command-line front end: measure, sample, sweep and verify subcommands.

All outputs are deterministic for a fixed argument set: runs embed their
parameters, floats are printed in round-trippable form, and sampling is
reproducible for a fixed seed regardless of worker count.
"""
import argparse
import json
import sys
from pathlib import Path

import numpy as np

from discord_lab import __version__, dominance, entropic, geometric, kernels
from discord_lab.dominance import (
    DEFAULT_CHUNK,
    DominanceClass,
    correlation_report,
    geometric_dominant_points,
    grid_fraction,
    monte_carlo_sample,
    monte_carlo_summary,
    sweep_family,
    _chunk_states,
)
from discord_lab.states import BellDiagonalState, InvalidStateError, to_density_matrix

DUMP_COLUMNS = (
    "c1,c2,c3,mutual_info,classical_e,discord_e,classical_g,discord_g,"
    "delta_e,delta_g,class"
)
SWEEP_COLUMNS = "t,c1,c2,c3,delta_e,delta_g"

VERIFY_TOL_ENTROPIC = 1e-4
VERIFY_TOL_GEOMETRIC = 1e-6
VERIFY_TOL_FRACTION = 0.005


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {v}")
    return v


def _steps_arg(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError(f"steps must be >= 2, got {v}")
    return v


def _seed_arg(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 unsigned bits, got {v}")
    return v


def _odd_grid(text: str) -> int:
    v = int(text)
    if v < 101 or v % 2 == 0:
        raise argparse.ArgumentTypeError(
            f"grid resolution must be an odd integer >= 101, got {v}"
        )
    return v


def _write_text(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _json_dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _class_labels(measures: np.ndarray) -> np.ndarray:
    e = measures[:, 2] > measures[:, 1]
    g = measures[:, 4] > measures[:, 3]
    labels = np.full(len(measures), DominanceClass.NEITHER.value, dtype=object)
    labels[e & ~g] = DominanceClass.ENTROPIC_ONLY.value
    labels[~e & g] = DominanceClass.GEOMETRIC_ONLY.value
    labels[e & g] = DominanceClass.BOTH.value
    return labels


def _dump_rows(states: np.ndarray, measures: np.ndarray) -> str:
    labels = _class_labels(measures)
    deltas = np.stack(
        [measures[:, 2] - measures[:, 1], measures[:, 4] - measures[:, 3]], axis=1
    )
    lines = [DUMP_COLUMNS]
    for row_c, row_m, row_d, label in zip(states, measures, deltas, labels):
        nums = [repr(float(v)) for v in (*row_c, *row_m, *row_d)]
        lines.append(",".join(nums) + f",{label}")
    return "\n".join(lines) + "\n"


def cmd_measure(args) -> int:
    try:
        report = correlation_report((args.c1, args.c2, args.c3))
    except InvalidStateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        payload = {
            "command": "measure",
            "c1": report.state.c1,
            "c2": report.state.c2,
            "c3": report.state.c3,
            "mutual_info": report.mutual_info,
            "classical_e": report.classical_e,
            "discord_e": report.discord_e,
            "classical_g": report.classical_g,
            "discord_g": report.discord_g,
            "delta_e": report.delta_e,
            "delta_g": report.delta_g,
            "class": report.dominance.value,
        }
        text = _json_dumps(payload)
    else:
        values = (
            report.state.c1, report.state.c2, report.state.c3,
            report.mutual_info, report.classical_e, report.discord_e,
            report.classical_g, report.discord_g,
            report.delta_e, report.delta_g,
        )
        row = ",".join(format(v, ".12g") for v in values)
        text = f"{DUMP_COLUMNS}\n{row},{report.dominance.value}\n"
    _write_text(text, args.out)
    return 0


def cmd_sample(args) -> int:
    if args.dump is None:
        summary = monte_carlo_summary(args.n, seed=args.seed, chunk_size=args.chunk_size)
    else:
        summary, states, measures = monte_carlo_sample(
            args.n, seed=args.seed, chunk_size=args.chunk_size
        )
        try:
            _write_text(_dump_rows(states, measures), args.dump)
        except OSError as exc:
            print(f"error: cannot write dump: {exc}", file=sys.stderr)
            return 1
    if args.format == "json":
        payload = {
            "command": "sample",
            "n": summary.n,
            "seed": summary.seed,
            "chunk_size": summary.chunk_size,
            "proposals": summary.proposals,
            "counts": summary.counts(),
            "fractions": summary.fractions(),
        }
        text = _json_dumps(payload)
    else:
        counts = summary.counts()
        fractions = summary.fractions()
        head = ["n", "seed", "chunk_size", "proposals"]
        vals = [summary.n, summary.seed, summary.chunk_size, summary.proposals]
        for key in ("Neither", "EntropicOnly", "GeometricOnly", "Both",
                    "entropic_dominant", "geometric_dominant"):
            head.append(key)
            vals.append(counts[key])
        for key in ("Neither", "EntropicOnly", "GeometricOnly", "Both",
                    "entropic_dominant", "geometric_dominant"):
            head.append(f"frac_{key}")
            vals.append(repr(fractions[key]))
        text = ",".join(head) + "\n" + ",".join(str(v) for v in vals) + "\n"
    try:
        _write_text(text, args.out)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 1
    return 0


def cmd_sweep(args) -> int:
    points = sweep_family(args.family, args.steps)
    if args.format == "json":
        payload = {
            "command": "sweep",
            "family": args.family,
            "steps": args.steps,
            "points": [
                {
                    "t": p.t,
                    "c1": p.state.c1,
                    "c2": p.state.c2,
                    "c3": p.state.c3,
                    "delta_e": p.delta_e,
                    "delta_g": p.delta_g,
                }
                for p in points
            ],
        }
        text = _json_dumps(payload)
    else:
        lines = [SWEEP_COLUMNS]
        for p in points:
            vals = (p.t, p.state.c1, p.state.c2, p.state.c3, p.delta_e, p.delta_g)
            lines.append(",".join(repr(float(v)) for v in vals))
        text = "\n".join(lines) + "\n"
    try:
        _write_text(text, args.out)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 1
    return 0


def cmd_verify(args) -> int:
    states, _ = _chunk_states(args.seed, 0, args.samples)

    worst_e = (-1.0, None)
    worst_g = (-1.0, None)
    for c in states:
        s = BellDiagonalState(c[0], c[1], c[2])
        closed = entropic.classical_correlation_bd(s)
        optimized, _ = entropic.classical_correlation_optimized(to_density_matrix(s))
        dev = abs(closed - optimized)
        if dev > worst_e[0]:
            worst_e = (dev, s)
        dev = abs(geometric.geometric_discord_bd(s) - geometric.geometric_discord_oracle(s))
        if dev > worst_g[0]:
            worst_g = (dev, s)

    summary = monte_carlo_summary(args.mc_n, seed=args.seed)
    mc_frac = summary.fractions()["geometric_dominant"]
    grid_frac = grid_fraction(geometric_dominant_points, args.grid)
    frac_dev = abs(mc_frac - grid_frac)

    checks = [
        ("classical correlation: closed form vs grid optimization",
         worst_e[0], VERIFY_TOL_ENTROPIC, worst_e[1]),
        ("geometric discord: closed form vs measurement oracle",
         worst_g[0], VERIFY_TOL_GEOMETRIC, worst_g[1]),
        ("geometric dominance fraction: monte carlo vs grid census",
         frac_dev, VERIFY_TOL_FRACTION, None),
    ]
    print(
        f"verify: samples={args.samples} seed={args.seed} "
        f"grid={args.grid} mc_n={args.mc_n} backend={kernels.BACKEND}"
    )
    ok = True
    for label, dev, tol, state in checks:
        status = "PASS" if dev <= tol else "FAIL"
        line = f"{label}: max deviation {dev:.6e} (tol {tol:.0e}) {status}"
        print(line)
        if status == "FAIL":
            ok = False
            if state is not None:
                print(
                    f"  worst state: ({state.c1!r}, {state.c2!r}, {state.c3!r})"
                )
    print(f"mc geometric fraction {mc_frac!r}, grid fraction {grid_frac!r}")
    print(f"result: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="discord-lab",
        description=(
            "Entropic and geometric correlation measures for two-qubit "
            "Bell-diagonal states."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    m = sub.add_parser("measure", help="report all measures for one state")
    m.add_argument("--c1", type=float, required=True)
    m.add_argument("--c2", type=float, required=True)
    m.add_argument("--c3", type=float, required=True)
    m.add_argument("--format", choices=("csv", "json"), default="json")
    m.add_argument("--out", default=None, help="output path (default stdout)")
    m.set_defaults(func=cmd_measure)

    s = sub.add_parser("sample", help="Monte Carlo dominance census")
    s.add_argument("--n", type=_positive_int, default=100_000)
    s.add_argument("--seed", type=_seed_arg, default=dominance.DEFAULT_SEED)
    s.add_argument("--dump", default=None, help="write per-state CSV here")
    s.add_argument("--out", default=None)
    s.add_argument("--format", choices=("csv", "json"), default="json")
    s.add_argument("--chunk-size", type=_positive_int, default=DEFAULT_CHUNK)
    s.set_defaults(func=cmd_sample)

    w = sub.add_parser("sweep", help="tabulate one example family")
    w.add_argument("--family", type=int, choices=(1, 2, 3), required=True)
    w.add_argument("--steps", type=_steps_arg, required=True)
    w.add_argument("--out", default=None)
    w.add_argument("--format", choices=("csv", "json"), default="csv")
    w.set_defaults(func=cmd_sweep)

    v = sub.add_parser("verify", help="closed forms vs optimization oracles")
    v.add_argument("--samples", type=_positive_int, default=1000)
    v.add_argument("--grid", type=_odd_grid, default=201)
    v.add_argument("--seed", type=_seed_arg, default=dominance.DEFAULT_SEED)
    v.add_argument("--mc-n", type=_positive_int, default=100_000)
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
