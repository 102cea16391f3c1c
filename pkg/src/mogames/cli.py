"""Command-line entry point: ``mogames <command> ...``."""
from __future__ import annotations

import argparse
import csv
import io as _io
import json
import sys
import time
from pathlib import Path
from typing import List, Optional

import numpy as np

from . import io
from .approx import approx_mocr, stick_cover, under_cover
from .equilibria import pareto_nash
from .exceptions import InvalidArgumentError, MOGError
from .games import NormalFormGame, representation_length
from .mixed import expected_payoff, is_def4_equilibrium, is_def5_equilibrium
from .mocr import mocr, mocr_oracle, ratio_member
from .potential import check_theorem1, gen_potential_game, is_exact_potential
from .randgames import (
    estimate_Z_moments,
    front_size_asymptote,
    gen_graphical_grid,
    gen_uniform_normal,
    gen_uniform_symmetric,
    sample_front_sizes,
)
from .vectors import format_rational, to_rational

APPROX_COLUMNS = ["n", "T(P1)", "m", "q", "m_ε", "q_ε", "T(P2)", "#MO-CR", "guarantee"]


def _range(text: str):
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError("LO must not exceed HI")
    return lo, hi


def _rational(text: str):
    try:
        value = to_rational(text)
    except MOGError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return value


def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _sub_seed(seed: int, *keys: int) -> int:
    return int(np.random.SeedSequence([seed, *keys]).generate_state(1)[0])


def _generate(kind: str, n: int, alpha: int, d: int, lo: int, hi: int, seed: int, n1=None, n2=None):
    if kind == "normal":
        return gen_uniform_normal(n, alpha, d, lo, hi, seed)
    if kind == "symmetric":
        return gen_uniform_symmetric(n, alpha, d, lo, hi, seed)
    if kind == "graphical-grid":
        if n1 is None or n2 is None:
            raise InvalidArgumentError("graphical-grid needs --grid-n1 and --grid-n2")
        return gen_graphical_grid(n1, n2, alpha, d, lo, hi, seed)
    raise InvalidArgumentError(f"unknown kind {kind!r}")


def cmd_gen(args) -> int:
    lo, hi = args.range
    if args.kind == "potential":
        game, phi = gen_potential_game(args.n, args.alpha, args.d, (lo, hi), args.seed)
        io.save_game(game, args.output)
        phi_out = args.phi_out or str(Path(args.output).with_suffix("")) + ".phi.json"
        io.save_game(phi, phi_out)
        return 0
    n = args.n
    if args.kind == "graphical-grid" and args.grid_n1 is not None and args.grid_n2 is not None:
        n = args.grid_n1 * args.grid_n2
    if n is None:
        raise InvalidArgumentError("--n is required")
    game = _generate(args.kind, n, args.alpha, args.d, lo, hi, args.seed, args.grid_n1, args.grid_n2)
    io.save_game(game, args.output)
    return 0


def _solved_sets(path: str):
    game = io.load_game(path)
    if not hasattr(game, "n"):
        raise InvalidArgumentError(f"{path} is a potential sidecar, not a game")
    return game, pareto_nash(game)


def cmd_solve(args) -> int:
    game, result = _solved_sets(args.game)
    data = io.solve_result_to_dict(result)
    if args.emit:
        out = data[args.emit]
    else:
        out = {"kind": io.game_to_dict(game)["kind"], "representation_length": representation_length(game), **data}
    _emit(io.dump_json(out), args.output)
    return 0


def _mocr_inputs(args):
    if args.game:
        _, result = _solved_sets(args.game)
        return result.wst_E, result.frontier_F, result.outcomes_E
    if not (args.wst_e and args.frontier):
        raise InvalidArgumentError("give a solved game file or both --wst-e and --frontier")
    E = io.load_vectors(args.wst_e)
    return E, io.load_vectors(args.frontier), E


def cmd_mocr(args) -> int:
    wst_E, F, _ = _mocr_inputs(args)
    result = mocr_oracle(wst_E, F) if args.oracle else mocr(wst_E, F)
    _emit(io.dump_json(io.vectors_to_json(result)), args.output)
    return 0


def _fmt(x: float) -> str:
    return f"{x:.4f}".rstrip("0").rstrip(".") if x != int(x) else str(int(x))


def _timed_solve(game):
    t0 = time.perf_counter()
    result = pareto_nash(game)
    return result, time.perf_counter() - t0


def _approx_row(solved, eps1, eps2, timing: bool) -> dict:
    acc = {k: 0.0 for k in ("T1", "m", "q", "me", "qe", "T2", "size")}
    guarantee = None
    n = None
    for game, result, t_solve in solved:
        n = game.n
        if not result.wst_E:
            raise InvalidArgumentError(f"instance with n={game.n} has no pure Pareto-Nash equilibrium")
        t1 = time.perf_counter()
        E_cov = under_cover(result.wst_E, eps1)
        F_cov = stick_cover(result.frontier_F, eps2)
        ratios, guarantee = approx_mocr(result.wst_E, result.frontier_F, eps1, eps2)
        t2 = time.perf_counter()
        acc["T1"] += t_solve
        acc["T2"] += t2 - t1
        acc["m"] += len(result.frontier_F)
        acc["q"] += len(result.wst_E)
        acc["me"] += len(F_cov)
        acc["qe"] += len(E_cov)
        acc["size"] += len(ratios)
    k = len(solved)
    na = "NA"
    return {
        "n": n,
        "T(P1)": f"{acc['T1'] / k:.3f}" if timing else na,
        "m": _fmt(acc["m"] / k),
        "q": _fmt(acc["q"] / k),
        "m_ε": _fmt(acc["me"] / k),
        "q_ε": _fmt(acc["qe"] / k),
        "T(P2)": f"{acc['T2'] / k:.3f}" if timing else na,
        "#MO-CR": _fmt(acc["size"] / k),
        "guarantee": format_rational(guarantee),
    }


def cmd_approx(args) -> int:
    rows = []
    timing = not args.no_timing
    if args.games:
        for path in args.games:
            game = io.load_game(path)
            rows.append(_approx_row([(game, *_timed_solve(game))], args.eps1, args.eps2, timing))
    else:
        if args.seed is None:
            raise InvalidArgumentError("generated instances need an explicit --seed")
        if args.repeat < 1:
            raise InvalidArgumentError("--repeat must be >= 1")
        lo, hi = args.range
        if args.kind == "graphical-grid":
            points = [(n1 * args.grid_n2, n1, args.grid_n2) for n1 in args.grid_n1_values]
        else:
            points = [(n, None, None) for n in args.n_values]
        if not points:
            raise InvalidArgumentError("no parameter points (use --n-values or --grid-n1-values)")
        budget = args.max_draws_factor * args.repeat
        for pi, (n, n1, n2) in enumerate(points):
            # Instances without a pure equilibrium have no MO-CR; they are
            # skipped and replaced by the next draw of the seed stream.
            solved = []
            for r in range(budget):
                game = _generate(args.kind, n, args.alpha, args.d, lo, hi, _sub_seed(args.seed, pi, r), n1, n2)
                result, t = _timed_solve(game)
                if result.wst_E:
                    solved.append((game, result, t))
                    if len(solved) == args.repeat:
                        break
            if len(solved) < args.repeat:
                raise InvalidArgumentError(
                    f"only {len(solved)} of {budget} draws at n={n} had a pure Pareto-Nash equilibrium"
                )
            rows.append(_approx_row(solved, args.eps1, args.eps2, timing))
    buf = _io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=APPROX_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    _emit(buf.getvalue(), args.output)
    return 0


def cmd_montecarlo(args) -> int:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if args.mode == "z":
        m = estimate_Z_moments(args.n, args.alpha, args.beta, args.trials, args.seed, args.threads)
        writer.writerow(["trial", "Z"])
        writer.writerows((t, int(z)) for t, z in enumerate(m.samples))
        summary = {
            "mode": "z", "n": args.n, "alpha": args.alpha, "beta": args.beta, "trials": args.trials,
            "seed": args.seed, "mean": m.mean, "variance": m.variance, "expected": m.expected,
            "tail": [
                {"gamma": g, "band": list(m.band(g)), "freq": m.tail_freq(g), "bound": m.chebyshev_bound(g)}
                for g in args.gamma
            ],
        }
    else:
        sizes = sample_front_sizes(args.alpha, args.d, args.trials, args.seed, args.threads)
        writer.writerow(["trial", "beta"])
        writer.writerows((t, int(b)) for t, b in enumerate(sizes))
        asym = front_size_asymptote(args.alpha, args.d)
        summary = {
            "mode": "beta", "alpha": args.alpha, "d": args.d, "trials": args.trials, "seed": args.seed,
            "mean": float(sizes.mean()), "asymptote": asym, "ratio": float(sizes.mean()) / asym,
        }
    _emit(buf.getvalue(), args.output)
    text = json.dumps(summary) + "\n"
    if args.summary:
        Path(args.summary).write_text(text, encoding="utf-8")
    else:
        sys.stderr.write(text)
    return 0


def cmd_check_potential(args) -> int:
    game = io.load_game(args.game)
    phi = io.load_game(args.phi)
    if not isinstance(game, NormalFormGame):
        raise InvalidArgumentError("check-potential needs a normal-form game")
    exact = is_exact_potential(game, phi)
    out = {"exact_potential": exact}
    if exact:
        report = check_theorem1(game, phi)
        out.update(
            pn=sorted(list(p) for p in report.pn),
            loc=sorted(list(p) for p in report.loc),
            equal=report.equal,
            nonempty=report.nonempty,
        )
    _emit(io.dump_json(out), args.output)
    return 0 if exact else 1


def cmd_mixed(args) -> int:
    game = io.load_game(args.game)
    profile = io.load_mixed(args.profile)
    out = {
        "expected": [io.vec_to_json(expected_payoff(game, profile, i)) for i in range(game.n)],
        "def4": is_def4_equilibrium(game, profile),
        "def5": is_def5_equilibrium(game, profile),
    }
    _emit(io.dump_json(out), args.output)
    return 0


def cmd_membership_grid(args) -> int:
    _, F, E = _mocr_inputs(args)
    if len(F[0]) != 2:
        raise InvalidArgumentError("membership-grid needs d = 2")
    res = args.resolution
    if res < 1:
        raise InvalidArgumentError("--resolution must be >= 1")
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["rho1", "rho2", "member"])
    for i in range(res + 1):
        for j in range(res + 1):
            rho = (to_rational(f"{i}/{res}"), to_rational(f"{j}/{res}"))
            writer.writerow([format_rational(rho[0]), format_rational(rho[1]), int(ratio_member(rho, E, F))])
    _emit(buf.getvalue(), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mogames", description="Multi-objective game analysis toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a random game JSON file")
    p.add_argument("--kind", choices=["normal", "symmetric", "graphical-grid", "potential"], required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--alpha", type=int, default=2)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--range", type=_range, default=(1, 16))
    p.add_argument("--grid-n1", type=int)
    p.add_argument("--grid-n2", type=int)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--phi-out", help="potential sidecar path (default: <output stem>.phi.json)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="enumerate pure Pareto-Nash equilibria")
    p.add_argument("game")
    p.add_argument("--emit", choices=["pn", "E", "effE", "wstE", "F"])
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_solve)

    def ratio_inputs(p):
        p.add_argument("game", nargs="?")
        p.add_argument("--wst-e", help="JSON array of worst equilibrium outcomes")
        p.add_argument("--frontier", help="JSON array of efficient outcomes")
        p.add_argument("-o", "--output")

    p = sub.add_parser("mocr", help="exact multi-objective coordination ratio")
    ratio_inputs(p)
    p.add_argument("--oracle", action="store_true", help="use the path-expansion oracle")
    p.set_defaults(func=cmd_mocr)

    p = sub.add_parser("approx", help="approximation pipeline; CSV with sizes and wall times")
    p.add_argument("games", nargs="*")
    p.add_argument("--eps1", type=_rational, default=to_rational("0.065"))
    p.add_argument("--eps2", type=_rational, default=to_rational("0.035"))
    p.add_argument("--kind", choices=["normal", "graphical-grid"], default="graphical-grid")
    p.add_argument("--n-values", type=_int_list, default=[])
    p.add_argument("--grid-n1-values", type=_int_list, default=[])
    p.add_argument("--grid-n2", type=int, default=1)
    p.add_argument("--alpha", type=int, default=2)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--range", type=_range, default=(1, 16))
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--seed", type=int)
    p.add_argument("--max-draws-factor", type=int, default=10,
                   help="give up after repeat*factor draws without enough solvable instances")
    p.add_argument("--no-timing", action="store_true", help="write NA for wall times (byte-reproducible output)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("montecarlo", help="random-ensemble estimators")
    p.add_argument("--mode", choices=["z", "beta"], required=True)
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--alpha", type=int, default=4)
    p.add_argument("--beta", type=int, default=2)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--trials", type=int, default=2000)
    p.add_argument("--gamma", type=float, action="append", help="band half-width (repeatable)")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--summary", help="write the summary JSON here instead of stderr")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_montecarlo)

    p = sub.add_parser("check-potential", help="verify an exact potential and PN = LOC")
    p.add_argument("game")
    p.add_argument("phi")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_check_potential)

    p = sub.add_parser("mixed", help="check both mixed-equilibrium definitions")
    p.add_argument("game")
    p.add_argument("profile")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_mixed)

    p = sub.add_parser("membership-grid", help="ratio membership on a [0,1]^2 lattice, as CSV")
    ratio_inputs(p)
    p.add_argument("--resolution", type=int, default=20)
    p.set_defaults(func=cmd_membership_grid)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "gamma", "unset") is None:
        args.gamma = [0.5, 0.75]
    try:
        return args.func(args)
    except (MOGError, OSError) as exc:
        print(f"mogames {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
