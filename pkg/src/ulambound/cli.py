"""Command-line entry point: ``ulambound {bound,sweep,game,verify}``.

Settings resolve as: command-line flag, then environment variable ``SPB_<KEY>``,
then a ``key=value`` config file (``--config`` or ``SPB_CONFIG``), then the
built-in default.

Exit codes:
  0  success
  1  runtime or I/O error
  2  usage error
  3  infeasible length (bound --n) or inconclusive game
  4  oracle and bounds disagree (verify)
"""

from __future__ import annotations

import argparse
import csv
import logging
import os
import sys
import time

from . import bounds, game, oracle

EXIT_OK, EXIT_ERROR, EXIT_USAGE, EXIT_NEGATIVE, EXIT_INCONSISTENT = 0, 1, 2, 3, 4

DEFAULTS = {
    "m_min": "1",
    "m_max": "100000",
    "t_list": "1,2,3,4",
    "workers": "1",
    "output": "-",
    "verify_m_max": "6",
    "verify_t_max": "2",
    "code_n_max": "8",
    "game_n_max": str(oracle.GAME_N_CAP),
}


def read_config(path: str) -> dict[str, str]:
    values = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            key, value = line.split("=", 1)
            values[key.strip().lower().replace("-", "_")] = value.strip()
    return values


class Settings:
    def __init__(self, args: argparse.Namespace, env=None):
        self.args = args
        self.env = os.environ if env is None else env
        path = getattr(args, "config", None) or self.env.get("SPB_CONFIG")
        self.file = read_config(path) if path else {}

    def get(self, key: str, cast=str):
        flag = getattr(self.args, key, None)
        if flag is not None:
            return flag
        env_key = "SPB_" + key.upper()
        if env_key in self.env:
            return cast(self.env[env_key])
        if key in self.file:
            return cast(self.file[key])
        return cast(DEFAULTS[key])


def int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def cmd_bound(args, settings, out) -> int:
    m, t = args.m, args.t
    spb_n = bounds.spb_min_length(m, t)
    if args.n is not None:
        candidates = [args.n]
    else:
        new_n = bounds.new_bound_min_length(m, t)
        print(f"m={m} t={t} spb_n={spb_n} new_n={new_n} "
              f"{'improved' if new_n > spb_n else 'equal'}", file=out)
        candidates = range(spb_n, new_n + 1) if args.show_k_sequence else []
    status = EXIT_OK
    for n in candidates:
        verdict = bounds.theorem2_feasible(n, m, t)
        if args.show_k_sequence:
            ks = ",".join(str(k) for k in bounds.k_sequence(n, m, t).values)
            print(f"n={n} K={ks}", file=out)
        if verdict:
            print(f"n={n} feasible spb={'yes' if bounds.spb_feasible(n, m, t) else 'no'}", file=out)
        else:
            print(f"n={n} infeasible at i={verdict.index} "
                  f"({verdict.k_value} > {verdict.limit})", file=out)
            if args.n is not None:
                status = EXIT_NEGATIVE
    return status


def write_sweep(rows, fh) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["m", "t", "spb_n", "new_n", "improved"])
    for r in rows:
        writer.writerow([r.m, r.t, r.spb_n, r.new_n, int(r.improved)])


def cmd_sweep(args, settings, out) -> int:
    m_min = settings.get("m_min", int)
    m_max = settings.get("m_max", int)
    t_list = settings.get("t_list", int_list)
    workers = settings.get("workers", int)
    output = settings.get("output")
    start = time.perf_counter()
    rows = bounds.sweep(m_min, m_max, t_list, workers=workers)
    if output == "-":
        write_sweep(rows, out)
    else:
        with open(output, "w", newline="") as fh:
            write_sweep(rows, fh)
    improved = sum(r.improved for r in rows)
    print(f"{len(rows)} rows, {improved} improved, {time.perf_counter() - start:.1f}s",
          file=sys.stderr)
    return EXIT_OK


def cmd_game(args, settings, out) -> int:
    params = game.GameParams(args.m, args.t, args.n)
    if args.script:
        with open(args.script) as fh:
            questions, answers = game.parse_script(fh.read())
        given = [a for a in answers if a is not None]
        if given and len(given) != len(answers):
            raise game.GameError("script gives answers on some lines but not others")
        trace = game.run_game(params, questions, answers if given else game.adversary_max_weight)
    else:
        trace = game.run_game(params)
    text = game.format_trace(trace)
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK if trace.conclusive else EXIT_NEGATIVE


def cmd_verify(args, settings, out) -> int:
    m_max = settings.get("verify_m_max", int)
    t_max = settings.get("verify_t_max", int)
    code_n_max = settings.get("code_n_max", int)
    game_n_max = settings.get("game_n_max", int)
    if code_n_max > oracle.CODE_N_CAP or game_n_max > oracle.GAME_N_CAP \
            or m_max > oracle.GAME_M_CAP or t_max > oracle.GAME_T_CAP:
        raise oracle.CapExceeded("verify grid exceeds the oracle caps")
    bad = 0
    for t in range(1, t_max + 1):
        for m in range(1, m_max + 1):
            spb_n = bounds.spb_min_length(m, t)
            new_n = bounds.new_bound_min_length(m, t)
            problems = []
            if new_n < spb_n:
                problems.append("new<spb")
            game_min = None
            for n in range(0, game_n_max + 1):
                if oracle.minimax_game(m, t, n) == oracle.PLAYER2:
                    game_min = n
                    break
            if game_min is not None and game_min < new_n:
                problems.append(f"game won at n={game_min}")
            code_min = None
            for n in range(0, code_n_max + 1):
                cert = oracle.code_exists(n, m, 2 * t + 1)
                if cert.exists:
                    if not oracle.validate_code(cert.code, t):
                        problems.append(f"bad witness n={n}")
                    code_min = n
                    break
            if code_min is not None and code_min < new_n:
                problems.append(f"code exists at n={code_min}")
            bad += bool(problems)
            print(f"m={m} t={t} spb_n={spb_n} new_n={new_n} "
                  f"game_min_n={'>' + str(game_n_max) if game_min is None else game_min} "
                  f"code_min_n={'>' + str(code_n_max) if code_min is None else code_min} "
                  f"{'INCONSISTENT ' + ';'.join(problems) if problems else 'consistent'}",
                  file=out)
    if args.check_code:
        code = oracle.BinaryCode.from_bits(args.check_code.split(","))
        t = args.check_t
        valid = oracle.validate_code(code, t)
        m = len(code.words)
        new_n = bounds.new_bound_min_length(m, t)
        ok = valid and code.n >= new_n
        bad += not ok
        print(f"code n={code.n} m={m} t={t} min_distance={code.min_distance()} "
              f"valid={'yes' if valid else 'no'} new_n={new_n} "
              f"{'consistent' if ok else 'INCONSISTENT'}", file=out)
    return EXIT_INCONSISTENT if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ulambound",
        description="Sphere-packing and liar-game bounds on binary code length.",
        epilog="exit codes: 0 ok, 1 error, 2 usage, 3 infeasible/inconclusive, 4 inconsistent",
    )
    parser.add_argument("--config", help="key=value settings file (also SPB_CONFIG)")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="minimum length for one (m, t)")
    p.add_argument("-m", type=positive, required=True, help="code size")
    p.add_argument("-t", type=nonneg, required=True, help="errors to correct")
    p.add_argument("--n", type=nonneg, help="test only this length")
    p.add_argument("--show-k-sequence", action="store_true")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("sweep", help="CSV of both bounds over a grid")
    p.add_argument("--m-min", dest="m_min", type=positive)
    p.add_argument("--m-max", dest="m_max", type=positive)
    p.add_argument("--t", dest="t_list", type=int_list, help="comma-separated t values")
    p.add_argument("--workers", type=positive)
    p.add_argument("-o", "--output", help="CSV path, - for stdout")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("game", help="play or replay a liar game")
    p.add_argument("-m", type=positive, required=True)
    p.add_argument("-t", type=nonneg, required=True)
    p.add_argument("-n", type=nonneg, required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--script", help="file of 'A=<chips> answer=<Y|N>' lines")
    src.add_argument("--auto", action="store_true",
                     help="balanced questioner against the max-weight answerer")
    p.add_argument("-o", "--output", help="trace path, default stdout")
    p.set_defaults(func=cmd_game)

    p = sub.add_parser("verify", help="check bounds against brute-force oracles")
    p.add_argument("--m-max", dest="verify_m_max", type=positive)
    p.add_argument("--t-max", dest="verify_t_max", type=nonneg)
    p.add_argument("--code-n-max", dest="code_n_max", type=nonneg)
    p.add_argument("--game-n-max", dest="game_n_max", type=nonneg)
    p.add_argument("--check-code", help="comma-separated codewords to validate")
    p.add_argument("--check-t", type=nonneg, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        settings = Settings(args)
        return args.func(args, settings, out)
    except (game.GameError, oracle.CapExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
