"""``ranmar`` command line: generate, jump, streams, bench, selftest.

Exit status: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import state_io
from .bench import DEFAULT_COUNT, DEFAULT_JUMPS, run_bench
from .core import Ranmar
from .jump import jump_state, make_streams
from .params import SCALE, SEED_MAX
from .polyring import parse_jump_count
from .seeding import init

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
CHUNK = 1 << 16

log = logging.getLogger("ranmar")


def _seed(text: str) -> int:
    try:
        seed = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}") from None
    if not 0 <= seed <= SEED_MAX:
        raise argparse.ArgumentTypeError(f"seed must be in [0, {SEED_MAX}]")
    return seed


def _jump(text: str) -> int:
    try:
        return parse_jump_count(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _count(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid count {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("count must be nonnegative")
    return n


def _positive(text: str) -> int:
    n = _count(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def _jump_list(text: str) -> list[int]:
    return [_jump(part) for part in text.split(",") if part.strip()]


FORMATTERS = {
    "u24": lambda u: f"{u}",
    "hex": lambda u: f"{u:06x}",
    "f64": lambda u: f"{u * SCALE:#.17g}",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ranmar", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit outputs of a seeded stream")
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--count", type=_count, required=True)
    p.add_argument("--skip", type=_jump, default=0, help="outputs to jump over first")
    p.add_argument("--format", choices=sorted(FORMATTERS), default="u24")

    p = sub.add_parser("jump", help="advance a saved state")
    p.add_argument("--state", type=Path, required=True)
    p.add_argument("--by", type=_jump, required=True)
    p.add_argument("--out", type=Path, required=True)

    p = sub.add_parser("streams", help="write start states of consecutive blocks")
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--block", type=_jump, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--out-dir", type=Path, required=True)

    p = sub.add_parser("bench", help="time generation and jump-ahead")
    p.add_argument("--count", type=_positive, default=DEFAULT_COUNT)
    p.add_argument("--jumps", type=_jump_list, default=list(DEFAULT_JUMPS))
    p.add_argument("--repeats", type=_positive, default=5)

    sub.add_parser("selftest", help="run the built-in verification suite")
    return parser


def stream_filename(k: int) -> str:
    return f"stream_{k:06d}.state"


def cmd_generate(args, out) -> int:
    gen = Ranmar(init(args.seed))
    if args.skip:
        gen.jump(args.skip)
    fmt = FORMATTERS[args.format]
    remaining = args.count
    while remaining:
        n = min(remaining, CHUNK)
        out.write("".join(fmt(int(u)) + "\n" for u in gen.u24_array(n)))
        remaining -= n
    return EXIT_OK


def cmd_jump(args, out) -> int:
    try:
        state = state_io.load(args.state)
    except state_io.StateFormatError as exc:
        print(f"ranmar: {args.state}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    state_io.save(jump_state(state, args.by), args.out)
    return EXIT_OK


def cmd_streams(args, out) -> int:
    if args.block < 1:
        print("ranmar: --block must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    args.out_dir.mkdir(parents=True, exist_ok=True)
    for k, state in enumerate(make_streams(args.seed, args.block, args.n)):
        state_io.save(state, args.out_dir / stream_filename(k))
    return EXIT_OK


def cmd_bench(args, out) -> int:
    report = run_bench(args.count, args.jumps, args.repeats)
    json.dump(report.to_dict(), out, indent=2)
    out.write("\n")
    return EXIT_OK


def cmd_selftest(args, out) -> int:
    from .verify import run_selftest

    results = run_selftest()
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        line = f"{status} {r.name} ({r.seconds:.2f}s)"
        if r.detail:
            line += f": {r.detail}"
        out.write(line + "\n")
    ok = all(r.ok for r in results)
    out.write(f"{'all checks passed' if ok else 'selftest FAILED'}\n")
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "generate": cmd_generate,
    "jump": cmd_jump,
    "streams": cmd_streams,
    "bench": cmd_bench,
    "selftest": cmd_selftest,
}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(name)s: %(message)s",
    )
    try:
        return COMMANDS[args.command](args, out)
    except OSError as exc:
        # unreadable or unwritable paths are bad arguments
        print(f"ranmar: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
