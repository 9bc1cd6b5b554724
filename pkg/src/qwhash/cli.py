"""Command-line front end.

Exit status is 0 on success, 2 on invalid input and 1 on runtime failure.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys

from . import stats
from .digest import digest
from .message import Message, MessageError
from .params import ParamError, WalkParams
from .walk import evolve, probabilities

EXIT_OK, EXIT_RUNTIME, EXIT_USAGE = 0, 1, 2

AXIS_NAMES = ("x", "y", "z")
_FLAG_FOR_FIELD = {
    "n": "--n",
    "d": "--dim",
    "k": "--k",
    "theta1": "--theta1",
    "theta2": "--theta2",
    "alpha/beta": "--alpha/--beta",
}


class UsageError(Exception):
    pass


def parse_complex(text: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected RE,IM pair, got {text!r}")


def _add_params(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("walk parameters")
    g.add_argument("--n", type=int, default=5, help="lattice side length (default 5)")
    g.add_argument("--dim", type=int, default=2, help="spatial dimension, 2 or 3 (default 2)")
    g.add_argument("--k", type=int, default=8, help="bits per cell (default 8)")
    g.add_argument("--theta1", type=float, required=True, help="coin angle for bit 0, radians")
    g.add_argument("--theta2", type=float, required=True, help="coin angle for bit 1, radians")
    g.add_argument("--alpha", type=parse_complex, default=complex(1.0), metavar="RE,IM")
    g.add_argument("--beta", type=parse_complex, default=complex(0.0), metavar="RE,IM")
    g.add_argument("--out", metavar="PATH", help="write output here instead of stdout")


def _add_message(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("message source (exactly one)")
    src = g.add_mutually_exclusive_group(required=True)
    src.add_argument("--msg-bits", metavar="BITS", help="bit literal, e.g. 0100")
    src.add_argument("--msg-hex", metavar="HEX", help="hex string, most significant nibble first")
    src.add_argument("--msg-text", metavar="TEXT", help="UTF-8 text, bytes expanded MSB first")
    src.add_argument("--msg-file", metavar="PATH", help="file contents, bytes expanded MSB first")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwhash", description="Quantum-walk hash: digests, distributions and statistical campaigns."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hash", help="print the digest of a message")
    _add_params(p)
    _add_message(p)
    p.add_argument("--format", choices=["hex", "json", "bin"], default="hex")

    p = sub.add_parser("dist", help="dump the final position distribution")
    _add_params(p)
    _add_message(p)
    p.add_argument("--format", choices=["csv", "json"], default="csv")

    for name, help_text in (
        ("avalanche", "diffusion/confusion statistics of one-bit flips"),
        ("collision", "matching-cell histogram against the binomial model"),
        ("uniform", "per-position changed-bit counts"),
    ):
        p = sub.add_parser(name, help=help_text)
        _add_params(p)
        p.add_argument("--trials", type=int, required=True)
        p.add_argument("--msg-len", type=int, default=stats.DEFAULT_MSG_LEN)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--workers", type=int, default=1, help="threads used for trials")
        p.add_argument("--format", choices=["json", "csv"], default="json")
    return parser


def params_from_args(args) -> WalkParams:
    return WalkParams(
        theta1=args.theta1,
        theta2=args.theta2,
        alpha=args.alpha,
        beta=args.beta,
        n=args.n,
        d=args.dim,
        k=args.k,
    )


def message_from_args(args) -> Message:
    sources = (
        ("--msg-bits", args.msg_bits, Message.from_bits),
        ("--msg-hex", args.msg_hex, Message.from_hex),
        ("--msg-text", args.msg_text, Message.from_text),
        ("--msg-file", args.msg_file, Message.from_file),
    )
    for flag, value, parse in sources:
        if value is None:
            continue
        try:
            return parse(value)
        except (MessageError, OSError) as exc:
            raise UsageError(f"{flag}: {exc}") from None
    raise UsageError("no message source given")


def run_hash(args, params: WalkParams, message: Message) -> str | bytes:
    dg = digest(params, message)
    if args.format == "bin":
        try:
            return dg.to_bytes()
        except ValueError:
            raise UsageError("--format bin: requires --k 8") from None
    if args.format == "json":
        doc = {"n": dg.n, "dim": dg.d, "k": dg.k, "bit_length": dg.bit_length, "hex": dg.hex}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    return dg.hex + "\n"


def run_dist(args, params: WalkParams, message: Message) -> str:
    probs = probabilities(evolve(params, message))
    coords = list(itertools.product(range(params.n), repeat=params.d))
    values = probs.reshape(-1).tolist()
    axes = AXIS_NAMES[: params.d]
    if args.format == "json":
        rows = [dict(zip(axes, c), probability=v) for c, v in zip(coords, values)]
        return json.dumps(rows, indent=2) + "\n"
    lines = [",".join(axes) + ",probability"]
    lines += [",".join(map(str, c)) + f",{v!r}" for c, v in zip(coords, values)]
    return "\n".join(lines) + "\n"


_CAMPAIGNS = {
    "avalanche": stats.diffusion_test,
    "collision": stats.collision_test,
    "uniform": stats.uniform_test,
}


def run_campaign(args, params: WalkParams) -> str:
    for flag, value, low in (("--trials", args.trials, 1), ("--msg-len", args.msg_len, 1), ("--workers", args.workers, 1)):
        if value < low:
            raise UsageError(f"{flag}: must be >= {low}, got {value}")
    if args.seed < 0:
        raise UsageError(f"--seed: must be non-negative, got {args.seed}")
    report = _CAMPAIGNS[args.command](params, args.trials, args.msg_len, args.seed, args.workers)
    return report.to_csv() if args.format == "csv" else report.to_json()


def _emit(output: str | bytes, path: str | None) -> None:
    data = output.encode() if isinstance(output, str) else output
    if path:
        with open(path, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        try:
            params = params_from_args(args)
        except ParamError as exc:
            flag = _FLAG_FOR_FIELD.get(exc.field, exc.field)
            raise UsageError(f"{flag}: {str(exc).split(': ', 1)[1]}") from None
        if args.command in ("hash", "dist"):
            message = message_from_args(args)
            runner = run_hash if args.command == "hash" else run_dist
            output = runner(args, params, message)
        else:
            output = run_campaign(args, params)
    except UsageError as exc:
        print(f"qwhash: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"qwhash: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    _emit(output, args.out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
