"""``lazyqw`` command line: walk, synth, simulate, verify, codec, gates.

Exit codes: 0 on success, 1 on invalid input, 2 when verification fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from lazyqw import netlist
from lazyqw.circuit import Circuit, run
from lazyqw.codec import VARIANTS, PositionCodec
from lazyqw.gates import Z_KINDS, CoinSpec, coin_matrix, z_matrix
from lazyqw.statevector import index_trits, probabilities
from lazyqw.synth import SCHEDULES, SynthConfig, synth_walk
from lazyqw.verify import verify
from lazyqw.walk import PRUNE_BELOW, WalkConfig, distribution, evolve

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VERIFY_FAILED = 2


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    # repr is the shortest string that round-trips to the same double
    return repr(float(x))


def _coin(text: str) -> CoinSpec:
    try:
        return CoinSpec.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _synth_config(args: argparse.Namespace) -> SynthConfig:
    try:
        return SynthConfig(
            q=args.q,
            steps=args.steps,
            coin=_coin(args.coin),
            variant=args.variant,
            schedule=getattr(args, "schedule", "incremental"),
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def walk_csv(config: WalkConfig) -> str:
    lines = ["x,probability"]
    # every site in the support is listed, including vanishingly small ones
    lines += [f"{x},{fmt(p)}" for x, p in distribution(evolve(config), prune=0.0)]
    return "\n".join(lines) + "\n"


def probabilities_csv(circuit: Circuit) -> str:
    state = run(circuit)
    lines = ["index,trits,probability"]
    for i, p in enumerate(probabilities(state)):
        if p > PRUNE_BELOW:
            lines.append(f"{i},{index_trits(i, state.n)},{fmt(p)}")
    return "\n".join(lines) + "\n"


def codec_csv(codec: PositionCodec) -> str:
    return "x,trits\n" + "".join(f"{x},{s}\n" for x, s in codec.rows())


def gates_json() -> str:
    gates = {f"Z{k}": netlist.matrix_to_json(z_matrix(k)) for k in Z_KINDS}
    for tag in ("dft", "grover", "hadamard"):
        gates[f"COIN:{tag}"] = netlist.matrix_to_json(coin_matrix(CoinSpec(tag)))
    return json.dumps(gates, indent=2) + "\n"


def cmd_walk(args: argparse.Namespace) -> int:
    try:
        config = WalkConfig(args.kind, _coin(args.coin), args.steps, args.initial_coin)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write(walk_csv(config), args.out)
    return EXIT_OK


def cmd_synth(args: argparse.Namespace) -> int:
    circuit = synth_walk(_synth_config(args))
    _write(netlist.dumps(circuit), args.out)
    return EXIT_OK


def cmd_simulate(args: argparse.Namespace) -> int:
    if args.shots != "none":
        raise UsageError("only --shots none (exact probabilities) is supported")
    try:
        text = Path(args.netlist).read_text() if args.netlist != "-" else sys.stdin.read()
    except OSError as exc:
        raise UsageError(f"cannot read netlist: {exc}") from None
    try:
        circuit = netlist.loads(text)
    except netlist.NetlistError as exc:
        raise UsageError(f"malformed netlist at {exc}") from None
    _write(probabilities_csv(circuit), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    config = _synth_config(args)
    report = verify(config, args.tolerance)
    _write(json.dumps(report.to_dict(), indent=2) + "\n", args.out)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_codec(args: argparse.Namespace) -> int:
    try:
        codec = PositionCodec(args.q, args.variant)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write(codec_csv(codec), args.out)
    return EXIT_OK


def cmd_gates(args: argparse.Namespace) -> int:
    _write(gates_json(), args.out)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lazyqw", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", default=None, help="output path (default: stdout)")

    p = sub.add_parser("walk", help="evolve a walk directly and print x,probability")
    p.add_argument("--kind", choices=("binary", "ternary"), default="ternary")
    p.add_argument("--coin", default="dft", help="dft|grover|grho:RHO|lackadaisical:L|hadamard")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--initial-coin", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_walk)

    def synth_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--q", type=int, required=True, help="number of position qutrits")
        p.add_argument("--steps", type=int, required=True)
        p.add_argument("--coin", default="dft")
        p.add_argument("--variant", choices=VARIANTS, default="primary")

    p = sub.add_parser("synth", help="emit a netlist for the walk circuit")
    synth_flags(p)
    p.add_argument("--schedule", choices=SCHEDULES, default="incremental")
    common(p)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("simulate", help="run a netlist from |0...0> and print probabilities")
    p.add_argument("--netlist", required=True, help="netlist path, or - for stdin")
    p.add_argument("--shots", default="none")
    common(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="compare circuit output against direct evolution")
    synth_flags(p)
    p.add_argument("--schedule", choices=SCHEDULES, default="incremental")
    p.add_argument("--tolerance", type=float, default=1e-9)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("codec", help="dump the position mapping as x,trits")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--variant", choices=VARIANTS, default="primary")
    common(p)
    p.set_defaults(func=cmd_codec)

    p = sub.add_parser("gates", help="dump gate matrices as JSON")
    p.add_argument("--list", action="store_true", help="list every gate (the default)")
    common(p)
    p.set_defaults(func=cmd_gates)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"lazyqw {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
