"""
Command-line entry point.

    delaylab sim circuit.net waves.txt --horizon 20 -o out.vcd
    delaylab tdelay waves.txt u x
    delaylab check symmetry --dc "window_all(2,2)" --seed 7 --count 200
    delaylab theorems --seed 42 --json report.json
"""
import argparse
import sys
from typing import List, Optional

from delaylab import __version__
from delaylab.config import Config
from delaylab.core.circuit.netlist import Stimulus
from delaylab.core.lab.corpus import generate_corpus
from delaylab.core.lab.theorems import run_theorem_suite
from delaylab.core.registry import get_delay_engine, get_property_engine, get_simulation_engine
from delaylab.core.signal.utils import as_time
from delaylab.exceptions import DelayLabError, FormatError
from delaylab.formats.dc_language import parse_dc
from delaylab.formats.netlist import read_netlist
from delaylab.formats.utils import atomic_write
from delaylab.formats.vcd import export_vcd
from delaylab.formats.wavefile import WaveFile, print_wavefile, read_wavefile
from delaylab.schemas.lab import CorpusConfig
from delaylab.schemas.verdicts import Verdict
from delaylab.utils.logger import configure_logging, logger

EXIT_OK, EXIT_FAILS, EXIT_USAGE = 0, 1, 2

PROPERTIES = ("determinism", "inclusion", "time-invariance", "constancy", "symmetry")


class UsageError(DelayLabError):
    def __init__(self, message: str):
        super().__init__(message, "usage")


def _lab_section(name: str) -> dict:
    try:
        return Config.load_yaml("lab").get(name, {})
    except FileNotFoundError:
        return {}


# ---------------------------------------------------------------------------
# Sub-commands
# ---------------------------------------------------------------------------

def cmd_sim(args) -> int:
    netlist = read_netlist(args.netlist)
    waves = read_wavefile(args.wavefile)
    missing = [name for name in netlist.inputs if name not in waves]
    if missing:
        raise UsageError(f"{args.wavefile} has no signal for input(s) {', '.join(missing)}")
    stimulus = Stimulus({name: waves[name] for name in netlist.inputs})

    values = get_simulation_engine().simulate(netlist, stimulus, args.horizon)
    sys.stdout.write(print_wavefile(WaveFile(values)))
    if args.output:
        export_vcd(values, args.output)
    return EXIT_OK


def cmd_tdelay(args) -> int:
    waves = read_wavefile(args.wavefile)
    for name in (args.input, args.output):
        if name not in waves:
            raise UsageError(f"{args.wavefile} has no signal named '{name}'")
    report = get_delay_engine().transmission_delay(waves[args.input], waves[args.output])
    print(report)
    return EXIT_OK


def cmd_check(args) -> int:
    dc = parse_dc(args.dc)
    dc2 = parse_dc(args.dc2) if args.dc2 else None
    if args.property == "inclusion" and dc2 is None:
        raise UsageError("inclusion needs --dc2")

    corpus_cfg = {**_lab_section("corpus"), "seed": args.seed, "count": args.count}
    corpus = generate_corpus(CorpusConfig(**corpus_cfg))
    engine = get_property_engine()
    budget = args.budget

    if args.property == "determinism":
        verdict = engine.check_determinism(dc, corpus, budget)
    elif args.property == "inclusion":
        verdict = engine.check_inclusion(dc, dc2, corpus, budget)
    elif args.property == "time-invariance":
        shifts = args.shifts.split(",") if args.shifts else _lab_section("suite").get("shifts", ["-2", "2"])
        verdict = engine.check_time_invariance(dc, corpus, [as_time(d) for d in shifts], budget)
    elif args.property == "constancy":
        verdict = engine.check_constancy(dc, corpus, budget)
    else:
        verdict = engine.check_symmetry(dc, corpus, budget)
    return _verdict_exit(args.property, verdict)


def _verdict_exit(name: str, verdict: Verdict) -> int:
    print(f"{name}: {verdict}")
    if verdict.is_fails:
        return EXIT_FAILS
    if verdict.is_unknown:
        logger.warning(f"{name} is undecided within the budget")
    return EXIT_OK


def cmd_theorems(args) -> int:
    report = run_theorem_suite(args.seed, get_property_engine())
    sys.stdout.write(report.to_text())
    if args.json:
        atomic_write(args.json, report.to_json())
    return EXIT_OK if report.passed else EXIT_FAILS


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="delaylab", description="Exact delay models for asynchronous circuits"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", metavar="LEVEL", help="console log level, e.g. DEBUG")
    commands = parser.add_subparsers(dest="command", required=True)

    sim = commands.add_parser("sim", help="simulate a netlist against a wave file")
    sim.add_argument("netlist", help="netlist file")
    sim.add_argument("wavefile", help="wave file with one signal per input")
    sim.add_argument(
        "--horizon", type=as_time, default=None, help="simulation horizon (required for feedback)"
    )
    sim.add_argument("-o", "--output", metavar="out.vcd", help="also write a VCD file")
    sim.set_defaults(handler=cmd_sim)

    tdelay = commands.add_parser("tdelay", help="transmission delay between two signals")
    tdelay.add_argument("wavefile")
    tdelay.add_argument("input", metavar="in-name")
    tdelay.add_argument("output", metavar="out-name")
    tdelay.set_defaults(handler=cmd_tdelay)

    check = commands.add_parser("check", help="check a property of a delay condition on a seeded corpus")
    check.add_argument("property", choices=PROPERTIES)
    check.add_argument("--dc", required=True, help="delay condition expression")
    check.add_argument("--dc2", help="right-hand side for inclusion")
    check.add_argument("--seed", type=int, default=Config.DEFAULT_SEED)
    check.add_argument("--count", type=int, default=60)
    check.add_argument("--budget", type=int, default=Config.DEFAULT_BUDGET)
    check.add_argument(
        "--shifts", help="comma-separated time shifts for time-invariance, e.g. --shifts=-2,1/2"
    )
    check.set_defaults(handler=cmd_check)

    theorems = commands.add_parser("theorems", help="run the theorem suite")
    theorems.add_argument("--seed", type=int, default=Config.DEFAULT_SEED)
    theorems.add_argument("--json", metavar="PATH", help="also write the structured report")
    theorems.set_defaults(handler=cmd_theorems)
    return parser


def cli(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    if args.log_level:
        configure_logging(console_level=args.log_level)

    try:
        return args.handler(args)
    except (FormatError, UsageError, ValueError) as e:
        print(f"delaylab: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DelayLabError as e:
        print(f"delaylab: {e}", file=sys.stderr)
        return EXIT_FAILS
    except OSError as e:
        print(f"delaylab: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(cli())


if __name__ == "__main__":
    main()
