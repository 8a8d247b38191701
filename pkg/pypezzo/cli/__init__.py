import argparse
import logging
import sys
from pypezzo.arith.primes import setCacheDir
from pypezzo.cli import report
from pypezzo.cli.commands import COMMANDS
from pypezzo.cli.config import buildConfig
from pypezzo.utils.errors import pezzoError

logger = logging.getLogger(__name__)

settings = {
    "format": "%(asctime)s %(levelname)s %(name)s: %(message)s",
    "exitFailed": 1,
    "exitError": 2,
}


def _intList(text: str):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("{!r} is not a comma separated list of integers".format(text))


def _pairList(text: str):
    pairs = []
    for item in text.split(","):
        if not item.strip():
            continue
        try:
            q, q_prime = (int(v) for v in item.lower().split("x"))
        except ValueError:
            raise argparse.ArgumentTypeError("{!r} is not a list like 3x5,3x7".format(text))
        pairs.append([q, q_prime])
    return pairs


def _suiteList(text: str):
    return [v.strip() for v in text.split(",") if v.strip()]


def buildParser():
    """
    The argparse parser with one subcommand per experiment. Every flag defaults to None so that
    only flags given on the command line override the config file.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--form", help="path to a JSON form file, the Klein quartic when absent")
    common.add_argument("--B", type=int, help="box radius")
    common.add_argument("--B-grid", dest="B_grid", type=_intList, help="comma separated radii")
    common.add_argument("--eps", type=float)
    common.add_argument("--C", type=float, help="constant of the P2 >= C log B condition")
    common.add_argument("--primes1", type=_intList, help="forced first prime window")
    common.add_argument("--primes2", type=_intList, help="forced second prime window")
    common.add_argument("--force", action="store_true", default=None, help="run inadmissible plans")
    common.add_argument("--tol", type=float, help="quadrature tolerance")
    common.add_argument("--truncation", type=int, help="Poisson frequency cutoff per component")
    common.add_argument("--workers", type=int, help="worker processes, all cores by default")
    common.add_argument("--seed", type=int)
    common.add_argument("--cache-dir", dest="cache_dir", help="prime cache directory")
    common.add_argument("--out", help="output path; JSON goes to stdout when absent")
    common.add_argument("--config", help="JSON config file, overridden by flags")
    common.add_argument("--suites", type=_suiteList, help="charsum suites to run")
    common.add_argument("--pairs", type=_pairList, help="Poisson (q, q') pairs, like 3x5,3x7")
    common.add_argument("--trivial", action="store_true", default=None, help="replace the character by 1")
    common.add_argument("--samples", type=int, help="sampled frequencies per modulus")
    common.add_argument("--verbose", action="store_true", default=None)
    common.add_argument("--quiet", action="store_true", default=None)

    parser = argparse.ArgumentParser(
        prog="pypezzo", description="Square sieve experiments for y^2 = F(x1, x2, x3)."
    )
    commands = parser.add_subparsers(dest="command", required=True)
    for name, func in COMMANDS.items():
        commands.add_parser(name, parents=[common], help=func.__doc__.strip().splitlines()[0])
    return parser


def _setupLogging(verbose: bool, quiet: bool):
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(level=level, format=settings["format"], stream=sys.stderr)
    logging.getLogger().setLevel(level)


def main(argv=None):
    """
    Entry point of the pypezzo command.

    :param argv: Arguments without the program name, sys.argv[1:] when None
    :return int: 0 when every check passed, 1 when a check failed, 2 on errors
    """
    args = vars(buildParser().parse_args(argv))
    command = args.pop("command")
    _setupLogging(args.get("verbose"), args.get("quiet"))

    try:
        config = buildConfig(command, args)
        if config.cache_dir:
            setCacheDir(config.cache_dir)
        data, tables, passed = COMMANDS[command](config)
    except (pezzoError, OSError, ValueError) as e:
        logger.error("%s", e)
        sys.stderr.write("pypezzo {}: {}\n".format(command, e))
        return settings["exitError"]

    data["meta"] = report.meta(config)
    data["passed"] = passed
    report.writeJson(config.out, data)
    for suffix, (header, rows) in tables.items():
        report.writeCsv(config.out, header, rows, suffix)
    logger.info("%s %s", command, "passed" if passed else "FAILED")
    return 0 if passed else settings["exitFailed"]
