import argparse
import sys
import warnings

from . import __version__
from .composition import parse_composition
from .cyclictype import conjecture_sweep
from .cyclictype import conjecture_table
from .permutation import build_diet
from .permutation import cyclic_type
from .permutation import format_cycles
from .recursion import count_orbits
from .recursion import trace
from .sweep import verify_recursion
from .sweep.config import ConfigSweep
from .tree import enumerate_tree
from .tree import TreeNodeList
from .tree.export import export_tree
from .utils import dumps
from .utils.error import SymdietError
from .utils.error import UsageError

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2


class ArgumentParser(argparse.ArgumentParser):
    """Argument parser raising a UsageError instead of exiting."""

    def error(self, message):
        raise UsageError(message)


def _check_format(args, allowed=("text", "json")):
    if args.format not in allowed:
        raise UsageError(
            f"--format {args.format} is not valid for the {args.command} command, "
            f"expecting one of {', '.join(allowed)}."
        )


def _sweep_config(args):
    if args.n_jobs == 0:
        raise UsageError("--n-jobs cannot be zero.")
    return ConfigSweep(n_jobs=args.n_jobs)


def run_orbits(args, out, err):
    """Print the cycles and the cyclic type of the exchange of a composition."""
    _check_format(args)
    c = parse_composition(args.composition)
    p = build_diet(c)
    ctype = cyclic_type(p)
    if args.format == "json":
        py_dict = {
            "composition": c.json(),
            "cycles": [list(cycle) for cycle in p.cycles],
            "cyclic_type": ctype.json(),
        }
        out.write(dumps(py_dict))
    else:
        out.write(f"{format_cycles(p.cycles)}\ntype: {ctype}\n")
    return EXIT_OK


def run_count(args, out, err):
    """Print the number of orbits, optionally with every step of the recursion."""
    _check_format(args)
    c = parse_composition(args.composition)
    if args.trace:
        result = trace(c)
        text = result.to_text() + "\n"
        py_dict = result.json()
    else:
        count = count_orbits(c)
        text = f"{count}\n"
        py_dict = {"composition": c.json(), "count": count}
    out.write(dumps(py_dict) if args.format == "json" else text)
    return EXIT_OK


def run_tree(args, out, err):
    """Print the tree of circular compositions up to a sum bound."""
    _check_format(args, ("text", "json", "dot"))
    if args.max_sum < 2:
        raise UsageError(f"--max-sum must be at least 2, found {args.max_sum}.")
    nodes = TreeNodeList(enumerate_tree(args.max_sum))
    out.write(export_tree(nodes, args.format))
    err.write(f"nodes: {len(nodes)}\n")
    return EXIT_OK


def run_verify(args, out, err):
    """Compare the recursion with the brute force orbit count."""
    _check_format(args)
    if args.max_sum < 1:
        raise UsageError(f"--max-sum must be at least 1, found {args.max_sum}.")
    report = verify_recursion(args.max_sum, _sweep_config(args))
    if args.format == "json":
        out.write(dumps(report.json()))
    else:
        for composition in report.mismatches:
            out.write(f"mismatch: {composition}\n")
        out.write(f"{report}\n")
    return EXIT_OK if report.passed else EXIT_MISMATCH


def run_conjecture(args, out, err):
    """Print the table of the number of distinct cycle lengths per length."""
    _check_format(args)
    for length in args.length:
        if length < 1 or args.max_sum < length:
            raise UsageError(
                f"Expecting 1 <= --length <= --max-sum, found length {length} and "
                f"max-sum {args.max_sum}."
            )

    config = _sweep_config(args)
    reports = []
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        for length in args.length:
            reports.append(conjecture_sweep(length, args.max_sum, config))
    for warning in caught:
        err.write(f"warning: {warning.message}\n")

    if args.format == "json":
        out.write(dumps([report.row() for report in reports]))
    else:
        out.write(conjecture_table(reports).to_string(index=False) + "\n")
    return EXIT_OK


def _add_format(subparser, choices=("text", "json", "dot")):
    subparser.add_argument(
        "--format", choices=choices, default="text", help="output format."
    )


def _add_n_jobs(subparser):
    subparser.add_argument(
        "--n-jobs",
        type=int,
        default=1,
        help="number of processors for parallel computation.",
    )


def make_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="symdiet", description="Symmetric discrete interval exchange CLI"
    )
    parser.add_argument("-v", "--version", action="store_true", help="symdiet version.")
    commands = parser.add_subparsers(dest="command")

    orbits = commands.add_parser("orbits", help="cycles and cyclic type.")
    orbits.add_argument("composition", help="comma-separated parts, e.g. 3,5,4,2.")
    _add_format(orbits)
    orbits.set_defaults(func=run_orbits)

    count = commands.add_parser("count", help="number of orbits.")
    count.add_argument("composition", help="comma-separated parts, e.g. 3,5,4,2.")
    count.add_argument("--trace", action="store_true", help="print every step.")
    _add_format(count)
    count.set_defaults(func=run_count)

    tree = commands.add_parser("tree", help="tree of circular compositions.")
    tree.add_argument("--max-sum", type=int, required=True, help="sum bound.")
    _add_format(tree)
    tree.set_defaults(func=run_tree)

    verify = commands.add_parser("verify", help="recursion against brute force.")
    verify.add_argument("--max-sum", type=int, required=True, help="sum bound.")
    _add_n_jobs(verify)
    _add_format(verify)
    verify.set_defaults(func=run_verify)

    conjecture = commands.add_parser(
        "conjecture", help="number of distinct cycle lengths."
    )
    conjecture.add_argument(
        "--length", type=int, nargs="+", required=True, help="number of parts."
    )
    conjecture.add_argument("--max-sum", type=int, required=True, help="sum bound.")
    _add_n_jobs(conjecture)
    _add_format(conjecture)
    conjecture.set_defaults(func=run_conjecture)
    return parser


def main(argv=None, out=None, err=None) -> int:
    """Run the command line interface and return the exit status."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        if args.version:
            out.write(f"symdiet {__version__}\n")
            return EXIT_OK
        if args.command is None:
            raise UsageError("A command is required, see symdiet --help.")
        return args.func(args, out, err)
    except SymdietError as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
