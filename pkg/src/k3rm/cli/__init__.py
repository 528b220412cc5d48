"""Command-line frontend: ``k3rm <subcommand> ...``.

Exit codes: 0 all checks passed, 1 some check failed (the report is still printed),
2 input or parse error.
"""
from __future__ import annotations

import argparse
import sys

from .formats import ParseError, parse_surface, print_surface
from .report import Report

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ParseError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for all randomized sampling")
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS,
                        help="processes used for point counting")
    p = _Parser(prog="k3rm", description="Elliptic K3 surfaces with real multiplication: checks and reports.",
                parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("dickson", parents=[common], help="Dickson polynomial coefficients and identities")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--a", default=None, help="numeric parameter (exact rational)")
    d.add_argument("--compose", type=int, default=None, metavar="M", help="also check p_mn = p_m o p_n")

    lat = sub.add_parser("lattice", parents=[common], help="rational isometry of lattice expressions")
    lat.add_argument("action", choices=("compare", "reproduce"))
    lat.add_argument("left", nargs="?")
    lat.add_argument("right", nargs="?")

    rm = sub.add_parser("rm", parents=[common], help="trace-form certification and RM constructions")
    rm.add_argument("action", choices=("certify-table1", "assemble", "quad"))
    rm.add_argument("--field", default=None)
    rm.add_argument("--file", default=None, help="field spec file")
    rm.add_argument("--literal", action="store_true", help="certify the data without sign normalization")
    rm.add_argument("--l", type=int, default=None)
    rm.add_argument("--d", type=int, default=2)
    rm.add_argument("--r", default="1")
    rm.add_argument("--shape", default="full_T", choices=("U_pair", "E8_pair", "full_T", "E8_swap"))

    s = sub.add_parser("surface", parents=[common], help="fibre configuration and section heights")
    s.add_argument("action", choices=("analyze", "print"))
    s.add_argument("file")
    s.add_argument("--e", type=int, default=None, help="declared class (1 rational, 2 K3)")
    s.add_argument("--section-x", default=None, help="x-coordinate of a section as a coefficient list")

    i = sub.add_parser("isogeny", parents=[common], help="isogeny identities and self-map multipliers")
    i.add_argument("action", choices=("verify", "multiplier"))
    i.add_argument("--degree", type=int, choices=(2, 3), default=None)
    i.add_argument("--variant", choices=("derived", "printed"), default="derived")
    i.add_argument("--family", default=None)

    z = sub.add_parser("zeta", parents=[common], help="point counts and the Frobenius polynomial on H^2")
    z.add_argument("--p", type=int, required=True)
    z.add_argument("--kmax", type=int, required=True)
    z.add_argument("--alg-factor", default=None, help="algebraic factor, coefficients lowest degree first")
    z.add_argument("--section-class", action="append", default=[],
                   help="square class of a known section's y-constant (derive mode); repeatable")
    z.add_argument("file")
    return p


def run(argv=None, out=None, err=None) -> int:
    from . import commands
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        args.seed = getattr(args, "seed", 0)
        args.workers = getattr(args, "workers", 1)
        if args.command == "lattice" and args.action == "compare" and not (args.left and args.right):
            raise ParseError("lattice compare needs two expressions")
        if args.command == "rm" and args.action in ("assemble",) and not (args.field or args.file):
            raise ParseError("rm assemble needs --field or --file")
        if args.command == "zeta" and (args.p < 5 or args.kmax < 1):
            raise ParseError("zeta needs p >= 5 and kmax >= 1")
        handler = getattr(commands, f"cmd_{args.command}")
        report: Report = handler(args)
    except ParseError as e:
        err.write(f"error: {e}\n")
        return EXIT_INPUT
    except SystemExit as e:  # --help
        return int(e.code or 0)
    except ValueError as e:
        err.write(f"error: {e}\n")
        return EXIT_INPUT
    return report.emit(out)


def main() -> None:
    sys.exit(run())


__all__ = ["main", "parse_surface", "print_surface", "run"]
