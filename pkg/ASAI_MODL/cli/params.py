import argparse
import sys

from ..algebra.charlattice import DEFAULT_MAX_MODULUS
from ..oracle.config import available_suites


class UsageError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):
    """argparse reporting malformed flags as UsageError (exit code 1) instead of exiting with 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def get_default_params(command):
    # Tables default to csv, single queries to json
    if command == "scan":
        return {"format": "csv"}
    elif command in ["invariants", "lfactor", "lifts", "verify"]:
        return {"format": "json"}
    else:
        return {}


def parse_int_list(text):
    """
    "3..9" (inclusive range), "3,5,7" or "5".
    """
    text = text.strip()
    if not text:
        return []
    values = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..", 1)
            values.extend(range(int(lo), int(hi) + 1))
        else:
            values.append(int(part))
    return sorted(set(values))


def _int_list(text):
    try:
        return parse_int_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected a range like 3..9 or a list like 3,5,7, got {!r}".format(text))


def _common_parser():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument(
        "--format",
        choices=["json", "csv", "md", "text"],
        default=None,
        help="Output format; scan defaults to csv, everything else to json.",
    )
    parser.add_argument(
        "--output", type=str, default=None, help="Write the result to this file instead of stdout."
    )
    parser.add_argument(
        "--debug", default=False, action="store_true", help="If true, more information is logged."
    )
    parser.add_argument(
        "--log-file", type=str, default=None, help="Also write log records to this file."
    )
    parser.add_argument(
        "--no-progress", default=False, action="store_true", help="Disable progress bars."
    )
    return parser


def _datum_parser():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--qo", type=int, required=True, help="Residue field size q_o of F_o (odd prime power).")
    parser.add_argument("--n", type=int, required=True, help="Degree n of GL_n.")
    parser.add_argument("--e-ffo", type=int, default=1, help="Ramification index of F/F_o (1 or 2).")
    parser.add_argument("--e", type=int, default=1, help="Ramification index e(E/F) of the type.")
    parser.add_argument("--f", type=int, default=1, help="Residue degree f(E/F) of the type.")
    parser.add_argument("--e-sigma", type=int, default=1, help="Ramification index of E over E_o (1 or 2).")
    parser.add_argument(
        "--non-supercuspidal", default=False, action="store_true",
        help="The datum is cuspidal but not supercuspidal."
    )
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        "--distinguished", default=False, action="store_true", help="The representation is distinguished."
    )
    group.add_argument(
        "--twist", type=int, nargs=2, metavar=("ORDER", "EXPONENT"), default=None,
        help="Unramified twist of a distinguished representation by the root of unity zeta(ORDER, EXPONENT).",
    )
    return parser


def parse_args(argv=None):
    common = _common_parser()
    datum = _datum_parser()

    parser = ArgumentParser(
        prog="asai-modl",
        description="Modular Asai L-factors, distinction invariants and lift counts for cuspidal "
                    "representations of GL_n over a quadratic extension of p-adic fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common, datum], help="e_o, banality and X_o orders of a datum.")
    p.add_argument("--ell", type=int, required=True, help="The prime ell.")

    p = sub.add_parser("lfactor", parents=[common, datum], help="Asai L-factor and its pole order at X = 1.")
    p.add_argument("--char", type=int, required=True, help="Coefficient characteristic: 0 or the prime ell.")

    p = sub.add_parser("lifts", parents=[common], help="Supercuspidal lifts of the reduction of rho(theta).")
    base = p.add_mutually_exclusive_group(required=True)
    base.add_argument("--qo", type=int, default=None, help="q_o of k_o (Galois-pair setting over k = F_{q_o^2}).")
    base.add_argument("--q", type=int, default=None, help="q of k (self-dual setting).")
    p.add_argument("--n", type=int, required=True, help="Degree of l/k.")
    p.add_argument("--ell", type=int, required=True, help="The prime ell.")
    p.add_argument("--theta", type=int, required=True, help="Character index modulo q^n - 1.")
    p.add_argument("--dual", choices=["sigma", "self"], required=True,
                   help="sigma-self-duality (with --qo) or self-duality (with --q).")
    p.add_argument("--max-modulus", type=int, default=DEFAULT_MAX_MODULUS, help="Enumeration bound on q^n - 1.")

    p = sub.add_parser("scan", parents=[common], help="Classification table over parameter ranges.")
    p.add_argument("--qo-range", type=_int_list, required=True, help="q_o values, e.g. 3..9 or 3,5,7.")
    p.add_argument("--n-range", type=_int_list, required=True, help="n values, e.g. 1..4.")
    p.add_argument("--ell-set", type=_int_list, required=True, help="Primes ell, e.g. 3,7,13.")
    p.add_argument(
        "--non-supercuspidal", default=False, action="store_true",
        help="Also tabulate cuspidal non-supercuspidal data."
    )

    p = sub.add_parser("verify", parents=[common], help="Run the brute-force oracle suite.")
    p.add_argument("--suite", choices=available_suites(), default="default", help="Named oracle suite.")
    p.add_argument("--max-modulus", type=int, default=None,
                   help="Skip settings with q^n - 1 above this bound.")
    p.add_argument("--workers", type=int, default=None, help="Number of scan worker processes.")
    p.add_argument("--parallel", default=False, action="store_true", help="Scan index blocks on a process pool.")
    p.add_argument(
        "--self-test", default=False, action="store_true",
        help="Inject a wrong closed form; the suite must then fail."
    )

    args = parser.parse_args(argv)
    if getattr(args, "twist", None) is not None and args.twist[0] < 1:
        parser.error("--twist ORDER must be >= 1, got {}".format(args.twist[0]))

    # If some params are not passed, we use the default values based on the command.
    default_params = get_default_params(args.command)
    for name, val in default_params.items():
        if getattr(args, name) is None:
            setattr(args, name, val)

    return args
