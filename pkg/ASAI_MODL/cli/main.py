# -*- coding: utf-8 -*-
"""
Command dispatch. Exit codes: 0 success, 1 usage error, 2 validation failure,
3 oracle failure.
"""

import logging
import sys
from typing import Callable, Dict, List, Optional, Tuple

from ..algebra.charlattice import (
    DualityKind,
    EllContext,
    FiniteSetting,
    closed_form_dual_lift_count,
    ell_decompose,
    enumerate_lifts,
    is_dual_selfdual_modell,
    is_regular,
)
from ..algebra.errors import (
    BadCharacteristic,
    DualityUndefined,
    DualityViolation,
    InvalidDatum,
    InvalidSetting,
    ModulusTooLarge,
    NonRegularInput,
    NotDistinguishedInput,
)
from ..algebra.lfactor import asai_l_factor, period_vanishing_primes, pole_order_at_one
from ..algebra.padic import CuspidalDatum, Distinction, invariant_report, is_relatively_banal, validate
from ..algebra.roots import RootOfUnity
from ..logger import setup_primary_logging, teardown_primary_logging
from ..oracle.config import load_config
from ..oracle.suite import corrupted_closed_form, run_suite
from .params import UsageError, parse_args
from .render import render_json, render_table, render_text
from .scan import REJECT_COLUMNS, ROW_COLUMNS, odd_prime_powers, primes, scan_rows

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_ORACLE = 3

VALIDATION_ERRORS = (
    InvalidDatum,
    InvalidSetting,
    NonRegularInput,
    DualityUndefined,
    DualityViolation,
    NotDistinguishedInput,
    BadCharacteristic,
    ModulusTooLarge,
)

logger = logging.getLogger(__name__)


class Output:
    """A command result: a payload for json/text, and the tables for csv/md."""

    def __init__(self, payload: dict, tables: Optional[List[Tuple[str, list, list]]] = None):
        self.payload = payload
        self.tables = tables if tables is not None else [("", [payload], sorted(payload))]

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return render_json(self.payload)
        if fmt == "text":
            return render_text(self.payload)
        parts = []
        for title, rows, columns in self.tables:
            text = render_table([r if isinstance(r, dict) else r.to_dict() for r in rows], columns, fmt)
            if title and len(self.tables) > 1:
                heading = "# {}\n".format(title) if fmt == "csv" else "## {}\n\n".format(title)
                text = heading + text
            parts.append(text)
        return "\n".join(parts)


def datum_from_args(args) -> CuspidalDatum:
    if args.twist is not None:
        distinction, twist = Distinction.TWIST, RootOfUnity(*args.twist)
    elif args.distinguished:
        distinction, twist = Distinction.DISTINGUISHED, None
    else:
        distinction, twist = Distinction.NOT_DISTINGUISHED, None
    return CuspidalDatum(
        q_o=args.qo, n=args.n, e_ffo=args.e_ffo, e_ef=args.e, f_ef=args.f, e_sigma=args.e_sigma,
        supercuspidal=not args.non_supercuspidal, distinction=distinction, twist=twist,
    )


def _validated(d: CuspidalDatum, ell: Optional[int]) -> CuspidalDatum:
    violations = validate(d, ell)
    if violations:
        raise InvalidDatum(violations)
    return d


def cmd_invariants(args) -> Tuple[int, Output]:
    d = _validated(datum_from_args(args), args.ell)
    return EXIT_OK, Output(invariant_report(d, args.ell).to_dict())


def cmd_lfactor(args) -> Tuple[int, Output]:
    char = args.char
    d = _validated(datum_from_args(args), char or None)
    f = asai_l_factor(d, char)
    payload = dict(f.to_dict(), pole_order=pole_order_at_one(f), datum=d.to_dict())
    if d.is_distinguished_up_to_twist:
        payload["period_vanishing_primes"] = list(period_vanishing_primes(d))
    if char and d.is_distinguished_up_to_twist:
        payload["rel_banal"] = is_relatively_banal(d, char)
    return EXIT_OK, Output(payload)


def cmd_lifts(args) -> Tuple[int, Output]:
    if args.dual == "sigma":
        if args.qo is None:
            raise UsageError("--dual sigma needs --qo")
        s = FiniteSetting.galois_pair(args.qo, args.n)
    else:
        if args.q is None:
            raise UsageError("--dual self needs --q")
        s = FiniteSetting.self_dual(args.q, args.n)
    ctx = EllContext.build(s, args.ell)
    lifts = enumerate_lifts(s, ctx, args.theta, args.max_modulus)

    a_r, a_s = ell_decompose(s, ctx, args.theta)
    supercuspidal_reduction = is_regular(s, a_r)
    dual_modell = s.duality_defined and is_dual_selfdual_modell(s, ctx, args.theta)
    payload = dict(
        lifts.to_dict(),
        setting=s.describe(),
        ell=args.ell,
        theta=args.theta % s.M,
        a_r=a_r,
        a_s=a_s,
        supercuspidal_reduction=supercuspidal_reduction,
        dual_modell=dual_modell,
        closed_form_dual=None,
        conditional_on_distinction=False,
    )
    if dual_modell:
        payload["closed_form_dual"] = closed_form_dual_lift_count(
            s, ctx, args.theta, supercuspidal_reduction, args.max_modulus)
        payload["conditional_on_distinction"] = s.kind is DualityKind.SELF_DUAL and not supercuspidal_reduction
    return EXIT_OK, Output(payload)


def cmd_scan(args) -> Tuple[int, Output]:
    q_o_values = odd_prime_powers(args.qo_range)
    n_values = [n for n in args.n_range if n >= 1]
    ells = primes(args.ell_set)
    if not q_o_values or not n_values or not ells:
        raise UsageError("empty range after filtering: q_o {}, n {}, ell {}".format(q_o_values, n_values, ells))
    rows, rejects = scan_rows(q_o_values, n_values, ells, include_non_supercuspidal=args.non_supercuspidal,
                              progress=not args.no_progress)
    payload = {"rows": [r.to_dict() for r in rows], "rejects": [r.to_dict() for r in rejects]}
    return EXIT_OK, Output(payload, tables=[("rows", rows, ROW_COLUMNS), ("rejects", rejects, REJECT_COLUMNS)])


def cmd_verify(args) -> Tuple[int, Output]:
    overrides = {}
    if args.workers is not None:
        overrides["workers"] = args.workers
    if args.parallel:
        overrides["parallel"] = True
    try:
        config = load_config(args.suite, **overrides)
        if args.max_modulus is not None:
            config = config.with_modulus_limit(args.max_modulus)
    except ValueError as e:
        raise UsageError(str(e))
    closed_form = corrupted_closed_form if args.self_test else None

    reports = run_suite(config, closed_form=closed_form, progress=not args.no_progress)
    failure_count = sum(r.failure_count for r in reports)
    payload = {
        "suite": args.suite,
        "config": config.to_dict(),
        "passed": failure_count == 0,
        "checked": sum(r.checked for r in reports),
        "skipped": sum(r.skipped for r in reports),
        "failure_count": failure_count,
        "reports": [r.to_dict() for r in reports],
    }
    summary = [
        {"name": r.name, "setting": r.setting, "checked": r.checked, "skipped": r.skipped,
         "failure_count": r.failure_count, "passed": r.passed}
        for r in reports
    ]
    failures = [dict(f.to_dict(), report=r.name) for r in reports for f in r.failures]
    tables = [
        ("reports", summary, ["name", "setting", "checked", "skipped", "failure_count", "passed"]),
        ("failures", failures, ["report", "tag", "input", "expected", "actual"]),
    ]
    code = EXIT_OK if failure_count == 0 else EXIT_ORACLE
    return code, Output(payload, tables=tables)


COMMANDS: Dict[str, Callable] = {
    "invariants": cmd_invariants,
    "lfactor": cmd_lfactor,
    "lifts": cmd_lifts,
    "scan": cmd_scan,
    "verify": cmd_verify,
}


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = parse_args(argv)
    except UsageError as e:
        sys.stderr.write("error: {}\n".format(e))
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    level = logging.DEBUG if args.debug else logging.INFO
    log_queue, listener = setup_primary_logging(args.log_file, level)
    try:
        code, output = COMMANDS[args.command](args)
        _emit(output.render(args.format), args.output)
        return code
    except UsageError as e:
        logger.error(str(e))
        return EXIT_USAGE
    except InvalidDatum as e:
        logger.error(f"Invalid datum: {e}")
        payload = {"error": "invalid datum", "violations": [v.to_dict() for v in e.violations]}
        _emit(Output(payload, tables=[("violations", e.violations, ["tag", "message"])]).render(args.format),
              args.output)
        return EXIT_INVALID
    except VALIDATION_ERRORS as e:
        logger.error(f"{type(e).__name__}: {e}")
        _emit(Output({"error": type(e).__name__, "message": str(e)}).render(args.format), args.output)
        return EXIT_INVALID
    finally:
        teardown_primary_logging(log_queue, listener)


if __name__ == "__main__":
    sys.exit(main())
