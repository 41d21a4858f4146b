# -*- coding: utf-8 -*-
"""
The oracle suite: every configured setting and prime through the four checks.
"""

import logging
from collections import defaultdict
from typing import Iterator, List, Optional

from sympy import primerange
from tqdm import tqdm

from ..algebra.charlattice import FiniteSetting, closed_form_dual_lift_count
from .config import OracleConfig
from .report import OracleReport
from .timing import log_timings, track_time
from .verify import (
    ClosedForm,
    verify_euler_arithmetic,
    verify_lift_counts,
    verify_parity,
    verify_subgroup_lattice,
)

__all__ = ["suite_settings", "parity_settings", "suite_primes", "run_suite", "corrupted_closed_form"]

logger = logging.getLogger(__name__)


def suite_settings(config: OracleConfig) -> Iterator[FiniteSetting]:
    for q_o in config.galois_pair.get("q_o", []):
        for n in config.galois_pair.get("n", []):
            yield FiniteSetting.galois_pair(q_o, n)
    for q in config.self_dual.get("q", []):
        for n in config.self_dual.get("n", []):
            yield FiniteSetting.self_dual(q, n)


def parity_settings(config: OracleConfig) -> Iterator[FiniteSetting]:
    for entry in config.parity:
        if entry["kind"] == "GaloisPair":
            yield FiniteSetting.galois_pair(entry["q_o"], entry["n"])
        else:
            yield FiniteSetting.self_dual(entry["q"], entry["n"])


def suite_primes(s: FiniteSetting, bound: int) -> List[int]:
    """Primes ell <= bound dividing M (2 always does)."""
    return [int(p) for p in primerange(2, bound + 1) if s.M % p == 0]


def corrupted_closed_form(*args, **kwargs) -> int:
    """Deliberately wrong dual-lift count, used to prove the harness can fail."""
    return closed_form_dual_lift_count(*args, **kwargs) + 1


def run_suite(config: OracleConfig, closed_form: Optional[ClosedForm] = None,
              progress: bool = True) -> List[OracleReport]:
    reports = []
    timings = defaultdict(list)
    settings = list(suite_settings(config))
    seen = {(s.kind, s.q_base, s.n) for s in settings}
    parity_only = [s for s in parity_settings(config) if (s.kind, s.q_base, s.n) not in seen]

    for s in tqdm(settings + parity_only, desc="parity", disable=not progress):
        with track_time(timings["parity"]):
            reports.append(verify_parity(s, config))

    for s in tqdm(settings, desc="lattice", disable=not progress):
        if s.M > config.limit:
            reports.append(OracleReport("lift-counts", setting=s.describe()).skip("modulus"))
            continue
        for ell in suite_primes(s, config.ell_bound):
            with track_time(timings["subgroup-lattice"]):
                reports.append(verify_subgroup_lattice(s, ell, config))
            with track_time(timings["lift-counts"]):
                reports.append(verify_lift_counts(s, ell, config, closed_form=closed_form))

    with track_time(timings["euler-arithmetic"]):
        reports.append(verify_euler_arithmetic(config.euler_bound, config.euler_primes))

    log_timings(timings)
    failed = sum(r.failure_count for r in reports)
    logger.info(f"Oracle suite: {len(reports)} reports, {sum(r.checked for r in reports)} checks, "
                f"{sum(r.skipped for r in reports)} skipped, {failed} failures")
    return reports
