# -*- coding: utf-8 -*-
"""
Classification tables over parameter ranges: one row per valid distinguished
datum and prime, and a rejects table naming the violated constraints.
"""

import logging
from dataclasses import asdict, dataclass
from typing import Iterable, List, Tuple

from tqdm import tqdm

from ..algebra.lfactor import asai_l_factor, period_report, pole_order_at_one
from ..algebra.padic import CuspidalDatum, invariant_report, iter_data, validate
from ..algebra.utils import check_prime, is_odd_prime_power

__all__ = ["ROW_COLUMNS", "REJECT_COLUMNS", "ScanRow", "ScanReject", "scan_rows", "odd_prime_powers", "primes"]

logger = logging.getLogger(__name__)

INPUT_COLUMNS = ["q_o", "n", "e_ffo", "e_ef", "f_ef", "e_sigma", "supercuspidal", "ell"]
ROW_COLUMNS = INPUT_COLUMNS + [
    "e_o", "N", "rel_banal", "banal", "xo_char0", "xo_modell", "xo_kernel", "pole_order", "period_nonzero",
]
REJECT_COLUMNS = INPUT_COLUMNS + ["tags", "messages"]


@dataclass(frozen=True)
class ScanRow:
    q_o: int
    n: int
    e_ffo: int
    e_ef: int
    f_ef: int
    e_sigma: int
    supercuspidal: bool
    ell: int
    e_o: int
    N: int
    rel_banal: bool
    banal: bool
    xo_char0: int
    xo_modell: int
    xo_kernel: int
    pole_order: int
    period_nonzero: bool

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class ScanReject:
    q_o: int
    n: int
    e_ffo: int
    e_ef: int
    f_ef: int
    e_sigma: int
    supercuspidal: bool
    ell: int
    tags: str
    messages: str

    def to_dict(self) -> dict:
        return asdict(self)


def odd_prime_powers(values: Iterable[int]) -> List[int]:
    return [v for v in values if is_odd_prime_power(v)]


def primes(values: Iterable[int]) -> List[int]:
    return [v for v in values if check_prime(v)]


def _inputs(d: CuspidalDatum, ell: int) -> dict:
    return dict(q_o=d.q_o, n=d.n, e_ffo=d.e_ffo, e_ef=d.e_ef, f_ef=d.f_ef, e_sigma=d.e_sigma,
                supercuspidal=d.supercuspidal, ell=ell)


def _row(d: CuspidalDatum, ell: int) -> ScanRow:
    report = invariant_report(d, ell)
    return ScanRow(
        **_inputs(d, ell),
        e_o=report.e_o,
        N=report.N,
        rel_banal=report.relatively_banal,
        banal=report.banal,
        xo_char0=report.x_o_order_char0,
        xo_modell=report.x_o_order_modell,
        xo_kernel=report.x_o_reduction_kernel,
        pole_order=pole_order_at_one(asai_l_factor(d, ell)),
        period_nonzero=period_report(d, ell).nonzero,
    )


def scan_rows(q_o_values: Iterable[int], n_values: Iterable[int], ells: Iterable[int],
              include_non_supercuspidal: bool = False,
              progress: bool = True) -> Tuple[List[ScanRow], List[ScanReject]]:
    """
    Rows and rejects, both ordered lexicographically on
    (q_o, n, e_ffo, e_ef, f_ef, e_sigma), supercuspidal data first, then ell.
    """
    variants = (True, False) if include_non_supercuspidal else (True,)
    data = [d for sc in variants for d in iter_data(q_o_values, n_values, supercuspidal=sc)]
    data.sort(key=lambda d: (d.key(), not d.supercuspidal))
    ells = sorted(set(ells))

    rows, rejects = [], []
    for d in tqdm(data, desc="scan", disable=not progress):
        for ell in ells:
            violations = validate(d, ell)
            if violations:
                rejects.append(ScanReject(
                    **_inputs(d, ell),
                    tags=";".join(v.tag for v in violations),
                    messages="; ".join(v.message for v in violations),
                ))
            else:
                rows.append(_row(d, ell))
    logger.info(f"Scanned {len(data)} data over {len(ells)} primes: {len(rows)} rows, {len(rejects)} rejects")
    return rows, rejects
