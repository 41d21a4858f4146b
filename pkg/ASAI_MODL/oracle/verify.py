# -*- coding: utf-8 -*-
"""
Brute-force checks of the character-lattice and Euler-factor closed forms.

Every scan recomputes its quantities from q, n and the kind of setting alone
(orbits by repeated multiplication, duality by testing all Frobenius twists
of the involution, the ell-regular part by coset scanning) and only calls
into the algebra package for the value under test.
"""

import logging
from math import gcd
from typing import Callable, Dict, Optional, Tuple

import numpy as np
import pandas as pd

from ..algebra import charlattice as cl
from ..algebra.charlattice import DualityKind, FiniteSetting
from ..algebra.errors import BadCharacteristic
from ..algebra.lfactor import divides, expand, quotient, reduce_mod_ell
from ..algebra.roots import RootOfUnity
from ..algebra.utils import ell_split, sorted_divisors
from . import polynomial as poly
from .blocks import index_blocks, map_blocks
from .config import OracleConfig
from .report import OracleReport

__all__ = [
    "verify_parity",
    "verify_lift_counts",
    "verify_subgroup_lattice",
    "verify_euler_arithmetic",
]

logger = logging.getLogger(__name__)

ClosedForm = Callable[..., int]


class _Scan:
    """Independent description of a setting: modulus, Frobenius powers, dual multipliers."""

    def __init__(self, s: FiniteSetting):
        q, n = s.q_base, s.n
        self.M = M = q ** n - 1
        self.n = n
        self.frob = np.array([pow(q, k, M) for k in range(n)], dtype=np.int64)
        # GaloisPair: x -> q_o x extends the involution of k/k_o; SelfDual: inverse in the orbit
        base = s.q_o if s.kind is DualityKind.GALOIS_PAIR else 1
        self.mults = np.array(sorted({base * pow(q, k, M) % M for k in range(n)}), dtype=np.int64)
        if s.kind is DualityKind.GALOIS_PAIR:
            self.L = s.q_o ** n
        elif n == 1:
            self.L = q
        elif n % 2 == 0:
            self.L = q ** (n // 2)
        else:
            self.L = None

    def regular(self, x: np.ndarray) -> np.ndarray:
        out = np.ones(x.shape, dtype=bool)
        for f in self.frob[1:]:
            out &= (x * f % self.M) != x
        return out

    def orbit_min(self, x: np.ndarray) -> np.ndarray:
        out = x.copy()
        for f in self.frob[1:]:
            out = np.minimum(out, x * f % self.M)
        return out

    def dual(self, x: np.ndarray) -> np.ndarray:
        out = np.zeros(x.shape, dtype=bool)
        for d in self.mults:
            out |= (x * d + x) % self.M == 0
        return out


def _ell_power(M: int, ell: int) -> int:
    p = 1
    while M % (p * ell) == 0:
        p *= ell
    return p


def _sample(M: int, size: int) -> np.ndarray:
    return np.arange(0, M, max(1, M // max(1, size)), dtype=np.int64)


def _skip_reason(s: FiniteSetting, config: OracleConfig) -> Optional[str]:
    if s.M > config.limit:
        return "modulus"
    return None


# parity

def _parity_block(task) -> Dict[str, int]:
    s, lo, hi = task
    scan = _Scan(s)
    x = np.arange(lo, hi, dtype=np.int64)
    reg = scan.regular(x)
    dual = scan.dual(x)
    both = reg & dual
    hits = np.flatnonzero(both)
    return {
        "regular": int(reg.sum()),
        "dual": int(dual.sum()),
        "regular_dual": int(both.sum()),
        "witness": int(x[hits[0]]) if hits.size else -1,
    }


def _parity_forbids(s: FiniteSetting) -> Optional[str]:
    if s.kind is DualityKind.GALOIS_PAIR and s.n % 2 == 0:
        return "parity-galois-even-n"
    if s.kind is DualityKind.SELF_DUAL and s.n % 2 == 1 and s.n > 1:
        return "parity-selfdual-odd-n"
    return None


def verify_parity(s: FiniteSetting, config: OracleConfig) -> OracleReport:
    """
    Exhaustive scan of Z/M for regular dual-self-dual indices; they must not
    exist when the parity of n forbids them.
    """
    report = OracleReport("parity", setting=s.describe())
    reason = _skip_reason(s, config)
    if reason:
        return report.skip(reason)

    tasks = [(s, lo, hi) for lo, hi in index_blocks(0, s.M, config.block_size)]
    for part in map_blocks(_parity_block, tasks, config):
        report.tally("regular", part["regular"])
        report.tally("dual", part["dual"])
        report.tally("regular_dual", part["regular_dual"], witness=part["witness"])
    report.checked += s.M

    tag = _parity_forbids(s)
    if tag and report.counts["regular_dual"]:
        report.fail(tag, 0, report.counts["regular_dual"], a=report.witnesses["regular_dual"])

    # regularity and duality of the closed forms on a sample
    scan = _Scan(s)
    sample = _sample(s.M, config.sample_size)
    reg, dual = scan.regular(sample), scan.dual(sample)
    for a, r, dl in zip(sample.tolist(), reg.tolist(), dual.tolist()):
        report.checked += 1
        report.expect("regularity", r, cl.is_regular(s, a), a=a)
        if s.duality_defined:
            report.expect("duality", dl, cl.is_dual_selfdual_adic(s, a), a=a)
    logger.debug(f"parity {s.describe()}: {dict(report.counts)}")
    return report


# lift counts

def _lift_block(task) -> pd.DataFrame:
    s, ell_v, lo, hi = task
    scan = _Scan(s)
    M = scan.M
    M_r = M // ell_v
    cls = np.arange(lo, hi, dtype=np.int64)
    a_r = cls * ell_v % M
    mu = np.arange(ell_v, dtype=np.int64) * M_r
    x = ((a_r[:, None] + mu[None, :]) % M).ravel()
    frame = pd.DataFrame({
        "cls": np.repeat(cls, ell_v),
        "x": x,
        "regular": scan.regular(x),
        "rep": scan.orbit_min(x),
        "dual": scan.dual(x),
    })
    regular = frame[frame["regular"]]
    out = pd.DataFrame(index=pd.Index(cls, name="cls"))
    out["a_r"] = a_r
    out["a_r_regular"] = scan.regular(a_r)
    out["a_r_dual"] = scan.dual(a_r)
    out["total"] = regular.groupby("cls")["rep"].nunique().reindex(out.index, fill_value=0)
    out["dual_total"] = regular[regular["dual"]].groupby("cls")["rep"].nunique().reindex(out.index, fill_value=0)
    out["min_regular"] = regular.groupby("cls")["x"].min().reindex(out.index, fill_value=-1)
    return out


def _strict_for_ell_two(s: FiniteSetting) -> bool:
    if s.kind is DualityKind.GALOIS_PAIR:
        return s.n % 2 == 1
    return s.n % 2 == 0 and s.n >= 2


def verify_lift_counts(s: FiniteSetting, ell: int, config: OracleConfig,
                       closed_form: Optional[ClosedForm] = None) -> OracleReport:
    """
    For every ell-regular class a_r, enumerate the coset a_r + Gamma_s and count
    Frobenius orbits of regular (and of regular dual-self-dual) elements; compare
    with enumerate_lifts, closed_form_lift_total and the dual-lift closed form.
    """
    closed_form = closed_form or cl.closed_form_dual_lift_count
    report = OracleReport("lift-counts", setting=dict(s.describe(), ell=ell))
    reason = _skip_reason(s, config)
    if reason:
        return report.skip(reason)
    if not s.duality_defined:
        return report.skip("duality-undefined")

    ctx = cl.EllContext.build(s, ell)
    M = s.M
    ell_v = _ell_power(M, ell)
    M_r = M // ell_v
    per_block = max(1, config.block_size // ell_v)
    tasks = [(s, ell_v, lo, hi) for lo, hi in index_blocks(0, M_r, per_block)]
    classes = pd.concat(map_blocks(_lift_block, tasks, config))

    with_regular = classes[classes["min_regular"] >= 0]
    qualifying = with_regular[with_regular["a_r_dual"]]
    others = with_regular[~with_regular["a_r_dual"]]
    if len(others) > config.sample_size:
        others = others.iloc[::len(others) // config.sample_size]
    report.tally("classes", len(classes))
    report.tally("classes_with_regular", len(with_regular))
    report.tally("dual_classes", len(qualifying))

    for row in others.itertuples():
        a = int(row.min_regular)
        report.checked += 1
        report.expect("decomposition", int(row.a_r), cl.ell_decompose(s, ctx, a)[0], a=a)
        report.expect("closed-form-total", int(row.total), cl.closed_form_lift_total(s, ctx, a), a=a)
        report.expect("modell-duality", False, cl.is_dual_selfdual_modell(s, ctx, a), a=a)

    strict = ell == 2 and _strict_for_ell_two(s)
    for row in qualifying.itertuples():
        a = int(row.min_regular)
        total, dual_total = int(row.total), int(row.dual_total)
        sc = bool(row.a_r_regular)
        report.checked += 1
        report.tally("{}:{}/{}".format("sc" if sc else "nonsc", total, dual_total), witness=a)
        report.expect("decomposition", int(row.a_r), cl.ell_decompose(s, ctx, a)[0], a=a)
        if not report.expect("modell-duality", True, cl.is_dual_selfdual_modell(s, ctx, a), a=a):
            continue
        lifts = cl.enumerate_lifts(s, ctx, a, config.max_modulus)
        report.expect("lift-total", total, lifts.total, a=a)
        report.expect("lift-dual-count", dual_total, lifts.dual_count, a=a)
        report.expect("closed-form-total", total, cl.closed_form_lift_total(s, ctx, a), a=a)
        report.expect("closed-form-dual", dual_total, closed_form(s, ctx, a, sc, config.max_modulus), a=a)
        if strict and dual_total >= total:
            report.fail("ell-two-strict", "dual < {}".format(total), dual_total, a=a)
    return report


# subgroup lattice

def _lattice_block(task) -> Dict[str, object]:
    s, dm, ell_v, lo, hi = task
    scan = _Scan(s)
    M = scan.M
    x = np.arange(lo, hi, dtype=np.int64)
    plus = (dm - 1) * x % M == 0
    minus = (dm + 1) * x % M == 0
    in_s = ell_v * x % M == 0
    return {
        "plus": int(plus.sum()),
        "minus": int(minus.sum()),
        "both": x[plus & minus].tolist(),
        "gamma_s": int(in_s.sum()),
        "s_not_plus": int((in_s & ~plus).sum()),
        "s_not_minus": int((in_s & ~minus).sum()),
    }


def _oracle_involution(s: FiniteSetting, scan: _Scan) -> int:
    M = scan.M
    if s.kind is DualityKind.GALOIS_PAIR:
        return pow(s.q_o, s.n, M)
    if s.n == 1:
        return 1 % M
    return pow(s.q_base, s.n // 2, M)


def _oracle_case(ell: int, M: int, L: int) -> str:
    if ell == 2:
        return cl.CaseTag.ELL_TWO.value
    if M % ell:
        return cl.CaseTag.COPRIME.value
    return cl.CaseTag.PLUS.value if (L - 1) % ell == 0 else cl.CaseTag.MINUS.value


def verify_subgroup_lattice(s: FiniteSetting, ell: int, config: OracleConfig) -> OracleReport:
    """
    Sizes of Gamma^+ and Gamma^-, their intersection {0, M/2}, the inclusion
    of Gamma_s for odd ell, and sampled subgroup memberships.
    """
    report = OracleReport("subgroup-lattice", setting=dict(s.describe(), ell=ell))
    reason = _skip_reason(s, config)
    if reason:
        return report.skip(reason)
    if not s.duality_defined:
        return report.skip("duality-undefined")

    ctx = cl.EllContext.build(s, ell)
    scan = _Scan(s)
    M, L = scan.M, scan.L
    dm = _oracle_involution(s, scan)
    ell_v = _ell_power(M, ell)
    M_r = M // ell_v

    parts = map_blocks(_lattice_block, [(s, dm, ell_v, lo, hi) for lo, hi in index_blocks(0, M, config.block_size)],
                       config)
    plus = sum(p["plus"] for p in parts)
    minus = sum(p["minus"] for p in parts)
    both = sorted(a for p in parts for a in p["both"])
    report.checked += M
    report.tally("gamma_plus", plus)
    report.tally("gamma_minus", minus)
    report.tally("gamma_s", sum(p["gamma_s"] for p in parts))
    report.expect("gamma-plus-size", gcd(L - 1, M), plus)
    report.expect("gamma-minus-size", gcd(L + 1, M), minus)
    report.expect("gamma-intersection", [0, M // 2], both)

    case = _oracle_case(ell, M, L)
    report.tally("case:" + case)
    report.expect("case-split", case, cl.classify_case(s, ctx).value)
    if case == cl.CaseTag.PLUS.value:
        report.expect("gamma-s-inclusion", 0, sum(p["s_not_plus"] for p in parts))
    elif case == cl.CaseTag.MINUS.value:
        report.expect("gamma-s-inclusion", 0, sum(p["s_not_minus"] for p in parts))

    for a in _sample(M, config.sample_size).tolist():
        report.checked += 1
        flags = cl.subgroup_membership(s, ctx, a)
        expected = ((dm - 1) * a % M == 0, (dm + 1) * a % M == 0, ell_v * a % M == 0, M_r * a % M == 0)
        report.expect("membership", expected, (flags.in_plus, flags.in_minus, flags.in_s, flags.in_r), a=a)
        a_r, a_s = cl.ell_decompose(s, ctx, a)
        ok = ((a_r + a_s) % M == a and M_r * a_r % M == 0 and ell_v * a_s % M == 0
              and cl.ell_decompose(s, ctx, a_r)[1] == 0)
        report.expect("idempotent", True, ok, a=a)
    return report


# Euler factors

def _exponents(f, K: int):
    return [(z.in_group(K), m) for z, m in f.roots]


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _check_char0(report: OracleReport, c: RootOfUnity, N: int) -> Tuple[object, int]:
    f0 = expand(c, N, 0)
    K = _lcm(c.order, N)
    report.checked += 1
    report.expect("euler-degree", N, f0.degree(), c=c.render(), N=N, char=0)
    lhs = poly.linear_product(_exponents(f0, K), K)
    rhs = poly.binomial(c.in_group(K) * N, N, K)
    report.expect("euler-char0", True, poly.equal(lhs, rhs), c=c.render(), N=N, char=0)
    return f0, K


def _check_char_ell(report: OracleReport, c: RootOfUnity, N: int, ell: int) -> None:
    report.checked += 1
    if c.order % ell == 0:
        try:
            expand(c, N, ell)
        except BadCharacteristic:
            report.tally("bad-characteristic-raised")
        else:
            report.fail("bad-characteristic", "BadCharacteristic", "accepted", c=c.render(), N=N, char=ell)
        return
    f = expand(c, N, ell)
    report.expect("euler-degree", N, f.degree(), c=c.render(), N=N, char=ell)
    K = _lcm(c.order, ell_split(N, ell)[0])
    lhs = poly.linear_product(_exponents(f, K), K)
    rhs = poly.binomial(c.in_group(K) * N, N, K)
    report.expect("euler-char-ell", True, poly.equal(lhs, rhs, modulus=ell), c=c.render(), N=N, char=ell)


def _check_reduction(report: OracleReport, c: RootOfUnity, N: int, ell: int, f0, K: int) -> None:
    report.checked += 1
    g = reduce_mod_ell(f0, ell)
    c_bar = c.prime_to_ell_part(ell)
    report.expect("euler-reduction", expand(c_bar, N, ell).to_dict(), g.to_dict(), c=c.render(), N=N, char=ell)
    reduced, K_r = poly.reduce_exponents_mod_ell(poly.binomial(c.in_group(K) * N, N, K), ell)
    lhs = poly.linear_product(_exponents(g, K_r), K_r)
    report.expect("euler-reduction", True, poly.equal(lhs, reduced, modulus=ell), c=c.render(), N=N, char=ell)

    # divisibility against the reduced binomial: g = f h certified densely
    for N2 in sorted_divisors(N):
        f = expand(c_bar, N2, ell)
        if not report.expect("euler-divides", True, divides(f, g), c=c.render(), N=N, N2=N2, char=ell):
            continue
        h = quotient(f, g)
        cert = poly.linear_product(_exponents(f, K_r) + _exponents(h, K_r), K_r)
        report.expect("euler-divides", True, poly.equal(cert, reduced, modulus=ell),
                      c=c.render(), N=N, N2=N2, char=ell)
    report.expect("euler-divides", False, divides(expand(c_bar, N + 1, ell), g), c=c.render(), N=N, char=ell)


def verify_euler_arithmetic(bound: int, primes=(2, 3, 5, 7, 13)) -> OracleReport:
    """
    For twist roots c of order <= bound (exponents 1 and order - 1) and N <= bound,
    multiply out expand(c, N, char) densely and compare with 1 - (cX)^N in
    characteristic 0 and ell, check reduction mod ell coefficientwise, and
    certify divisibility by dense multiplication.
    """
    report = OracleReport("euler-arithmetic", setting={"bound": bound, "primes": list(primes)})
    for d in range(1, bound + 1):
        for k in sorted({1 % d, (d - 1) % d}):
            c = RootOfUnity(d, k)
            for N in range(1, bound + 1):
                f0, K = _check_char0(report, c, N)
                for ell in primes:
                    _check_char_ell(report, c, N, ell)
                    _check_reduction(report, c, N, ell, f0, K)
    logger.debug(f"euler arithmetic: {report.checked} checks, {report.failure_count} failures")
    return report
