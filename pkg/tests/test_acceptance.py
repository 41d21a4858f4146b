import json
import time
from functools import lru_cache

from sympy import primerange

from ASAI_MODL.algebra.charlattice import (
    CaseTag,
    EllContext,
    FiniteSetting,
    closed_form_dual_lift_count,
    enumerate_lifts,
)
from ASAI_MODL.algebra.lfactor import (
    asai_l_factor,
    divides,
    period_report,
    period_vanishing_primes,
    pole_order_at_one,
    reduce_mod_ell,
)
from ASAI_MODL.algebra.padic import (
    CuspidalDatum,
    all_lifts_unramified_twist_distinguished,
    e_o,
    is_banal,
    is_relatively_banal,
    iter_valid_data,
)
from ASAI_MODL.algebra.utils import is_odd_prime_power, valuation
from ASAI_MODL.cli.main import EXIT_OK, main
from ASAI_MODL.oracle.config import OracleConfig
from ASAI_MODL.oracle.verify import verify_euler_arithmetic, verify_lift_counts, verify_parity

CONFIG = OracleConfig(max_modulus=2 ** 16, block_size=2 ** 14, sample_size=128)


def test_minus_case_lift_classification():
    start = time.perf_counter()
    s = FiniteSetting.galois_pair(5, 3)
    ctx = EllContext.build(s, 7)
    lifts = enumerate_lifts(s, ctx, 868)
    assert (lifts.total, lifts.dual_count, lifts.case_tag) == (7, 7, CaseTag.MINUS)
    assert closed_form_dual_lift_count(s, ctx, 868, supercuspidal_reduction=True) == 7
    assert time.perf_counter() - start < 1


def test_plus_case_lift_classification():
    start = time.perf_counter()
    s = FiniteSetting.galois_pair(3, 3)
    ctx = EllContext.build(s, 13)
    lifts = enumerate_lifts(s, ctx, 26)
    assert (lifts.total, lifts.dual_count, lifts.case_tag) == (13, 1, CaseTag.PLUS)
    assert closed_form_dual_lift_count(s, ctx, 26, supercuspidal_reduction=True) == 1
    assert time.perf_counter() - start < 1


def test_parity_exhaustion():
    start = time.perf_counter()
    assert FiniteSetting.galois_pair(9, 2).M == 6560
    for s in (FiniteSetting.galois_pair(9, 2), FiniteSetting.self_dual(3, 3)):
        report = verify_parity(s, CONFIG)
        assert report.passed
        assert report.counts["regular_dual"] == 0
    assert time.perf_counter() - start < 10


def test_ell_two_always_has_non_dual_lift():
    settings = [FiniteSetting.galois_pair(q_o, n) for q_o in (3, 5, 7, 9, 11, 13) for n in (1, 3, 5)]
    settings += [FiniteSetting.self_dual(q, n) for q in (3, 5, 7, 9, 11, 13) for n in (2, 4, 6)]
    settings = [s for s in settings if s.M <= 2 ** 16]
    start = time.perf_counter()
    dual_classes = 0
    for s in settings:
        report = verify_lift_counts(s, 2, CONFIG)
        assert report.passed, (s.describe(), report.to_dict()["failures"])
        dual_classes += report.counts["dual_classes"]
    assert dual_classes > 0
    assert time.perf_counter() - start < 30


@lru_cache(maxsize=1)
def generator_pairs():
    """Valid distinguished data with q_o <= 49, n <= 24 and every prime ell <= 31."""
    q_o_values = [q for q in range(3, 50) if is_odd_prime_power(q)]
    return tuple((d, int(ell)) for ell in primerange(2, 32)
                 for d in iter_valid_data(q_o_values, range(1, 25), ell=int(ell)))


@lru_cache(maxsize=None)
def char0_factor(d):
    return asai_l_factor(d, 0)


def test_lift_distinction_equals_relative_banality():
    pairs = generator_pairs()
    assert len(pairs) >= 10 ** 4
    for d, ell in pairs:
        assert all_lifts_unramified_twist_distinguished(d, ell) == is_relatively_banal(d, ell)


def test_pole_order_across_generator():
    for d, ell in generator_pairs():
        N = d.n // e_o(d)
        expected = ell ** valuation(N, ell) if is_relatively_banal(d, ell) else 0
        assert pole_order_at_one(asai_l_factor(d, ell)) == expected, (d.key(), ell)


def test_pole_order_spot_value():
    # n = 6, e_o = 2, 5 = 2 mod 3
    d = CuspidalDatum(q_o=5, n=6, e_ffo=2, e_ef=1, f_ef=2, e_sigma=1)
    assert e_o(d) == 2
    assert pole_order_at_one(asai_l_factor(d, 3)) == 3


def test_modular_factor_divides_reduction_across_generator():
    for d, ell in generator_pairs():
        f, g = asai_l_factor(d, ell), reduce_mod_ell(char0_factor(d), ell)
        assert divides(f, g), (d.key(), ell)
        if is_relatively_banal(d, ell):
            assert f == g, (d.key(), ell)


def test_strict_division_witness():
    d = CuspidalDatum(q_o=3, n=3, e_ffo=1, e_ef=1, f_ef=1, e_sigma=1)
    assert e_o(d) == 1
    f, g = asai_l_factor(d, 13), reduce_mod_ell(asai_l_factor(d, 0), 13)
    assert f.is_unit
    assert divides(f, g) and not divides(g, f)


def test_period_routes_agree_across_generator():
    for d, ell in generator_pairs():
        report = period_report(d, ell)
        by_orders = not report.scalar_vanishes and report.numerator_zero_order == report.denominator_zero_order
        closed_form = is_relatively_banal(d, ell) and e_o(d) % ell != 0
        assert report.nonzero == by_orders == closed_form, (d.key(), ell)
        assert (ell in period_vanishing_primes(d)) == (not report.nonzero), (d.key(), ell)


def test_period_spot_values():
    d = CuspidalDatum(q_o=5, n=6, e_ffo=2, e_ef=1, f_ef=2, e_sigma=1)
    assert period_report(d, 3).nonzero
    d = CuspidalDatum(q_o=3, n=10, e_ffo=1, e_ef=5, f_ef=2, e_sigma=1)
    assert e_o(d) == 5
    assert not period_report(d, 5).nonzero


def test_banal_implies_relatively_banal_across_generator():
    for d, ell in generator_pairs():
        if is_banal(d, ell):
            assert is_relatively_banal(d, ell), (d.key(), ell)


def test_euler_arithmetic_oracle():
    start = time.perf_counter()
    report = verify_euler_arithmetic(24, (2, 3, 5, 7, 13))
    assert report.passed, report.to_dict()["failures"]
    assert report.checked > 0
    assert time.perf_counter() - start < 30


def test_default_verify_suite_passes(capsys):
    code = main(["verify", "--suite", "default", "--no-progress"])
    out = json.loads(capsys.readouterr().out)
    assert code == EXIT_OK
    assert out["passed"] is True
    assert out["failure_count"] == 0
