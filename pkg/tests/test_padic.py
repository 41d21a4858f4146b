import pytest
from hypothesis import given, settings, strategies as st

from ASAI_MODL.algebra.charlattice import DualityKind
from ASAI_MODL.algebra.errors import InvalidDatum, NotDistinguishedInput
from ASAI_MODL.algebra.padic import (
    CuspidalDatum,
    Distinction,
    all_lifts_unramified_twist_distinguished,
    e_o,
    finite_level,
    invariant_report,
    is_banal,
    is_relatively_banal,
    iter_data,
    iter_valid_data,
    q_Eo,
    require_valid,
    validate,
    x_o_orders,
)
from ASAI_MODL.algebra.roots import RootOfUnity


def datum(q_o=3, n=3, e_ffo=1, e_ef=1, f_ef=1, e_sigma=1, **kwargs):
    return CuspidalDatum(q_o=q_o, n=n, e_ffo=e_ffo, e_ef=e_ef, f_ef=f_ef, e_sigma=e_sigma, **kwargs)


def tags(d, ell=None):
    return [v.tag for v in validate(d, ell)]


def test_unramified_example_invariants():
    d = datum()
    report = invariant_report(d, 7).to_dict()
    assert report == {
        "e_o": 1, "N": 3, "q_pow": 27, "q_Eo": 3, "banal": False, "rel_banal": True,
        "xo_char0": 3, "xo_modell": 3, "xo_kernel": 1,
    }
    assert not invariant_report(d, 13).relatively_banal


def test_x_o_reduction_kernel():
    # N = 2, ell = 2: the whole group is ell-singular
    d = datum(q_o=3, n=2, supercuspidal=False)
    assert x_o_orders(d, 2) == (2, 1, 2)
    assert x_o_orders(d, None) == (2, 2, 1)


def test_ramified_base_pole_example():
    d = datum(q_o=5, n=6, e_ffo=2, e_ef=1, f_ef=2, e_sigma=1)
    assert validate(d, 3) == []
    assert d.m == 3
    assert e_o(d) == 2
    assert q_Eo(d) == 5
    assert is_relatively_banal(d, 3)


def test_totally_ramified_type():
    d = datum(q_o=3, n=10, e_ffo=1, e_ef=5, f_ef=2, e_sigma=1)
    assert validate(d, 5) == []
    assert e_o(d) == 5
    assert q_Eo(d) == 9
    assert is_relatively_banal(d, 5)


def test_ramified_sigma_doubles_e_o():
    d = datum(q_o=3, n=4, e_ffo=2, e_ef=1, f_ef=2, e_sigma=2)
    assert validate(d) == []
    assert d.m == 2
    assert e_o(d) == 2
    assert q_Eo(d) == 9
    s, m = finite_level(d)
    assert s.kind is DualityKind.SELF_DUAL and (s.q_base, s.n, m) == (9, 2, 2)


def test_finite_level_unramified():
    s, m = finite_level(datum())
    assert s.kind is DualityKind.GALOIS_PAIR
    assert (s.q_o, s.n, m) == (3, 3, 3)


@pytest.mark.parametrize("d,ell,tag", [
    (datum(q_o=4), None, "shape"),
    (datum(e_sigma=3), None, "shape"),
    (datum(n=3, e_ef=2), None, "degree-divides-n"),
    (datum(e_sigma=2), None, "ramified-base"),
    (datum(q_o=3, n=2, e_ffo=2, e_ef=1, f_ef=1, e_sigma=1), None, "residue-tower"),
    (datum(q_o=3, n=2), None, "unramified-even-m"),
    (datum(n=3, e_ffo=2, e_sigma=2), None, "ramified-odd-m"),
    (datum(n=3, e_ffo=2, e_sigma=2), None, "odd-m-never-distinguished"),
    (datum(), 9, "ell-not-prime"),
    (datum(), 3, "ell-divides-q"),
    (datum(q_o=3, n=2, supercuspidal=False), 5, "rel-banal-even-m"),
])
def test_violations(d, ell, tag):
    assert tag in tags(d, ell)
    with pytest.raises(InvalidDatum):
        require_valid(d, ell)


def test_even_m_non_supercuspidal_valid_when_not_relatively_banal():
    d = datum(q_o=3, n=2, supercuspidal=False)
    assert validate(d, 2) == []
    assert validate(d, 5)


def test_odd_m_rule_only_for_distinguished_data():
    d = datum(n=3, e_ffo=2, e_sigma=2, distinction=Distinction.NOT_DISTINGUISHED)
    found = tags(d)
    assert "odd-m-never-distinguished" not in found
    assert "ramified-odd-m" in found


def test_not_distinguished_report_has_null_fields():
    d = datum(distinction=Distinction.NOT_DISTINGUISHED)
    report = invariant_report(d, 7).to_dict()
    assert report["rel_banal"] is None
    assert report["xo_char0"] is None
    assert report["e_o"] == 1
    with pytest.raises(NotDistinguishedInput):
        is_relatively_banal(d, 7)
    with pytest.raises(NotDistinguishedInput):
        x_o_orders(d, 7)


def test_twist_datum():
    d = datum(distinction=Distinction.TWIST, twist=RootOfUnity(2, 1))
    assert d.is_distinguished_up_to_twist
    assert d.twist_root == RootOfUnity(2, 1)
    assert d.to_dict()["twist"] == {"order": 2, "exponent": 1}
    assert "shape" in tags(datum(distinction=Distinction.TWIST))


def test_iter_data_order_and_coverage():
    data = list(iter_data([5, 3], [2]))
    keys = [d.key() for d in data]
    assert keys == sorted(keys)
    assert len(data) == 2 * 2 * 3 * 2
    assert all(d.n % d.degree == 0 for d in data)


def test_iter_valid_data_is_valid():
    for d in iter_valid_data([3, 5], range(1, 7), ell=7):
        assert validate(d, 7) == []


@pytest.mark.parametrize("ell", [2, 3, 5, 7, 11, 13])
def test_banal_implies_relatively_banal(ell):
    for d in iter_valid_data([3, 5, 7, 9], range(1, 9), ell=ell):
        if is_banal(d, ell):
            assert is_relatively_banal(d, ell)


@settings(deadline=None, max_examples=50)
@given(
    q_o=st.sampled_from([3, 5, 7, 9, 11, 13, 25, 27]),
    n=st.integers(min_value=1, max_value=12),
    ell=st.sampled_from([2, 3, 5, 7, 11, 13, 17, 19]),
)
def test_lift_distinction_matches_relative_banality(q_o, n, ell):
    for d in iter_valid_data([q_o], [n], ell=ell):
        assert all_lifts_unramified_twist_distinguished(d, ell) == is_relatively_banal(d, ell)


@given(q_o=st.sampled_from([3, 5, 7, 9, 25]), n=st.integers(min_value=1, max_value=16))
def test_e_o_divides_n(q_o, n):
    for d in iter_valid_data([q_o], [n]):
        assert n % e_o(d) == 0
        assert q_Eo(d) % q_o == 0
