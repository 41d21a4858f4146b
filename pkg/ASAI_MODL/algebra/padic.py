# -*- coding: utf-8 -*-
"""
Cuspidal parametrizing data of GL_n(F), F/F_o quadratic, and the invariants
built from them: e_o, q_o^(n/e_o), q_{E_o}, banality, the torsion group X_o and
the passage to the finite level through the residue field of E_o.

Distinction is caller-supplied; every distinction-dependent output is
conditional on it.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterable, Iterator, List, Optional, Tuple

from .charlattice import CaseTag, EllContext, FiniteSetting, classify_case
from .errors import InvalidDatum, NotDistinguishedInput
from .roots import ONE, RootOfUnity
from .utils import check_prime, ell_split, is_odd_prime_power, sorted_divisors

__all__ = [
    "Distinction",
    "CuspidalDatum",
    "Violation",
    "InvariantReport",
    "validate",
    "require_valid",
    "require_distinguished",
    "e_o",
    "q_Eo",
    "is_relatively_banal",
    "is_banal",
    "x_o_orders",
    "finite_level",
    "all_lifts_unramified_twist_distinguished",
    "invariant_report",
    "iter_data",
    "iter_valid_data",
]

logger = logging.getLogger(__name__)


class Distinction(str, Enum):
    DISTINGUISHED = "Distinguished"
    TWIST = "TwistOfDistinguished"
    NOT_DISTINGUISHED = "NotDistinguishedUpToUnramifiedTwist"


@dataclass(frozen=True)
class CuspidalDatum:
    q_o: int
    n: int
    e_ffo: int
    e_ef: int
    f_ef: int
    e_sigma: int
    supercuspidal: bool = True
    distinction: Distinction = Distinction.DISTINGUISHED
    twist: Optional[RootOfUnity] = None

    @property
    def degree(self) -> int:
        return self.e_ef * self.f_ef

    @property
    def m(self) -> int:
        return self.n // self.degree

    @property
    def is_distinguished_up_to_twist(self) -> bool:
        return self.distinction is not Distinction.NOT_DISTINGUISHED

    @property
    def twist_root(self) -> RootOfUnity:
        if self.distinction is Distinction.TWIST:
            return self.twist
        return ONE

    def key(self) -> Tuple[int, int, int, int, int, int]:
        return self.q_o, self.n, self.e_ffo, self.e_ef, self.f_ef, self.e_sigma

    def to_dict(self) -> dict:
        out = {
            "q_o": self.q_o, "n": self.n, "e_ffo": self.e_ffo, "e_ef": self.e_ef,
            "f_ef": self.f_ef, "e_sigma": self.e_sigma, "supercuspidal": self.supercuspidal,
            "distinction": self.distinction.value,
        }
        if self.distinction is Distinction.TWIST:
            out["twist"] = self.twist.to_dict()
        return out


@dataclass(frozen=True)
class Violation:
    tag: str
    message: str

    def to_dict(self) -> dict:
        return {"tag": self.tag, "message": self.message}


@dataclass(frozen=True)
class InvariantReport:
    e_o: int
    N: int
    q_pow: int
    q_Eo: int
    banal: bool
    relatively_banal: Optional[bool]
    x_o_order_char0: Optional[int]
    x_o_order_modell: Optional[int]
    x_o_reduction_kernel: Optional[int]

    def __post_init__(self):
        if self.x_o_order_char0 is not None:
            assert self.x_o_order_char0 == self.x_o_order_modell * self.x_o_reduction_kernel

    def to_dict(self) -> dict:
        return {
            "e_o": self.e_o,
            "N": self.N,
            "q_pow": self.q_pow,
            "q_Eo": self.q_Eo,
            "banal": self.banal,
            "rel_banal": self.relatively_banal,
            "xo_char0": self.x_o_order_char0,
            "xo_modell": self.x_o_order_modell,
            "xo_kernel": self.x_o_reduction_kernel,
        }


def _shape_violations(d: CuspidalDatum) -> List[Violation]:
    out = []
    if not is_odd_prime_power(d.q_o):
        out.append(Violation("shape", "q_o = {} is not an odd prime power".format(d.q_o)))
    if d.n < 1:
        out.append(Violation("shape", "n must be >= 1"))
    if d.e_ffo not in (1, 2):
        out.append(Violation("shape", "e(F/F_o) must be 1 or 2"))
    if d.e_sigma not in (1, 2):
        out.append(Violation("shape", "e_sigma must be 1 or 2"))
    if d.e_ef < 1 or d.f_ef < 1:
        out.append(Violation("shape", "e(E/F) and f(E/F) must be >= 1"))
    if d.distinction is Distinction.TWIST and d.twist is None:
        out.append(Violation("shape", "a twist of a distinguished representation needs its twist root"))
    return out


def validate(d: CuspidalDatum, ell: Optional[int] = None) -> List[Violation]:
    """
    Every violated constraint of a datum; an empty list means valid.
    :param ell: when given, also applies the ell-dependent rules
    """
    violations = _shape_violations(d)
    if violations:
        return violations
    if d.n % d.degree:
        return [Violation("degree-divides-n",
                          "e(E/F) f(E/F) = {} does not divide n = {}".format(d.degree, d.n))]

    m = d.m
    if d.e_sigma == 2 and d.e_ffo == 1:
        violations.append(Violation("ramified-base", "e_sigma = 2 forces F/F_o to be ramified"))
    if d.e_sigma == 1 and d.e_ffo == 2 and d.f_ef % 2:
        violations.append(Violation(
            "residue-tower", "E/E_o unramified over a ramified F/F_o needs f(E/F) even, got {}".format(d.f_ef)))
    if d.supercuspidal and d.e_sigma == 1 and m % 2 == 0:
        violations.append(Violation("unramified-even-m", "m(pi) is odd when e_sigma = 1, got m = {}".format(m)))
    if d.e_sigma == 2 and m % 2 == 1 and m > 1:
        violations.append(Violation(
            "ramified-odd-m", "m(pi) is 1 or even when e_sigma = 2, got m = {}".format(m)))
    if d.is_distinguished_up_to_twist and d.e_sigma == 2 and m % 2 == 1 and m >= 3:
        violations.append(Violation(
            "odd-m-never-distinguished",
            "no distinguished cuspidal has e_sigma = 2 and odd m = {} >= 3".format(m)))

    if ell is not None:
        if not check_prime(ell):
            violations.append(Violation("ell-not-prime", "ell = {} is not prime".format(ell)))
            return violations
        if d.q_o % ell == 0:
            violations.append(Violation("ell-divides-q", "ell = {} divides q_o = {}".format(ell, d.q_o)))
            return violations
        if (d.distinction is Distinction.DISTINGUISHED and d.e_sigma == 1 and m % 2 == 0
                and not violations):
            N = d.n // e_o(d)
            if pow(d.q_o, N, ell) != 1:
                violations.append(Violation(
                    "rel-banal-even-m",
                    "relatively banal with e_sigma = 1 and even m = {} is never distinguished".format(m)))
    return violations


def require_valid(d: CuspidalDatum, ell: Optional[int] = None) -> None:
    violations = validate(d, ell)
    if violations:
        raise InvalidDatum(violations)


def e_o(d: CuspidalDatum) -> int:
    e_eo_fo = d.e_ef * d.e_ffo // d.e_sigma
    result = 2 * e_eo_fo if (d.e_sigma == 2 and d.m != 1) else e_eo_fo
    assert d.n % result == 0, "e_o = {} must divide n = {}".format(result, d.n)
    return result


def q_Eo(d: CuspidalDatum) -> int:
    """Residue field size of E_o."""
    f_eo_fo, rem = divmod(d.f_ef * d.e_sigma, d.e_ffo)
    assert rem == 0, "f(E_o/F_o) must be an integer"
    result = d.q_o ** f_eo_fo
    m = d.m
    q_pow = d.q_o ** (d.n // e_o(d))
    if d.e_sigma == 1:
        assert result ** m == q_pow
    elif m == 1:
        assert result == q_pow
    elif m % 2 == 0:
        assert result ** (m // 2) == q_pow
    return result


def require_distinguished(d: CuspidalDatum, what: str) -> None:
    if not d.is_distinguished_up_to_twist:
        raise NotDistinguishedInput("{} is defined for distinguished representations".format(what))


def is_relatively_banal(d: CuspidalDatum, ell: int) -> bool:
    require_distinguished(d, "relative banality")
    if d.q_o % ell == 0:
        raise InvalidDatum([Violation("ell-divides-q", "ell = {} divides q_o = {}".format(ell, d.q_o))])
    return pow(d.q_o, d.n // e_o(d), ell) != 1


def is_banal(d: CuspidalDatum, ell: int) -> bool:
    q = d.q_o ** (2 // d.e_ffo)
    return pow(q, d.n // d.e_ef, ell) != 1


def x_o_orders(d: CuspidalDatum, ell: Optional[int]) -> Tuple[int, int, int]:
    """
    Orders of the cyclic group X_o in characteristic 0 and ell, and the kernel of reduction.
    :return: (char0_order, modell_order, kernel)
    """
    require_distinguished(d, "X_o")
    N = d.n // e_o(d)
    if ell is None:
        return N, N, 1
    a, r = ell_split(N, ell)
    return N, a, ell ** r


def finite_level(d: CuspidalDatum, ell: Optional[int] = None) -> Tuple[FiniteSetting, int]:
    require_valid(d, ell)
    q = q_Eo(d)
    m = d.m
    if d.e_sigma == 1:
        return FiniteSetting.galois_pair(q, m), m
    if m == 1:
        return FiniteSetting.self_dual(q, 1), m
    return FiniteSetting.self_dual(q, m), m


def all_lifts_unramified_twist_distinguished(d: CuspidalDatum, ell: int) -> bool:
    """Computed from the finite-level case split, checked against relative banality."""
    require_distinguished(d, "lift distinction")
    s, _ = finite_level(d, ell)
    ctx = EllContext.build(s, ell)
    result = classify_case(s, ctx) in (CaseTag.COPRIME, CaseTag.MINUS)
    assert result == is_relatively_banal(d, ell), \
        "finite-level classification disagrees with relative banality for {} at ell = {}".format(d.key(), ell)
    return result


def invariant_report(d: CuspidalDatum, ell: int) -> InvariantReport:
    require_valid(d, ell)
    eo = e_o(d)
    N = d.n // eo
    if d.is_distinguished_up_to_twist:
        rel = is_relatively_banal(d, ell)
        xo = x_o_orders(d, ell)
    else:
        rel, xo = None, (None, None, None)
    return InvariantReport(
        e_o=eo,
        N=N,
        q_pow=d.q_o ** N,
        q_Eo=q_Eo(d),
        banal=is_banal(d, ell),
        relatively_banal=rel,
        x_o_order_char0=xo[0],
        x_o_order_modell=xo[1],
        x_o_reduction_kernel=xo[2],
    )


def iter_data(q_o_values: Iterable[int], n_values: Iterable[int], supercuspidal: bool = True,
              distinction: Distinction = Distinction.DISTINGUISHED) -> Iterator[CuspidalDatum]:
    """
    Every datum whose degree e(E/F) f(E/F) divides n, in lexicographic order of
    (q_o, n, e_ffo, e_ef, f_ef, e_sigma). Constraint violations are not filtered.
    """
    for q_o, n in product(sorted(set(q_o_values)), sorted(set(n_values))):
        for e_ffo in (1, 2):
            for e_ef in sorted_divisors(n):
                for f_ef in sorted_divisors(n // e_ef):
                    for e_sigma in (1, 2):
                        yield CuspidalDatum(q_o=q_o, n=n, e_ffo=e_ffo, e_ef=e_ef, f_ef=f_ef, e_sigma=e_sigma,
                                            supercuspidal=supercuspidal, distinction=distinction)


def iter_valid_data(q_o_values: Iterable[int], n_values: Iterable[int], ell: Optional[int] = None,
                    supercuspidal: Iterable[bool] = (True, False)) -> Iterator[CuspidalDatum]:
    for sc in supercuspidal:
        for d in iter_data(q_o_values, n_values, supercuspidal=sc):
            if not validate(d, ell):
                yield d
