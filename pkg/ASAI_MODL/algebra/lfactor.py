# -*- coding: utf-8 -*-
"""
Euler factors 1 / prod (1 - z X)^m with z a root of unity, kept as canonical
root multisets over characteristic 0 or ell, and the Asai L-factor of a
cuspidal datum.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from sympy import primefactors

from .errors import BadCharacteristic, CharacteristicMismatch, NotDivisible
from .padic import CuspidalDatum, e_o, is_relatively_banal, require_valid, require_distinguished
from .roots import ONE, RootOfUnity
from .utils import check_prime, ell_split, valuation

__all__ = [
    "RootOfUnity",
    "EulerFactor",
    "PeriodReport",
    "expand",
    "asai_l_factor",
    "pole_order_at_one",
    "reduce_mod_ell",
    "divides",
    "quotient",
    "period_report",
    "period_vanishing_primes",
]

logger = logging.getLogger(__name__)


def _monomial(N: int) -> str:
    return "X" if N == 1 else "X^{}".format(N)


def _coefficient(z: RootOfUnity) -> str:
    return "" if z.is_one else z.render() + " "


@dataclass(frozen=True)
class EulerFactor:
    characteristic: int
    roots: Tuple[Tuple[RootOfUnity, int], ...] = ()

    @classmethod
    def from_roots(cls, characteristic: int, items: Iterable[Tuple[RootOfUnity, int]]) -> "EulerFactor":
        if characteristic != 0 and not check_prime(characteristic):
            raise BadCharacteristic("characteristic must be 0 or a prime, got {}".format(characteristic))
        counts = Counter()
        for z, mult in items:
            if mult < 0:
                raise ValueError("negative multiplicity {} for {}".format(mult, z.render()))
            if characteristic and z.order % characteristic == 0:
                raise BadCharacteristic(
                    "root {} has order divisible by the characteristic {}".format(z.render(), characteristic))
            counts[z] += mult
        return cls(characteristic, tuple(sorted((z, m) for z, m in counts.items() if m > 0)))

    @classmethod
    def unit(cls, characteristic: int) -> "EulerFactor":
        return cls.from_roots(characteristic, ())

    @property
    def is_unit(self) -> bool:
        return not self.roots

    def degree(self) -> int:
        return sum(m for _, m in self.roots)

    def multiplicity(self, z: RootOfUnity) -> int:
        for root, m in self.roots:
            if root == z:
                return m
        return 0

    def twist(self, c: RootOfUnity) -> "EulerFactor":
        """The factor of X -> cX: every root is multiplied by c."""
        return EulerFactor.from_roots(self.characteristic, ((z * c, m) for z, m in self.roots))

    def compact(self) -> Optional[Tuple[RootOfUnity, int]]:
        """
        (c^N, N) when the factor is 1/(1 - (cX)^N) in its characteristic, else None.
        The roots must fill one coset c * mu_K with a uniform multiplicity that is 1
        in characteristic 0 and a power of ell in characteristic ell.
        """
        if self.is_unit:
            return None
        mults = {m for _, m in self.roots}
        if len(mults) != 1:
            return None
        mult = mults.pop()
        if self.characteristic == 0:
            if mult != 1:
                return None
        elif ell_split(mult, self.characteristic)[0] != 1:
            return None
        K = len(self.roots)
        c = self.roots[0][0]
        c_inv = c.inverse()
        ratios = {z * c_inv for z, _ in self.roots}
        if any(K % r.order for r in ratios):
            return None
        N = K * mult
        return c ** N, N

    def render(self) -> str:
        if self.is_unit:
            return "1"
        compact = self.compact()
        if compact is not None:
            coeff, N = compact
            return "1/(1 - {}{})".format(_coefficient(coeff), _monomial(N))
        parts = []
        for z, m in self.roots:
            factor = "1/(1 - {}X)".format(_coefficient(z))
            parts.append(factor if m == 1 else "{}^{}".format(factor, m))
        return " * ".join(parts)

    def to_dict(self) -> dict:
        return {
            "characteristic": self.characteristic,
            "factor": self.render(),
            "roots": [dict(z.to_dict(), multiplicity=m) for z, m in self.roots],
        }


@dataclass(frozen=True)
class PeriodReport:
    nonzero: bool
    numerator_zero_order: int
    denominator_zero_order: int
    scalar_vanishes: bool
    q_minus_one_valuation: int

    def __post_init__(self):
        assert self.nonzero == (not self.scalar_vanishes
                                and self.numerator_zero_order == self.denominator_zero_order)

    def to_dict(self) -> dict:
        return {
            "nonzero": self.nonzero,
            "numerator_zero_order": self.numerator_zero_order,
            "denominator_zero_order": self.denominator_zero_order,
            "scalar_vanishes": self.scalar_vanishes,
            "q_minus_one_valuation": self.q_minus_one_valuation,
        }


def expand(c: RootOfUnity, N: int, char: int) -> EulerFactor:
    """
    Canonical root multiset of 1/(1 - (cX)^N).
    In characteristic ell with N = N_r ell^e, 1 - (cX)^N = (1 - (cX)^N_r)^(ell^e).
    """
    if N < 1:
        raise ValueError("N must be >= 1, got {}".format(N))
    if char == 0:
        return EulerFactor.from_roots(0, ((c * RootOfUnity(N, j), 1) for j in range(N)))
    if c.order % char == 0:
        raise BadCharacteristic("twist root {} has order divisible by {}".format(c.render(), char))
    N_r, e = ell_split(N, char)
    return EulerFactor.from_roots(char, ((c * RootOfUnity(N_r, j), char ** e) for j in range(N_r)))


def asai_l_factor(d: CuspidalDatum, ell: int) -> EulerFactor:
    """
    :param ell: 0 for the characteristic-zero factor, else the prime ell
    """
    require_valid(d, ell or None)
    if not d.is_distinguished_up_to_twist:
        return EulerFactor.unit(ell)
    N = d.n // e_o(d)
    c = d.twist_root
    if ell == 0:
        return expand(c, N, 0)
    if not is_relatively_banal(d, ell):
        return EulerFactor.unit(ell)
    result = expand(c.prime_to_ell_part(ell), N, ell)
    # relatively banal: the factor is exactly the reduction of the lifted one
    assert result == reduce_mod_ell(expand(c, N, 0), ell), \
        "L-factor of {} at ell = {} is not the reduction of its lift".format(d.key(), ell)
    return result


def pole_order_at_one(f: EulerFactor) -> int:
    return f.multiplicity(ONE)


def reduce_mod_ell(f: EulerFactor, ell: int) -> EulerFactor:
    if f.characteristic != 0:
        raise CharacteristicMismatch("only characteristic-zero factors reduce, got {}".format(f.characteristic))
    return EulerFactor.from_roots(ell, ((z.prime_to_ell_part(ell), m) for z, m in f.roots))


def _same_characteristic(f: EulerFactor, g: EulerFactor) -> None:
    if f.characteristic != g.characteristic:
        raise CharacteristicMismatch(
            "characteristics differ: {} and {}".format(f.characteristic, g.characteristic))


def divides(f: EulerFactor, g: EulerFactor) -> bool:
    """f | g for inverse polynomials: the polynomial of f divides that of g."""
    _same_characteristic(f, g)
    return all(m <= g.multiplicity(z) for z, m in f.roots)


def quotient(f: EulerFactor, g: EulerFactor) -> EulerFactor:
    """The factor h with g = f h."""
    if not divides(f, g):
        raise NotDivisible("{} does not divide {}".format(f.render(), g.render()))
    rest = Counter(dict(g.roots))
    rest.subtract(dict(f.roots))
    return EulerFactor.from_roots(g.characteristic, rest.items())


def period_report(d: CuspidalDatum, ell: int) -> PeriodReport:
    """
    Vanishing of the G_o-period mod ell, read off the constant
    (q_o - 1)(q_o^N - 1) (1 - X^n)/(1 - X^N) at X = 1 with N = n/e_o.
    The factor q_o - 1 is reported but does not decide vanishing.
    """
    require_valid(d, ell)
    require_distinguished(d, "the period")
    eo = e_o(d)
    N = d.n // eo
    scalar_vanishes = pow(d.q_o, N, ell) == 1
    numerator = ell ** valuation(d.n, ell)
    denominator = ell ** valuation(N, ell)
    nonzero = not scalar_vanishes and numerator == denominator
    report = PeriodReport(
        nonzero=nonzero,
        numerator_zero_order=numerator,
        denominator_zero_order=denominator,
        scalar_vanishes=scalar_vanishes,
        q_minus_one_valuation=valuation(d.q_o - 1, ell),
    )
    assert nonzero == (is_relatively_banal(d, ell) and eo % ell != 0), \
        "period vanishing disagrees with the closed form for {} at ell = {}".format(d.key(), ell)
    return report


def period_vanishing_primes(d: CuspidalDatum) -> Tuple[int, ...]:
    """
    The primes ell != p modulo which the G_o-period vanishes: those dividing
    (q_o^N - 1) e_o with N = n/e_o. Together they form the radical of the
    p-regular part of the period constant.
    """
    require_valid(d)
    require_distinguished(d, "the period")
    eo = e_o(d)
    p = primefactors(d.q_o)[0]
    scalar = (d.q_o ** (d.n // eo) - 1) * eo
    return tuple(int(ell) for ell in primefactors(scalar) if ell != p)
