# -*- coding: utf-8 -*-
"""
Characters of l^x = F_{q^n}^x as residues modulo M = q^n - 1.

A character is identified with its index a with respect to a fixed (never
materialized) generator of the cyclic character group, so multiplication of
characters is addition of indices and the Frobenius acts by a -> q * a.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from typing import FrozenSet, List, Optional, Tuple

from sympy import mobius
from sympy.ntheory.modular import crt

from .errors import (
    DualityUndefined,
    DualityViolation,
    InvalidSetting,
    ModulusTooLarge,
    NonRegularInput,
)
from .utils import check_prime, is_odd_prime_power, proper_maximal_divisors, sorted_divisors, valuation

__all__ = [
    "DEFAULT_MAX_MODULUS",
    "DualityKind",
    "CaseTag",
    "FiniteSetting",
    "EllContext",
    "MembershipFlags",
    "LiftClass",
    "ell_decompose",
    "frobenius_orbit",
    "orbit_size",
    "is_regular",
    "is_dual_selfdual_adic",
    "is_dual_selfdual_modell",
    "subgroup_membership",
    "quadratic_character",
    "element_order",
    "enumerate_lifts",
    "classify_case",
    "closed_form_lift_total",
    "closed_form_dual_lift_count",
]

logger = logging.getLogger(__name__)

DEFAULT_MAX_MODULUS = 2 ** 22


class DualityKind(str, Enum):
    GALOIS_PAIR = "GaloisPair"
    SELF_DUAL = "SelfDual"


class CaseTag(str, Enum):
    COPRIME = "Coprime"
    PLUS = "PlusCase"
    MINUS = "MinusCase"
    ELL_TWO = "EllTwo"


@dataclass(frozen=True)
class FiniteSetting:
    """
    A finite-level character universe.

    q_base is the order of k; for the Galois-pair kind q_base = q_o ** 2 and the
    involution of k/k_o extends to l as multiplication by q_o (sigma_mult).
    dual_mult is q_o ** n (Galois pair), q ** (n/2) (self-dual, n even), 1
    (self-dual, n = 1) and None for self-dual settings with odd n > 1.
    """
    q_base: int
    n: int
    kind: DualityKind
    q_o: Optional[int] = None
    M: int = field(init=False)
    frob_mult: int = field(init=False)
    dual_mult: Optional[int] = field(init=False)
    sigma_mult: Optional[int] = field(init=False)

    def __post_init__(self):
        if self.n < 1:
            raise InvalidSetting("degree n must be >= 1, got {}".format(self.n))
        if not is_odd_prime_power(self.q_base):
            raise InvalidSetting("q must be an odd prime power >= 3, got {}".format(self.q_base))
        if self.kind is DualityKind.GALOIS_PAIR:
            if self.q_o is None or self.q_o ** 2 != self.q_base:
                raise InvalidSetting("Galois-pair setting needs q_base = q_o^2")
        elif self.q_o is not None:
            raise InvalidSetting("self-dual setting carries no q_o")

        M = self.q_base ** self.n - 1
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "frob_mult", self.q_base % M)

        if self.kind is DualityKind.GALOIS_PAIR:
            dual_mult = pow(self.q_o, self.n, M)
            sigma_mult = self.q_o % M
        elif self.n == 1:
            dual_mult, sigma_mult = 1 % M, None
        elif self.n % 2 == 0:
            dual_mult, sigma_mult = pow(self.q_base, self.n // 2, M), None
        else:
            dual_mult, sigma_mult = None, None
        object.__setattr__(self, "dual_mult", dual_mult)
        object.__setattr__(self, "sigma_mult", sigma_mult)

        assert pow(self.frob_mult, self.n, M) == 1 % M, "Frobenius multiplier must have order dividing n"
        if dual_mult is not None:
            assert dual_mult * dual_mult % M == 1 % M, "duality multiplier must be an involution"
        if self.kind is DualityKind.GALOIS_PAIR and self.n % 2 == 1:
            assert dual_mult != 1, "sigma extension must be nontrivial for odd n"

    @classmethod
    def galois_pair(cls, q_o: int, n: int) -> "FiniteSetting":
        if not is_odd_prime_power(q_o):
            raise InvalidSetting("q_o must be an odd prime power >= 3, got {}".format(q_o))
        return cls(q_base=q_o ** 2, n=n, kind=DualityKind.GALOIS_PAIR, q_o=q_o)

    @classmethod
    def self_dual(cls, q: int, n: int) -> "FiniteSetting":
        return cls(q_base=q, n=n, kind=DualityKind.SELF_DUAL)

    @property
    def duality_defined(self) -> bool:
        return self.dual_mult is not None

    @property
    def dual_mult_lift(self) -> int:
        """The integer whose +-1 neighbours split M: q_o^n, q^(n/2) or q (n = 1)."""
        if self.kind is DualityKind.GALOIS_PAIR:
            return self.q_o ** self.n
        if self.n == 1:
            return self.q_base
        if self.n % 2 == 0:
            return self.q_base ** (self.n // 2)
        raise DualityUndefined("self-dual setting with odd n = {} > 1 has no involution".format(self.n))

    def describe(self) -> dict:
        out = {"kind": self.kind.value, "q": self.q_base, "n": self.n, "M": self.M}
        if self.q_o is not None:
            out["q_o"] = self.q_o
        return out

    def check_enumerable(self, max_modulus: int = DEFAULT_MAX_MODULUS) -> None:
        if self.M > max_modulus:
            raise ModulusTooLarge(self.M, max_modulus)


@dataclass(frozen=True)
class EllContext:
    ell: int
    v: int
    M_r: int
    idem_r: int
    idem_s: int

    @property
    def ell_power(self) -> int:
        return self.ell ** self.v

    @classmethod
    def build(cls, s: FiniteSetting, ell: int) -> "EllContext":
        if not check_prime(ell):
            raise InvalidSetting("ell must be prime, got {}".format(ell))
        if s.q_base % ell == 0:
            raise InvalidSetting("ell = {} divides q = {}".format(ell, s.q_base))
        M = s.M
        v = valuation(M, ell)
        ell_v = ell ** v
        M_r = M // ell_v
        if v == 0:
            idem_r = 1 % M
        elif M_r == 1:
            idem_r = 0
        else:
            idem_r = int(crt([M_r, ell_v], [1, 0])[0]) % M
        idem_s = (1 - idem_r) % M
        assert (idem_r + idem_s) % M == 1 % M and idem_r * idem_s % M == 0, "CRT idempotents"
        return cls(ell=ell, v=v, M_r=M_r, idem_r=idem_r, idem_s=idem_s)


@dataclass(frozen=True)
class MembershipFlags:
    in_plus: bool
    in_minus: bool
    in_s: bool
    in_r: bool


@dataclass(frozen=True)
class LiftClass:
    representatives: Tuple[int, ...]
    total: int
    dual_count: int
    case_tag: CaseTag

    def __post_init__(self):
        assert self.dual_count <= self.total, "more dual lifts than lifts"

    def to_dict(self) -> dict:
        return {
            "representatives": list(self.representatives),
            "total": self.total,
            "dual_count": self.dual_count,
            "case_tag": self.case_tag.value,
        }


def ell_decompose(s: FiniteSetting, ctx: EllContext, a: int) -> Tuple[int, int]:
    """Split a into its ell-regular and ell-singular parts (a_r, a_s), a_r + a_s = a."""
    a %= s.M
    return a * ctx.idem_r % s.M, a * ctx.idem_s % s.M


def frobenius_orbit(s: FiniteSetting, a: int) -> List[int]:
    M = s.M
    x = a % M
    orbit = set()
    for _ in range(s.n):
        orbit.add(x)
        x = x * s.frob_mult % M
    return sorted(orbit)


def orbit_size(s: FiniteSetting, a: int) -> int:
    # the smallest d | n with a (q^d - 1) = 0 mod M
    a %= s.M
    for d in sorted_divisors(s.n):
        if a * (s.q_base ** d - 1) % s.M == 0:
            return d
    return s.n


def is_regular(s: FiniteSetting, a: int) -> bool:
    a %= s.M
    return all(a * (s.q_base ** d - 1) % s.M != 0 for d in proper_maximal_divisors(s.n))


def _dual_multipliers(s: FiniteSetting) -> FrozenSet[int]:
    if not s.duality_defined:
        raise DualityUndefined(
            "self-dual setting with odd n = {} > 1: the involution is undefined".format(s.n))
    base = s.sigma_mult if s.kind is DualityKind.GALOIS_PAIR else s.dual_mult
    M = s.M
    mults, x = set(), base
    for _ in range(s.n):
        mults.add(x)
        x = x * s.frob_mult % M
    return frozenset(mults)


def _general_dual_test(s: FiniteSetting, a: int) -> bool:
    M = s.M
    return any((d * a + a) % M == 0 for d in _dual_multipliers(s))


def is_dual_selfdual_adic(s: FiniteSetting, a: int) -> bool:
    """
    True iff the inverse of the character lies in the orbit of its twist by the
    involution, i.e. exists k with dual * q^k * a = -a mod M.
    """
    a %= s.M
    result = _general_dual_test(s, a)
    if s.kind is DualityKind.GALOIS_PAIR and s.n % 2 == 1 and is_regular(s, a):
        in_minus = (s.dual_mult + 1) * a % s.M == 0
        assert result == in_minus, "sigma-self-duality of regular {} must match Gamma^- membership".format(a)
    return result


def is_dual_selfdual_modell(s: FiniteSetting, ctx: EllContext, a: int) -> bool:
    a_r, _ = ell_decompose(s, ctx, a)
    if s.kind is DualityKind.GALOIS_PAIR and s.n % 2 == 1 and ctx.ell != 2:
        return (s.dual_mult + 1) * a_r % s.M == 0
    return _general_dual_test(s, a_r)


def subgroup_membership(s: FiniteSetting, ctx: EllContext, a: int) -> MembershipFlags:
    if not s.duality_defined:
        raise DualityUndefined("no involution for a self-dual setting with odd n = {}".format(s.n))
    M, dm = s.M, s.dual_mult
    a %= M
    return MembershipFlags(
        in_plus=(dm - 1) * a % M == 0,
        in_minus=(dm + 1) * a % M == 0,
        in_s=ctx.ell_power * a % M == 0,
        in_r=ctx.M_r * a % M == 0,
    )


def quadratic_character(s: FiniteSetting) -> int:
    return s.M // 2


def element_order(s: FiniteSetting, a: int) -> int:
    return s.M // gcd(a % s.M, s.M)


def classify_case(s: FiniteSetting, ctx: EllContext) -> CaseTag:
    if ctx.ell == 2:
        return CaseTag.ELL_TWO
    if ctx.v == 0:
        return CaseTag.COPRIME
    L = s.dual_mult_lift
    if (L - 1) % ctx.ell == 0:
        return CaseTag.PLUS
    if (L + 1) % ctx.ell == 0:
        return CaseTag.MINUS
    raise AssertionError("ell = {} divides M but neither {} - 1 nor {} + 1".format(ctx.ell, L, L))


def enumerate_lifts(s: FiniteSetting, ctx: EllContext, a: int,
                    max_modulus: int = DEFAULT_MAX_MODULUS) -> LiftClass:
    """
    Frobenius orbits of regular characters in a_r + Gamma_s, i.e. the
    supercuspidal lifts of the reduction of rho(theta_a).
    :param a: a regular index
    :return: LiftClass with minimal orbit representatives in ascending order
    """
    s.check_enumerable(max_modulus)
    M = s.M
    a %= M
    if not is_regular(s, a):
        raise NonRegularInput("index {} is not regular for q = {}, n = {}".format(a, s.q_base, s.n))
    a_r, _ = ell_decompose(s, ctx, a)

    reps = set()
    for k in range(ctx.ell_power):
        x = (a_r + ctx.M_r * k) % M
        if is_regular(s, x):
            reps.add(frobenius_orbit(s, x)[0])
    representatives = tuple(sorted(reps))
    dual_count = sum(1 for r in representatives if is_dual_selfdual_adic(s, r))
    logger.debug("lifts of %d (a_r=%d): %d orbits, %d dual", a, a_r, len(representatives), dual_count)
    return LiftClass(
        representatives=representatives,
        total=len(representatives),
        dual_count=dual_count,
        case_tag=classify_case(s, ctx),
    )


def closed_form_lift_total(s: FiniteSetting, ctx: EllContext, a: int) -> int:
    """
    Number of Frobenius orbits of regular elements in a_r + Gamma_s, by Moebius
    inversion over the Frobenius powers fixing them.
    """
    M = s.M
    a_r, _ = ell_decompose(s, ctx, a)
    fixed = {}
    for d in sorted_divisors(s.n):
        step = s.q_base ** d - 1
        fixed[d] = gcd(ctx.ell_power, step) if a_r * step % M == 0 else 0
    regular = sum(int(mobius(s.n // d)) * fixed[d] for d in fixed)
    # an orbit meets the coset n / d0 times, d0 the orbit size of a_r
    d0 = orbit_size(s, a_r)
    total, rem = divmod(regular * d0, s.n)
    assert rem == 0, "orbit count must be integral"
    return total


def _strict_for_ell_two(s: FiniteSetting) -> bool:
    if s.kind is DualityKind.GALOIS_PAIR:
        return s.n % 2 == 1
    return s.n % 2 == 0


def closed_form_dual_lift_count(s: FiniteSetting, ctx: EllContext, a: int, supercuspidal_reduction: bool,
                                max_modulus: int = DEFAULT_MAX_MODULUS) -> int:
    """
    Number of dual-self-dual supercuspidal lifts of the reduction of rho(theta_a).

    For self-dual settings with a non-supercuspidal reduction the count assumes
    that the reduction is distinguished; the index alone cannot decide it.
    """
    if not is_dual_selfdual_modell(s, ctx, a):
        raise DualityViolation("index {} is not dual-self-dual modulo {}".format(a, ctx.ell))
    if s.kind is DualityKind.GALOIS_PAIR and s.n % 2 == 0:
        return 0

    case = classify_case(s, ctx)
    if case is CaseTag.COPRIME:
        return 1
    if case is CaseTag.PLUS:
        return 1 if supercuspidal_reduction else 0
    if case is CaseTag.MINUS:
        if supercuspidal_reduction:
            return ctx.ell_power
        # every lift a_r + mu lies in Gamma^- when a_r does, since Gamma_s lies in Gamma^- in the minus case
        a_r, _ = ell_decompose(s, ctx, a)
        if (s.dual_mult + 1) * a_r % s.M == 0:
            return closed_form_lift_total(s, ctx, a)
        return 0

    lifts = enumerate_lifts(s, ctx, a, max_modulus)
    if _strict_for_ell_two(s):
        assert lifts.dual_count < lifts.total, \
            "ell = 2: index {} must have a non-dual lift ({} of {})".format(a, lifts.dual_count, lifts.total)
    return lifts.dual_count
