# -*- coding: utf-8 -*-
"""
Roots of unity as normalized (order, exponent) pairs.

zeta(d, k) stands for zeta_d ** k inside a compatible system of primitive roots
(zeta_{ab} ** a == zeta_b), so products and powers reduce to exponent
arithmetic in a cyclic group of order lcm of the orders involved.
"""

from dataclasses import dataclass
from math import gcd

from .utils import ell_split

__all__ = ["RootOfUnity", "ONE"]


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


@dataclass(frozen=True, order=True)
class RootOfUnity:
    order: int
    exponent: int = 0

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("root of unity order must be >= 1, got {}".format(self.order))
        k = self.exponent % self.order
        g = gcd(k, self.order)
        # exponent 0 has gcd == order, collapsing to the root 1
        object.__setattr__(self, "order", self.order // g)
        object.__setattr__(self, "exponent", k // g)

    @classmethod
    def one(cls) -> "RootOfUnity":
        return cls(1, 0)

    @property
    def is_one(self) -> bool:
        return self.order == 1

    def in_group(self, K: int) -> int:
        """Exponent of this root inside the cyclic group of order K (order must divide K)."""
        if K % self.order:
            raise ValueError("order {} does not divide {}".format(self.order, K))
        return self.exponent * (K // self.order)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        K = _lcm(self.order, other.order)
        return RootOfUnity(K, self.in_group(K) + other.in_group(K))

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.order, self.exponent * k)

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(self.order, -self.exponent)

    def prime_to_ell_part(self, ell: int) -> "RootOfUnity":
        """
        Image under reduction modulo ell.
        zeta_d ** k splits uniquely as zeta_{d_r} ** x * zeta_{ell^e} ** y with d = d_r * ell^e;
        the ell-power factor reduces to 1, which leaves zeta_{d_r} ** x with x = k / ell^e mod d_r.
        """
        d_r, e = ell_split(self.order, ell)
        if e == 0:
            return self
        if d_r == 1:
            return ONE
        return RootOfUnity(d_r, self.exponent * pow(ell ** e, -1, d_r))

    def render(self) -> str:
        return "zeta({},{})".format(self.order, self.exponent)

    def to_dict(self) -> dict:
        return {"order": self.order, "exponent": self.exponent}


ONE = RootOfUnity(1, 0)
