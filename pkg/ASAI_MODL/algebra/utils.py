# -*- coding: utf-8 -*-
"""
Small number-theoretic helpers shared by the algebra modules.
"""

from functools import lru_cache
from typing import Tuple

from sympy import divisors, factorint, isprime, multiplicity, primefactors

__all__ = [
    "is_odd_prime_power",
    "valuation",
    "ell_split",
    "proper_maximal_divisors",
    "sorted_divisors",
    "check_prime",
]


@lru_cache(maxsize=4096)
def is_odd_prime_power(q: int) -> bool:
    if q < 3 or q % 2 == 0:
        return False
    return len(factorint(q)) == 1


def valuation(n: int, ell: int) -> int:
    """ell-adic valuation of a positive integer n."""
    if n <= 0:
        raise ValueError("valuation is defined for positive integers, got {}".format(n))
    return int(multiplicity(ell, n))


def ell_split(n: int, ell: int) -> Tuple[int, int]:
    """
    Write n = n_r * ell**e with ell not dividing n_r.
    :return: (n_r, e)
    """
    e = valuation(n, ell)
    return n // ell ** e, e


@lru_cache(maxsize=4096)
def proper_maximal_divisors(n: int) -> Tuple[int, ...]:
    # n/p for each prime p dividing n; an element fixed by none of these
    # Frobenius powers has an orbit of full size n
    return tuple(n // p for p in primefactors(n))


@lru_cache(maxsize=4096)
def sorted_divisors(n: int) -> Tuple[int, ...]:
    return tuple(int(d) for d in divisors(n))


def check_prime(ell: int) -> bool:
    return ell >= 2 and bool(isprime(ell))
