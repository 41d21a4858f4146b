# -*- coding: utf-8 -*-
"""
Dense polynomials in X with coefficients in the group ring Z[C_K].

A polynomial is an int64 array of shape (degree + 1, K); entry [i, a] is the
coefficient of zeta_K^a X^i. Equality in Z[zeta_K] (or in Z[zeta_K] / ell)
is decided after reducing each coefficient modulo the K-th cyclotomic
polynomial.
"""

from functools import lru_cache
from math import gcd
from typing import Iterable, Optional, Tuple

import numpy as np
from sympy import Poly, cyclotomic_poly, symbols, totient

__all__ = [
    "identity",
    "linear_product",
    "binomial",
    "reduction_matrix",
    "to_cyclotomic",
    "equal",
    "reduce_exponents_mod_ell",
]

_x = symbols("x")


def identity(K: int) -> np.ndarray:
    P = np.zeros((1, K), dtype=np.int64)
    P[0, 0] = 1
    return P


def _times_linear(P: np.ndarray, a: int) -> np.ndarray:
    # (1 - zeta^a X) P
    K = P.shape[1]
    out = np.zeros((P.shape[0] + 1, K), dtype=np.int64)
    out[:-1] += P
    out[1:] -= np.roll(P, a % K, axis=1)
    return out


def linear_product(exponents: Iterable[Tuple[int, int]], K: int) -> np.ndarray:
    """
    prod (1 - zeta_K^a X)^m over (a, m) pairs.
    """
    P = identity(K)
    for a, m in exponents:
        for _ in range(m):
            P = _times_linear(P, a)
    return P


def binomial(a: int, N: int, K: int) -> np.ndarray:
    """1 - zeta_K^a X^N."""
    P = np.zeros((N + 1, K), dtype=np.int64)
    P[0, 0] = 1
    P[N, a % K] -= 1
    return P


@lru_cache(maxsize=1024)
def reduction_matrix(K: int) -> np.ndarray:
    """
    Row i holds the coefficients of x^i modulo the K-th cyclotomic polynomial,
    so a group-ring vector v maps to v @ R in the power basis of Z[zeta_K].
    """
    phi = int(totient(K))
    coeffs = [int(c) for c in reversed(Poly(cyclotomic_poly(K, _x), _x).all_coeffs())]
    low = np.array(coeffs[:phi], dtype=np.int64)
    R = np.zeros((K, phi), dtype=np.int64)
    row = np.zeros(phi + 1, dtype=np.int64)
    row[0] = 1
    for i in range(K):
        if row[phi]:
            row[:phi] -= row[phi] * low
            row[phi] = 0
        R[i] = row[:phi]
        row = np.roll(row, 1)
        row[0] = 0
    R.flags.writeable = False
    return R


def to_cyclotomic(P: np.ndarray, modulus: Optional[int] = None) -> np.ndarray:
    out = P @ reduction_matrix(P.shape[1])
    if modulus is not None:
        out = np.mod(out, modulus)
    return out


def _pad(P: np.ndarray, rows: int) -> np.ndarray:
    if P.shape[0] == rows:
        return P
    out = np.zeros((rows, P.shape[1]), dtype=np.int64)
    out[:P.shape[0]] = P
    return out


def equal(P: np.ndarray, Q: np.ndarray, modulus: Optional[int] = None) -> bool:
    """Equality of P and Q in Z[zeta_K][X], or in (Z[zeta_K] / modulus)[X]."""
    if P.shape[1] != Q.shape[1]:
        raise ValueError("group orders differ: {} and {}".format(P.shape[1], Q.shape[1]))
    rows = max(P.shape[0], Q.shape[0])
    diff = to_cyclotomic(_pad(P, rows) - _pad(Q, rows), modulus)
    return not diff.any()


def reduce_exponents_mod_ell(P: np.ndarray, ell: int) -> Tuple[np.ndarray, int]:
    """
    Push coefficients along Z[C_K] -> Z[C_{K_r}], K = K_r ell^e, killing the
    ell-power part of each group element; composed with reduction modulo ell
    this is the coefficientwise reduction of Z[zeta_K] at a prime above ell.
    :return: (polynomial over C_{K_r}, K_r)
    """
    K = P.shape[1]
    ell_e = 1
    while K % (ell_e * ell) == 0:
        ell_e *= ell
    K_r = K // ell_e
    # idempotent: 1 mod K_r, 0 mod ell^e
    idem = ell_e * pow(ell_e, -1, K_r) % K if K_r > 1 else 0
    a = np.arange(K, dtype=np.int64)
    target = (a * idem % K) // ell_e
    assert gcd(ell_e, K_r) == 1
    out = np.zeros((P.shape[0], K_r), dtype=np.int64)
    np.add.at(out.T, target, P.T)
    return out, K_r
