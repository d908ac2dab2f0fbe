"""Generalized Laguerre polynomials L_p^a(x) and their x-derivatives.

Evaluation uses the upward three-term recurrence in the degree,

    (n + 1) L_{n+1}^a = (2n + 1 + a - x) L_n^a - (n + a) L_{n-1}^a,

which stays well conditioned for the moderate degrees used by beam modes.
Derivatives follow from the index shift d/dx L_p^a = -L_{p-1}^{a+1}.
All functions accept scalars or numpy arrays for ``x``.
"""

from math import comb
from typing import NamedTuple

import numpy as np


class LaguerreOrder(NamedTuple):
    """Degree ``p`` and superscript ``a`` of L_p^a."""

    p: int
    a: int

    def validated(self) -> "LaguerreOrder":
        if self.p < 0 or self.a < 0:
            raise ValueError(f"Laguerre order must be nonnegative, got p={self.p}, a={self.a}")
        return self


def _recurrence(p, a, x):
    x = np.asarray(x, dtype=float)
    if p < 0:
        return np.zeros_like(x)
    prev = np.ones_like(x)
    if p == 0:
        return prev
    cur = 1.0 + a - x
    for n in range(1, p):
        prev, cur = cur, ((2 * n + 1 + a - x) * cur - (n + a) * prev) / (n + 1)
    return cur


def laguerre(order, x):
    """Value of L_p^a(x).

    ``order`` is a :class:`LaguerreOrder` or a ``(p, a)`` pair. Returns a
    float for scalar input and an array otherwise.
    """
    p, a = LaguerreOrder(*order).validated()
    out = _recurrence(p, a, x)
    return float(out) if out.ndim == 0 else out


def laguerre_derivative(order, x, n=1):
    """``n``-th derivative (n = 1 or 2) of L_p^a at ``x``.

    Uses d^n/dx^n L_p^a = (-1)^n L_{p-n}^{a+n}, with polynomials of
    negative degree taken as zero.
    """
    if n not in (1, 2):
        raise ValueError(f"derivative order must be 1 or 2, got {n}")
    p, a = LaguerreOrder(*order).validated()
    out = (-1) ** n * _recurrence(p - n, a + n, x)
    return float(out) if out.ndim == 0 else out


def laguerre_monomial(order, x):
    """Direct monomial-sum evaluation, kept as an independent check.

    L_p^a(x) = sum_i (-1)^i C(p + a, p - i) x^i / i!
    """
    p, a = LaguerreOrder(*order).validated()
    x = np.asarray(x, dtype=float)
    total = np.zeros_like(x)
    fact = 1.0
    for i in range(p + 1):
        if i:
            fact *= i
        total = total + (-1) ** i * comb(p + a, p - i) * x**i / fact
    return float(total) if total.ndim == 0 else total
