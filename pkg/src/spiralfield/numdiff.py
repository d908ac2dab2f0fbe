"""Finite-difference oracle for gradients and curls of vector fields.

Central differences on a halving step sequence, combined by Richardson
extrapolation. This module is only used for verification; the production
field path is fully analytic.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np


@dataclass(frozen=True)
class FdScheme:
    """Step control for the oracle.

    ``base_step`` is the largest step (length units); ``richardson_levels``
    is the number of extrapolation levels, i.e. ``levels + 1`` step sizes
    ``h, h/2, ..., h/2**levels`` are evaluated.
    """

    base_step: float = 1e-4
    richardson_levels: int = 3

    def __post_init__(self):
        if not self.base_step > 0:
            raise ValueError(f"base_step must be positive, got {self.base_step}")
        if not 1 <= self.richardson_levels <= 5:
            raise ValueError(f"richardson_levels must be in [1, 5], got {self.richardson_levels}")

    @classmethod
    def for_wavenumber(cls, k, richardson_levels=3):
        """Default step 1e-4 / k."""
        return cls(base_step=1e-4 / k, richardson_levels=richardson_levels)


class FdResult(NamedTuple):
    value: np.ndarray
    error: float
    history: tuple


class StepUnderflowError(ValueError):
    """The smallest step vanishes against the coordinate magnitude."""


def _richardson(f, pt, axis, scheme):
    """Extrapolated central derivative of f along one axis."""
    pt = np.asarray(pt, dtype=float)
    levels = scheme.richardson_levels
    hmin = scheme.base_step / 2**levels
    # below this the perturbed coordinate is not resolved in float64
    if hmin <= 64 * np.finfo(float).eps * np.max(np.abs(pt)):
        raise StepUnderflowError(f"step {hmin:g} underflows at point {pt.tolist()}")
    e = np.zeros(3)
    e[axis] = 1.0
    table = []
    for j in range(levels + 1):
        h = scheme.base_step / 2**j
        row = [(np.asarray(f(pt + h * e)) - np.asarray(f(pt - h * e))) / (2 * h)]
        for i in range(1, j + 1):
            fac = 4.0**i
            row.append((fac * row[i - 1] - table[j - 1][i - 1]) / (fac - 1))
        table.append(row)
    diag = [table[j][j] for j in range(levels + 1)]
    history = tuple(float(np.max(np.abs(diag[j] - diag[j - 1]))) for j in range(1, levels + 1))
    return diag[-1], history


def fd_gradient(f, pt, scheme=FdScheme()):
    """Tensor ``T[i, j] = d f_j / d x_i`` of a vector field ``f`` at ``pt``.

    ``f`` maps a length-3 array to a length-3 (complex) array. The returned
    error estimate is the last change between successive extrapolation
    levels, maximized over entries.
    """
    rows, hist = [], []
    for axis in range(3):
        d, h = _richardson(f, pt, axis, scheme)
        rows.append(d)
        hist.append(h)
    history = tuple(max(col) for col in zip(*hist))
    return FdResult(np.stack(rows), history[-1], history)


def curl_from_gradient(T):
    """Curl of a field given its gradient tensor ``T[i, j] = d_i f_j``."""
    return np.stack([T[1, 2] - T[2, 1], T[2, 0] - T[0, 2], T[0, 1] - T[1, 0]])


def fd_curl(f, pt, scheme=FdScheme()):
    """Curl of ``f`` at ``pt`` from the finite-difference gradient."""
    res = fd_gradient(f, pt, scheme)
    return FdResult(curl_from_gradient(res.value), res.error, res.history)


def fd_derivative(g, pt, scheme=FdScheme()):
    """Gradient ``(d_x g, d_y g, d_z g)`` of a scalar ``g`` at ``pt``."""
    parts, hist = [], []
    for axis in range(3):
        d, h = _richardson(g, pt, axis, scheme)
        parts.append(d)
        hist.append(h)
    history = tuple(max(col) for col in zip(*hist))
    return FdResult(np.stack(parts), history[-1], history)
