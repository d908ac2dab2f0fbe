"""Analytic on-axis results for sigma-minus Laguerre-Gauss beams.

These are written out independently of the field pipeline and serve as
its reference values. Only magnitudes are meaningful; overall phases
depend on conventions the formulas do not fix.
"""

from math import pi, sqrt

import numpy as np

from .lg_mode import POLARIZATIONS

SQRT_PI = sqrt(pi)

# (beam m, detector M) pairs with a nonvanishing on-axis quadrupole amplitude
NONZERO_ENTRIES = ((-1, -2), (0, -1), (1, 0), (2, 1))


class PolarizationMismatch(ValueError):
    pass


def on_axis_magnetic_energy(p, kw0, E0=1.0, c=1.0):
    """Magnetic energy density on the axis of an m = 2 beam."""
    return c * abs(E0) ** 2 / (8 * pi) * 32 * (p + 1) * (p + 2) / (pi * kw0**4)


def is_sigma_minus(beam):
    a, b = POLARIZATIONS["sigma-minus"]
    return abs(complex(beam.alpha) - a) <= 1e-12 and abs(complex(beam.beta) - b) <= 1e-12


def _check_sigma_minus(beam):
    if not is_sigma_minus(beam):
        raise PolarizationMismatch("closed forms hold for alpha = 1/sqrt2, beta = i/sqrt2 only")


def quadrupole_amplitude(p, k, w0, m, M, Q=1.0, E0=1.0):
    """Amplitude Q^M_ij d_i E^m_j at the origin (closed form)."""
    kw0 = k * w0
    if (m, M) == (-1, -2):
        return 4j * sqrt(2 * p + 2) / (SQRT_PI * w0) * E0 * Q
    if (m, M) == (0, -1):
        return 2 * (8 * p + 4 - kw0**2) / (k * w0**2 * SQRT_PI) * E0 * Q
    if (m, M) == (1, 0):
        return 1j * 4 * sqrt(p + 1) / sqrt(3 * pi) * (8 * p + 8 - 3 * kw0**2) / (k**2 * w0**3) * E0 * Q
    if (m, M) == (2, 1):
        return 8 * sqrt((p + 1) * (p + 2)) / (SQRT_PI * k * w0**2) * E0 * Q
    return 0.0


def on_axis_quadrupole_amplitudes(beam, q_scalars=(1.0, 1.0, 1.0)):
    """Table ``{(m, M): T}`` for m, M in -2..2 at the beam's p, k, w0.

    ``q_scalars`` are the reduced amplitudes (Q0, Q1, Q2); the entry for
    detector M uses the scalar of order |M|. ``beam.m`` is not used: every
    row refers to the beam with that m and otherwise identical parameters.
    """
    _check_sigma_minus(beam)
    table = {}
    for m in range(-2, 3):
        for M in range(-2, 3):
            Q = q_scalars[abs(M)]
            table[(m, M)] = complex(quadrupole_amplitude(beam.p, beam.k, beam.w0, m, M, Q, abs(beam.E0)))
    return table


def on_axis_magnetic_amplitude(p, kw0, m1=1.0, E0=1.0):
    """Magnitude of the M1 (M = +1) amplitude on the axis of an m = 2 beam."""
    return 8 * sqrt((p + 1) * (p + 2)) / (SQRT_PI * kw0**2) * abs(E0 * m1)


def on_axis_rate_m2_M1(p, kw0, E0, m1, Q1, k, line):
    """Coherent M1 + E2 (M = 1) excitation rate on the axis of an m = 2 beam."""
    return (abs(E0) ** 2 * 64 * (p + 1) * (p + 2) / (line.denominator * pi * kw0**4)
            * abs(m1 + k * Q1) ** 2)


def vanishing_mask():
    """Boolean 5x5 array, True where the on-axis amplitude must vanish."""
    mask = np.ones((5, 5), dtype=bool)
    for m, M in NONZERO_ENTRIES:
        mask[m + 2, M + 2] = False
    return mask
