"""Scalar Laguerre-Gauss mode and its analytic Cartesian derivatives.

The mode is

    U = C/w (sqrt(2) r / w)^|m| exp(-r^2/w^2) L_p^|m|(2 r^2 / w^2)
        * exp(i k r^2 z / (2 (z^2 + z_R^2)) - i m phi - i (2p + |m| + 1) atan(z / z_R))

with w = w(z). The azimuthal factor r^|m| e^{-i m phi} is written as
(x - i sgn(m) y)^|m| so the axis is an ordinary point. The plane-wave
factor e^{ikz} is *not* part of U; the vector field assembly adds it.

Derivatives are obtained by splitting U = P(x, y) * G(rho, z) with
rho = x^2 + y^2 and differentiating each factor in closed form.
"""

from dataclasses import dataclass
from math import factorial, pi, sqrt
from typing import NamedTuple

import numpy as np

from .special_fn import laguerre, laguerre_derivative

SQRT1_2 = sqrt(0.5)

POLARIZATIONS = {
    # sigma = -1 circular, the case worked out in the on-axis tables
    "sigma-minus": (SQRT1_2, 1j * SQRT1_2),
    "sigma-plus": (SQRT1_2, -1j * SQRT1_2),
    "linear-x": (1.0, 0.0),
    "linear-y": (0.0, 1.0),
}


@dataclass(frozen=True)
class BeamParams:
    """One Laguerre-Gauss beam mode.

    Parameters
    ----------
    E0 : complex
        Field amplitude (a complex value applies a global phase).
    k : float
        Wavenumber.
    w0 : float
        Waist radius.
    p, m : int
        Radial and azimuthal indices.
    alpha, beta : complex
        Transverse polarization coefficients, |alpha|^2 + |beta|^2 = 1.
    """

    E0: complex = 1.0
    k: float = 1.0
    w0: float = 10.0
    p: int = 0
    m: int = 0
    alpha: complex = SQRT1_2
    beta: complex = 1j * SQRT1_2

    def __post_init__(self):
        if not self.k > 0:
            raise ValueError(f"k must be positive, got {self.k}")
        if not self.w0 > 0:
            raise ValueError(f"w0 must be positive, got {self.w0}")
        if int(self.p) != self.p or self.p < 0:
            raise ValueError(f"p must be a nonnegative integer, got {self.p}")
        if int(self.m) != self.m:
            raise ValueError(f"m must be an integer, got {self.m}")
        norm = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"polarization not normalized: |alpha|^2 + |beta|^2 = {norm!r}")

    @classmethod
    def from_kw0(cls, kw0, k=1.0, polarization="sigma-minus", **kw):
        """Build a beam from the focusing parameter ``k * w0``."""
        alpha, beta = POLARIZATIONS[polarization] if isinstance(polarization, str) else polarization
        return cls(k=k, w0=kw0 / k, alpha=alpha, beta=beta, **kw)

    @property
    def kw0(self):
        return self.k * self.w0

    @property
    def abs_m(self):
        return abs(int(self.m))

    @property
    def z_r(self):
        """Rayleigh range k w0^2 / 2."""
        return 0.5 * self.k * self.w0**2

    @property
    def norm(self):
        """Normalization constant C_p^|m| = sqrt(2 p! / (pi (p + |m|)!))."""
        return sqrt(2.0 * factorial(self.p) / (pi * factorial(self.p + self.abs_m)))

    def waist(self, z):
        """Beam radius w(z)."""
        return self.w0 * np.sqrt(1.0 + (np.asarray(z, dtype=float) / self.z_r) ** 2)


class CartPoint(NamedTuple):
    x: float
    y: float
    z: float

    @classmethod
    def cylindrical(cls, r, phi, z=0.0):
        return cls(r * np.cos(phi), r * np.sin(phi), z)


@dataclass(frozen=True)
class ModeJet:
    """U with its first and second Cartesian partials.

    ``du`` has shape ``(3, ...)`` and ``d2u`` shape ``(3, 3, ...)`` over the
    broadcast point shape. Derivatives are of U alone, without e^{ikz}.
    """

    u: np.ndarray
    du: np.ndarray
    d2u: np.ndarray
    includes_plane_wave: bool = False


def _coords(pt):
    x, y, z = (np.asarray(c, dtype=float) for c in pt)
    return np.broadcast_arrays(x, y, z)


def _z_factors(beam, z):
    """z-dependent coefficients of G = A(z) exp(rho Q(z)) L(rho S(z))."""
    a, k, zr, w0 = beam.abs_m, beam.k, beam.z_r, beam.w0
    nu = 2 * beam.p + a + 1
    d = z**2 + zr**2
    W = w0**2 * (1.0 + z**2 / zr**2)
    W1 = 2.0 * w0**2 * z / zr**2
    W2 = np.full_like(z, 2.0 * w0**2 / zr**2)

    S = 2.0 / W
    S1 = -2.0 * W1 / W**2
    S2 = -2.0 * W2 / W**2 + 4.0 * W1**2 / W**3

    R = z / d
    R1 = (zr**2 - z**2) / d**2
    R2 = (2.0 * z**3 - 6.0 * z * zr**2) / d**3
    Q = -1.0 / W + 0.5j * k * R
    Q1 = W1 / W**2 + 0.5j * k * R1
    Q2 = W2 / W**2 - 2.0 * W1**2 / W**3 + 0.5j * k * R2

    psi = np.arctan(z / zr)
    psi1 = zr / d
    psi2 = -2.0 * z * zr / d**2
    A = beam.norm * 2.0 ** (a / 2) * W ** (-(a + 1) / 2) * np.exp(-1j * nu * psi)
    lam = -0.5 * (a + 1) * W1 / W - 1j * nu * psi1
    lam1 = -0.5 * (a + 1) * (W2 / W - W1**2 / W**2) - 1j * nu * psi2
    return A, lam, lam1, Q, Q1, Q2, S, S1, S2


def _azimuthal(beam, x, y):
    """P = (x - i sgn(m) y)^|m| with its nonzero partials."""
    a = beam.abs_m
    s = 1.0 if beam.m >= 0 else -1.0
    c = -1j * s  # d/dy of the base
    base = x - 1j * s * y
    zero = np.zeros_like(base)
    P = base**a
    P1 = a * base ** (a - 1) if a >= 1 else zero
    P2 = a * (a - 1) * base ** (a - 2) if a >= 2 else zero
    return P, P1, c * P1, P2, c * P2, c * c * P2


def mode_u(beam, pt):
    """Scalar mode U at ``pt`` (a CartPoint or any (x, y, z) triple)."""
    x, y, z = _coords(pt)
    rho = x**2 + y**2
    A, _, _, Q, _, _, S, _, _ = _z_factors(beam, z)
    P = _azimuthal(beam, x, y)[0]
    u = P * A * np.exp(rho * Q) * laguerre((beam.p, beam.abs_m), rho * S)
    return complex(u) if u.ndim == 0 else u


def mode_jet(beam, pt):
    """U and all first and second Cartesian partials at ``pt``."""
    x, y, z = _coords(pt)
    rho = x**2 + y**2
    A, lam, lam1, Q, Q1, Q2, S, S1, S2 = _z_factors(beam, z)
    order = (beam.p, beam.abs_m)
    t = rho * S
    L0 = laguerre(order, t)
    L1 = laguerre_derivative(order, t, 1)
    L2 = laguerre_derivative(order, t, 2)

    # G(rho, z) = A(z) * E * L  with E = exp(rho Q)
    AE = A * np.exp(rho * Q)
    G = AE * L0
    H = Q * L0 + S * L1
    G_r = AE * H
    G_rr = AE * (Q**2 * L0 + 2 * Q * S * L1 + S**2 * L2)
    # z-derivatives of log(A E) and of L
    dlog = lam + rho * Q1
    d2log = lam1 + rho * Q2
    L_z = rho * S1 * L1
    L_zz = rho * S2 * L1 + (rho * S1) ** 2 * L2
    G_z = AE * (dlog * L0 + L_z)
    G_zz = AE * ((dlog**2 + d2log) * L0 + 2 * dlog * L_z + L_zz)
    H_z = Q1 * L0 + Q * rho * S1 * L1 + S1 * L1 + S * rho * S1 * L2
    G_rz = AE * (dlog * H + H_z)

    Gx, Gy = 2 * x * G_r, 2 * y * G_r
    Gxx = 4 * x**2 * G_rr + 2 * G_r
    Gyy = 4 * y**2 * G_rr + 2 * G_r
    Gxy = 4 * x * y * G_rr
    Gxz, Gyz = 2 * x * G_rz, 2 * y * G_rz

    P, Px, Py, Pxx, Pxy, Pyy = _azimuthal(beam, x, y)
    u = P * G
    ux = Px * G + P * Gx
    uy = Py * G + P * Gy
    uz = P * G_z
    uxx = Pxx * G + 2 * Px * Gx + P * Gxx
    uyy = Pyy * G + 2 * Py * Gy + P * Gyy
    uxy = Pxy * G + Px * Gy + Py * Gx + P * Gxy
    uxz = Px * G_z + P * Gxz
    uyz = Py * G_z + P * Gyz
    uzz = P * G_zz

    du = np.stack([ux, uy, uz])
    d2u = np.stack([
        np.stack([uxx, uxy, uxz]),
        np.stack([uxy, uyy, uyz]),
        np.stack([uxz, uyz, uzz]),
    ])
    return ModeJet(u=u, du=du, d2u=d2u)
