"""Multipole detector transitions and their excitation rates.

A transition couples to the local field through

    T = d . E + m . B + Q_ij d_i E_j

and is excited at the rate R = |T|^2 / (hbar^2 sqrt(dw^2 + Gamma^2 / 4)).
Matrix elements use a quantization axis along the beam (z).
"""

from dataclasses import dataclass, field
from enum import Enum
from math import sqrt
from typing import NamedTuple

import numpy as np

SQRT2_3 = sqrt(2.0 / 3.0)


class Kind(str, Enum):
    E1 = "E1"
    M1 = "M1"
    E2 = "E2"


_M_RANGE = {Kind.M1: (-1, 0, 1), Kind.E2: (-2, -1, 0, 1, 2)}


def m_vector(M, scalar=1.0):
    """Magnetic dipole matrix element for Zeeman component ``M``.

    m^{+1} = s (1, i, 0), m^{-1} = s (-1, i, 0), m^0 = s (0, 0, sqrt 2).
    """
    if M == 1:
        v = [1, 1j, 0]
    elif M == -1:
        v = [-1, 1j, 0]
    elif M == 0:
        v = [0, 0, sqrt(2.0)]
    else:
        raise ValueError(f"M1 transitions need M in (-1, 0, 1), got {M}")
    return scalar * np.array(v, dtype=complex)


def q_matrix(M, scalar=1.0):
    """Electric quadrupole matrix element for Zeeman component ``M``."""
    s = 1 if M > 0 else -1
    if M == 0:
        q = SQRT2_3 * np.diag([-1.0, -1.0, 2.0]).astype(complex)
    elif abs(M) == 1:
        q = np.array([[0, 0, -s], [0, 0, -1j], [-s, -1j, 0]], dtype=complex)
    elif abs(M) == 2:
        q = np.array([[1, s * 1j, 0], [s * 1j, -1, 0], [0, 0, 0]], dtype=complex)
    else:
        raise ValueError(f"E2 transitions need M in (-2..2), got {M}")
    return scalar * q


@dataclass(frozen=True)
class Multipole:
    """One detector channel: transition kind, Zeeman index and amplitude.

    E1 channels carry an explicit dipole vector ``d`` and ignore ``M``.
    """

    kind: Kind
    M: int = 0
    scalar: complex = 1.0
    d: tuple = field(default=(1.0, 0.0, 0.0))

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.kind is not Kind.E1 and self.M not in _M_RANGE[self.kind]:
            raise ValueError(f"M={self.M} out of range for {self.kind.value}")

    @property
    def label(self):
        if self.kind is Kind.E1:
            return "E1"
        return f"{self.kind.value}_M{self.M:+d}"

    def element(self):
        """The realized vector (E1, M1) or 3x3 matrix (E2)."""
        if self.kind is Kind.E1:
            return np.asarray(self.d, dtype=complex)
        if self.kind is Kind.M1:
            return m_vector(self.M, self.scalar)
        return q_matrix(self.M, self.scalar)


@dataclass(frozen=True)
class DetectorLine:
    delta_omega: float = 0.0
    gamma: float = 2.0
    hbar: float = 1.0

    def __post_init__(self):
        if not self.gamma > 0:
            raise ValueError(f"linewidth must be positive, got {self.gamma}")
        if not self.hbar > 0:
            raise ValueError(f"hbar must be positive, got {self.hbar}")

    @property
    def denominator(self):
        return self.hbar**2 * sqrt(self.delta_omega**2 + self.gamma**2 / 4)


def channel_amplitude(channel, sample):
    """Contribution of one channel to T (broadcasts over sample points)."""
    el = channel.element()
    if channel.kind is Kind.E1:
        return np.tensordot(el, sample.E, axes=(0, 0))
    if channel.kind is Kind.M1:
        return np.tensordot(el, sample.B, axes=(0, 0))
    return np.tensordot(el, sample.gradE, axes=([0, 1], [0, 1]))


def transition_amplitude(detectors, sample, coherent=True):
    """Total amplitude T of a list of channels.

    Channels add coherently by default. With ``coherent=False`` a list of
    per-channel amplitudes is returned instead, to be summed as rates.
    """
    parts = [channel_amplitude(ch, sample) for ch in detectors]
    if not coherent:
        return parts
    if not parts:
        return np.zeros(np.shape(sample.E)[1:], dtype=complex)[()]
    total = sum(parts[1:], parts[0])
    return complex(total) if np.ndim(total) == 0 else total


def excitation_rate(T, line):
    """|T|^2 / (hbar^2 sqrt(delta_omega^2 + gamma^2 / 4))."""
    out = np.abs(T) ** 2 / line.denominator
    return float(out) if np.ndim(out) == 0 else out


def incoherent_rate(detectors, sample, line):
    """Sum of per-channel rates, no interference between channels."""
    return sum(excitation_rate(t, line) for t in transition_amplitude(detectors, sample, coherent=False))


class AngularMomentum(NamedTuple):
    sigma: float
    jz: float


def beam_angular_momentum(beam):
    """Spin sigma = -i (alpha beta* - beta alpha*) and j_z = m + sigma, in hbar."""
    a, b = complex(beam.alpha), complex(beam.beta)
    # dividing by the (unit) norm keeps circular polarizations at exactly -1/+1
    sigma = (-1j * (a * b.conjugate() - b * a.conjugate())).real / (abs(a) ** 2 + abs(b) ** 2)
    return AngularMomentum(sigma=sigma, jz=beam.m + sigma)
