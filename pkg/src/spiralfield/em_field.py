"""Vector fields of a paraxial Laguerre-Gauss beam.

    E = E0 (w0/k) {k alpha U, k beta U, i (alpha dU/dx + beta dU/dy)} e^{ikz}

Time dependence is e^{-i omega t} with omega = c k, so Faraday's law in
Gaussian units reads curl E = i k B, i.e. B = -(i/k) curl E. The gradient
tensor is ``gradE[i, j] = d_i E_j`` and includes the derivative of the
e^{ikz} carrier. Everything is evaluated from the analytic mode jet and
broadcasts over arrays of points.
"""

from dataclasses import dataclass
from math import pi

import numpy as np
from scipy.optimize import minimize_scalar

from .lg_mode import mode_jet
from .numdiff import curl_from_gradient


@dataclass(frozen=True)
class FieldSample:
    """E, B (shape ``(3, ...)``) and gradE (``(3, 3, ...)``) at some points."""

    E: np.ndarray
    B: np.ndarray
    gradE: np.ndarray


def _assemble(beam, pt):
    jet = mode_jet(beam, pt)
    k, a, b = beam.k, beam.alpha, beam.beta
    z = np.broadcast_to(np.asarray(pt[2], dtype=float), jet.u.shape)
    carrier = beam.E0 * beam.w0 * np.exp(1j * k * z)
    # envelope V with E = E0 w0 V e^{ikz}
    V = np.stack([a * jet.u, b * jet.u, (1j / k) * (a * jet.du[0] + b * jet.du[1])])
    dV = np.empty((3, 3) + jet.u.shape, dtype=complex)
    dV[:, 0] = a * jet.du
    dV[:, 1] = b * jet.du
    dV[:, 2] = (1j / k) * (a * jet.d2u[0] + b * jet.d2u[1])
    dV[2] += 1j * k * V
    return V * carrier, dV * carrier


def electric_field(beam, pt):
    """Complex E at ``pt``."""
    return _assemble(beam, pt)[0]


def grad_electric(beam, pt):
    """Tensor ``d_i E_j`` at ``pt``."""
    return _assemble(beam, pt)[1]


def magnetic_field(beam, pt):
    """Complex B = -(i/k) curl E at ``pt``."""
    return (-1j / beam.k) * curl_from_gradient(grad_electric(beam, pt))


def field_sample(beam, pt):
    """E, B and gradE in one pass over the jet."""
    E, gradE = _assemble(beam, pt)
    B = (-1j / beam.k) * curl_from_gradient(gradE)
    return FieldSample(E=E, B=B, gradE=gradE)


def energy_densities(sample, c=1.0):
    """Electric and magnetic energy densities c|E|^2/8pi and c|B|^2/8pi."""
    i_e = c * np.sum(np.abs(sample.E) ** 2, axis=0) / (8 * pi)
    i_m = c * np.sum(np.abs(sample.B) ** 2, axis=0) / (8 * pi)
    if np.ndim(i_e) == 0:
        return float(i_e), float(i_m)
    return i_e, i_m


def electric_breakdown(sample, c=1.0):
    """Transverse and longitudinal parts of the electric energy density."""
    pref = c / (8 * pi)
    return pref * np.sum(np.abs(sample.E[:2]) ** 2, axis=0), pref * np.abs(sample.E[2]) ** 2


def peak_electric_energy(beam, z=0.0, c=1.0, r_max=3.0, scan=1200):
    """Maximum of the electric energy density over radius at fixed z.

    The radius is scanned on ``scan`` points over ``[0, r_max * w0]`` along
    phi = 0, then the best bracket is refined with a bounded scalar search
    to 1e-6 w0. Returns ``(r_peak, I_E_peak)``.
    """
    w0 = beam.w0

    def density(r):
        return energy_densities(field_sample(beam, (r, np.zeros_like(r), np.full_like(r, z))), c)[0]

    r = np.linspace(0.0, r_max * w0, scan)
    vals = density(r)
    i = int(np.argmax(vals))
    lo, hi = r[max(i - 1, 0)], r[min(i + 1, scan - 1)]
    res = minimize_scalar(lambda s: -density(np.asarray(s)), bounds=(lo, hi),
                          method="bounded", options={"xatol": 1e-6 * w0})
    if -res.fun >= vals[i]:
        return float(res.x), float(-res.fun)
    return float(r[i]), float(vals[i])


def axis_to_peak_ratio(beam, c=1.0):
    """I_M on the axis over the peak of I_E, both in the waist plane."""
    _, i_m = energy_densities(field_sample(beam, (0.0, 0.0, 0.0)), c)
    return i_m / peak_electric_energy(beam, 0.0, c)[1]


def divergence_ratio(gradE, k, e_max):
    """|div E| / (k max|E|) from a gradient tensor."""
    div = gradE[0, 0] + gradE[1, 1] + gradE[2, 2]
    return np.abs(div) / (k * e_max)


def divergence_residual(beam, pt):
    """Dimensionless paraxial consistency residual |div E| / (k max|E|_waist)."""
    e_max = np.sqrt(8 * pi * peak_electric_energy(beam)[1])
    out = divergence_ratio(grad_electric(beam, pt), beam.k, e_max)
    return float(out) if np.ndim(out) == 0 else out
