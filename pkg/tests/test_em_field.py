from math import pi

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import beam, rel_err
from spiralfield.em_field import (FieldSample, axis_to_peak_ratio, divergence_ratio, divergence_residual,
                                  electric_breakdown, electric_field, energy_densities, field_sample,
                                  grad_electric, magnetic_field, peak_electric_energy)
from spiralfield.numdiff import FdScheme, fd_curl, fd_gradient
from spiralfield.sweep import loglog_slope

ORIGIN = (0.0, 0.0, 0.0)


def test_hollow_on_axis():
    assert np.all(electric_field(beam(p=1, m=2), ORIGIN) == 0)


def test_m1_has_only_longitudinal_field_on_axis():
    E = electric_field(beam(p=0, m=1), ORIGIN)
    assert E[0] == 0 and E[1] == 0
    assert abs(E[2]) > 0


def test_longitudinal_ratio_scales_inverse_kw0():
    # m = p = 0, linear x: E_z / E_x = (i/k) dU/dx / U = -2 i x / (k w0^2)
    for kw0 in (20.0, 40.0, 80.0):
        b = beam(kw0=kw0, p=0, m=0, pol="linear-x")
        E = electric_field(b, (0.6 * b.w0, 0.3 * b.w0, 0.0))
        assert abs(E[2]) / abs(E[0]) * kw0 == pytest.approx(2 * 0.6, rel=1e-12)


@pytest.mark.parametrize("p", [0, 1, 2, 6])
@pytest.mark.parametrize("kw0", [6.0, 10.0, 20.0])
def test_axis_magnetic_energy(p, kw0):
    B = magnetic_field(beam(kw0=kw0, p=p, m=2, k=0.8), ORIGIN)
    assert np.sum(np.abs(B) ** 2) == pytest.approx(32 * (p + 1) * (p + 2) / (pi * kw0**4), rel=1e-8)


def test_axis_magnetic_energy_value():
    B = magnetic_field(beam(kw0=10, p=6, m=2), ORIGIN)
    assert np.sum(np.abs(B) ** 2) == pytest.approx(1792 / (pi * 1e4), rel=1e-12)
    assert np.sum(np.abs(B) ** 2) == pytest.approx(5.704e-2, rel=1e-3)


def test_plane_wave_limit_of_b():
    devs = []
    for kw0 in (40.0, 80.0):
        b = beam(kw0=kw0, p=0, m=0, pol="linear-x")
        pt = (0.5 * b.w0, -0.3 * b.w0, 0.0)
        E, B = electric_field(b, pt), magnetic_field(b, pt)
        zxE = np.array([-E[1], E[0]])
        devs.append(np.max(np.abs(B[:2] - zxE)) / np.max(np.abs(zxE)))
        # the longitudinal part of B is first order, like E_z
        assert abs(B[2]) / abs(B[1]) < 3 / kw0
    assert devs[0] < 1e-3
    assert 3.0 < devs[0] / devs[1] < 5.0


def test_dz_ex_on_axis_plane_wave_like():
    # on the axis of a Gaussian, d_z E_x = (ik - i/z_R) E_x exactly
    b = beam(kw0=25.0, p=0, m=0, pol="linear-x", k=1.5)
    g, E = grad_electric(b, ORIGIN), electric_field(b, ORIGIN)
    assert g[2, 0] == pytest.approx((1j * b.k - 1j / b.z_r) * E[0], rel=1e-13)
    assert abs(g[2, 0] / (1j * b.k * E[0]) - 1) == pytest.approx(2 / b.kw0**2, rel=1e-12)


def test_gradient_nonzero_on_hollow_axis():
    g = grad_electric(beam(p=0, m=2), ORIGIN)
    assert abs(g[0, 2]) > 0 and abs(g[1, 2]) > 0
    assert g[1, 2] == pytest.approx(-1j * g[0, 2], rel=1e-14)
    np.testing.assert_array_equal(g[:, :2], 0)


BEAMS = [(0, 2, 6.0), (1, 2, 10.0), (6, 2, 10.0), (6, 2, 20.0), (2, 0, 8.0), (1, -1, 6.0), (3, 3, 12.0)]


@pytest.mark.parametrize("p, m, kw0", BEAMS)
def test_fields_match_finite_differences(p, m, kw0, rng):
    b = beam(kw0=kw0, p=p, m=m, k=2.0)
    scheme = FdScheme.for_wavenumber(b.k)
    for _ in range(10):
        pt = np.array([*rng.uniform(-2, 2, 2) * b.w0, rng.uniform(-1, 1) * b.z_r])
        f = lambda q: electric_field(b, q)  # noqa: E731
        assert rel_err(grad_electric(b, pt), fd_gradient(f, pt, scheme).value) < 1e-6
        assert rel_err(magnetic_field(b, pt), (-1j / b.k) * fd_curl(f, pt, scheme).value) < 1e-6


def test_fd_gradient_at_origin():
    b = beam(kw0=10, p=1, m=2)
    f = lambda q: electric_field(b, q)  # noqa: E731
    res = fd_gradient(f, np.zeros(3), FdScheme.for_wavenumber(b.k))
    assert rel_err(grad_electric(b, ORIGIN), res.value) < 1e-6
    b6 = beam(kw0=10, p=6, m=2)
    curl = fd_curl(lambda q: electric_field(b6, q), np.zeros(3), FdScheme.for_wavenumber(1.0)).value
    assert rel_err(magnetic_field(b6, ORIGIN), -1j * curl) < 1e-6


def test_field_sample_consistent():
    b = beam(kw0=7, p=2, m=2)
    pt = (1.0, 2.0, 3.0)
    s = field_sample(b, pt)
    np.testing.assert_array_equal(s.E, electric_field(b, pt))
    np.testing.assert_array_equal(s.B, magnetic_field(b, pt))
    np.testing.assert_array_equal(s.gradE, grad_electric(b, pt))


def test_energy_densities():
    zero = FieldSample(np.zeros(3, complex), np.zeros(3, complex), np.zeros((3, 3), complex))
    assert energy_densities(zero) == (0.0, 0.0)
    E = np.array([0.3 + 0.1j, -0.2j, 0.0])
    B = np.array([-E[1], E[0], 0.0])
    i_e, i_m = energy_densities(FieldSample(E, B, np.zeros((3, 3))), c=3.0)
    assert i_e == pytest.approx(i_m, rel=1e-15)
    assert i_e == pytest.approx(3.0 * np.sum(np.abs(E) ** 2) / (8 * pi))
    s = field_sample(beam(kw0=10, p=6, m=2), ORIGIN)
    assert energy_densities(s)[1] == pytest.approx(1792 / (pi * 1e4) / (8 * pi), rel=1e-12)
    i_t, i_l = electric_breakdown(field_sample(beam(kw0=5, p=1, m=1), (1.0, 0.5, 0.0)))
    assert i_t + i_l == pytest.approx(energy_densities(field_sample(beam(kw0=5, p=1, m=1), (1.0, 0.5, 0.0)))[0])


@settings(max_examples=60, deadline=None)
@given(p=st.integers(0, 8), kw0=st.floats(4, 100))
def test_hollow_beam_refutation(p, kw0):
    s = field_sample(beam(kw0=kw0, p=p, m=2), ORIGIN)
    assert np.all(s.E == 0)
    assert np.sum(np.abs(s.B) ** 2) > 0
    assert np.max(np.abs(s.gradE)) > 0


def _divergence_closed_form(x_w0, y_w0, kw0):
    # waist plane, m = p = 0, linear x
    r2 = x_w0**2 + y_w0**2
    return 4 * abs(x_w0) * np.exp(-r2) * abs(2 - r2) / kw0**3


@pytest.mark.parametrize("x, y", [(0.3, 0.2), (0.7, -0.4), (1.1, 0.5)])
def test_divergence_residual(x, y):
    res = {}
    for kw0 in (25.0, 50.0, 100.0):
        b = beam(kw0=kw0, p=0, m=0, pol="linear-x", k=1.3)
        res[kw0] = divergence_residual(b, (x * b.w0, y * b.w0, 0.0))
        assert res[kw0] == pytest.approx(_divergence_closed_form(x, y, kw0), rel=1e-9)
    assert res[50.0] <= 1e-2
    # third order in 1/(k w0)
    assert res[25.0] / res[50.0] == pytest.approx(8.0, rel=1e-6)
    assert res[50.0] / res[100.0] == pytest.approx(8.0, rel=1e-6)


def test_divergence_of_plane_wave_stub():
    k, E = 2.0, np.array([1.0, 1j, 0.0])
    gradE = np.zeros((3, 3), complex)
    gradE[2] = 1j * k * E
    assert divergence_ratio(gradE, k, 1.0) == 0


def test_peak_electric_energy_finds_global_ring():
    b = beam(kw0=10, p=6, m=2)
    r = np.linspace(0, 3 * b.w0, 20001)
    dens = energy_densities(field_sample(b, (r, 0 * r, 0 * r)))[0]
    r_pk, val = peak_electric_energy(b)
    assert val >= dens.max() * (1 - 1e-12)
    assert r_pk == pytest.approx(r[np.argmax(dens)], abs=2e-4 * b.w0)


def test_focusing_law():
    kw = np.linspace(30, 100, 8)
    ratios = [axis_to_peak_ratio(beam(kw0=k, p=6, m=2)) for k in kw]
    assert loglog_slope(kw, ratios) == pytest.approx(-4.0, abs=0.1)
