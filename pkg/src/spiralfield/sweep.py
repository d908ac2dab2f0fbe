"""Grid sweeps behind the figure commands.

Points are split into contiguous chunks evaluated on a thread pool and
reassembled in index order, so output never depends on scheduling.
``SPIRALFIELD_THREADS`` caps the pool size.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace

import numpy as np

from .em_field import (FieldSample, axis_to_peak_ratio, electric_breakdown, energy_densities,
                       field_sample)
from .multipole import excitation_rate, transition_amplitude

THREADS_ENV = "SPIRALFIELD_THREADS"
CHUNK = 512


def thread_count():
    raw = os.environ.get(THREADS_ENV)
    if raw:
        n = int(raw)
        if n < 1:
            raise ValueError(f"{THREADS_ENV} must be >= 1, got {raw!r}")
        return n
    return os.cpu_count() or 1


def ordered_map(fn, items, threads=None):
    """``[fn(i) for i in items]``, possibly in parallel, always in order."""
    items = list(items)
    threads = thread_count() if threads is None else threads
    if threads <= 1 or len(items) <= 1:
        return [fn(i) for i in items]
    with ThreadPoolExecutor(max_workers=min(threads, len(items))) as pool:
        return list(pool.map(fn, items))


def sample_points(beam, x, y, z, threads=None):
    """FieldSample over flat coordinate arrays, evaluated chunkwise."""
    x, y, z = np.broadcast_arrays(*(np.asarray(c, dtype=float).ravel() for c in (x, y, z)))
    bounds = [(i, min(i + CHUNK, x.size)) for i in range(0, x.size, CHUNK)]
    parts = ordered_map(lambda b: field_sample(beam, (x[b[0]:b[1]], y[b[0]:b[1]], z[b[0]:b[1]])),
                        bounds, threads)
    return FieldSample(E=np.concatenate([s.E for s in parts], axis=1),
                       B=np.concatenate([s.B for s in parts], axis=1),
                       gradE=np.concatenate([s.gradE for s in parts], axis=2))


def radial_profile(beam, r_over_w0, channels=(), line=None, z=0.0, c=1.0, normalize=False,
                   threads=None):
    """Columns of the radial energy and rate profile along phi = 0."""
    r = np.asarray(r_over_w0, dtype=float) * beam.w0
    s = sample_points(beam, r, 0.0, z, threads)
    i_e, i_m = energy_densities(s, c)
    i_t, i_l = electric_breakdown(s, c)
    cols = {"r_over_w0": np.asarray(r_over_w0, dtype=float), "I_E": i_e,
            "I_E_transverse": i_t, "I_E_longitudinal": i_l, "I_M": i_m}
    rates = {f"rate_{ch.label}": excitation_rate(transition_amplitude([ch], s), line) for ch in channels}
    if len(channels) > 1:
        rates["rate_coherent"] = excitation_rate(transition_amplitude(list(channels), s), line)
    for name, v in rates.items():
        top = np.max(v)
        cols[name] = v / top if normalize and top > 0 else v
    return cols


def ratio_sweep(beam, kw0_values, c=1.0, threads=None):
    """Axis magnetic energy over peak electric energy versus k w0."""
    kw0_values = np.asarray(kw0_values, dtype=float)
    ratios = np.array(ordered_map(
        lambda kw0: axis_to_peak_ratio(replace(beam, w0=kw0 / beam.k), c), kw0_values, threads))
    return {"kw0": kw0_values, "ratio": ratios, "ratio_times_kw0_4": ratios * kw0_values**4}


def field_map(beam, coords_over_w0, z=0.0, threads=None):
    """Real parts of E and B on a square grid, rows over y, x fastest."""
    u = np.asarray(coords_over_w0, dtype=float)
    yy, xx = np.meshgrid(u, u, indexing="ij")
    s = sample_points(beam, xx * beam.w0, yy * beam.w0, z, threads)
    cols = {"x_over_w0": xx.ravel(), "y_over_w0": yy.ravel()}
    for name, vec in (("E", s.E), ("B", s.B)):
        for i, axis in enumerate("xyz"):
            cols[f"Re_{name}{axis}"] = vec[i].real
    cols["absE"] = np.sqrt(np.sum(np.abs(s.E) ** 2, axis=0))
    cols["absB"] = np.sqrt(np.sum(np.abs(s.B) ** 2, axis=0))
    return cols


def loglog_slope(x, y):
    """Least-squares slope of log y against log x."""
    return float(np.polyfit(np.log(x), np.log(y), 1)[0])
