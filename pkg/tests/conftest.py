import numpy as np
import pytest

from spiralfield.lg_mode import BeamParams


@pytest.fixture
def rng():
    return np.random.default_rng(20071014)


def beam(kw0=10.0, p=0, m=2, k=1.0, pol="sigma-minus", **kw):
    return BeamParams.from_kw0(kw0, k=k, polarization=pol, p=p, m=m, **kw)


def rel_err(a, b):
    """Largest entry error relative to the largest entry of ``b``."""
    a, b = np.asarray(a), np.asarray(b)
    return float(np.max(np.abs(a - b)) / np.max(np.abs(b)))


ACCEPTANCE = []


def record(criterion, ok, detail=""):
    """Log one acceptance line; the assertion is left to the caller."""
    ACCEPTANCE.append((criterion, bool(ok), detail))
    return bool(ok)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {criterion}  {detail}")
