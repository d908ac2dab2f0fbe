"""Electromagnetic structure of Laguerre-Gauss beams and non-E1 detector response."""

from .closed_forms import (on_axis_magnetic_energy, on_axis_quadrupole_amplitudes,
                           on_axis_rate_m2_M1)
from .em_field import (FieldSample, axis_to_peak_ratio, divergence_residual, electric_field,
                       energy_densities, field_sample, grad_electric, magnetic_field)
from .lg_mode import BeamParams, CartPoint, ModeJet, mode_jet, mode_u
from .multipole import (AngularMomentum, DetectorLine, Kind, Multipole, beam_angular_momentum,
                        excitation_rate, m_vector, q_matrix, transition_amplitude)
from .numdiff import FdScheme, fd_curl, fd_gradient
from .special_fn import LaguerreOrder, laguerre, laguerre_derivative

__version__ = "0.1.0"
