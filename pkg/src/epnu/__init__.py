"""Closed-form ro-vibrational spectra of diatomic molecules in the
hyperbolical (Schioeberg) potentials, by the parametric Nikiforov-Uvarov
method, with a Numerov cross-check."""
from ._accel import backend
from .config import ConfigError, RunConfig, load_config, load_molecule
from .errors import (ConvergenceError, DomainError, NoBoundStateError, NonPhysicalError,
                     UnsupportedCaseError)
from .nu_core import NUProblem, NUSolution, derive, energy_residual, wavefunction_shape
from .oracle import OracleResult, RadialGrid, solve_radial, validate
from .potential import (CentrifugalCoeffs, EPParams, centrifugal_approx, centrifugal_coeffs,
                        ep_equilibrium, ep_evaluate, morse_evaluate)
from .spectrum import (MoleculeSpec, SpectrumEntry, energy_level, kqs, n_max, s_wave_energy,
                       transitions)
from .units import CONSTANTS, PhysicalConstants, energy_convert, lambda_kinetic, reduced_mass
from .wavefunction import (RadialWavefunction, make_wavefunction, normalize_quadrature,
                           normalize_series, radial)

__version__ = "0.1.0"
