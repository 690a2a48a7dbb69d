"""Finite quantum clocks and the dynamics they govern, verified numerically.

The package builds the interacting pair of algebras carried by a size-N
clock space, unitary Z/N dynamics with their projector-valued energy
spectra, clock-valued observables with demolition measurements and the
Weyl/unbiasedness duality, state histories and their spectral solutions,
cyclic circuits with the clock-register (history-state) construction, and
clock synchronisation with energy conservation, internal time observables
and dynamic descent.
"""

from .clock import (
    Character,
    ClockStructures,
    character_matrix,
    character_vector,
    make_clock,
    verify_multiplicative_character,
    verify_strong_complementarity,
)
from .dynamics import (
    ProjectionSpectrum,
    UnitaryDynamic,
    clock_dynamic,
    constant_dynamic,
    dynamic_from_generator,
    fourier_transform,
    hamiltonian,
    inverse_fourier_transform,
    spectral_projector,
    spectrum_checks,
    stone_reconstruct,
    time_average,
    uncurried,
    validate_dynamic,
)
from .errors import (
    AxiomsViolatedError,
    DegenerateError,
    DimensionCapError,
    DistributionError,
    IncompleteSpectrumError,
    InputFormatError,
    NotASubgroupError,
    NotCyclicError,
    NotNormalisedError,
    NotPeriodicError,
    NotUnitaryError,
    OrthogonalEigenstateError,
    QClockError,
    ShapeMismatchError,
)
from .feynman import (
    CyclicCircuit,
    FeynmanReport,
    GroundSpace,
    composite_dynamic,
    composite_step,
    cycle_product,
    cyclify,
    feynman_check,
    ground_space,
    history_state,
    make_circuit,
    stationarity_check,
)
from .histories import (
    History,
    SpectralSolution,
    history_from_state,
    is_em_morphism,
    reconstruct_history,
    schrodinger_solve,
)
from .linalg import (
    DEFAULT_TOL,
    Tolerance,
    approx_equal,
    dagger,
    tensor,
    tensor_all,
)
from .observables import (
    GROUP_FLAVOUR,
    TIME_FLAVOUR,
    Observable,
    demolition_measurement,
    observable_checks,
    observable_from_spectrum,
    time_observable,
    uncertainty_check,
    weyl_ccr_check,
)
from .reports import Check, Report
from .sync import (
    CollapseResult,
    InternalClockDescriptor,
    MeasureResult,
    SyncState,
    clock_energy_collapse,
    conundrum_check,
    demolition_hamiltonian,
    dynamic_descent,
    internal_time_observable,
    is_nondegenerate,
    separable_dynamic,
    subsystem_energy_measure,
    synchronized_family,
    synchronized_pair,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
