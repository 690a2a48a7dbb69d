"""Cyclic-group unitary dynamics and their projector-valued energy spectra.

A dynamic is a family U_0,...,U_{N-1} of unitaries forming a representation
of Z/N (U_0 = I, U_s U_t = U_{s+t mod N}, U_t^dag = U_{-t}).  Its energy
content is the complete orthogonal projector family

    P_E = (1/N) * sum_t conj(chi_E(t)) U_t,      chi_E(t) = exp(2*pi*i*E*t/N),

satisfying the eigen-relation U_t P_E = chi_E(t) P_E.  The dynamic is
recovered from its spectrum as U_t = sum_E chi_E(t) P_E, and averaging the
family over one period yields P_0, the projector onto the joint fixed
points.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .clock import ClockStructures, character_matrix
from .errors import (
    IncompleteSpectrumError,
    NotPeriodicError,
    NotUnitaryError,
    ShapeMismatchError,
)
from .linalg import DEFAULT_TOL, Tolerance, as_tolerance, identity, tensor
from .reports import Check, Report

#: Entries of a genuinely vanishing projector are averages of N roots of
#: unity and land around 1e-15 at desk scale; anything above this is support.
SUPPORT_THRESHOLD = 1e-7


@dataclass(frozen=True)
class UnitaryDynamic:
    """Z/N-indexed unitary family on a dim-dimensional system."""

    N: int
    dim: int
    unitaries: np.ndarray  # shape (N, dim, dim), U_t = unitaries[t]

    def __post_init__(self):
        if self.unitaries.shape != (self.N, self.dim, self.dim):
            raise ShapeMismatchError(
                f"expected unitary stack of shape {(self.N, self.dim, self.dim)}, "
                f"got {self.unitaries.shape}"
            )


@dataclass(frozen=True)
class ProjectionSpectrum:
    """Complete family of orthogonal projectors labelled by energies E in Z/N."""

    N: int
    dim: int
    projectors: np.ndarray  # shape (N, dim, dim)
    support: tuple[int, ...]


def constant_dynamic(N: int, dim: int) -> UnitaryDynamic:
    """The trivial dynamic: every U_t is the identity."""
    stack = np.broadcast_to(identity(dim), (N, dim, dim)).copy()
    return UnitaryDynamic(N=N, dim=dim, unitaries=stack)


def dynamic_from_generator(
    U, N: int, tol: Tolerance | float = DEFAULT_TOL
) -> UnitaryDynamic:
    """Build the dynamic U_t = U^t; U must be unitary with U^N = I."""
    U = linalg.as_matrix(U)
    eps = as_tolerance(tol).eps
    ok, err = linalg.is_unitary(U, tol)
    if not ok:
        raise NotUnitaryError(f"generator is not unitary, max error {err:.3e}")
    dim = U.shape[0]
    stack = np.empty((N, dim, dim), dtype=np.complex128)
    stack[0] = identity(dim)
    for t in range(1, N):
        stack[t] = U @ stack[t - 1]
    wrap = U @ stack[N - 1]
    err = linalg.max_abs_diff(wrap, identity(dim))
    if err > eps:
        raise NotPeriodicError(
            f"generator^{N} differs from identity by {err:.3e}; "
            f"its eigenphases are not {N}-th roots of unity"
        )
    return UnitaryDynamic(N=N, dim=dim, unitaries=stack)


def clock_dynamic(cs: ClockStructures) -> UnitaryDynamic:
    """The clock acting on itself: U_t is cyclic shift by t."""
    N = cs.N
    shift = np.roll(identity(N), 1, axis=0)
    return dynamic_from_generator(shift, N)


def uncurried(d: UnitaryDynamic) -> np.ndarray:
    """The action as one matrix H (x) T -> H, column (h, t) -> U_t|h>."""
    # column index = h * N + t, so axes must be (row, h, t)
    return np.moveaxis(d.unitaries, 0, 2).reshape(d.dim, d.dim * d.N)


def validate_dynamic(
    d: UnitaryDynamic, cs: ClockStructures, tol: Tolerance | float = DEFAULT_TOL
) -> Report:
    """Check the three defining identities of a dynamic, in uncurried form.

    (1) acting by s+t equals acting by s then t,
    (2) acting by the unit time |0> is the identity,
    (3) the transpose-bend of the adjoint family equals acting through the
        antipode (adjoints are inverse translations), which with (1) and (2)
        makes every U_t unitary.
    """
    if d.N != cs.N:
        raise ShapeMismatchError(f"dynamic over Z/{d.N} but clock of size {cs.N}")
    eps = as_tolerance(tol).eps
    alpha = uncurried(d)
    eye_h = identity(d.dim)
    eye_t = identity(d.N)

    action = linalg.max_abs_diff(
        alpha @ tensor(eye_h, cs.group_mult), alpha @ tensor(alpha, eye_t)
    )
    unit = linalg.max_abs_diff(alpha @ tensor(eye_h, cs.group_unit), eye_h)
    adjoint_stack = np.conj(np.transpose(d.unitaries, (0, 2, 1)))
    bend = np.moveaxis(adjoint_stack, 0, 2).reshape(d.dim, d.dim * d.N)
    unitarity = linalg.max_abs_diff(bend, alpha @ tensor(eye_h, cs.antipode))

    return Report(
        title=f"dynamic axioms (N={d.N}, dim={d.dim})",
        checks=(
            Check("action_law", action, eps),
            Check("unit_law", unit, eps),
            Check("unitarity_law", unitarity, eps),
        ),
    )


def spectral_projector(d: UnitaryDynamic, E: int) -> np.ndarray:
    """P_E = (1/N) sum_t conj(chi_E(t)) U_t."""
    if not (0 <= E < d.N):
        raise ValueError(f"energy label {E} outside [0, {d.N})")
    phases = np.exp(-2j * np.pi * E * np.arange(d.N) / d.N)
    return np.tensordot(phases, d.unitaries, axes=1) / d.N


def hamiltonian(
    d: UnitaryDynamic, support_threshold: float = SUPPORT_THRESHOLD
) -> ProjectionSpectrum:
    """Full projector family of the dynamic, with its supported energy set."""
    chars = character_matrix(d.N)  # chars[t, E]
    stack = np.tensordot(chars.conj().T, d.unitaries, axes=1) / d.N
    support = tuple(
        E for E in range(d.N) if np.max(np.abs(stack[E])) > support_threshold
    )
    return ProjectionSpectrum(N=d.N, dim=d.dim, projectors=stack, support=support)


def spectrum_checks(
    s: ProjectionSpectrum, tol: Tolerance | float = DEFAULT_TOL
) -> Report:
    """Idempotence, self-adjointness, pairwise orthogonality, completeness."""
    eps = as_tolerance(tol).eps
    idem = max(
        linalg.max_abs_diff(p @ p, p) for p in s.projectors
    )
    herm = max(linalg.max_abs_diff(p, p.conj().T) for p in s.projectors)
    orth = 0.0
    for e in range(s.N):
        for f in range(e + 1, s.N):
            orth = max(
                orth,
                float(np.max(np.abs(s.projectors[e] @ s.projectors[f]))),
            )
    comp = linalg.max_abs_diff(s.projectors.sum(axis=0), identity(s.dim))
    return Report(
        title=f"projector spectrum (N={s.N}, dim={s.dim})",
        checks=(
            Check("idempotence", idem, eps),
            Check("self_adjointness", herm, eps),
            Check("orthogonality", orth, eps),
            Check("completeness", comp, eps),
        ),
    )


def stone_reconstruct(
    s: ProjectionSpectrum, tol: Tolerance | float = DEFAULT_TOL
) -> UnitaryDynamic:
    """Rebuild the dynamic as U_t = sum_E chi_E(t) P_E."""
    eps = as_tolerance(tol).eps
    err = linalg.max_abs_diff(s.projectors.sum(axis=0), identity(s.dim))
    if err > eps:
        raise IncompleteSpectrumError(
            f"projectors sum to identity only within {err:.3e}"
        )
    chars = character_matrix(s.N)  # chars[t, E]
    stack = np.tensordot(chars, s.projectors, axes=1)
    return UnitaryDynamic(N=s.N, dim=s.dim, unitaries=stack)


def time_average(d: UnitaryDynamic) -> np.ndarray:
    """(1/N) sum_t U_t; the projector onto the joint fixed points (= P_0)."""
    return d.unitaries.mean(axis=0)


def fourier_transform(cs: ClockStructures, v) -> np.ndarray:
    """Energy-side coefficients: out[E] = (1/N) sum_t conj(chi_E(t)) v[t]."""
    v = linalg.as_vector(v)
    if v.shape[0] != cs.N:
        raise ShapeMismatchError(f"vector of dim {v.shape[0]} on a size-{cs.N} clock")
    return (character_matrix(cs.N).conj().T @ v) / cs.N


def inverse_fourier_transform(cs: ClockStructures, vhat) -> np.ndarray:
    """Time-side values: out[t] = sum_E chi_E(t) vhat[E]."""
    vhat = linalg.as_vector(vhat)
    if vhat.shape[0] != cs.N:
        raise ShapeMismatchError(
            f"vector of dim {vhat.shape[0]} on a size-{cs.N} clock"
        )
    return character_matrix(cs.N) @ vhat
