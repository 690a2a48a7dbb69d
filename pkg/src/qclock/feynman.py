"""Cyclic circuits as composite dynamics and the clock-register construction.

A cyclic circuit is N unitary gates on a system H whose one-step action on
H (x) T advances the clock and applies the gate of the stage being entered:
|psi, t> -> gates[t+1]|psi> (x) |t+1>.  When the full cycle product is the
identity this step generates a genuine Z/N dynamic on H (x) T, and the
unnormalised history states sum_t psi_t (x) |t> (psi advanced gate by gate)
are exactly the fixed points of the composite evolution, i.e. the ground
space of its spectrum.  ``feynman_check`` verifies this correspondence for
a concrete circuit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import linalg
from .dynamics import UnitaryDynamic, dynamic_from_generator, time_average
from .errors import NotCyclicError, NotUnitaryError, ShapeMismatchError
from .linalg import DEFAULT_TOL, Tolerance, as_tolerance, identity
from .reports import Check, Report

#: Columns of the fixed-point projector below this norm carry no rank.
RANK_THRESHOLD = 1e-7


@dataclass(frozen=True)
class CyclicCircuit:
    """N gates on a dim-dimensional system; gates[t] is applied entering stage t."""

    N: int
    dim: int
    gates: np.ndarray  # shape (N, dim, dim)


@dataclass(frozen=True)
class GroundSpace:
    """Orthonormal basis (columns) of the joint fixed-point space."""

    ambient_dim: int
    basis: np.ndarray  # shape (ambient_dim, k)

    @property
    def dim(self) -> int:
        return self.basis.shape[1]


@dataclass(frozen=True)
class FeynmanReport:
    """Outcome of checking history states against the composite ground space."""

    cyclic: bool
    ground_dim: int
    expected_dim: int
    max_residual: float
    passed: bool

    def as_dict(self) -> dict:
        return {
            "cyclic": self.cyclic,
            "ground_dim": self.ground_dim,
            "expected_dim": self.expected_dim,
            "max_residual": float(self.max_residual),
            "pass": self.passed,
        }


def make_circuit(
    gates: Sequence[np.ndarray], tol: Tolerance | float = DEFAULT_TOL
) -> CyclicCircuit:
    """Bundle gates into a circuit, checking shape and unitarity."""
    mats = [linalg.as_matrix(g) for g in gates]
    if not mats:
        raise ValueError("a circuit needs at least one gate")
    dim = mats[0].shape[0]
    for i, g in enumerate(mats):
        if g.shape != (dim, dim):
            raise ShapeMismatchError(f"gate {i} has shape {g.shape}, expected {(dim, dim)}")
        ok, err = linalg.is_unitary(g, tol)
        if not ok:
            raise NotUnitaryError(f"gate {i} is not unitary, max error {err:.3e}")
    return CyclicCircuit(N=len(mats), dim=dim, gates=np.stack(mats))


def cycle_product(c: CyclicCircuit) -> np.ndarray:
    """Product of all gates along one full cycle starting from stage 0."""
    prod = identity(c.dim)
    for t in range(1, c.N + 1):
        prod = c.gates[t % c.N] @ prod
    return prod


def composite_step(c: CyclicCircuit) -> np.ndarray:
    """One-step generator on H (x) T: block (t+1 mod N, t) holds gates[t+1]."""
    N, dim = c.N, c.dim
    linalg.check_entries(dim * N, dim * N)
    w = np.zeros((dim, N, dim, N), dtype=np.complex128)
    for t in range(N):
        w[:, (t + 1) % N, :, t] = c.gates[(t + 1) % N]
    return w.reshape(dim * N, dim * N)


def composite_dynamic(
    c: CyclicCircuit, tol: Tolerance | float = DEFAULT_TOL
) -> UnitaryDynamic:
    """The Z/N dynamic on H (x) T generated by the one-step action."""
    eps = as_tolerance(tol).eps
    err = linalg.max_abs_diff(cycle_product(c), identity(c.dim))
    if err > eps:
        raise NotCyclicError(
            f"cycle product differs from identity by {err:.3e}; "
            "extend the circuit (e.g. with cyclify) first"
        )
    return dynamic_from_generator(composite_step(c), c.N, tol)


def cyclify(
    gates: Sequence[np.ndarray], tol: Tolerance | float = DEFAULT_TOL
) -> CyclicCircuit:
    """Extend n gates to a 2n-stage cycle by appending their adjoints in reverse."""
    mats = [linalg.as_matrix(g) for g in gates]
    if not mats:
        raise ValueError("cyclify needs at least one gate")
    extended = mats + [g.conj().T for g in reversed(mats)]
    return make_circuit(extended, tol)


def history_state(
    c: CyclicCircuit, psi0, tol: Tolerance | float = DEFAULT_TOL
) -> np.ndarray:
    """Unnormalised sum_t psi_t (x) |t> with psi_t = gates[t] psi_{t-1}."""
    psi0 = linalg.as_vector(psi0)
    if psi0.shape[0] != c.dim:
        raise ShapeMismatchError(f"state of dim {psi0.shape[0]}, circuit on dim {c.dim}")
    eps = as_tolerance(tol).eps
    err = linalg.max_abs_diff(cycle_product(c), identity(c.dim))
    if err > eps:
        raise NotCyclicError(f"cycle product differs from identity by {err:.3e}")
    cols = np.empty((c.dim, c.N), dtype=np.complex128)
    cols[:, 0] = psi0
    for t in range(1, c.N):
        cols[:, t] = c.gates[t] @ cols[:, t - 1]
    return cols.reshape(-1)  # index = h * N + t


def ground_space(d: UnitaryDynamic, rank_threshold: float = RANK_THRESHOLD) -> GroundSpace:
    """Joint fixed points of the family, from the range of the time average."""
    p0 = time_average(d)
    basis = linalg.orthonormal_range(p0, rank_threshold)
    return GroundSpace(ambient_dim=d.dim, basis=basis)


def feynman_check(
    c: CyclicCircuit, tol: Tolerance | float = DEFAULT_TOL
) -> FeynmanReport:
    """Verify that history states and composite ground states coincide.

    Checks that every basis history state lies in the ground space of the
    composite dynamic, that the ground space has dimension equal to the
    system dimension, and that the two spans agree (mutual projection
    residuals below tolerance).
    """
    eps = as_tolerance(tol).eps
    try:
        comp = composite_dynamic(c, tol)
    except NotCyclicError:
        defect = linalg.max_abs_diff(cycle_product(c), identity(c.dim))
        return FeynmanReport(
            cyclic=False,
            ground_dim=0,
            expected_dim=c.dim,
            max_residual=defect,
            passed=False,
        )
    gs = ground_space(comp)
    q = gs.basis

    histories = np.column_stack(
        [history_state(c, linalg.basis_vector(c.dim, i), tol) for i in range(c.dim)]
    )
    histories = histories / np.linalg.norm(histories, axis=0)

    residual = float(np.max(np.linalg.norm(histories - q @ (q.conj().T @ histories), axis=0)))
    h_basis = linalg.orthonormal_range(histories)
    back = float(
        np.max(np.linalg.norm(q - h_basis @ (h_basis.conj().T @ q), axis=0))
    ) if q.shape[1] else 0.0
    max_residual = max(residual, back)

    passed = gs.dim == c.dim and max_residual <= eps
    return FeynmanReport(
        cyclic=True,
        ground_dim=gs.dim,
        expected_dim=c.dim,
        max_residual=max_residual,
        passed=passed,
    )


def stationarity_check(
    c: CyclicCircuit, psi0, tol: Tolerance | float = DEFAULT_TOL
) -> Report:
    """History states are fixed by every composite power."""
    eps = as_tolerance(tol).eps
    comp = composite_dynamic(c, tol)
    h = history_state(c, psi0, tol)
    err = max(
        linalg.max_abs_diff(comp.unitaries[t] @ h, h) for t in range(comp.N)
    )
    return Report(
        title=f"history-state stationarity (N={c.N}, dim={c.dim})",
        checks=(Check("fixed_by_all_powers", err, eps),),
    )
