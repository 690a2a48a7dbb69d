"""State trajectories and their energy-side (spectral) decomposition.

A history of a dynamic is the trajectory t -> U_t|psi>.  Histories are
exactly the families compatible with the group action (the translation
equation psi_{s+t} = U_t psi_s), and switching to the energy side splits
the initial state into eigenspace components psi_E = P_E|psi> obeying
U_t psi_E = chi_E(t) psi_E, the exponentiated evolution equation for one
period.  Both directions are implemented and round-trip.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .clock import character_matrix
from .dynamics import UnitaryDynamic, hamiltonian
from .errors import ShapeMismatchError
from .linalg import DEFAULT_TOL, Tolerance, as_tolerance


@dataclass(frozen=True)
class History:
    """N states psi_t, stored extensionally as rows of a (N, dim) array."""

    N: int
    dim: int
    states: np.ndarray


@dataclass(frozen=True)
class SpectralSolution:
    """Eigenspace components psi_E of an initial state, rows of (N, dim)."""

    N: int
    dim: int
    components: np.ndarray


def history_from_state(d: UnitaryDynamic, psi) -> History:
    """The trajectory psi_t = U_t |psi>."""
    psi = linalg.as_vector(psi)
    if psi.shape[0] != d.dim:
        raise ShapeMismatchError(f"state of dim {psi.shape[0]}, dynamic on dim {d.dim}")
    states = np.einsum("tij,j->ti", d.unitaries, psi)
    return History(N=d.N, dim=d.dim, states=states)


def is_em_morphism(
    h: History, d: UnitaryDynamic, tol: Tolerance | float = DEFAULT_TOL
) -> tuple[bool, float]:
    """Check the translation equation psi_{s+t mod N} = U_t psi_s for all s, t."""
    if h.N != d.N or h.dim != d.dim:
        raise ShapeMismatchError(
            f"history on (N={h.N}, dim={h.dim}) vs dynamic (N={d.N}, dim={d.dim})"
        )
    err = 0.0
    for t in range(d.N):
        shifted = np.roll(h.states, -t, axis=0)  # row s -> psi_{s+t}
        evolved = h.states @ d.unitaries[t].T
        err = max(err, linalg.max_abs_diff(shifted, evolved))
    return err <= as_tolerance(tol).eps, err


def schrodinger_solve(d: UnitaryDynamic, psi) -> SpectralSolution:
    """Split |psi> into eigenspace components psi_E = P_E |psi>."""
    psi = linalg.as_vector(psi)
    if psi.shape[0] != d.dim:
        raise ShapeMismatchError(f"state of dim {psi.shape[0]}, dynamic on dim {d.dim}")
    spec = hamiltonian(d)
    components = np.einsum("eij,j->ei", spec.projectors, psi)
    return SpectralSolution(N=d.N, dim=d.dim, components=components)


def reconstruct_history(s: SpectralSolution) -> History:
    """Resum components into the trajectory psi_t = sum_E chi_E(t) psi_E."""
    chars = character_matrix(s.N)  # chars[t, E]
    states = chars @ s.components
    return History(N=s.N, dim=s.dim, states=states)
