"""Clock-valued observables, demolition measurements, Weyl pairs.

An observable here is a map H -> H (x) T whose clock leg records outcomes:
writing it in blocks A_t (so the map is sum_t A_t (x) |t>), the three
defining identities say the family is self-adjoint under the clock bend,
copied by the labelling structure's comultiplication, and erased to the
identity by its counit.  Energy observables are exactly the adjoints of
unitary dynamics; for the clock acting on itself the energy observable is
the addition comultiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from . import linalg
from .clock import ClockStructures, character_matrix, make_clock
from .dynamics import ProjectionSpectrum, UnitaryDynamic, hamiltonian
from .errors import (
    DistributionError,
    IncompleteSpectrumError,
    NotNormalisedError,
    ShapeMismatchError,
)
from .linalg import DEFAULT_TOL, Tolerance, as_tolerance, identity, tensor
from .reports import Check, Report

TIME_FLAVOUR = "time-structure"
GROUP_FLAVOUR = "group-structure"

#: Weights more negative than this indicate a real error, not roundoff.
NEGATIVITY_THRESHOLD = 1e-12


@dataclass(frozen=True)
class Observable:
    """Outcome-recording map H -> H (x) T with its labelling flavour."""

    N: int
    dim: int
    map: np.ndarray  # shape (dim * N, dim), row index = h * N + t
    flavour: Literal["time-structure", "group-structure"]


def _blocks(o: Observable) -> np.ndarray:
    """Clock-leg blocks A_t, shape (N, dim, dim)."""
    return np.transpose(o.map.reshape(o.dim, o.N, o.dim), (1, 0, 2))


def observable_from_spectrum(
    s: ProjectionSpectrum,
    cs: ClockStructures,
    tol: Tolerance | float = DEFAULT_TOL,
) -> Observable:
    """Energy observable of a projector family.

    The clock leg of the E-labelled projector carries the ket representing
    the energy functional chi_E, i.e. the column with entries
    conj(chi_E(t)); equivalently the whole map is sum_t U_t^dag (x) |t>,
    the adjoint of the dynamic.  For the clock's own spectrum this is
    exactly the addition comultiplication.
    """
    if s.N != cs.N:
        raise ShapeMismatchError(f"spectrum over Z/{s.N} but clock of size {cs.N}")
    eps = as_tolerance(tol).eps
    err = linalg.max_abs_diff(s.projectors.sum(axis=0), identity(s.dim))
    if err > eps:
        raise IncompleteSpectrumError(
            f"projectors sum to identity only within {err:.3e}"
        )
    chars = character_matrix(s.N)  # chars[t, E]
    # map[h*N + t, h'] = sum_E P_E[h, h'] * conj(chi_E(t))
    m = np.einsum("ehk,te->htk", s.projectors, chars.conj()).reshape(
        s.dim * s.N, s.dim
    )
    return Observable(N=s.N, dim=s.dim, map=m, flavour=GROUP_FLAVOUR)


def time_observable(cs: ClockStructures) -> Observable:
    """The clock's tick observable: the copying map itself."""
    return Observable(N=cs.N, dim=cs.N, map=cs.time_copy.copy(), flavour=TIME_FLAVOUR)


def observable_checks(
    o: Observable, cs: ClockStructures, tol: Tolerance | float = DEFAULT_TOL
) -> Report:
    """The three defining identities, using the flavour's structure maps."""
    if o.N != cs.N:
        raise ShapeMismatchError(f"observable over Z/{o.N} but clock of size {cs.N}")
    eps = as_tolerance(tol).eps
    blocks = _blocks(o)

    if o.flavour == GROUP_FLAVOUR:
        comult, counit = cs.group_comult, cs.group_counit
        # the addition structure's antipode is time inversion
        bent = blocks[(-np.arange(o.N)) % o.N]
    else:
        comult, counit = cs.time_copy, cs.time_delete
        # tick states are self-conjugate, so the tick antipode is trivial
        bent = blocks

    adj = np.conj(np.transpose(blocks, (0, 2, 1)))
    self_adjoint = float(np.max(np.abs(bent - adj))) if blocks.size else 0.0

    twice = tensor(o.map, identity(o.N)) @ o.map
    copied = tensor(identity(o.dim), comult) @ o.map
    idempotent = linalg.max_abs_diff(twice, copied)

    complete = linalg.max_abs_diff(
        tensor(identity(o.dim), counit) @ o.map, identity(o.dim)
    )

    return Report(
        title=f"observable identities ({o.flavour}, N={o.N}, dim={o.dim})",
        checks=(
            Check("self_adjointness", self_adjoint, eps),
            Check("idempotence", idempotent, eps),
            Check("completeness", complete, eps),
        ),
    )


def demolition_measurement(
    o: Observable, psi, tol: Tolerance | float = DEFAULT_TOL
) -> np.ndarray:
    """Outcome distribution of measuring |psi> with the observable.

    The raw clock-leg vector <psi| o |psi> is read off against the outcome
    labels: tick labels directly, energy labels through the character
    functionals with the 1/N factor the quasi-special structure requires.
    Tiny negative weights (roundoff) are clamped to zero; anything worse
    raises.
    """
    psi = linalg.as_vector(psi)
    if psi.shape[0] != o.dim:
        raise ShapeMismatchError(f"state of dim {psi.shape[0]}, observable on dim {o.dim}")
    eps = as_tolerance(tol).eps
    norm = float(np.linalg.norm(psi))
    if abs(norm - 1.0) > eps:
        raise NotNormalisedError(f"|psi| = {norm:.12f}")

    raw = (o.map @ psi).reshape(o.dim, o.N)
    clock_leg = psi.conj() @ raw  # length-N vector on the clock factor
    if o.flavour == GROUP_FLAVOUR:
        weights = (character_matrix(o.N).T @ clock_leg) / o.N
    else:
        weights = clock_leg

    if np.max(np.abs(weights.imag)) > 10 * max(eps, NEGATIVITY_THRESHOLD):
        raise DistributionError(
            f"weights have imaginary part up to {np.max(np.abs(weights.imag)):.3e}"
        )
    w = weights.real.copy()
    if np.min(w) < -NEGATIVITY_THRESHOLD:
        raise DistributionError(f"weight {np.min(w):.3e} below negativity threshold")
    w[w < 0.0] = 0.0
    return w


def weyl_ccr_check(
    dU: UnitaryDynamic, dV: UnitaryDynamic, tol: Tolerance | float = DEFAULT_TOL
) -> Report:
    """Canonical commutation V_E U_t = chi_E(t) U_t V_E on supported labels.

    The first family is indexed by times t, the second by energy labels E.
    The relation is quantified over the eigenvalues each family actually
    has: E runs over the energy support of the first family's spectrum and
    t over the (time-valued) support of the second's.  Degenerate
    restrictions are noted in the report.
    """
    if dU.dim != dV.dim or dU.N != dV.N:
        raise ShapeMismatchError(
            f"families on (N={dU.N}, dim={dU.dim}) vs (N={dV.N}, dim={dV.dim})"
        )
    eps = as_tolerance(tol).eps
    N = dU.N
    e_support = hamiltonian(dU).support
    t_support = hamiltonian(dV).support

    err = 0.0
    for t in t_support:
        U_t = dU.unitaries[t]
        for E in e_support:
            V_E = dV.unitaries[E]
            phase = np.exp(2j * np.pi * E * t / N)
            err = max(err, linalg.max_abs_diff(V_E @ U_t, phase * (U_t @ V_E)))

    notes = []
    if len(e_support) < N or len(t_support) < N:
        notes.append(
            f"degenerate pair: checked E in {list(e_support)}, t in {list(t_support)}"
        )
    return Report(
        title=f"Weyl commutation (N={N}, dim={dU.dim})",
        checks=(Check("weyl_relation", err, eps),),
        notes=tuple(notes),
    )


def uncertainty_check(
    dU: UnitaryDynamic,
    dV: UnitaryDynamic,
    tol: Tolerance | float = DEFAULT_TOL,
    rng: np.random.Generator | None = None,
) -> Report:
    """Eigenstates of the second family are unbiased for the first's observable.

    Every eigenstate of dV's spectrum, measured with dU's energy observable,
    must give the uniform distribution 1/N.  Rank-1 eigenspaces contribute
    their (unique) eigenstate; higher-rank ones a random unit vector, since
    the statement quantifies over all eigenstates.
    """
    if dU.dim != dV.dim or dU.N != dV.N:
        raise ShapeMismatchError(
            f"families on (N={dU.N}, dim={dU.dim}) vs (N={dV.N}, dim={dV.dim})"
        )
    eps = as_tolerance(tol).eps
    rng = rng or np.random.default_rng(0)
    N = dU.N
    cs = make_clock(N)
    obs = observable_from_spectrum(hamiltonian(dU), cs)
    spec_v = hamiltonian(dV)

    weyl = weyl_ccr_check(dU, dV, tol)
    checks = [Check("weyl_precondition", weyl.max_error, eps)]
    notes = list(weyl.notes)

    uniform = np.full(N, 1.0 / N)
    for label in spec_v.support:
        p = spec_v.projectors[label]
        rank = int(round(float(np.trace(p).real)))
        if rank == 1:
            col = int(np.argmax(np.linalg.norm(p, axis=0)))
            psi = p[:, col]
        else:
            psi = p @ (rng.normal(size=dV.dim) + 1j * rng.normal(size=dV.dim))
            notes.append(f"label {label}: rank {rank} eigenspace, random representative")
        psi = psi / np.linalg.norm(psi)
        dist = demolition_measurement(obs, psi, tol)
        checks.append(
            Check(f"uniformity_label_{label}", linalg.max_abs_diff(dist, uniform), eps)
        )

    return Report(
        title=f"unbiasedness (N={N}, dim={dU.dim})",
        checks=tuple(checks),
        notes=tuple(notes),
    )
