"""Clock-system synchronisation, energy conservation, internal clocks.

A system evolving under a dynamic can be entangled with its clock as the
unnormalised state sum_t U_t|psi> (x) |t>; reading the clock at t collapses
the system onto the trajectory point U_t|psi>.  Projecting the clock onto
an energy level instead leaves several systems sharing one clock in a
superposition with fixed *total* energy, and measuring one system's energy
subtracts from the total carried by the rest.  When a system's own energy
image forms a subgroup {0, g, 2g, ...} of Z/N it supports an internal time
basis realising the quotient clock Z/m, onto which the external dynamic of
a partner system descends.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import linalg
from .clock import ClockStructures, make_clock
from .dynamics import (
    UnitaryDynamic,
    hamiltonian,
    validate_dynamic,
)
from .errors import (
    AxiomsViolatedError,
    DegenerateError,
    NotASubgroupError,
    OrthogonalEigenstateError,
    ShapeMismatchError,
)
from .linalg import DEFAULT_TOL, Tolerance, as_tolerance, tensor
from .reports import Check, Report

#: States with norm below this are treated as zero in proportionality checks.
ZERO_NORM = 1e-12


@dataclass(frozen=True)
class SyncState:
    """Unnormalised state of a tensor product, clock factor last if present."""

    factor_dims: tuple[int, ...]
    amplitudes: np.ndarray

    def __post_init__(self):
        want = int(np.prod(self.factor_dims))
        if self.amplitudes.shape != (want,):
            raise ShapeMismatchError(
                f"amplitudes of shape {self.amplitudes.shape} for factors {self.factor_dims}"
            )


@dataclass(frozen=True)
class CollapseResult:
    state: SyncState
    residual: float


@dataclass(frozen=True)
class MeasureResult:
    state: SyncState
    amplitude: complex
    residual: float


@dataclass(frozen=True)
class InternalClockDescriptor:
    """Energy image of a non-degenerate dynamic and its quotient-clock data.

    ``energies`` is the sorted energy image; when it is the subgroup
    generated by g = N/m, ``basis`` holds the m internal time states as
    columns and ``permutation_error`` the observed deviation of U_1 from
    cyclically advancing them.
    """

    N: int
    energies: tuple[int, ...]
    subgroup_generator: int
    internal_size: int
    basis: np.ndarray
    permutation_error: float

    def quotient(self, t: int) -> int:
        return t % self.internal_size

    def as_dict(self) -> dict:
        return {
            "N": self.N,
            "energies": list(self.energies),
            "subgroup": True,
            "g": self.subgroup_generator,
            "m": self.internal_size,
        }


def synchronized_pair(d: UnitaryDynamic, psi) -> SyncState:
    """The unnormalised entangled state sum_t (U_t psi) (x) |t>."""
    psi = linalg.as_vector(psi)
    if psi.shape[0] != d.dim:
        raise ShapeMismatchError(f"state of dim {psi.shape[0]}, dynamic on dim {d.dim}")
    cols = np.einsum("tij,j->it", d.unitaries, psi)  # (dim, N)
    return SyncState(factor_dims=(d.dim, d.N), amplitudes=cols.reshape(-1))


def conundrum_check(
    d: UnitaryDynamic, cs: ClockStructures, tol: Tolerance | float = DEFAULT_TOL
) -> Report:
    """Clock-time projectors commute with system-energy projectors on H (x) T."""
    if d.N != cs.N:
        raise ShapeMismatchError(f"dynamic over Z/{d.N} but clock of size {cs.N}")
    eps = as_tolerance(tol).eps
    N = d.N
    spec = hamiltonian(d)
    eye_h, eye_t = linalg.identity(d.dim), linalg.identity(N)

    comm = 0.0
    for E in range(N):
        a = tensor(spec.projectors[E], eye_t)
        for t in range(N):
            e_t = np.outer(linalg.basis_vector(N, t), linalg.basis_vector(N, t).conj())
            b = tensor(eye_h, e_t)
            comm = max(comm, float(np.max(np.abs(a @ b - b @ a))))

    energy_complete = linalg.max_abs_diff(spec.projectors.sum(axis=0), eye_h)
    time_complete = 0.0  # sum_t |t><t| is the identity by construction
    return Report(
        title=f"simultaneous time/energy measurability (N={N}, dim={d.dim})",
        checks=(
            Check("commutators", comm, eps),
            Check("energy_completeness", energy_complete, eps),
            Check("time_completeness", time_complete, eps),
        ),
    )


def _projected_components(ds: Sequence[UnitaryDynamic], psis) -> list[np.ndarray]:
    """Per-system stacks c_j[E] = P_E psi_j, each of shape (N, dim_j)."""
    out = []
    for d, psi in zip(ds, psis):
        psi = linalg.as_vector(psi)
        if psi.shape[0] != d.dim:
            raise ShapeMismatchError(
                f"state of dim {psi.shape[0]}, dynamic on dim {d.dim}"
            )
        spec = hamiltonian(d)
        out.append(np.einsum("eij,j->ei", spec.projectors, psi))
    return out


def synchronized_family(
    ds: Sequence[UnitaryDynamic], psis: Sequence, chi: int
) -> SyncState:
    """Superposition over per-system energies with fixed total chi mod N.

    amplitudes = sum over (E_1..E_M), sum E_j = chi (mod N), of
    (x)_j P_{E_j} psi_j.
    """
    if not ds:
        raise ValueError("family needs at least one system")
    N = ds[0].N
    if any(d.N != N for d in ds):
        raise ShapeMismatchError("all family members must share the clock size N")
    if not (0 <= chi < N):
        raise ValueError(f"total energy {chi} outside [0, {N})")
    comps = _projected_components(ds, psis)
    dims = tuple(d.dim for d in ds)
    total = np.zeros(int(np.prod(dims)), dtype=np.complex128)
    for labels in itertools.product(range(N), repeat=len(ds)):
        if sum(labels) % N != chi:
            continue
        term = comps[0][labels[0]]
        for j in range(1, len(ds)):
            term = np.kron(term, comps[j][labels[j]])
        total += term
    return SyncState(factor_dims=dims, amplitudes=total)


def separable_dynamic(ds: Sequence[UnitaryDynamic]) -> UnitaryDynamic:
    """Composite dynamic on the tensor product, U_t = (x)_j U_t^(j)."""
    if not ds:
        raise ValueError("need at least one factor dynamic")
    N = ds[0].N
    if any(d.N != N for d in ds):
        raise ShapeMismatchError("all factors must share the clock size N")
    dim = int(np.prod([d.dim for d in ds]))
    linalg.check_entries(dim, dim)
    stack = np.empty((N, dim, dim), dtype=np.complex128)
    for t in range(N):
        u = ds[0].unitaries[t]
        for d in ds[1:]:
            u = np.kron(u, d.unitaries[t])
        stack[t] = u
    return UnitaryDynamic(N=N, dim=dim, unitaries=stack)


def _proportionality_residual(a: np.ndarray, b: np.ndarray) -> float:
    """1 - |<a,b>| / (|a||b|); 0 if both vanish, 1 if exactly one does."""
    na, nb = float(np.linalg.norm(a)), float(np.linalg.norm(b))
    if na <= ZERO_NORM and nb <= ZERO_NORM:
        return 0.0
    if na <= ZERO_NORM or nb <= ZERO_NORM:
        return 1.0
    return 1.0 - abs(np.vdot(a, b)) / (na * nb)


def clock_energy_collapse(
    ds: Sequence[UnitaryDynamic], psis: Sequence, chi: int
) -> CollapseResult:
    """Project the clock of a separable synchronised pair onto level -chi.

    The clock leg of sum_t (U_t psi) (x) |t> is contracted with the energy
    functional of level -chi (row values chi_{-chi}(t)); the result must be
    proportional, with nonzero factor, to the synchronised family with
    total energy chi.  The residual of that proportionality is returned.
    """
    composite = separable_dynamic(ds)
    psi = psis[0]
    for p in psis[1:]:
        psi = np.kron(linalg.as_vector(psi), linalg.as_vector(p))
    pair = synchronized_pair(composite, psi)

    N = composite.N
    if not (0 <= chi < N):
        raise ValueError(f"energy level {chi} outside [0, {N})")
    effect = np.exp(2j * np.pi * (-chi % N) * np.arange(N) / N)  # chi_{-chi}(t)
    collapsed = pair.amplitudes.reshape(-1, N) @ effect

    family = synchronized_family(ds, psis, chi)
    residual = _proportionality_residual(collapsed, family.amplitudes)
    return CollapseResult(
        state=SyncState(factor_dims=family.factor_dims, amplitudes=collapsed),
        residual=residual,
    )


def _rank1_eigvec(p: np.ndarray) -> np.ndarray:
    """Unit vector spanning a rank-1 projector, phase fixed deterministically."""
    col = int(np.argmax(np.linalg.norm(p, axis=0)))
    v = p[:, col]
    v = v / np.linalg.norm(v)
    lead = int(np.argmax(np.abs(v)))
    phase = v[lead] / abs(v[lead])
    return v / phase


def subsystem_energy_measure(
    ds: Sequence[UnitaryDynamic],
    psis: Sequence,
    chi: int,
    j: int,
    Eprime: int,
    tol: Tolerance | float = DEFAULT_TOL,
) -> MeasureResult:
    """Measure member j of a synchronised family at energy Eprime.

    Contracting factor j of the family with the (rank-1) eigenstate at
    Eprime must leave, up to the returned amplitude, the family of the
    remaining systems with total energy chi - Eprime mod N.
    """
    N = ds[0].N
    spec_j = hamiltonian(ds[j])
    p = spec_j.projectors[Eprime % N]
    rank = int(round(float(np.trace(p).real)))
    if rank != 1:
        raise DegenerateError(
            f"system {j} has rank-{rank} projector at energy {Eprime}"
        )
    phi = _rank1_eigvec(p)

    psi_j = linalg.as_vector(psis[j])
    overlap = complex(np.vdot(phi, p @ psi_j))
    if abs(overlap) <= as_tolerance(tol).eps:
        raise OrthogonalEigenstateError(
            f"eigenstate at energy {Eprime} is orthogonal to the state of system {j}"
        )

    family = synchronized_family(ds, psis, chi)
    dims = family.factor_dims
    tensor_form = family.amplitudes.reshape(dims)
    contracted = np.tensordot(phi.conj(), tensor_form, axes=([0], [j])).reshape(-1)

    rest_ds = [d for i, d in enumerate(ds) if i != j]
    rest_psis = [p_ for i, p_ in enumerate(psis) if i != j]
    expected = synchronized_family(rest_ds, rest_psis, (chi - Eprime) % N)
    residual = _proportionality_residual(contracted, expected.amplitudes)
    return MeasureResult(
        state=SyncState(
            factor_dims=tuple(d for i, d in enumerate(dims) if i != j),
            amplitudes=contracted,
        ),
        amplitude=overlap,
        residual=residual,
    )


def is_nondegenerate(d: UnitaryDynamic) -> bool:
    """True iff every supported projector has rank 1 and they number dim."""
    spec = hamiltonian(d)
    if len(spec.support) != d.dim:
        return False
    for E in spec.support:
        if int(round(float(np.trace(spec.projectors[E]).real))) != 1:
            return False
    return True


def demolition_hamiltonian(d: UnitaryDynamic) -> list[tuple[np.ndarray, int]]:
    """One normalised eigenvector per supported energy, labels injective."""
    if not is_nondegenerate(d):
        raise DegenerateError("dynamic has a degenerate energy level")
    spec = hamiltonian(d)
    return [(_rank1_eigvec(spec.projectors[E]), E) for E in spec.support]


def internal_time_observable(
    d: UnitaryDynamic, tol: Tolerance | float = DEFAULT_TOL
) -> InternalClockDescriptor:
    """Internal time basis of a non-degenerate dynamic, if one exists.

    The energy image must be the subgroup {0, g, ..., (m-1)g} of Z/N with
    g = N/m.  The internal time states are the quotient-Fourier combinations

        |tau> = (1/sqrt(m)) sum_k exp(2*pi*i*k*tau/m) v_{k g},

    which the one-step translation U_1 advances cyclically, tau -> tau + 1,
    carrying external time onto the internal clock Z/m.
    """
    pairs = demolition_hamiltonian(d)
    energies = tuple(E for _, E in pairs)
    m = len(energies)
    N = d.N
    if N % m != 0 or energies != tuple((N // m) * k for k in range(m)):
        raise NotASubgroupError(energies, N)
    g = N // m

    vs = np.column_stack([v for v, _ in pairs])  # column k is v_{k g}
    k = np.arange(m)
    fourier = np.exp(2j * np.pi * np.outer(k, k) / m) / np.sqrt(m)
    basis = vs @ fourier  # column tau is the internal time state |tau>

    u1 = d.unitaries[1 % N]
    perm_err = float(np.max(np.abs(u1 @ basis - np.roll(basis, -1, axis=1))))
    eps = as_tolerance(tol).eps
    if perm_err > max(eps, 1e-6):
        raise AxiomsViolatedError(perm_err)

    return InternalClockDescriptor(
        N=N,
        energies=energies,
        subgroup_generator=g,
        internal_size=m,
        basis=basis,
        permutation_error=perm_err,
    )


def dynamic_descent(
    dG: UnitaryDynamic,
    dH: UnitaryDynamic,
    chi: int,
    tol: Tolerance | float = DEFAULT_TOL,
) -> UnitaryDynamic:
    """Let a system with an internal clock govern a partner system.

    With both systems synchronised at total energy chi and the internal
    system prepared at its initial time, conditioning on internal time tau
    evolves the partner by

        V_tau = m * sum_k <tau| P_{k g} |0>_int * P^H_{(chi - k g) mod N},

    a Z/m-indexed family.  The family is gated through the dynamic axioms;
    incompatible energy supports surface as an axioms violation.
    """
    if dG.N != dH.N:
        raise ShapeMismatchError(f"clock sizes differ: {dG.N} vs {dH.N}")
    if not (0 <= chi < dG.N):
        raise ValueError(f"total energy {chi} outside [0, {dG.N})")
    desc = internal_time_observable(dG, tol)
    m, g, N = desc.internal_size, desc.subgroup_generator, dG.N

    spec_g = hamiltonian(dG)
    spec_h = hamiltonian(dH)
    u0 = desc.basis[:, 0]
    # c[tau, k] = <tau|_int P_{k g} |0>_int, evaluated on the actual states
    proj0 = np.column_stack([spec_g.projectors[k * g] @ u0 for k in range(m)])
    coeff = desc.basis.conj().T @ proj0

    dim = dH.dim
    stack = np.zeros((m, dim, dim), dtype=np.complex128)
    for tau in range(m):
        for k in range(m):
            stack[tau] += m * coeff[tau, k] * spec_h.projectors[(chi - k * g) % N]

    candidate = UnitaryDynamic(N=m, dim=dim, unitaries=stack)
    report = validate_dynamic(candidate, make_clock(m), tol)
    if not report.passed:
        raise AxiomsViolatedError(report.max_error)
    return candidate
