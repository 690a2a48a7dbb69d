"""The two interacting algebras carried by a size-N clock space C^N.

A clock couples a copying structure on the tick basis |0>,...,|N-1>
(comultiplication t -> t,t with its match/erase adjoints) with the cyclic
addition structure (s,t -> s+t mod N, unit |0>, negation antipode).  The
first labels *when*, the second generates translations and, dually, labels
*energy*: its multiplicative characters chi_E(t) = exp(2*pi*i*E*t/N) play
the role of energy levels.  ``verify_strong_complementarity`` checks every
algebraic law the pair is supposed to satisfy, as concrete matrix
identities.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import ShapeMismatchError
from .linalg import DEFAULT_TOL, Tolerance, as_tolerance, dagger, identity, tensor
from .reports import Check, Report


@dataclass(frozen=True)
class ClockStructures:
    """Structure maps of the tick-copying and cyclic-addition algebras on C^N.

    All maps are exact 0/1 permutation-like tensors; compositions of them
    incur no floating-point error.
    """

    N: int
    time_copy: np.ndarray       # N^2 x N:  |t> -> |t>|t>
    time_delete: np.ndarray     # 1 x N:    |t> -> 1
    time_match: np.ndarray      # N x N^2:  |s>|t> -> delta_st |t>
    time_unit_sum: np.ndarray   # N x 1:    sum_t |t>
    group_mult: np.ndarray      # N x N^2:  |s>|t> -> |s+t mod N>
    group_unit: np.ndarray      # N x 1:    |0>
    group_comult: np.ndarray    # N^2 x N:  adjoint of group_mult
    group_counit: np.ndarray    # 1 x N:    <0|
    antipode: np.ndarray        # N x N:    |t> -> |-t mod N>


def make_clock(N: int) -> ClockStructures:
    """Build the clock structures on C^N with exact 0/1 entries."""
    if N < 1:
        raise ValueError(f"clock size must be positive, got {N}")
    linalg.check_entries(N * N, N)

    time_copy = np.zeros((N * N, N), dtype=np.complex128)
    group_mult = np.zeros((N, N * N), dtype=np.complex128)
    antipode = np.zeros((N, N), dtype=np.complex128)
    for t in range(N):
        time_copy[t * N + t, t] = 1.0
        antipode[(-t) % N, t] = 1.0
        for s in range(N):
            group_mult[(s + t) % N, s * N + t] = 1.0

    time_delete = np.ones((1, N), dtype=np.complex128)
    group_unit = np.zeros((N, 1), dtype=np.complex128)
    group_unit[0, 0] = 1.0

    return ClockStructures(
        N=N,
        time_copy=time_copy,
        time_delete=time_delete,
        time_match=time_copy.conj().T,
        time_unit_sum=time_delete.conj().T,
        group_mult=group_mult,
        group_unit=group_unit,
        group_comult=group_mult.conj().T,
        group_counit=group_unit.conj().T,
        antipode=antipode,
    )


@dataclass(frozen=True)
class Character:
    """Energy label E of the cyclic group of size N."""

    N: int
    E: int

    def __post_init__(self):
        if not (0 <= self.E < self.N):
            raise ValueError(f"energy label {self.E} outside [0, {self.N})")


def character_vector(c: Character) -> np.ndarray:
    """Column of values chi_E(t) = exp(2*pi*i*E*t/N); squared norm N."""
    t = np.arange(c.N)
    return np.exp(2j * np.pi * c.E * t / c.N)


def character_matrix(N: int) -> np.ndarray:
    """N x N matrix whose column E is character_vector(Character(N, E))."""
    t = np.arange(N)
    return np.exp(2j * np.pi * np.outer(t, t) / N)


def verify_multiplicative_character(
    cs: ClockStructures, v: np.ndarray, tol: Tolerance | float = DEFAULT_TOL
) -> bool:
    """Check the two defining equations of a multiplicative character.

    The row functional <v| must turn group addition into multiplication,
    <v| o add = <v| (x) <v|, and send the unit |0> to 1.
    """
    v = linalg.as_vector(v)
    if v.shape[0] != cs.N:
        raise ShapeMismatchError(f"vector of dim {v.shape[0]} on a size-{cs.N} clock")
    eps = as_tolerance(tol).eps
    row = v.conj().reshape(1, -1)
    err_mult = linalg.max_abs_diff(row @ cs.group_mult, tensor(row, row))
    err_unit = linalg.max_abs_diff(row @ cs.group_unit, np.array([[1.0]]))
    return max(err_mult, err_unit) <= eps


def _frobenius_checks(
    prefix: str, mult: np.ndarray, unit: np.ndarray, N: int, eps: float
) -> list[Check]:
    comult = dagger(mult)
    eye = identity(N)
    swap = linalg.swap_map(N, N)

    assoc = linalg.max_abs_diff(mult @ tensor(mult, eye), mult @ tensor(eye, mult))
    unit_l = linalg.max_abs_diff(mult @ tensor(unit, eye), eye)
    unit_r = linalg.max_abs_diff(mult @ tensor(eye, unit), eye)
    comm = linalg.max_abs_diff(mult @ swap, mult)
    frob_l = tensor(eye, mult) @ tensor(comult, eye)
    frob_r = tensor(mult, eye) @ tensor(eye, comult)
    frob_mid = comult @ mult
    frobenius = max(
        linalg.max_abs_diff(frob_l, frob_mid), linalg.max_abs_diff(frob_r, frob_mid)
    )
    return [
        Check(f"{prefix}_associativity", assoc, eps),
        Check(f"{prefix}_unit_laws", max(unit_l, unit_r), eps),
        Check(f"{prefix}_commutativity", comm, eps),
        Check(f"{prefix}_frobenius", frobenius, eps),
    ]


def verify_strong_complementarity(
    cs: ClockStructures, tol: Tolerance | float = DEFAULT_TOL
) -> Report:
    """Check every law of the interacting pair on C^N.

    Covers: Frobenius laws and speciality of the tick structure, Frobenius
    laws of the addition structure with quasi-speciality factor N, the Hopf
    law through the antipode, the bialgebra laws tying the two structures
    together, and antipode involutivity/self-adjointness.  All maps being
    exact permutation tensors, every reported error should be exactly 0.
    """
    N, eps = cs.N, as_tolerance(tol).eps
    eye = identity(N)

    checks = _frobenius_checks("time", cs.time_match, cs.time_unit_sum, N, eps)
    checks.append(
        Check("time_speciality", linalg.max_abs_diff(cs.time_match @ cs.time_copy, eye), eps)
    )
    checks += _frobenius_checks("group", cs.group_mult, cs.group_unit, N, eps)
    checks.append(
        Check(
            "group_quasi_speciality_factor_N",
            linalg.max_abs_diff(cs.group_mult @ cs.group_comult, N * eye),
            eps,
        )
    )

    hopf = cs.group_mult @ tensor(cs.antipode, eye) @ cs.time_copy
    checks.append(
        Check(
            "hopf_law",
            linalg.max_abs_diff(hopf, cs.group_unit @ cs.time_delete),
            eps,
        )
    )

    # Main bialgebra law: copy(s + t) = (s,t copied pairwise, middle swapped,
    # then added pairwise).  The right side is contracted as a 4-tensor
    # network to avoid materialising the N^2 x N^4 Kronecker factor.
    lhs = cs.time_copy @ cs.group_mult
    m3 = cs.group_mult.reshape(N, N, N)
    d3 = cs.time_copy.reshape(N, N, N)
    rhs = np.einsum("aij,bkl,iks,jlt->abst", m3, m3, d3, d3, optimize=True)
    checks.append(
        Check(
            "bialgebra_copy_mult",
            linalg.max_abs_diff(lhs, rhs.reshape(N * N, N * N)),
            eps,
        )
    )
    checks.append(
        Check(
            "bialgebra_delete_mult",
            linalg.max_abs_diff(
                cs.time_delete @ cs.group_mult, tensor(cs.time_delete, cs.time_delete)
            ),
            eps,
        )
    )
    checks.append(
        Check(
            "bialgebra_copy_unit",
            linalg.max_abs_diff(
                cs.time_copy @ cs.group_unit, tensor(cs.group_unit, cs.group_unit)
            ),
            eps,
        )
    )
    checks.append(
        Check(
            "bialgebra_delete_unit",
            linalg.max_abs_diff(cs.time_delete @ cs.group_unit, np.array([[1.0]])),
            eps,
        )
    )

    checks.append(
        Check(
            "antipode_involution",
            linalg.max_abs_diff(cs.antipode @ cs.antipode, eye),
            eps,
        )
    )
    checks.append(
        Check(
            "antipode_self_adjoint",
            linalg.max_abs_diff(cs.antipode, dagger(cs.antipode)),
            eps,
        )
    )

    return Report(title=f"strong complementarity on C^{N}", checks=tuple(checks))
