"""Seeded randomised property suites, callable from the command line.

Each suite draws instances from the seeded samplers and checks the
corresponding round-trip or conservation property; results come back as a
single report suitable for deterministic JSON output.
"""

from __future__ import annotations

import numpy as np

from . import sampling
from .clock import make_clock
from .dynamics import (
    hamiltonian,
    spectral_projector,
    stone_reconstruct,
    time_average,
    validate_dynamic,
)
from .feynman import feynman_check
from .histories import history_from_state, is_em_morphism, reconstruct_history, schrodinger_solve
from .linalg import Tolerance, as_tolerance, max_abs_diff
from .reports import Check, Report
from .sync import clock_energy_collapse, subsystem_energy_measure
from .errors import OrthogonalEigenstateError


def _stone_suite(rng: np.random.Generator, eps: float) -> list[Check]:
    err_round = err_ergodic = err_axioms = 0.0
    for _ in range(20):
        N = int(rng.integers(2, 13))
        dim = int(rng.integers(1, 6))
        d = sampling.random_dynamic(N, dim, rng)
        err_axioms = max(err_axioms, validate_dynamic(d, make_clock(N)).max_error)
        rebuilt = stone_reconstruct(hamiltonian(d))
        err_round = max(err_round, max_abs_diff(rebuilt.unitaries, d.unitaries))
        err_ergodic = max(
            err_ergodic, max_abs_diff(time_average(d), spectral_projector(d, 0))
        )
    return [
        Check("dynamic_axioms", err_axioms, eps),
        Check("stone_round_trip", err_round, eps),
        Check("ergodic_average", err_ergodic, eps),
    ]


def _history_suite(rng: np.random.Generator, eps: float) -> list[Check]:
    err_em = err_round = err_sum = 0.0
    for _ in range(20):
        N = int(rng.integers(2, 13))
        dim = int(rng.integers(1, 6))
        d = sampling.random_dynamic(N, dim, rng)
        psi = sampling.random_state(dim, rng)
        h = history_from_state(d, psi)
        _, e = is_em_morphism(h, d)
        err_em = max(err_em, e)
        sol = schrodinger_solve(d, psi)
        err_sum = max(err_sum, max_abs_diff(sol.components.sum(axis=0), psi))
        err_round = max(
            err_round, max_abs_diff(reconstruct_history(sol).states, h.states)
        )
    return [
        Check("history_translation_equation", err_em, eps),
        Check("spectral_components_sum", err_sum, eps),
        Check("history_round_trip", err_round, eps),
    ]


def _feynman_suite(rng: np.random.Generator, eps: float) -> list[Check]:
    err = 0.0
    dims_ok = True
    for _ in range(10):
        n = int(rng.integers(1, 5))
        dim = int(rng.integers(1, 5))
        c = sampling.random_cyclified_circuit(n, dim, rng)
        rep = feynman_check(c, Tolerance(max(eps, 1e-8)))
        err = max(err, rep.max_residual)
        dims_ok = dims_ok and rep.ground_dim == rep.expected_dim
    return [
        Check("history_states_span_ground_space", err, max(eps, 1e-8)),
        Check("ground_dimension_equals_system", 0.0 if dims_ok else 1.0, 0.5),
    ]


def _conservation_suite(rng: np.random.Generator, eps: float) -> list[Check]:
    err_collapse = err_measure = 0.0
    for _ in range(10):
        M = int(rng.integers(2, 4))
        N = int(rng.integers(2, 5))
        ds = [sampling.random_dynamic(N, int(rng.integers(1, 4)), rng) for _ in range(M)]
        psis = [sampling.random_state(d.dim, rng) for d in ds]
        chi = int(rng.integers(0, N))
        err_collapse = max(err_collapse, clock_energy_collapse(ds, psis, chi).residual)
        spec = hamiltonian(ds[-1])
        for E in spec.support:
            if int(round(float(np.trace(spec.projectors[E]).real))) != 1:
                continue
            try:
                res = subsystem_energy_measure(ds, psis, chi, M - 1, E)
            except OrthogonalEigenstateError:
                continue
            err_measure = max(err_measure, res.residual)
            break
    return [
        Check("clock_energy_collapse", err_collapse, max(eps, 1e-8)),
        Check("subsystem_energy_measure", err_measure, max(eps, 1e-8)),
    ]


def run_self_test(seed: int = 0, tol: Tolerance | float = 1e-8) -> Report:
    """Run all randomised suites with one seed; deterministic given the seed."""
    eps = as_tolerance(tol).eps
    checks: list[Check] = []
    checks += _stone_suite(np.random.default_rng(seed), eps)
    checks += _history_suite(np.random.default_rng(seed + 1), eps)
    checks += _feynman_suite(np.random.default_rng(seed + 2), eps)
    checks += _conservation_suite(np.random.default_rng(seed + 3), eps)
    return Report(title=f"randomised self-test (seed={seed})", checks=tuple(checks))
