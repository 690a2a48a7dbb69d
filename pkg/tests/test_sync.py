import itertools

import numpy as np
import pytest

from conftest import X
from qclock import sampling
from qclock.clock import make_clock
from qclock.dynamics import (
    clock_dynamic,
    constant_dynamic,
    dynamic_from_generator,
    hamiltonian,
    validate_dynamic,
)
from qclock.errors import (
    AxiomsViolatedError,
    DegenerateError,
    NotASubgroupError,
    OrthogonalEigenstateError,
)
from qclock.sync import (
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

E0 = np.array([1, 0], dtype=complex)
W6 = np.exp(2j * np.pi / 6)
Z6_CLOCK = np.diag([1, W6**2, W6**4])


def test_synchronized_pair_of_x_dynamic():
    pair = synchronized_pair(dynamic_from_generator(X, 2), E0)
    assert pair.factor_dims == (2, 2)
    assert np.allclose(pair.amplitudes, [1, 0, 0, 1])  # |0,0> + |1,1>


def test_synchronized_pair_constant_dynamic():
    pair = synchronized_pair(constant_dynamic(3, 2), E0)
    assert np.allclose(pair.amplitudes, np.kron(E0, np.ones(3)))


def test_synchronized_pair_of_clock_is_cup_state():
    cs = make_clock(3)
    pair = synchronized_pair(clock_dynamic(cs), np.array([1, 0, 0], dtype=complex))
    expected = sum(
        np.kron(np.eye(3)[t], np.eye(3)[t]) for t in range(3)
    )
    assert np.allclose(pair.amplitudes, expected)


def test_pair_contraction_reproduces_history():
    d = dynamic_from_generator(X, 2)
    pair = synchronized_pair(d, E0)
    amps = pair.amplitudes.reshape(2, 2)
    for t in range(2):
        assert np.allclose(amps[:, t], d.unitaries[t] @ E0)


def test_conundrum_commutators_vanish():
    d = dynamic_from_generator(X, 2)
    report = conundrum_check(d, make_clock(2))
    assert report.passed
    assert report.check("commutators").max_error == 0.0


def test_conundrum_on_random_dynamic():
    rng = np.random.default_rng(4)
    d = sampling.random_dynamic(4, 3, rng)
    assert conundrum_check(d, make_clock(4)).passed


def test_family_golden_half_difference():
    d = dynamic_from_generator(X, 2)
    fam = synchronized_family([d, d], [E0, E0], 1)
    assert np.allclose(fam.amplitudes, [0.5, 0, 0, -0.5])


def test_family_single_member_is_projection():
    d = dynamic_from_generator(X, 2)
    fam = synchronized_family([d], [E0], 0)
    assert np.allclose(fam.amplitudes, [0.5, 0.5])


def test_family_constant_dynamics_single_term():
    d1, d2 = constant_dynamic(2, 2), constant_dynamic(2, 3)
    psi1 = np.array([0.6, 0.8], dtype=complex)
    psi2 = np.array([0, 1j, 0], dtype=complex)
    fam = synchronized_family([d1, d2], [psi1, psi2], 0)
    assert np.allclose(fam.amplitudes, np.kron(psi1, psi2))
    assert np.max(np.abs(synchronized_family([d1, d2], [psi1, psi2], 1).amplitudes)) < 1e-12


def test_collapse_reproduces_family_golden():
    d = dynamic_from_generator(X, 2)
    res = clock_energy_collapse([d, d], [E0, E0], 1)
    assert res.residual < 1e-12
    # contraction with exp(+i pi t) effects gives |00> - |11>, twice the family
    assert np.allclose(res.state.amplitudes, [1, 0, 0, -1])


def test_collapse_constant_dynamics():
    ds = [constant_dynamic(2, 2), constant_dynamic(2, 2)]
    psis = [E0, np.array([0, 1], dtype=complex)]
    res = clock_energy_collapse(ds, psis, 0)
    assert res.residual < 1e-12
    overlap = np.vdot(np.kron(psis[0], psis[1]), res.state.amplitudes)
    assert abs(overlap) > 0.1


def test_collapse_scalar_nonzero_when_family_nonzero():
    rng = np.random.default_rng(8)
    for _ in range(5):
        ds = [sampling.random_dynamic(3, 2, rng) for _ in range(2)]
        psis = [sampling.random_state(2, rng) for _ in range(2)]
        for chi in range(3):
            res = clock_energy_collapse(ds, psis, chi)
            fam = synchronized_family(ds, psis, chi)
            if np.linalg.norm(fam.amplitudes) > 1e-9:
                assert np.linalg.norm(res.state.amplitudes) > 1e-9
                assert res.residual < 1e-8


def test_measure_subsystem_golden():
    d = dynamic_from_generator(X, 2)
    res = subsystem_energy_measure([d, d], [E0, E0], 1, 1, 1)
    assert res.residual < 1e-9
    # remaining system carries total energy 0: proportional to P_0|0>
    assert np.allclose(
        res.state.amplitudes / np.linalg.norm(res.state.amplitudes),
        np.array([1, 1]) / np.sqrt(2),
    )
    assert res.amplitude == pytest.approx(1 / np.sqrt(2))


def test_family_requires_shared_clock_size():
    from qclock.errors import ShapeMismatchError

    with pytest.raises(ShapeMismatchError):
        synchronized_family(
            [constant_dynamic(2, 2), constant_dynamic(3, 2)], [E0, E0], 0
        )


def test_measure_rejects_degenerate_level():
    ds = [constant_dynamic(2, 2), dynamic_from_generator(X, 2)]
    with pytest.raises(DegenerateError):
        subsystem_energy_measure(ds, [E0, E0], 0, 0, 0)  # rank-2 ground level


def test_measure_orthogonal_eigenstate_rejected():
    d = dynamic_from_generator(X, 2)
    plus = np.array([1, 1], dtype=complex) / np.sqrt(2)
    # plus has no E=1 component
    with pytest.raises(OrthogonalEigenstateError):
        subsystem_energy_measure([d, d], [plus, E0], 1, 0, 1)


def test_measure_random_families_conserve_energy():
    rng = np.random.default_rng(31)
    count = 0
    for _ in range(12):
        M = int(rng.integers(2, 4))
        N = int(rng.integers(2, 5))
        ds = [sampling.random_dynamic(N, int(rng.integers(1, 4)), rng) for _ in range(M)]
        psis = [sampling.random_state(d.dim, rng) for d in ds]
        chi = int(rng.integers(0, N))
        j = int(rng.integers(0, M))
        spec = hamiltonian(ds[j])
        for E in spec.support:
            if int(round(float(np.trace(spec.projectors[E]).real))) != 1:
                continue
            try:
                res = subsystem_energy_measure(ds, psis, chi, j, E)
            except OrthogonalEigenstateError:
                continue
            assert res.residual < 1e-8
            count += 1
            break
    assert count >= 6  # the hypothesis held often enough to be exercised


def test_nondegenerate_examples():
    assert is_nondegenerate(dynamic_from_generator(np.diag([1, W6**2]), 6))
    assert not is_nondegenerate(constant_dynamic(3, 2))
    assert is_nondegenerate(dynamic_from_generator(X, 2))


def test_demolition_hamiltonian_of_x_dynamic():
    pairs = demolition_hamiltonian(dynamic_from_generator(X, 2))
    assert [e for _, e in pairs] == [0, 1]
    assert np.allclose(pairs[0][0], np.array([1, 1]) / np.sqrt(2))
    assert np.allclose(pairs[1][0], np.array([1, -1]) / np.sqrt(2))


def test_demolition_hamiltonian_reads_diagonal_phases():
    pairs = demolition_hamiltonian(dynamic_from_generator(np.diag([1, W6**2, W6**4]), 6))
    assert [e for _, e in pairs] == [0, 2, 4]


def test_demolition_hamiltonian_trivial_system():
    pairs = demolition_hamiltonian(constant_dynamic(4, 1))
    assert len(pairs) == 1 and pairs[0][1] == 0


def test_demolition_hamiltonian_rejects_degenerate():
    with pytest.raises(DegenerateError):
        demolition_hamiltonian(constant_dynamic(3, 2))


def test_internal_time_golden_z3_inside_z6():
    d = dynamic_from_generator(Z6_CLOCK, 6)
    desc = internal_time_observable(d)
    assert desc.energies == (0, 2, 4)
    assert desc.subgroup_generator == 2
    assert desc.internal_size == 3
    assert desc.permutation_error < 1e-9
    # golden basis: columns (1/sqrt 3)(e0 + w3^tau e1 + w3^{2 tau} e2)
    w3 = np.exp(2j * np.pi / 3)
    for tau in range(3):
        expected = np.array([1, w3**tau, w3 ** (2 * tau)]) / np.sqrt(3)
        assert np.max(np.abs(desc.basis[:, tau] - expected)) < 1e-9
    # U_1 advances the internal ticks cyclically
    for tau in range(3):
        advanced = d.unitaries[1] @ desc.basis[:, tau]
        assert np.max(np.abs(advanced - desc.basis[:, (tau + 1) % 3])) < 1e-9
    assert desc.quotient(5) == 2


def test_internal_time_rejects_non_subgroup_image():
    d = dynamic_from_generator(np.diag([1, 1j]), 4)  # energies {0, 1}
    with pytest.raises(NotASubgroupError) as exc:
        internal_time_observable(d)
    assert exc.value.energies == (0, 1)


def test_internal_time_of_clock_is_external_time():
    cs = make_clock(4)
    desc = internal_time_observable(clock_dynamic(cs))
    assert desc.internal_size == 4
    assert desc.subgroup_generator == 1
    assert np.max(np.abs(desc.basis - np.eye(4))) < 1e-9


def _brute_force_closed(subset, N):
    return all((a + b) % N in subset for a in subset for b in subset)


@pytest.mark.parametrize("N", [2, 3, 4, 5, 6])
def test_subgroup_criterion_matches_brute_force(N):
    for r in range(1, N + 1):
        for subset in itertools.combinations(range(N), r):
            phases = np.exp(2j * np.pi * np.array(subset) / N)
            d = dynamic_from_generator(np.diag(phases), N)
            try:
                internal_time_observable(d)
                decided = True
            except NotASubgroupError:
                decided = False
            assert decided == _brute_force_closed(set(subset), N), subset


def test_descent_trivial_when_internal_clock_is_external():
    cs = make_clock(4)
    dg = clock_dynamic(cs)
    rng = np.random.default_rng(41)
    dh = sampling.random_dynamic(4, 3, rng)
    v = dynamic_descent(dg, dh, 0)
    assert v.N == 4
    assert np.max(np.abs(v.unitaries - dh.unitaries)) < 1e-10


def test_descent_scalar_example():
    dg = dynamic_from_generator(Z6_CLOCK, 6)
    dh = dynamic_from_generator(np.array([[W6**2]]), 6)
    v = dynamic_descent(dg, dh, 0)
    assert v.N == 3 and v.dim == 1
    w3 = np.exp(2j * np.pi / 3)
    assert np.allclose(v.unitaries.reshape(3), [1, w3, w3**2])


def test_descent_random_compatible_pairs_pass_axioms():
    rng = np.random.default_rng(43)
    dg = dynamic_from_generator(Z6_CLOCK, 6)
    for _ in range(5):
        dim = int(rng.integers(1, 4))
        v = sampling.haar_unitary(dim, rng)
        ks = rng.integers(0, 3, size=dim)  # even energies only
        gen = (v * np.exp(2j * np.pi * 2 * ks / 6)) @ v.conj().T
        dh = dynamic_from_generator(gen, 6)
        chi = int(rng.choice([0, 2, 4]))
        out = dynamic_descent(dg, dh, chi)
        assert validate_dynamic(out, make_clock(3), 1e-8).passed


def test_descent_incompatible_support_rejected():
    dg = dynamic_from_generator(Z6_CLOCK, 6)
    dh = dynamic_from_generator(np.diag([W6]), 6)  # odd energy, chi even
    with pytest.raises(AxiomsViolatedError):
        dynamic_descent(dg, dh, 0)


def test_separable_dynamic_is_kron_of_factors():
    rng = np.random.default_rng(47)
    d1 = sampling.random_dynamic(3, 2, rng)
    d2 = sampling.random_dynamic(3, 2, rng)
    comp = separable_dynamic([d1, d2])
    for t in range(3):
        assert np.allclose(comp.unitaries[t], np.kron(d1.unitaries[t], d2.unitaries[t]))
