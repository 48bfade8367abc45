import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mucb.collective import (
    ENTANGLED,
    MAXIMALLY_ENTANGLED,
    PRODUCT,
    barred_x,
    barred_z,
    bell_states,
    classify_pairs,
    collective_basis_state,
    entanglement_report,
    from_collective,
    mucb_state,
    particle_x,
    particle_z,
    projection_check,
    projection_sweep,
    reduced_density,
    to_collective,
    trace_distance,
)
from mucb.errors import TwoIsZero
from mucb.qudit_mub import COMPUTATIONAL, omega

D_SMALL = [3, 5, 7]


def mpow(a, k):
    return np.linalg.matrix_power(a, k)


def brute_collective(d, n1, n2):
    return next((a, c) for a in range(d) for c in range(d) if (a + c) % d == n1 and (c - a) % d == n2)


def test_to_collective_examples():
    for n in range(5):
        idx = to_collective(5, n, n)
        assert (idx.nbar1.value, idx.nbar2.value) == (0, n)
    idx = to_collective(3, 2, 1)
    assert (idx.nbar1.value, idx.nbar2.value) == (2, 0) == brute_collective(3, 2, 1)
    idx = to_collective(7, 1, 0)
    assert (idx.nbar1.value, idx.nbar2.value) == (4, 4)
    assert from_collective(7, 4, 4) == (1, 0)
    with pytest.raises(TwoIsZero):
        to_collective(2, 0, 1)


@pytest.mark.parametrize("d", D_SMALL)
def test_round_trip(d):
    for n1, n2 in itertools.product(range(d), repeat=2):
        idx = to_collective(d, n1, n2)
        assert from_collective(d, idx.nbar1.value, idx.nbar2.value) == (n1, n2)
        assert (idx.nbar1.value, idx.nbar2.value) == brute_collective(d, n1, n2)


@pytest.mark.parametrize("d", D_SMALL)
def test_operator_identities(d):
    h = (d + 1) // 2
    w = omega(d)
    zb1, zb2, xb1, xb2 = barred_z(d, 1), barred_z(d, 2), barred_x(d, 1), barred_x(d, 2)
    z1, z2, x1, x2 = particle_z(d, 1), particle_z(d, 2), particle_x(d, 1), particle_x(d, 2)
    tol = 1e-10
    assert np.abs(zb1 @ zb2 - z1).max() < tol
    assert np.abs(mpow(zb1, d - 1) @ zb2 - z2).max() < tol
    assert np.abs(mpow(xb1, h) @ mpow(xb2, h) - x1).max() < tol
    assert np.abs(mpow(xb1, d - h) @ mpow(xb2, h) - x2).max() < tol
    for zb, xb in ((zb1, xb1), (zb2, xb2)):
        # the phase lands on Zbar Xbar, mirroring the single-qudit Z X = w X Z
        assert np.abs(zb @ xb - w * xb @ zb).max() < tol
    assert np.abs(xb1 @ zb2 - zb2 @ xb1).max() < tol
    assert np.abs(xb2 @ zb1 - zb1 @ xb2).max() < tol
    assert np.abs(mpow(zb1, d) - np.eye(d * d)).max() < tol


def test_collective_basis_state_examples():
    e00 = np.zeros(9)
    e00[0] = 1
    np.testing.assert_array_equal(collective_basis_state(3, 0, 0), e00)
    e21 = np.zeros(9)
    e21[2 * 3 + 1] = 1
    np.testing.assert_array_equal(collective_basis_state(3, 2, 0), e21)


@pytest.mark.parametrize("d", D_SMALL)
def test_collective_basis_eigen_and_shift(d):
    w = omega(d)
    zb1, zb2, xb1, xb2 = barred_z(d, 1), barred_z(d, 2), barred_x(d, 1), barred_x(d, 2)
    for a, c in itertools.product(range(d), repeat=2):
        v = collective_basis_state(d, a, c)
        assert np.abs(zb1 @ v - w**a * v).max() < 1e-10
        assert np.abs(zb2 @ v - w**c * v).max() < 1e-10
        assert np.abs(xb1 @ v - collective_basis_state(d, a + 1, c)).max() < 1e-12
        assert np.abs(xb2 @ v - collective_basis_state(d, a, c + 1)).max() < 1e-12


def test_mucb_comp_comp_is_basis_state():
    for a, c in itertools.product(range(5), repeat=2):
        np.testing.assert_array_equal(
            mucb_state(5, a, COMPUTATIONAL, c, COMPUTATIONAL), collective_basis_state(5, a, c)
        )


def dense_partial_trace(psi, d, keep):
    m = psi.reshape(d, d)
    rho = np.zeros((d, d), dtype=complex)
    for j, k in itertools.product(range(d), repeat=2):
        for i in range(d):
            if keep == 2:
                rho[j, k] += m[i, j] * np.conj(m[i, k])
            else:
                rho[j, k] += m[j, i] * np.conj(m[k, i])
    return rho


def test_reduced_density_examples():
    psi = collective_basis_state(3, 0, 0)
    proj = np.zeros((3, 3))
    proj[0, 0] = 1
    np.testing.assert_allclose(reduced_density(psi), proj)
    d = 4
    epr = np.zeros(d * d)
    epr[[n * d + n for n in range(d)]] = 1 / np.sqrt(d)
    np.testing.assert_allclose(reduced_density(epr, 1), np.eye(d) / d, atol=1e-15)
    np.testing.assert_allclose(reduced_density(epr, 2), np.eye(d) / d, atol=1e-15)

    st_ = mucb_state(3, 0, COMPUTATIONAL, 0, 1)
    for keep in (1, 2):
        oracle = dense_partial_trace(st_, 3, keep)
        np.testing.assert_allclose(reduced_density(st_, keep), oracle, atol=1e-14)
        assert np.abs(oracle - np.eye(3) / 3).max() < 1e-10


def test_report_examples():
    rep = entanglement_report(collective_basis_state(5, 1, 3))
    assert rep.entropy_nats == 0 and rep.schmidt_rank == 1
    assert rep.classification == PRODUCT

    bell = np.array([1, 0, 0, 1]) / np.sqrt(2)
    rep = entanglement_report(bell)
    assert rep.entropy_nats == pytest.approx(np.log(2), abs=1e-12)
    np.testing.assert_allclose(rep.schmidt_coefficients, [2**-0.5] * 2, atol=1e-12)
    assert rep.entropy_bits == pytest.approx(1.0)

    psi = mucb_state(5, 1, COMPUTATIONAL, 2, 3)
    rep = entanglement_report(psi)
    # eigenvalue route, independent of the SVD used by the report
    p = np.linalg.eigvalsh(dense_partial_trace(psi, 5, 1))
    assert -np.sum(p * np.log(p)) == pytest.approx(np.log(5), abs=1e-10)
    assert rep.entropy_nats == pytest.approx(np.log(5), abs=1e-10)
    assert rep.classification == MAXIMALLY_ENTANGLED


def test_intermediate_class():
    psi = np.array([np.sqrt(0.9), 0, 0, np.sqrt(0.1)])
    assert entanglement_report(psi).classification == ENTANGLED


def test_mucb_examples():
    rep = entanglement_report(mucb_state(3, 0, COMPUTATIONAL, 0, 1))
    assert rep.entropy_nats == pytest.approx(np.log(3), abs=1e-10)
    assert entanglement_report(mucb_state(3, 1, 0, 2, 0)).classification == PRODUCT


def test_projection_examples():
    r = projection_check(3, 0, 0, 1, 0)
    assert r.match and r.n2 == 0
    assert r.amplitude == pytest.approx(1 / np.sqrt(3))
    r = projection_check(3, 1, 0, 1, 0)
    assert r.match and r.n2 == 1
    assert r.expected == pytest.approx(omega(3) / np.sqrt(3))
    # oracle: contract particle 1 of the state with <0| by hand
    psi = mucb_state(3, 1, COMPUTATIONAL, 0, 1, sign=-1)
    row = np.array([psi[0 * 3 + n2] for n2 in range(3)])
    np.testing.assert_allclose(row, [0, omega(3) / np.sqrt(3), 0], atol=1e-12)


def test_projection_sweeps_d5():
    minus = projection_sweep(5, sign=-1)
    plus = projection_sweep(5, sign=1)
    assert minus["checks"] == plus["checks"] == 625
    assert minus["mismatches"] == 0
    # the n(n+1) phases differ from the closed form whenever b*(n1 - nbar1) != 0
    assert plus["mismatches"] == 400


def test_projection_support_is_always_exact():
    for nb1, nb2, b, n1 in itertools.product(range(3), repeat=4):
        assert projection_check(3, nb1, nb2, b, n1, sign=1).support_ok


def test_classify_examples_d3():
    rows = {(r.b1, r.b2): r for r in classify_pairs(3)}
    assert len(rows) == 16
    assert rows[(COMPUTATIONAL, COMPUTATIONAL)].classification == PRODUCT
    for b in range(3):
        assert rows[(b, b)].classification == PRODUCT
    assert rows[(COMPUTATIONAL, 0)].classification == MAXIMALLY_ENTANGLED


@pytest.mark.parametrize("d", D_SMALL)
def test_product_iff_equal_labels(d):
    pairs = [(0, 0), (1, d - 1), (d - 1, 2)]
    for sign in (-1, 1):
        for r in classify_pairs(d, nbar_pairs=pairs, sign=sign):
            expected = PRODUCT if r.b1 == r.b2 else MAXIMALLY_ENTANGLED
            assert r.classification == expected, (r.b1, r.b2)


def test_classification_invariant_under_nbar_d7():
    rng = np.random.default_rng(7)
    sample = [tuple(p) for p in rng.integers(0, 7, size=(6, 2))]
    a = classify_pairs(7, nbar_pairs=sample[:3])
    b = classify_pairs(7, nbar_pairs=sample[3:])
    assert [(r.b1, r.b2, r.classification) for r in a] == [(r.b1, r.b2, r.classification) for r in b]


def test_classify_rejects_d2():
    with pytest.raises(TwoIsZero):
        classify_pairs(2)


label_strategy = st.one_of(st.just(COMPUTATIONAL), st.integers(0, 6))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(D_SMALL), st.integers(0, 6), label_strategy, st.integers(0, 6), label_strategy)
def test_mucb_state_properties(d, nb1, b1, nb2, b2):
    b1 = b1 if b1 == COMPUTATIONAL else b1 % d
    b2 = b2 if b2 == COMPUTATIONAL else b2 % d
    psi = mucb_state(d, nb1, b1, nb2, b2)
    assert abs(np.linalg.norm(psi) - 1) < 1e-12
    rep = entanglement_report(psi)
    assert abs(np.sum(rep.schmidt_coefficients**2) - 1) < 1e-10
    assert np.all(np.diff(rep.schmidt_coefficients) <= 1e-15)
    if rep.classification == MAXIMALLY_ENTANGLED:
        for keep in (1, 2):
            assert trace_distance(reduced_density(psi, keep), np.eye(d) / d) < 1e-9
        np.testing.assert_allclose(rep.schmidt_coefficients, 1 / np.sqrt(d), atol=1e-9)


def test_bell_states():
    sx = np.array([[0, 1], [1, 0]])
    sz = np.diag([1, -1])
    xx, zz = np.kron(sx, sx), np.kron(sz, sz)
    states = bell_states()
    assert len(states) == 4
    vecs = np.array([b.vector for b in states])
    assert np.abs(vecs.conj() @ vecs.T - np.eye(4)).max() < 1e-12
    signs = set()
    for b in states:
        assert np.linalg.norm(xx @ b.vector - b.xx_sign * b.vector) < 1e-12
        assert np.linalg.norm(zz @ b.vector - b.zz_sign * b.vector) < 1e-12
        assert entanglement_report(b.vector).entropy_nats == pytest.approx(np.log(2), abs=1e-12)
        signs.add((b.xx_sign, b.zz_sign))
    assert signs == {(1, 1), (1, -1), (-1, 1), (-1, -1)}
