import numpy as np
import pytest
from hypothesis import given, strategies as st

from mav_qgan.encoding import amplitude_encode, normalize
from mav_qgan.errors import DegenerateInputError, DomainError
from mav_qgan.fit import (
    DiscriminatorParams,
    GeneratorParams,
    Verdict,
    disc_cost,
    discriminator_forward,
    elementary_layer,
    gen_cost,
    generator_forward,
    prob_fake_true,
    qubit_generator_forward,
)
from mav_qgan.simulate import StateVector, basis_state, expect_z, zero_state
from mav_qgan.simulate.statevec import rx, ry, rz


def random_state(n, rng):
    amps = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return StateVector(n, amps / np.linalg.norm(amps))


def layer_oracle(omega_layer, n):
    '''dense matrix of one elementary layer'''
    u = np.eye(2**n, dtype=complex)
    for wire, (a, b, c) in enumerate(omega_layer):
        single = rz(c) @ ry(b) @ rx(a)
        u = np.kron(np.kron(np.eye(2**wire), single), np.eye(2 ** (n - wire - 1))) @ u
    if n > 1:
        for control in range(n):
            target = (control + 1) % n
            perm = np.zeros((2**n, 2**n))
            for i in range(2**n):
                j = i ^ (1 << (n - 1 - target)) if (i >> (n - 1 - control)) & 1 else i
                perm[j, i] = 1
            u = perm @ u
    return u


def test_layer_identity():
    assert elementary_layer(zero_state(2), np.zeros((2, 3))) == zero_state(2)


def test_layer_rx_on_second_qubit():
    angles = np.zeros((2, 3))
    angles[1, 0] = np.pi
    out = elementary_layer(zero_state(2), angles)
    np.testing.assert_allclose(out.amps, [0, 0, 0, -1j], atol=1e-12)
    assert expect_z(out, 0) == pytest.approx(-1.0, abs=1e-12)


def test_layer_single_qubit_skips_entangler():
    out = elementary_layer(zero_state(1), [[0, np.pi, 0]])
    np.testing.assert_allclose(np.abs(out.amps), [0, 1], atol=1e-12)


def test_layer_shape_mismatch():
    with pytest.raises(DomainError):
        elementary_layer(zero_state(2), np.zeros((3, 3)))


def test_layer_matches_matrix_oracle(rng):
    for n in (1, 2, 3):
        state = random_state(n, rng)
        angles = rng.uniform(-np.pi, np.pi, (n, 3))
        expected = layer_oracle(angles, n) @ state.amps
        np.testing.assert_allclose(elementary_layer(state, angles).amps, expected, atol=1e-12)


def test_discriminator_identity_on_ground_state():
    verdict = discriminator_forward(zero_state(3), DiscriminatorParams.zeros(2, 3))
    assert verdict.r == 1.0
    assert verdict.p == 1.0


def test_discriminator_rejects_flipped_msb_two_layers():
    verdict = discriminator_forward(basis_state(2, 2), DiscriminatorParams.zeros(2, 2))
    assert verdict.r == -1.0
    assert verdict.p == 0.0


@pytest.mark.parametrize('m,n', [(1, 2), (1, 3), (2, 3), (3, 3), (3, 2)])
def test_discriminator_cnot_cascade_matches_oracle(m, n):
    state = basis_state(n, 2 ** (n - 1))
    amps = state.amps
    for _ in range(m):
        amps = layer_oracle(np.zeros((n, 3)), n) @ amps
    expected = expect_z(StateVector(n, amps), 0)
    assert discriminator_forward(state, DiscriminatorParams.zeros(m, n)).r == expected


def test_discriminator_qubit_mismatch():
    with pytest.raises(DomainError):
        discriminator_forward(zero_state(2), DiscriminatorParams.zeros(2, 3))


def test_discriminator_random_contract(rng):
    for _ in range(500):
        m, n = int(rng.integers(1, 4)), int(rng.integers(1, 5))
        params = DiscriminatorParams(rng.uniform(-np.pi, np.pi, (m, n, 3)))
        verdict = discriminator_forward(random_state(n, rng), params)
        assert -1.0 <= verdict.r <= 1.0
        assert verdict.p == (verdict.r + 1) / 2


@given(st.floats(min_value=-1.5, max_value=1.5, allow_nan=False))
def test_verdict_contract(r):
    verdict = Verdict.from_expectation(r)
    assert -1.0 <= verdict.r <= 1.0
    assert verdict.p == (verdict.r + 1) / 2
    assert 0.0 <= verdict.p <= 1.0


def test_verdict_rejects_inconsistent_probability():
    with pytest.raises(DomainError):
        Verdict(0.0, 0.7)


def test_discriminator_params_shape():
    with pytest.raises(DomainError):
        DiscriminatorParams(np.zeros((2, 3)))
    with pytest.raises(DomainError):
        DiscriminatorParams(np.full((1, 2, 3), np.nan))


def test_generator_forward_vacuum():
    assert np.array_equal(generator_forward(GeneratorParams(np.zeros(4))), np.zeros(4))


def test_generator_forward_mean_photon():
    out = generator_forward(GeneratorParams([1, 0, 0, 0]), 'mean-photon')
    np.testing.assert_allclose(out, [1, 0, 0, 0])


def test_generator_forward_x_quadrature():
    params = GeneratorParams([1, 1, 1, 1], [0, np.pi, 0, np.pi])
    np.testing.assert_allclose(generator_forward(params, 'x-quadrature'), [2, -2, 2, -2])


def test_generator_params_length():
    with pytest.raises(DomainError):
        GeneratorParams([1, 2, 3])
    with pytest.raises(DomainError):
        GeneratorParams([1, 2], [0.0])


def test_prob_fake_true_identity_discriminator():
    disc = DiscriminatorParams.zeros(2, 2)
    gen = GeneratorParams([1, 0, 0, 0])
    assert prob_fake_true(gen, disc, 'mean-photon') == 1.0
    assert gen_cost(gen, disc, 'mean-photon') == -1.0


def test_prob_fake_true_degenerate_generator():
    with pytest.raises(DegenerateInputError):
        prob_fake_true(GeneratorParams(np.zeros(4)), DiscriminatorParams.zeros(1, 2))


def test_prob_fake_true_range(rng):
    for _ in range(50):
        disc = DiscriminatorParams.random(2, 2, seed=int(rng.integers(2**32)), scale=np.pi)
        gen = GeneratorParams.random(2, seed=int(rng.integers(2**32)))
        for mode in ('mean-photon', 'x-quadrature'):
            p = prob_fake_true(gen, disc, mode)
            assert 0.0 <= p <= 1.0
            assert -1.0 <= gen_cost(gen, disc, mode) <= 0.0


def test_gen_cost_zero_when_fake_rejected():
    # encodes |10>, which two ring layers map to |11>
    disc = DiscriminatorParams.zeros(2, 2)
    gen = GeneratorParams([0, 0, 1, 0])
    assert gen_cost(gen, disc) == 0.0


def test_disc_cost_examples():
    disc = DiscriminatorParams.zeros(2, 2)
    real, fake = zero_state(2), basis_state(2, 2)
    assert disc_cost(disc, real, real) == 0.0
    assert disc_cost(disc, real, fake) == -1.0


def test_disc_cost_antisymmetry(rng):
    for _ in range(100):
        n = int(rng.integers(1, 4))
        disc = DiscriminatorParams(rng.uniform(-np.pi, np.pi, (2, n, 3)))
        a, b = random_state(n, rng), random_state(n, rng)
        assert disc_cost(disc, a, b) == -disc_cost(disc, b, a)
        assert -1.0 <= disc_cost(disc, a, b) <= 1.0


def test_encoded_fake_feeds_discriminator():
    disc = DiscriminatorParams.zeros(1, 1)
    state = amplitude_encode(normalize(generator_forward(GeneratorParams([0, 2]))), 1)
    assert discriminator_forward(state, disc).p == 0.0


def test_qubit_generator():
    assert qubit_generator_forward(np.zeros((2, 3, 3))) == zero_state(3)
    out = qubit_generator_forward([[[0, np.pi, 0]]])
    np.testing.assert_allclose(np.abs(out.amps), [0, 1], atol=1e-12)


def test_qubit_generator_unit_norm(rng):
    for _ in range(100):
        m, n = int(rng.integers(1, 4)), int(rng.integers(1, 5))
        out = qubit_generator_forward(rng.uniform(-np.pi, np.pi, (m, n, 3)))
        assert abs(out.norm - 1.0) < 1e-10
