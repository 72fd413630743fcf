from dataclasses import dataclass

import numpy as np

from ..errors import DomainError
from ..simulate import (
    MeasureMode,
    RotTriple,
    apply_cnot,
    apply_rot,
    displace,
    expect_z,
    measure,
    rotate,
    vacuum,
    zero_state,
)
from ..utils import check_finite, make_rng

DISC_INIT_SCALE = 0.1
GEN_ALPHA_RANGE = (0.1, 1.0)


class DiscriminatorParams:
    """
    Rotation angles of an m-layer, n-qubit discriminator

    ``omega[i, k]`` holds the (x, y, z) rotation angles, in radians, applied to
    qubit ``k`` by layer ``i``.
    """

    def __init__(self, omega):
        omega = np.array(omega, dtype=float)
        if omega.ndim != 3 or omega.shape[2] != 3 or omega.shape[0] < 1 or omega.shape[1] < 1:
            raise DomainError(f'omega must have shape (m, n, 3), got {omega.shape}')
        check_finite(omega, 'omega')
        self.omega = omega

    def __repr__(self):
        return f'DiscriminatorParams(m={self.m}, n={self.n})'

    @property
    def m(self):
        return self.omega.shape[0]

    @property
    def n(self):
        return self.omega.shape[1]

    @property
    def shape(self):
        return self.omega.shape

    def flat(self):
        return self.omega.ravel().copy()

    @classmethod
    def from_flat(cls, flat, shape):
        return cls(np.asarray(flat, dtype=float).reshape(shape))

    @classmethod
    def zeros(cls, m, n):
        return cls(np.zeros((m, n, 3)))

    @classmethod
    def random(cls, m, n, seed=None, scale=DISC_INIT_SCALE):
        rng = make_rng(seed) if seed is not None else np.random.default_rng()
        return cls(rng.uniform(-scale, scale, size=(m, n, 3)))


class GeneratorParams:
    """Displacements ``alpha`` and rotation angles ``phi`` of the 2^n qumode bank."""

    def __init__(self, alpha, phi=None):
        alpha = np.array(alpha, dtype=float).ravel()
        phi = np.zeros_like(alpha) if phi is None else np.array(phi, dtype=float).ravel()
        size = len(alpha)
        if size < 2 or size & (size - 1) or len(phi) != size:
            raise DomainError(
                f'alpha and phi must both have length 2^n, got {len(alpha)} and {len(phi)}'
            )
        check_finite(alpha, 'alpha')
        check_finite(phi, 'phi')
        self.alpha = alpha
        self.phi = phi

    def __repr__(self):
        return f'GeneratorParams(n={self.n})'

    @property
    def n(self):
        return int(np.log2(len(self.alpha)))

    def flat(self):
        return np.concatenate([self.alpha, self.phi])

    @classmethod
    def from_flat(cls, flat):
        flat = np.asarray(flat, dtype=float)
        half = len(flat) // 2
        return cls(flat[:half], flat[half:])

    @classmethod
    def random(cls, n, seed=None, alpha_range=GEN_ALPHA_RANGE):
        rng = make_rng(seed) if seed is not None else np.random.default_rng()
        size = 2**n
        return cls(rng.uniform(*alpha_range, size=size), rng.uniform(0.0, 2 * np.pi, size=size))


@dataclass(frozen=True)
class Verdict:
    r: float
    p: float

    def __post_init__(self):
        if not -1.0 <= self.r <= 1.0:
            raise DomainError(f'expectation must lie in [-1, 1], got {self.r}')
        if self.p != (self.r + 1) / 2:
            raise DomainError('probability must equal (r + 1) / 2')

    @classmethod
    def from_expectation(cls, r):
        r = float(np.clip(r, -1.0, 1.0))
        return cls(r, (r + 1) / 2)


def elementary_layer(state, layer_angles):
    layer_angles = np.asarray(layer_angles, dtype=float)
    if layer_angles.shape != (state.n, 3):
        raise DomainError(
            f'layer angles must have shape ({state.n}, 3), got {layer_angles.shape}'
        )
    for wire in range(state.n):
        state = apply_rot(state, wire, RotTriple.from_array(layer_angles[wire]))
    # ring entangler; a single qubit has nothing to entangle with
    if state.n > 1:
        for wire in range(state.n):
            state = apply_cnot(state, wire, (wire + 1) % state.n)
    return state


def layered_circuit(state, omega):
    for layer_angles in omega:
        state = elementary_layer(state, layer_angles)
    return state


def discriminator_forward(state, params):
    if state.n != params.n:
        raise DomainError(
            f'discriminator has {params.n} qubits but the input state has {state.n}'
        )
    out = layered_circuit(state, params.omega)
    return Verdict.from_expectation(expect_z(out, 0))


def qubit_generator_forward(params):
    if not isinstance(params, DiscriminatorParams):
        params = DiscriminatorParams(params)
    return layered_circuit(zero_state(params.n), params.omega)


def generator_forward(params, mode=MeasureMode.MEAN_PHOTON):
    mode = MeasureMode.parse(mode)
    out = np.empty(len(params.alpha))
    for k, (alpha, phi) in enumerate(zip(params.alpha, params.phi)):
        out[k] = measure(rotate(displace(vacuum(), alpha), phi), mode)
    return out
