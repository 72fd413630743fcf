"""
Dense state-vector simulation for the rotation/CNOT gate set used by the circuits.

Qubit 0 is the most significant bit of the basis index, so ``|i>`` with
``i = sum(b_k * 2**(n - 1 - k))`` sits at ``amps[i]``.
"""
from dataclasses import dataclass

import numpy as np

from ..errors import DomainError
from ..utils import check_finite, check_index, check_integer

NORM_TOLERANCE = 1e-10


def check_qubits(n):
    n = check_integer(n, 'qubit count', DomainError)
    if n < 1:
        raise DomainError(f'qubit count must be positive, got {n}')
    return n


def rx(theta):
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)


def ry(theta):
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, -s], [s, c]], dtype=complex)


def rz(theta):
    return np.array([[np.exp(-0.5j * theta), 0], [0, np.exp(0.5j * theta)]], dtype=complex)


@dataclass(frozen=True)
class RotTriple:
    ax: float = 0.0
    ay: float = 0.0
    az: float = 0.0

    def __post_init__(self):
        check_finite([self.ax, self.ay, self.az], 'rotation angles')

    @classmethod
    def from_array(cls, angles):
        ax, ay, az = (float(a) for a in angles)
        return cls(ax, ay, az)

    def matrix(self):
        # x first, then y, then z
        return rz(self.az) @ ry(self.ay) @ rx(self.ax)


class StateVector:
    def __init__(self, n, amps, check=True):
        n = check_qubits(n)
        amps = np.asarray(amps, dtype=complex)
        if amps.shape != (2**n,):
            raise DomainError(f'expected {2**n} amplitudes for {n} qubits, got {amps.shape}')
        if check and abs(np.vdot(amps, amps).real - 1.0) > NORM_TOLERANCE:
            raise DomainError('amplitudes must have unit norm')
        self.n = n
        self.amps = amps

    def __repr__(self):
        return f'StateVector(n={self.n}, amps={np.array2string(self.amps, precision=4)})'

    def __eq__(self, other):
        if not isinstance(other, StateVector):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.amps, other.amps)

    @property
    def norm(self):
        return float(np.sqrt(np.vdot(self.amps, self.amps).real))

    def probabilities(self):
        return np.abs(self.amps) ** 2


def basis_state(n, index):
    n = check_qubits(n)
    amps = np.zeros(2**n, dtype=complex)
    amps[check_index(index, 2**n, 'basis index')] = 1.0
    return StateVector(n, amps, check=False)


def zero_state(n):
    return basis_state(n, 0)


def apply_matrix(state, wire, matrix):
    '''apply an arbitrary 2x2 matrix to one wire, returning a new state'''
    wire = check_index(wire, state.n, 'wire')
    psi = state.amps.reshape(2**wire, 2, 2 ** (state.n - wire - 1))
    out = np.einsum('ij,ajb->aib', matrix, psi)
    return StateVector(state.n, out.reshape(-1), check=False)


def apply_rx(state, wire, theta):
    return apply_matrix(state, wire, rx(check_finite(theta, 'angle')))


def apply_ry(state, wire, theta):
    return apply_matrix(state, wire, ry(check_finite(theta, 'angle')))


def apply_rz(state, wire, theta):
    return apply_matrix(state, wire, rz(check_finite(theta, 'angle')))


def apply_rot(state, wire, angles):
    if not isinstance(angles, RotTriple):
        angles = RotTriple.from_array(angles)
    return apply_matrix(state, wire, angles.matrix())


def apply_cnot(state, control, target):
    control = check_index(control, state.n, 'control')
    target = check_index(target, state.n, 'target')
    if control == target:
        raise DomainError(f'control and target must differ, both are {control}')

    psi = state.amps.reshape([2] * state.n)
    out = psi.copy()
    idx = [slice(None)] * state.n
    idx[control] = 1
    idx[target] = 0
    flip0 = tuple(idx)
    idx[target] = 1
    flip1 = tuple(idx)
    out[flip0], out[flip1] = psi[flip1], psi[flip0]
    return StateVector(state.n, out.reshape(-1), check=False)


def expect_z(state, wire):
    wire = check_index(wire, state.n, 'wire')
    probs = state.probabilities().reshape(2**wire, 2, 2 ** (state.n - wire - 1))
    value = probs[:, 0, :].sum() - probs[:, 1, :].sum()
    return float(np.clip(value, -1.0, 1.0))
