import numpy as np

from .errors import CapacityError, DegenerateInputError
from .simulate import StateVector
from .simulate.statevec import check_qubits
from .utils import check_finite


class DataVector:
    """
    Real data vector together with its Euclidean norm

    Parameters
    ----------
    values : array-like
        Raw values (m/s for navigation windows).

    Attributes
    ----------
    mu : float
        ``sqrt(sum(values ** 2))``.
    normal : np.ndarray
        ``values / mu``, unit norm with signs preserved.
    """

    def __init__(self, values):
        values = np.asarray(values, dtype=float).ravel()
        check_finite(values, 'data values')
        scale = float(np.max(np.abs(values), initial=0.0))
        if scale == 0.0:
            raise DegenerateInputError('cannot normalize an all-zero vector')
        # scaled sum of squares stays within float range
        scaled = values / scale
        length = float(np.sqrt(np.sum(scaled**2)))
        self.values = values
        self.mu = scale * length
        self.normal = scaled / length

    def __repr__(self):
        return f'DataVector(size={len(self.values)}, mu={self.mu:.6g})'

    def __len__(self):
        return len(self.values)

    def denormalize(self, amplitudes):
        return np.real(np.asarray(amplitudes)[: len(self.values)]) * self.mu


def normalize(values):
    return DataVector(values)


def capacity(n):
    return 2 ** int(n)


def amplitude_encode(data, n):
    if not isinstance(data, DataVector):
        data = normalize(data)
    n = check_qubits(n)
    if len(data) > capacity(n):
        raise CapacityError(
            f'{len(data)} values do not fit in {n} qubits (at most {capacity(n)} amplitudes)'
        )
    amps = np.zeros(capacity(n), dtype=complex)
    amps[: len(data)] = data.normal
    return StateVector(n, amps)
