import enum

import numpy as np

from ..errors import DomainError, UnsupportedMethodError

SHIFT = np.pi / 2
FD_STEP = 1e-5


class GradMethod(enum.Enum):
    PARAMETER_SHIFT = 'shift'
    FINITE_DIFFERENCE = 'fd'

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        aliases = {'parameter-shift': 'shift', 'finite-difference': 'fd'}
        key = str(value).lower().replace('_', '-')
        try:
            return cls(aliases.get(key, key))
        except ValueError:
            raise DomainError(f'unknown gradient method {value!r} (choose from shift, fd)')


def parameter_shift(cost, params, shift=SHIFT):
    """
    Exact gradient for parameters that each enter one rotation gate exp(-i theta P / 2)

    d f / d theta = [f(theta + pi/2) - f(theta - pi/2)] / 2
    """
    params = np.asarray(params, dtype=float)
    grad = np.zeros_like(params)
    for i in range(params.size):
        shifted = params.copy()
        shifted.flat[i] += shift
        forward = cost(shifted)
        shifted.flat[i] -= 2 * shift
        backward = cost(shifted)
        grad.flat[i] = 0.5 * (forward - backward) / np.sin(shift)
    return grad


def finite_difference(cost, params, h=FD_STEP):
    params = np.asarray(params, dtype=float)
    grad = np.zeros_like(params)
    for i in range(params.size):
        shifted = params.copy()
        shifted.flat[i] += h
        forward = cost(shifted)
        shifted.flat[i] -= 2 * h
        backward = cost(shifted)
        grad.flat[i] = (forward - backward) / (2 * h)
    return grad


def gradient(cost, params, method=GradMethod.PARAMETER_SHIFT, rotation_angles=True, h=FD_STEP):
    method = GradMethod.parse(method)
    if method is GradMethod.PARAMETER_SHIFT:
        if not rotation_angles:
            raise UnsupportedMethodError(
                'the parameter-shift rule only applies to qubit rotation angles; '
                'use finite differences for photonic parameters'
            )
        return parameter_shift(cost, params)
    return finite_difference(cost, params, h=h)
