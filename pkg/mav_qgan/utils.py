import time

import numpy as np

from .errors import ConfigurationError, DomainError

MAX_SEED = 2**64


def make_rng(seed):
    '''seeded 64-bit generator (PCG64) shared by every stochastic step'''
    if isinstance(seed, np.random.Generator):
        return seed
    seed = check_integer(seed, 'seed')
    if not 0 <= seed < MAX_SEED:
        raise ConfigurationError(f'seed must be a 64-bit unsigned integer, got {seed}')
    return np.random.default_rng(seed)


def check_finite(value, name='value'):
    arr = np.asarray(value)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f'{name} must be finite, got {value!r}')
    return value


def is_integral(value):
    if isinstance(value, (bool, np.bool_)):
        return False
    if isinstance(value, (int, np.integer)):
        return True
    try:
        return float(value).is_integer()
    except (TypeError, ValueError):
        return False


def check_integer(value, name='value', error=ConfigurationError):
    '''value as an int; 2.0 is accepted, 2.5 is not'''
    if not is_integral(value):
        raise error(f'{name} must be an integer, got {value!r}')
    if isinstance(value, (int, np.integer)):
        return int(value)
    return int(float(value))


def check_index(index, size, name='index'):
    index = check_integer(index, name, DomainError)
    if not 0 <= index < size:
        raise DomainError(f'{name} {index} out of range for size {size}')
    return index


class Stopwatch:
    '''monotonic wall-clock timer in milliseconds'''

    def __init__(self):
        self.elapsed_ms = 0.0
        self._start = None

    def __enter__(self):
        self._start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed_ms += (time.perf_counter() - self._start) * 1000.0
        self._start = None
        return False
