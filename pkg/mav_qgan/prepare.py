import numpy as np

from .encoding import DataVector, amplitude_encode
from .load import AttackKind, NavTrace


def apply_attack(trace, kind):
    '''mirror the named velocity components; timestamps are kept'''
    kind = AttackKind.parse(kind)
    samples = trace.samples.copy()
    for c in kind.components:
        samples[:, 1 + c] = -samples[:, 1 + c]
    return NavTrace(samples, label=kind, name=trace.name)


def flatten(trace):
    '''vx, vy, vz, vx, ... in time order'''
    return trace.velocities.ravel()


def window(trace, n):
    """
    Cut a trace into consecutive chunks of exactly 2^n scalars

    A trailing partial chunk is discarded, and all-zero chunks are dropped
    because they cannot be normalized.
    """
    size = 2 ** int(n)
    values = flatten(trace)
    count = len(values) // size
    chunks = values[: count * size].reshape(count, size)
    return [chunk.copy() for chunk in chunks if np.any(chunk != 0)]


def real_sets(traces, n):
    return [DataVector(chunk) for trace in traces for chunk in window(trace, n)]


def encode_sets(traces, n):
    return [amplitude_encode(data, n) for data in real_sets(traces, n)]
