import enum
import io
import pathlib
import re

import numpy as np
import pandas as pd
from scipy.integrate import trapezoid

from ..errors import DomainError, EmptyTraceError, TraceParseError
from ..utils import make_rng

COLUMNS = ['t', 'vx', 'vy', 'vz']
GENUINE = 'genuine'

# reference flight: 1 m takeoff, two horizontal circles, landing; 21 samples = 63 scalars
DT = 0.5
TAKEOFF_SAMPLES = 4
CIRCLE_SAMPLES = 13
LANDING_SAMPLES = 4
CIRCLE_SPEED = 0.5
TAKEOFF_HEIGHT = 1.0
CIRCLE_TURNS = 2

DATASET_SEEDS = (1, 2, 3, 4, 5, 6)
DATASET_NOISE = 0.02


class AttackKind(enum.Enum):
    SWAPX = 'swapx'
    SWAPY = 'swapy'
    SWAPXZ = 'swapxz'
    SWAPXYZ = 'swapxyz'

    @property
    def components(self):
        return {
            AttackKind.SWAPX: (0,),
            AttackKind.SWAPY: (1,),
            AttackKind.SWAPXZ: (0, 2),
            AttackKind.SWAPXYZ: (0, 1, 2),
        }[self]

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower().replace('-', '').replace('_', ''))
        except ValueError:
            choices = ', '.join(k.value for k in cls)
            raise DomainError(f'unknown attack kind {value!r} (choose from {choices})')


class NavTrace:
    """
    Timestamped velocity samples of one flight

    Parameters
    ----------
    samples : array-like, shape (N, 4)
        Rows of ``(t, vx, vy, vz)``, seconds and m/s, strictly increasing in ``t``.
    label : AttackKind or None
        ``None`` for genuine data, otherwise the attack that produced the trace.
    name : str
        Stem used when the trace is written to disk.
    """

    def __init__(self, samples, label=None, name='flight'):
        samples = np.array(samples, dtype=float).reshape(-1, 4)
        if not np.all(np.isfinite(samples)):
            raise DomainError('trace samples must be finite')
        if np.any(np.diff(samples[:, 0]) <= 0):
            raise DomainError('trace timestamps must be strictly increasing')
        self.samples = samples
        self.label = None if label is None else AttackKind.parse(label)
        self.name = name

    def __repr__(self):
        return f"NavTrace(name='{self.name}', label='{self.label_name}', samples={len(self)})"

    def __len__(self):
        return len(self.samples)

    def __eq__(self, other):
        if not isinstance(other, NavTrace):
            return NotImplemented
        return self.label == other.label and np.array_equal(self.samples, other.samples)

    @property
    def label_name(self):
        return GENUINE if self.label is None else self.label.value

    @property
    def is_genuine(self):
        return self.label is None

    @property
    def t(self):
        return self.samples[:, 0]

    @property
    def velocities(self):
        return self.samples[:, 1:]

    @property
    def scalar_count(self):
        return self.velocities.size

    def to_frame(self):
        return pd.DataFrame(self.samples, columns=COLUMNS)


def synth_trace(
    seed,
    noise_amp=0.0,
    dt=DT,
    takeoff=TAKEOFF_SAMPLES,
    circle=CIRCLE_SAMPLES,
    landing=LANDING_SAMPLES,
    speed=CIRCLE_SPEED,
    height=TAKEOFF_HEIGHT,
    name=None,
):
    """
    Synthesize a genuine take-off / two-circle / landing flight

    The climb and descent are constant-rate so that ``sum(vz * dt)`` is +height and
    -height. The circle phase samples exactly two periods, so its rectangle-rule
    displacement vanishes. The seed picks the circle's starting heading and the noise.
    """
    if noise_amp < 0:
        raise DomainError(f'noise_amp must be nonnegative, got {noise_amp}')
    rng = make_rng(seed)
    heading = rng.uniform(0.0, 2 * np.pi)

    climb = np.zeros((takeoff, 3))
    climb[:, 2] = height / (takeoff * dt)

    k = np.arange(circle)
    angle = heading + CIRCLE_TURNS * 2 * np.pi * k / circle
    loops = np.stack([speed * np.cos(angle), speed * np.sin(angle), np.zeros(circle)], axis=1)

    descent = np.zeros((landing, 3))
    descent[:, 2] = -height / (landing * dt)

    v = np.concatenate([climb, loops, descent])
    if noise_amp > 0:
        v = v + rng.uniform(-noise_amp, noise_amp, size=v.shape)

    t = np.arange(len(v)) * dt
    return NavTrace(np.column_stack([t, v]), name=name or f'flight{seed}')


def synth_genuine(count=len(DATASET_SEEDS), noise_amp=DATASET_NOISE, **kwargs):
    return [synth_trace(seed, noise_amp=noise_amp, **kwargs) for seed in range(1, count + 1)]


def phase_slices(takeoff=TAKEOFF_SAMPLES, circle=CIRCLE_SAMPLES, landing=LANDING_SAMPLES):
    return (
        slice(0, takeoff),
        slice(takeoff, takeoff + circle),
        slice(takeoff + circle, takeoff + circle + landing),
    )


def displacement(trace, rule='rectangle'):
    '''integrated (dx, dy, dz) in metres'''
    if len(trace) == 0:
        return np.zeros(3)
    if rule == 'rectangle':
        dt = np.diff(trace.t).mean() if len(trace) > 1 else 0.0
        return trace.velocities.sum(axis=0) * dt
    if rule == 'trapezoid':
        return trapezoid(trace.velocities, trace.t, axis=0)
    raise DomainError(f'unknown integration rule {rule!r}')


def trace_filename(trace):
    return f'{trace.name}.{trace.label_name}.csv'


def save_trace(trace, destination):
    path = pathlib.Path(destination)
    if path.is_dir():
        path = path / trace_filename(trace)
    path.parent.mkdir(parents=True, exist_ok=True)
    trace.to_frame().to_csv(
        path, index=False, float_format='%.17g', encoding='utf-8', lineterminator='\n'
    )
    return path


def parse_filename(path):
    parts = pathlib.Path(path).name.split('.')
    if len(parts) >= 3 and parts[-1] == 'csv':
        label = parts[-2].lower()
        if label == GENUINE:
            return '.'.join(parts[:-2]), None
        try:
            return '.'.join(parts[:-2]), AttackKind(label)
        except ValueError:
            pass
    return pathlib.Path(path).stem, None


def _read_text(source):
    raw = pathlib.Path(source).read_bytes()
    try:
        return raw.decode('utf-8')
    except UnicodeDecodeError as e:
        raise TraceParseError('invalid UTF-8', lineno=raw[: e.start].count(b'\n') + 1)


def load_trace(source):
    name, label = parse_filename(source)
    text = _read_text(source)
    try:
        df = pd.read_csv(
            io.StringIO(text), dtype=str, keep_default_na=False, skip_blank_lines=False
        )
    except pd.errors.EmptyDataError:
        raise TraceParseError('missing header t,vx,vy,vz', lineno=1)
    except pd.errors.ParserError as e:
        match = re.search(r'line (\d+)', str(e))
        raise TraceParseError(str(e), lineno=int(match.group(1)) if match else None)

    if list(df.columns) != COLUMNS:
        raise TraceParseError(f'expected header t,vx,vy,vz, got {",".join(df.columns)}', lineno=1)
    if len(df) == 0:
        raise EmptyTraceError(f'{source} contains no samples')

    checked = df.apply(pd.to_numeric, errors='coerce').to_numpy(dtype=float)
    bad = ~np.isfinite(checked).all(axis=1)
    if bad.any():
        row = int(np.argmax(bad))
        raise TraceParseError('expected four finite decimal fields', lineno=row + 2)
    # pandas' fast parser can be off in the last digits
    values = np.asarray(df.to_numpy(), dtype=float)
    steps = np.diff(values[:, 0])
    if np.any(steps <= 0):
        row = int(np.argmax(steps <= 0)) + 1
        raise TraceParseError('timestamps must be strictly increasing', lineno=row + 2)

    return NavTrace(values, label=label, name=name)


def load_traces(directory, label=GENUINE):
    '''all ``<name>.<label>.csv`` traces in a directory, sorted by file name'''
    directory = pathlib.Path(directory)
    pattern = '*.csv' if label is None else f'*.{label}.csv'
    return [load_trace(path) for path in sorted(directory.glob(pattern))]
