"""
End-to-end experiment driver: genuine flights, discriminator then generator
training, timing, and the qubit-count sweep.
"""
import dataclasses
import pathlib

import dask
import numpy as np

from .collect import sweep_frame
from .encoding import amplitude_encode
from .errors import ConfigurationError, MavQganError
from .fit import (
    DiscriminatorParams,
    GeneratorParams,
    GradMethod,
    TrainConfig,
    discriminator_forward,
    encode_fake,
    generator_forward,
    mean_prob_true,
    prob_fake_true,
    score_attacks,
    train_adversarial,
)
from .fit.train import ITERATIONS, LEARNING_RATE, SEED
from .load import load_traces, save_trace, synth_genuine
from .load.trace import DATASET_NOISE, DATASET_SEEDS
from .prepare import real_sets
from .simulate import MeasureMode
from .utils import check_integer, make_rng

MAX_QUBITS = 8
REPEATS = 3
SCHEDULERS = ('synchronous', 'threads', 'processes')


@dataclasses.dataclass(frozen=True)
class ExperimentConfig:
    qubits: int = 2
    layers: int = 2
    iterations: int = ITERATIONS
    learning_rate: float = LEARNING_RATE
    seed: int = SEED
    measure_mode: MeasureMode = MeasureMode.MEAN_PHOTON
    grad_method: GradMethod = GradMethod.PARAMETER_SHIFT
    datasets: int = len(DATASET_SEEDS)
    noise_amp: float = DATASET_NOISE
    data_dir: str = None
    out: str = None
    rounds: int = 1

    def __post_init__(self):
        object.__setattr__(self, 'measure_mode', MeasureMode.parse(self.measure_mode))
        object.__setattr__(self, 'grad_method', GradMethod.parse(self.grad_method))
        for field in ('qubits', 'layers', 'iterations', 'seed', 'datasets', 'rounds'):
            object.__setattr__(self, field, check_integer(getattr(self, field), field))
        if not 1 <= self.qubits <= MAX_QUBITS:
            raise ConfigurationError(f'qubits must be between 1 and {MAX_QUBITS}, got {self.qubits}')
        if self.layers < 1:
            raise ConfigurationError(f'layers must be at least 1, got {self.layers}')
        if self.datasets < 1:
            raise ConfigurationError(f'datasets must be at least 1, got {self.datasets}')
        if self.rounds < 1:
            raise ConfigurationError(f'rounds must be at least 1, got {self.rounds}')
        # iterations, learning rate and seed are checked by TrainConfig
        self.train_config()

    def train_config(self):
        return TrainConfig(
            learning_rate=self.learning_rate,
            iterations=self.iterations,
            seed=self.seed,
            measure_mode=self.measure_mode,
            grad_method=self.grad_method,
        )

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)

    def to_dict(self):
        return {
            'qubits': self.qubits,
            'layers': self.layers,
            'iterations': self.iterations,
            'learning_rate': self.learning_rate,
            'seed': self.seed,
            'measure_mode': self.measure_mode.value,
            'grad_method': self.grad_method.value,
            'datasets': self.datasets,
            'noise_amp': self.noise_amp,
            'data_dir': None if self.data_dir is None else str(self.data_dir),
            'rounds': self.rounds,
        }


@dataclasses.dataclass
class RunReport:
    config: ExperimentConfig
    disc_history: np.ndarray
    gen_history: np.ndarray
    p_real_true: float
    p_fake_true: float
    disc_ms: float
    gen_ms: float
    disc_params: DiscriminatorParams
    gen_params: GeneratorParams
    fake_values: np.ndarray
    p_attack: dict = dataclasses.field(default_factory=dict)
    disc_gap_start: float = float('nan')
    disc_gap_end: float = float('nan')

    @property
    def seed(self):
        return self.config.seed


def genuine_traces(config, verbose=False):
    '''load genuine traces from the data directory, synthesizing them when it has none'''
    if config.data_dir is not None:
        traces = load_traces(config.data_dir)
        if traces:
            if verbose:
                print(f'[run] loaded {len(traces)} genuine traces from {config.data_dir}')
            return traces
    traces = synth_genuine(config.datasets, noise_amp=config.noise_amp)
    if config.data_dir is not None:
        for trace in traces:
            save_trace(trace, _ensure_dir(config.data_dir))
        if verbose:
            print(f'[run] wrote {len(traces)} genuine traces to {config.data_dir}')
    return traces


def _ensure_dir(path):
    path = pathlib.Path(path)
    path.mkdir(parents=True, exist_ok=True)
    return path


def disc_gap(disc, real_states, fake_state):
    return discriminator_forward(fake_state, disc).p - mean_prob_true(disc, real_states)


def run_single(config, verbose=False, progress=False):
    n, m = config.qubits, config.layers
    traces = genuine_traces(config, verbose=verbose)
    sets = real_sets(traces, n)
    if not sets:
        longest = max((trace.scalar_count for trace in traces), default=0)
        raise ConfigurationError(
            f'{n} qubits need windows of {2**n} scalars but the genuine traces '
            f'hold at most {longest}'
        )

    rng = make_rng(config.seed)
    disc = DiscriminatorParams.random(m, n, seed=rng)
    gen = GeneratorParams.random(n, seed=rng)
    cfg = config.train_config()

    if verbose:
        print(f'[run] n={n} m={m} iterations={config.iterations} windows={len(sets)}')
    result = train_adversarial(
        disc, gen, sets, cfg, rounds=config.rounds, progress=progress, verbose=verbose
    )

    real_states = [amplitude_encode(data, n) for data in sets]
    # p_F - p_R over all genuine windows, around the first discriminator pass
    fake_state = encode_fake(gen, config.measure_mode, n=n)
    first_disc = result.disc_runs[0].params
    report = RunReport(
        config=config,
        disc_history=result.disc_history,
        gen_history=result.gen_history,
        p_real_true=mean_prob_true(result.disc, real_states),
        p_fake_true=prob_fake_true(result.gen, result.disc, config.measure_mode),
        disc_ms=result.disc_ms,
        gen_ms=result.gen_ms,
        disc_params=result.disc,
        gen_params=result.gen,
        fake_values=generator_forward(result.gen, config.measure_mode),
        p_attack=score_attacks(result.disc, traces, n),
        disc_gap_start=disc_gap(disc, real_states, fake_state),
        disc_gap_end=disc_gap(first_disc, real_states, fake_state),
    )
    if verbose:
        print(
            f'[run] p_real_true={report.p_real_true:.4f} p_fake_true={report.p_fake_true:.4f} '
            f'disc_ms={report.disc_ms:.1f} gen_ms={report.gen_ms:.1f}'
        )
    return report


def sweep_row(config, repeats=REPEATS, verbose=False):
    row = {
        'n': config.qubits,
        'm': config.layers,
        'iters': config.iterations,
        'lr': config.learning_rate,
        'seed': config.seed,
    }
    try:
        reports = [run_single(config, verbose=verbose) for _ in range(repeats)]
    except (MavQganError, ValueError) as e:
        row['error'] = f'{type(e).__name__}: {e}'
        return row
    disc_ms = [r.disc_ms for r in reports]
    gen_ms = [r.gen_ms for r in reports]
    row.update(
        {
            'disc_ms': min(disc_ms),
            'gen_ms': min(gen_ms),
            'p_real_true': reports[0].p_real_true,
            'p_fake_true': reports[0].p_fake_true,
            'disc_ms_mean': float(np.mean(disc_ms)),
            'gen_ms_mean': float(np.mean(gen_ms)),
            'error': '',
        }
    )
    return row


def run_sweep(config, max_qubits, repeats=REPEATS, scheduler='synchronous', verbose=False):
    """
    Run ``run_single`` for n = 1 ... max_qubits and collect one row per n

    Rows are built through ``dask.compute``; the synchronous scheduler keeps
    timings undisturbed, ``threads`` or ``processes`` run rows in parallel.
    Failing rows carry their error message and the sweep continues.
    """
    if not 1 <= max_qubits <= MAX_QUBITS:
        raise ConfigurationError(f'max_qubits must be between 1 and {MAX_QUBITS}, got {max_qubits}')
    if repeats < 1:
        raise ConfigurationError(f'repeats must be at least 1, got {repeats}')
    if scheduler not in SCHEDULERS:
        raise ConfigurationError(f'unknown scheduler {scheduler!r} (choose from {SCHEDULERS})')

    tasks = [
        dask.delayed(sweep_row)(config.replace(qubits=n), repeats, verbose)
        for n in range(1, max_qubits + 1)
    ]
    rows = dask.compute(*tasks, scheduler=scheduler)
    if verbose:
        for row in rows:
            status = row['error'] or f"disc_ms={row['disc_ms']:.1f} gen_ms={row['gen_ms']:.1f}"
            print(f"[sweep] n={row['n']} {status}")
    return sweep_frame(rows)
