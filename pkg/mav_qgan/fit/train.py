import dataclasses
import warnings

import numpy as np
from tqdm import tqdm

from ..encoding import DataVector, amplitude_encode
from ..errors import ConfigurationError, DomainError
from ..simulate import MeasureMode, StateVector
from ..utils import MAX_SEED, Stopwatch, check_integer, make_rng
from .circuits import GEN_ALPHA_RANGE, DiscriminatorParams, GeneratorParams, generator_forward
from .cost import disc_cost, encode_fake, gen_cost, qubit_gen_cost
from .gradient import FD_STEP, GradMethod, gradient

LEARNING_RATE = 0.1
ITERATIONS = 100
SEED = 42
DEGENERATE_NORM = 1e-9


@dataclasses.dataclass(frozen=True)
class TrainConfig:
    learning_rate: float = LEARNING_RATE
    iterations: int = ITERATIONS
    seed: int = SEED
    measure_mode: MeasureMode = MeasureMode.MEAN_PHOTON
    grad_method: GradMethod = GradMethod.PARAMETER_SHIFT
    fd_step: float = FD_STEP

    def __post_init__(self):
        object.__setattr__(self, 'measure_mode', MeasureMode.parse(self.measure_mode))
        object.__setattr__(self, 'grad_method', GradMethod.parse(self.grad_method))
        try:
            object.__setattr__(self, 'learning_rate', float(self.learning_rate))
        except (TypeError, ValueError):
            raise ConfigurationError(f'learning_rate must be a number, got {self.learning_rate!r}')
        if not np.isfinite(self.learning_rate) or self.learning_rate <= 0:
            raise ConfigurationError(f'learning_rate must be positive, got {self.learning_rate}')
        object.__setattr__(self, 'iterations', check_integer(self.iterations, 'iterations'))
        object.__setattr__(self, 'seed', check_integer(self.seed, 'seed'))
        if self.iterations < 0:
            raise ConfigurationError(f'iterations must be nonnegative, got {self.iterations}')
        if not 0 <= self.seed < MAX_SEED:
            raise ConfigurationError(f'seed must be a 64-bit unsigned integer, got {self.seed}')
        if self.fd_step <= 0:
            raise ConfigurationError(f'fd_step must be positive, got {self.fd_step}')

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)


class TrainingResult:
    """
    Outcome of one optimizer run

    Unpacks as ``params, history``. ``elapsed_ms`` covers the optimizer loop only.
    """

    def __init__(self, params, history, elapsed_ms, label):
        self.params = params
        self.history = np.asarray(history, dtype=float)
        self.elapsed_ms = elapsed_ms
        self.label = label

    def __repr__(self):
        final = f'{self.history[-1]:.4f}' if len(self.history) else 'n/a'
        return (
            f"TrainingResult(label='{self.label}', iterations={len(self.history)}, "
            f"final_cost='{final}', elapsed_ms='{self.elapsed_ms:.1f}')"
        )

    def __iter__(self):
        yield self.params
        yield self.history


def _descend(cost, theta, cfg, method, rotation_angles, desc, progress, before_step=None):
    history = []
    with Stopwatch() as sw:
        for _ in tqdm(range(cfg.iterations), desc=desc, disable=not progress):
            if before_step is not None:
                theta = before_step(theta)
            history.append(cost(theta))
            step = gradient(cost, theta, method, rotation_angles=rotation_angles, h=cfg.fd_step)
            theta = theta - cfg.learning_rate * step
    return theta, history, sw.elapsed_ms


def _as_state(item, n):
    if isinstance(item, StateVector):
        if item.n != n:
            raise DomainError(f'expected {n}-qubit states, got {item.n}')
        return item
    if not isinstance(item, DataVector):
        item = DataVector(item)
    return amplitude_encode(item, n)


def train_discriminator(disc, real_sets, fake_source, cfg=None, progress=False, verbose=False):
    """
    Gradient descent on p_F - p_R

    One genuine set is drawn uniformly at random per iteration. ``fake_source`` is
    either generator parameters (encoded once) or an already prepared state.
    """
    cfg = cfg or TrainConfig()
    real_sets = list(real_sets)
    if not real_sets:
        raise DomainError('at least one genuine data set is required')

    # encoding happens once, outside the optimizer loop
    real_states = [_as_state(item, disc.n) for item in real_sets]
    if isinstance(fake_source, GeneratorParams):
        fake_state = encode_fake(fake_source, cfg.measure_mode, n=disc.n)
    else:
        fake_state = _as_state(fake_source, disc.n)

    rng = make_rng(cfg.seed)
    shape = disc.shape
    picks = iter(rng.integers(len(real_states), size=cfg.iterations))
    current = {}

    def draw(theta):
        current['real'] = real_states[next(picks)]
        return theta

    def cost(theta):
        return disc_cost(DiscriminatorParams.from_flat(theta, shape), current['real'], fake_state)

    if verbose:
        print(f'[disc] training m={disc.m} n={disc.n} on {len(real_states)} genuine sets')
    theta, history, elapsed = _descend(
        cost, disc.flat(), cfg, cfg.grad_method, True, 'disc', progress, before_step=draw
    )
    return TrainingResult(DiscriminatorParams.from_flat(theta, shape), history, elapsed, 'disc')


def train_generator(gen, disc, cfg=None, progress=False, verbose=False):
    """
    Gradient descent on -p_F over the displacements and phases

    Photonic parameters always use central finite differences. A generator whose
    output collapses to zero is re-seeded with small random displacements.
    """
    cfg = cfg or TrainConfig()
    rng = make_rng(cfg.seed)
    mode = cfg.measure_mode

    def guard(theta):
        params = GeneratorParams.from_flat(theta)
        if np.linalg.norm(generator_forward(params, mode)) < DEGENERATE_NORM:
            warnings.warn('generator output vanished, re-seeding displacements', RuntimeWarning)
            alpha = rng.uniform(*GEN_ALPHA_RANGE, size=len(params.alpha))
            return np.concatenate([alpha, params.phi])
        return theta

    def cost(theta):
        return gen_cost(GeneratorParams.from_flat(theta), disc, mode)

    if verbose:
        print(f'[gen] training {len(gen.alpha)} qumodes against m={disc.m} n={disc.n}')
    theta, history, elapsed = _descend(
        cost,
        gen.flat(),
        cfg,
        GradMethod.FINITE_DIFFERENCE,
        False,
        'gen',
        progress,
        before_step=guard,
    )
    return TrainingResult(GeneratorParams.from_flat(theta), history, elapsed, 'gen')


def train_qubit_generator(angles, disc, cfg=None, progress=False, verbose=False):
    cfg = cfg or TrainConfig()
    if not isinstance(angles, DiscriminatorParams):
        angles = DiscriminatorParams(angles)
    if angles.n != disc.n:
        raise DomainError(f'generator has {angles.n} qubits, discriminator has {disc.n}')
    shape = angles.shape

    def cost(theta):
        return qubit_gen_cost(DiscriminatorParams.from_flat(theta, shape), disc)

    if verbose:
        print(f'[gen] training qubit generator m={angles.m} n={angles.n}')
    theta, history, elapsed = _descend(
        cost, angles.flat(), cfg, cfg.grad_method, True, 'qubit-gen', progress
    )
    return TrainingResult(DiscriminatorParams.from_flat(theta, shape), history, elapsed, 'qubit-gen')


class AdversarialResult:
    def __init__(self, disc_runs, gen_runs):
        self.disc_runs = disc_runs
        self.gen_runs = gen_runs

    def __repr__(self):
        return f'AdversarialResult(rounds={len(self.disc_runs)})'

    @property
    def disc(self):
        return self.disc_runs[-1].params

    @property
    def gen(self):
        return self.gen_runs[-1].params

    @property
    def disc_history(self):
        return np.concatenate([run.history for run in self.disc_runs])

    @property
    def gen_history(self):
        return np.concatenate([run.history for run in self.gen_runs])

    @property
    def disc_ms(self):
        return sum(run.elapsed_ms for run in self.disc_runs)

    @property
    def gen_ms(self):
        return sum(run.elapsed_ms for run in self.gen_runs)


def train_adversarial(disc, gen, real_sets, cfg=None, rounds=1, progress=False, verbose=False):
    '''discriminator fully, then generator fully, repeated ``rounds`` times'''
    cfg = cfg or TrainConfig()
    if rounds < 1:
        raise ConfigurationError(f'rounds must be at least 1, got {rounds}')
    real_sets = list(real_sets)
    disc_runs, gen_runs = [], []
    for r in range(rounds):
        round_cfg = cfg.replace(seed=(int(cfg.seed) + r) % MAX_SEED)
        d = train_discriminator(disc, real_sets, gen, round_cfg, progress, verbose)
        g = train_generator(gen, d.params, round_cfg, progress, verbose)
        disc, gen = d.params, g.params
        disc_runs.append(d)
        gen_runs.append(g)
    return AdversarialResult(disc_runs, gen_runs)
