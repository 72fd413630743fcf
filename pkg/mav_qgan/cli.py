"""
mav-qgan command line

    mav-qgan synth --out data/
    mav-qgan attack data/flight1.genuine.csv --kind swapx
    mav-qgan train-disc --qubits 2 --layers 2 --out disc.json
    mav-qgan train-gen --disc disc.json --measure-mode x-quadrature --out gen.json
    mav-qgan run --qubits 2 --iters 100 --seed 42 --out report.json
    mav-qgan sweep --max-qubits 5 --iters 10 --out sweep.csv
"""
import contextlib
import io
import json
import pathlib
import re
import sys

import fire
from fire.core import FireExit

from . import bench, collect, setup
from .errors import ConfigurationError, MavQganError, UsageError
from .fit import (
    DiscriminatorParams,
    GeneratorParams,
    train_discriminator,
    train_generator,
)
from .fit.train import ITERATIONS, LEARNING_RATE, SEED
from .load import load_trace, save_trace, synth_genuine, synth_trace
from .load.trace import DATASET_NOISE, DATASET_SEEDS
from .prepare import apply_attack, real_sets
from .utils import make_rng


def _config(qubits, layers, iters, lr, seed, measure_mode, grad, data, out=None, rounds=1):
    return bench.ExperimentConfig(
        qubits=qubits,
        layers=layers,
        iterations=iters,
        learning_rate=lr,
        seed=seed,
        measure_mode=measure_mode,
        grad_method=grad,
        data_dir=str(setup.loading(data)),
        out=out,
        rounds=rounds,
    )


def _write_json(payload, out):
    path = pathlib.Path(out)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(json.dumps(payload, indent=2, allow_nan=False) + '\n')
    return path


def synth(out=None, count=len(DATASET_SEEDS), noise=DATASET_NOISE, seed=None):
    '''write genuine flights as <name>.genuine.csv'''
    out = setup.loading(out)
    out.mkdir(parents=True, exist_ok=True)
    if seed is None:
        traces = synth_genuine(count, noise_amp=noise)
    else:
        traces = [synth_trace(seed, noise_amp=noise)]
    for trace in traces:
        path = save_trace(trace, out)
        print(f'[synth] wrote {path}')


def attack(path, kind, out=None):
    '''mirror velocity components of a trace file and write <name>.<kind>.csv'''
    trace = apply_attack(load_trace(path), kind)
    destination = pathlib.Path(path).parent if out is None else pathlib.Path(out)
    written = save_trace(trace, destination)
    print(f'[attack] wrote {written}')


def train_disc(
    qubits=2,
    layers=2,
    iters=ITERATIONS,
    lr=LEARNING_RATE,
    seed=SEED,
    measure_mode='mean-photon',
    grad='shift',
    data=None,
    out='disc.json',
):
    config = _config(qubits, layers, iters, lr, seed, measure_mode, grad, data)
    sets = real_sets(bench.genuine_traces(config, verbose=True), qubits)
    if not sets:
        raise ConfigurationError(f'no {2**qubits}-scalar windows in the genuine traces')
    rng = make_rng(seed)
    disc = DiscriminatorParams.random(layers, qubits, seed=rng)
    gen = GeneratorParams.random(qubits, seed=rng)
    result = train_discriminator(disc, sets, gen, config.train_config(), verbose=True)
    path = _write_json(
        {
            'config': config.to_dict(),
            'omega': result.params.omega.tolist(),
            'history': result.history.tolist(),
            'disc_ms': result.elapsed_ms,
        },
        out,
    )
    print(f'[disc] wrote {path}')


def train_gen(
    qubits=2,
    layers=2,
    iters=ITERATIONS,
    lr=LEARNING_RATE,
    seed=SEED,
    measure_mode='mean-photon',
    grad='shift',
    data=None,
    disc=None,
    out='gen.json',
):
    config = _config(qubits, layers, iters, lr, seed, measure_mode, grad, data)
    rng = make_rng(seed)
    initial_disc = DiscriminatorParams.random(layers, qubits, seed=rng)
    gen = GeneratorParams.random(qubits, seed=rng)
    if disc is None:
        sets = real_sets(bench.genuine_traces(config, verbose=True), qubits)
        if not sets:
            raise ConfigurationError(f'no {2**qubits}-scalar windows in the genuine traces')
        trained = train_discriminator(initial_disc, sets, gen, config.train_config(), verbose=True)
        disc_params = trained.params
    else:
        with open(disc, encoding='utf-8') as f:
            disc_params = DiscriminatorParams(json.load(f)['omega'])
    result = train_generator(gen, disc_params, config.train_config(), verbose=True)
    path = _write_json(
        {
            'config': config.to_dict(),
            'alpha': result.params.alpha.tolist(),
            'phi': result.params.phi.tolist(),
            'history': result.history.tolist(),
            'gen_ms': result.elapsed_ms,
        },
        out,
    )
    print(f'[gen] wrote {path}')


def run(
    qubits=2,
    layers=2,
    iters=ITERATIONS,
    lr=LEARNING_RATE,
    seed=SEED,
    measure_mode='mean-photon',
    grad='shift',
    data=None,
    out='report.json',
    rounds=1,
):
    config = _config(qubits, layers, iters, lr, seed, measure_mode, grad, data, out, rounds)
    report = bench.run_single(config, verbose=True)
    path = collect.emit_report(report, out)
    print(f'[run] wrote {path}')


def sweep(
    max_qubits=5,
    layers=2,
    iters=ITERATIONS,
    lr=LEARNING_RATE,
    seed=SEED,
    measure_mode='mean-photon',
    grad='shift',
    data=None,
    out='sweep.csv',
    repeats=bench.REPEATS,
    scheduler='synchronous',
):
    config = _config(1, layers, iters, lr, seed, measure_mode, grad, data, out)
    df = bench.run_sweep(config, max_qubits, repeats=repeats, scheduler=scheduler, verbose=True)
    path = collect.emit_report(df, out, fmt='csv')
    print(f'[sweep] wrote {path}')


COMMANDS = {
    'synth': synth,
    'attack': attack,
    'train-disc': train_disc,
    'train-gen': train_gen,
    'run': run,
    'sweep': sweep,
}


def _usage_error(captured, code):
    for line in captured.splitlines():
        line = re.sub(r'\x1b\[[0-9;]*m', '', line)
        if line.startswith('ERROR:'):
            return UsageError(line[len('ERROR:') :].strip())
    return UsageError(f'invalid command line (status {code}), see mav-qgan --help')


def main(argv=None):
    # fire reports usage problems on stderr; keep them until the outcome is known
    captured = io.StringIO()
    try:
        with contextlib.redirect_stderr(captured):
            fire.Fire(COMMANDS, command=argv, name='mav-qgan')
    except FireExit as e:
        if not e.code:
            sys.stderr.write(captured.getvalue())
            return 0
        error = _usage_error(captured.getvalue(), e.code)
    except (MavQganError, ValueError, TypeError, OSError) as e:
        error = e
    else:
        sys.stderr.write(captured.getvalue())
        return 0
    message = ' '.join(str(error).split())
    print(f'error: {type(error).__name__}: {message}', file=sys.stderr)
    return 1


if __name__ == '__main__':
    sys.exit(main())
