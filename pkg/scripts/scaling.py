import sys
import warnings

import numpy as np
from tqdm import tqdm

from mav_qgan import bench, collect, setup
from mav_qgan.load import AttackKind

warnings.simplefilter('ignore', category=RuntimeWarning)

args = sys.argv

if len(args) < 2:
    run_name = 'local'
    max_qubits = 5
    iterations = 10
    seeds = [42]
else:
    run_name = args[1]
    max_qubits = int(args[2])
    iterations = int(args[3])
    seeds = [int(s) for s in args[4].strip('[]').split(',')]

data = setup.loading()
results = data / 'results' / run_name
results.mkdir(parents=True, exist_ok=True)

print('[scaling] running sweeps')
frames = []
for seed in tqdm(seeds):
    config = bench.ExperimentConfig(
        iterations=iterations, seed=seed, measure_mode='x-quadrature', data_dir=str(data)
    )
    frames.append(bench.run_sweep(config, max_qubits))
    collect.emit_report(frames[-1], results / f'sweep_{seed}.csv')

print('[scaling] per-iteration generator time')
for frame in frames:
    per_iteration = frame.set_index('n')['gen_ms'] / iterations
    print(per_iteration.round(2).to_dict())

print('[scaling] attack scores at n=2')
config = bench.ExperimentConfig(measure_mode='x-quadrature', data_dir=str(data))
report = bench.run_single(config, verbose=True)
collect.emit_report(report, results / 'report.json')
for kind in AttackKind:
    print(f'  {kind.value}: {report.p_attack[kind]:.4f}')
print(f'  genuine: {np.round(report.p_real_true, 4)}')
