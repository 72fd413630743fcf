import numpy as np

from ..encoding import amplitude_encode, normalize
from ..simulate import MeasureMode
from .circuits import discriminator_forward, generator_forward, qubit_generator_forward


def encode_fake(gen, mode=MeasureMode.MEAN_PHOTON, n=None):
    '''generator output, normalized and amplitude encoded on n qubits (default gen.n)'''
    values = generator_forward(gen, mode)
    return amplitude_encode(normalize(values), gen.n if n is None else n)


def prob_real_true(disc, real_state):
    return discriminator_forward(real_state, disc).p


def prob_fake_true(gen, disc, mode=MeasureMode.MEAN_PHOTON):
    return discriminator_forward(encode_fake(gen, mode, n=disc.n), disc).p


def mean_prob_true(disc, states):
    return float(np.mean([discriminator_forward(state, disc).p for state in states]))


def disc_cost(disc, real_state, fake_state):
    p_fake = discriminator_forward(fake_state, disc).p
    p_real = discriminator_forward(real_state, disc).p
    return p_fake - p_real


def gen_cost(gen, disc, mode=MeasureMode.MEAN_PHOTON):
    return -prob_fake_true(gen, disc, mode)


def qubit_gen_cost(angles, disc):
    return -discriminator_forward(qubit_generator_forward(angles), disc).p
