# flake8: noqa
from .circuits import (
    DiscriminatorParams,
    GeneratorParams,
    Verdict,
    discriminator_forward,
    elementary_layer,
    generator_forward,
    qubit_generator_forward,
)
from .cost import (
    disc_cost,
    encode_fake,
    gen_cost,
    mean_prob_true,
    prob_fake_true,
    prob_real_true,
    qubit_gen_cost,
)
from .gradient import GradMethod, finite_difference, gradient, parameter_shift
from .score import score_attacks
from .train import (
    AdversarialResult,
    TrainConfig,
    TrainingResult,
    train_adversarial,
    train_discriminator,
    train_generator,
    train_qubit_generator,
)
