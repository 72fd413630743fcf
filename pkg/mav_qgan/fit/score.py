from ..load import AttackKind
from ..prepare import apply_attack, encode_sets
from .cost import mean_prob_true


def score_attacks(disc, traces, n=None, kinds=tuple(AttackKind)):
    """
    Mean probability of real true that the discriminator assigns to spoofed windows

    Every genuine trace is attacked with each kind, windowed and encoded. Kinds
    whose traces yield no encodable window are left out of the result.
    """
    n = disc.n if n is None else n
    scores = {}
    for kind in kinds:
        kind = AttackKind.parse(kind)
        states = encode_sets([apply_attack(trace, kind) for trace in traces], n)
        if states:
            scores[kind] = mean_prob_true(disc, states)
    return scores
