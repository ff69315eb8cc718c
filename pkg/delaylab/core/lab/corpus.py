"""
Seeded corpus of test signals for the property checkers.
"""
import random
from fractions import Fraction
from typing import Dict, List

from delaylab.core.signal.signal import ONE, ZERO, Signal, sig
from delaylab.schemas.lab import CorpusConfig
from delaylab.utils.logger import logger


def _fixed_members(cfg: CorpusConfig) -> List[Signal]:
    """Constants, a single step and a single pulse, when the config allows them."""
    members = [ZERO, ONE]
    if cfg.max_edges >= 1 and cfg.horizon >= 2:
        members.append(sig(0, 2))
    if cfg.max_edges >= 2 and cfg.horizon >= 3:
        members.append(sig(0, 2, 3))
    return members


def generate_corpus(cfg: CorpusConfig) -> List[Signal]:
    rng = random.Random(cfg.seed)
    steps = int(cfg.horizon * cfg.time_grid_denominator)
    grid = [Fraction(k, cfg.time_grid_denominator) for k in range(steps + 1)]

    corpus: Dict[Signal, None] = {}
    for s in _fixed_members(cfg):
        if len(corpus) < cfg.count:
            corpus[s] = None

    attempts = 20 * cfg.count
    while len(corpus) < cfg.count and attempts > 0:
        attempts -= 1
        count = rng.randint(0, min(cfg.max_edges, len(grid)))
        edges = tuple(sorted(rng.sample(grid, count)))
        corpus.setdefault(Signal(rng.randint(0, 1), edges), None)

    if len(corpus) < cfg.count:
        logger.warning(f"corpus grid exhausted: {len(corpus)} of {cfg.count} distinct signals generated")
    logger.debug(f"generated corpus of {len(corpus)} signals (seed={cfg.seed})")
    return list(corpus)
