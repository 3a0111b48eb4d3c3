"""
Seeded Sampling
Integer points in growing boxes for the randomized rank and regularity searches
"""

from typing import Iterator, List

import numpy as np


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def integer_point(rng: np.random.Generator, size: int, bound: int) -> List[int]:
    """Uniform integer coordinates in [-bound, bound]"""
    return [int(x) for x in rng.integers(-bound, bound + 1, size=size)]


def box_schedule(trials: int, start: int = 1, every: int = 4) -> Iterator[int]:
    """Box bounds for successive trials; the bound doubles every `every` trials"""
    bound = start
    for trial in range(trials):
        if trial and trial % every == 0:
            bound *= 2
        yield bound
