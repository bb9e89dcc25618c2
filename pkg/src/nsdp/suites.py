"""Seeded instance suites used by the acceptance checks and scripts/."""

from __future__ import annotations

import random

from .generator import GeneratorConfig, chain, generate_instance, grid, random_k_uniform
from .model import DopInstance

DEFAULT_TREND_SEED = 2011


def small_suite(count: int = 120, seed: int = 1, max_n: int = 15) -> list[DopInstance]:
    """Chain, grid and random 3-uniform instances with at most `max_n` variables,
    small enough for brute-force verification."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        family = ("chain", "grid", "random")[i % 3]
        if family == "chain":
            width = rng.randint(2, 4)
            h = chain(rng.randint(width + 1, max_n), rng.randint(1, width - 1), width)
        elif family == "grid":
            rows = rng.randint(2, 3)
            h = grid(rows, rng.randint(2, max_n // rows))
        else:
            n = rng.randint(6, max_n)
            h = random_k_uniform(n, 3, rng.randint(2, n), seed=rng.getrandbits(32))
        cfg = GeneratorConfig(seed=rng.getrandbits(32), coeff_hi=rng.choice([5, 20, 100]))
        out.append(generate_instance(h, cfg, f"{family}{i:03d}"))
    return out


def trend_suite(count: int = 32, seed: int = DEFAULT_TREND_SEED) -> list[DopInstance]:
    """Half grids, half random 3-uniform hypergraphs, 40 to 80 variables each."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        if i % 2 == 0:
            while True:
                rows, cols = rng.randint(4, 8), rng.randint(6, 12)
                if 40 <= rows * cols <= 80:
                    break
            h = grid(rows, cols)
            name = f"grid{i:02d}_{rows}x{cols}"
        else:
            n = rng.randint(40, 80)
            m = int(n * rng.uniform(0.5, 0.8))
            h = random_k_uniform(n, 3, m, seed=rng.getrandbits(32))
            name = f"rand{i:02d}_{n}_{m}"
        out.append(generate_instance(h, GeneratorConfig(seed=rng.getrandbits(32)), name))
    return out
