"""Seed derivation for reproducible, independently-streamed replicates.

A master seed (64-bit unsigned int) plus an integer key tuple deterministically
yields a child seed via numpy's SeedSequence, which is splittable: distinct
keys give statistically independent streams and (in practice) distinct seeds.
"""

import numpy as np

U64_MAX = 2**64 - 1


def check_seed(seed: int) -> int:
    if not isinstance(seed, (int, np.integer)) or isinstance(seed, bool):
        raise TypeError(f"seed must be an integer, got {type(seed).__name__}")
    if not 0 <= seed <= U64_MAX:
        raise ValueError(f"seed {seed} outside unsigned 64-bit range")
    return int(seed)


def child_seed(master: int, *key: int) -> int:
    """Derive a 64-bit child seed from a master seed and an index key."""
    master = check_seed(master)
    ss = np.random.SeedSequence(entropy=master, spawn_key=tuple(int(k) for k in key))
    return int(ss.generate_state(1, np.uint64)[0])


def make_rng(seed: int) -> np.random.Generator:
    """PCG64 generator for a 64-bit seed; the only RNG used in this package."""
    return np.random.Generator(np.random.PCG64(check_seed(seed)))
