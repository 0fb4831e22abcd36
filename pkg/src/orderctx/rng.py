"""Seeded random streams.

Every stochastic routine in the package draws from a counter-based Philox
generator keyed by (root seed, stream index).  Independent trials use their
trial index as the stream, so results never depend on execution order and a
run is reproducible from the root seed alone.
"""

import numpy as np

_MASK64 = (1 << 64) - 1


def philox_generator(seed: int, stream: int = 0) -> np.random.Generator:
    """Generator for one stream of the keyed Philox family."""
    key = np.array([int(seed) & _MASK64, int(stream) & _MASK64], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))
