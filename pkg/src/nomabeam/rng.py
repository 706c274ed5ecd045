"""Counter-based random streams for reproducible Monte-Carlo trials."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

import numpy as np

_U64 = (1 << 64) - 1

# split() packs children 16 bits apart inside the lane word; three or four
# levels of splitting fit comfortably in 64 bits.
_SPLIT_WIDTH = 1 << 16


@dataclass(frozen=True)
class RngStream:
    """Stateless handle identifying one reproducible random stream.

    Draws are produced by a counter-based Philox generator keyed by
    (seed, stream_id) with the lane placed in the counter block, so the
    same handle yields the same values no matter in which order, or on
    which worker, streams are consumed.
    """

    seed: int
    stream_id: int = 0
    lane: int = 0

    def generator(self) -> np.random.Generator:
        """Fresh generator for this stream. Never cached, never shared."""
        key = np.array([self.seed & _U64, self.stream_id & _U64], dtype=np.uint64)
        counter = np.array([0, 0, self.lane & _U64, 0], dtype=np.uint64)
        return np.random.Generator(np.random.Philox(key=key, counter=counter))

    def split(self, child: int) -> "RngStream":
        """Derived stream for sub-draws (per-user, per-restart, ...).

        Distinct `child` values below 2**16 give non-overlapping streams, and
        splits may be nested a few levels deep.
        """
        if not 0 <= child < _SPLIT_WIDTH:
            raise ValueError(f"split child must be in [0, {_SPLIT_WIDTH}), got {child}")
        return dataclasses.replace(self, lane=self.lane * _SPLIT_WIDTH + child + 1)
