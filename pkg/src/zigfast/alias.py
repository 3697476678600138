"""Walker/Vose alias table for O(1) draws from a finite discrete distribution."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyWeights


@dataclass(frozen=True)
class AliasTable:
    """Probability/alias arrays; a draw needs one index uniform and one real."""

    size: int
    prob: np.ndarray
    alias: np.ndarray

    def sample(self, u_index: float, u_prob: float) -> int:
        """Draw an index from two uniforms in [0, 1)."""
        k = min(int(u_index * self.size), self.size - 1)
        return k if u_prob < self.prob[k] else int(self.alias[k])

    def exact_probabilities(self) -> np.ndarray:
        """P(draw == k) implied by the table, computed without sampling."""
        out = self.prob.copy()
        np.add.at(out, self.alias, 1.0 - self.prob)
        return out / self.size


def build_alias(weights) -> AliasTable:
    """Vose small/large worklist construction.

    Weights must be nonnegative with a positive sum; they are normalized
    internally.
    """
    w = np.asarray(weights, dtype=np.float64)
    if w.ndim != 1 or w.size == 0:
        raise ValueError("weights must be a nonempty 1-D array")
    if np.any(w < 0.0) or not np.all(np.isfinite(w)):
        raise ValueError("weights must be finite and nonnegative")
    total = w.sum()
    if total <= 0.0:
        raise EmptyWeights("all weights are zero")

    n = w.size
    scaled = w * (n / total)
    prob = np.ones(n)
    alias = np.arange(n, dtype=np.int64)
    small = [i for i in range(n) if scaled[i] < 1.0]
    large = [i for i in range(n) if scaled[i] >= 1.0]
    while small and large:
        s = small.pop()
        g = large.pop()
        prob[s] = scaled[s]
        alias[s] = g
        scaled[g] = (scaled[g] + scaled[s]) - 1.0
        (small if scaled[g] < 1.0 else large).append(g)
    # leftovers are 1 within rounding
    for i in small + large:
        prob[i] = 1.0
    return AliasTable(size=n, prob=prob, alias=alias)
