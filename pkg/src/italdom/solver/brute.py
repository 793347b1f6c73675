"""Exhaustive search over all 3^order labelings."""

from __future__ import annotations

import itertools
import time
from typing import Optional

import numpy as np

from ..digraph import Digraph
from ..idf import Labeling
from .result import CapExceededError, Method, ProgressCallback, SolveResult, notify

DEFAULT_MAX_ORDER = 16

# Vertices enumerated as one vectorized block; the rest are looped over.
_BLOCK = 10


def _all_labelings(k: int) -> np.ndarray:
    """All 3^k label vectors in lexicographic order, shape (3^k, k)."""
    if k == 0:
        return np.zeros((1, 0), dtype=np.int8)
    codes = np.arange(3**k)
    powers = 3 ** np.arange(k - 1, -1, -1)
    return ((codes[:, None] // powers[None, :]) % 3).astype(np.int8)


def solve_brute_force(
    d: Digraph,
    max_order: int = DEFAULT_MAX_ORDER,
    progress: Optional[ProgressCallback] = None,
) -> SolveResult:
    """Minimum IDF weight by enumerating every labeling.

    The witness is the lexicographically first optimal labeling (vertex 0
    most significant).  The last ``min(order, 10)`` vertices are handled
    as one numpy block per assignment of the leading vertices; both halves
    run in lexicographic order, so keeping only strict improvements
    preserves the lexicographic tie-break.
    """
    N = d.order
    if N > max_order:
        raise CapExceededError(
            f"brute force over 3^{N} labelings exceeds order cap {max_order}; use the profile DP "
            "for cycle products or branch-and-bound",
            "--max-brute",
        )
    t0 = time.perf_counter()
    k = min(N, _BLOCK)
    h = N - k

    adj = np.zeros((N, N), dtype=np.int8)  # adj[u, v] = 1 iff u -> v
    for u, v in d.arcs:
        adj[u, v] = 1
    low = _all_labelings(k)
    low_weight = low.sum(axis=1, dtype=np.int32)
    # In-neighbor label sums contributed by the block vertices, per vertex.
    low_in = (low.astype(np.int16) @ adj[h:, :].astype(np.int16)).astype(np.int16)
    low_need = [low[:, t] > 0 for t in range(k)]

    best = N + 1
    best_label: Optional[np.ndarray] = None
    visited = 0
    for prefix in itertools.product(range(3), repeat=h):
        visited += 1
        wh = sum(prefix)
        if wh >= best:
            continue
        pre = np.asarray(prefix, dtype=np.int16)
        high_in = pre @ adj[:h, :].astype(np.int16) if h else np.zeros(N, dtype=np.int16)
        ok = low_weight < best - wh
        for v in range(h):
            if prefix[v] == 0:
                ok &= low_in[:, v] >= 2 - high_in[v]
        for t in range(k):
            v = h + t
            ok &= low_need[t] | (low_in[:, v] >= 2 - high_in[v])
        if not ok.any():
            continue
        idx = np.flatnonzero(ok)
        j = idx[np.argmin(low_weight[idx])]
        best = wh + int(low_weight[j])
        best_label = np.concatenate([pre.astype(np.int8), low[j]])
        notify(progress, event="incumbent", weight=best, visited=visited)

    assert best_label is not None  # the all-ones labeling is always feasible
    stats = {
        "labelings": 3**N,
        "prefixes": visited,
        "elapsed_s": time.perf_counter() - t0,
    }
    return SolveResult(best, Labeling(best_label.tolist()), Method.BRUTE_FORCE, stats)
