"""Column-profile transfer matrices and min-plus dynamic programming.

A labeling of ``C_m x C_n`` is read column by column: column ``k`` is the
copy of C_m at second coordinate k.  Every in-neighbor of a vertex in
column k lies in column k or column k-1, so domination of column k is a
property of the pair (column k-1, column k).  The transfer matrix charges
the weight of the target column on each feasible pair and is infinite
otherwise.

Why the diagonal of the n-th min-plus power is the answer: a closed walk
``s_0 -> s_1 -> ... -> s_{n-1} -> s_0`` of length n visits each column once
as a transition target (column 0 on the wrap step), so it is charged each
column weight exactly once and checks domination of every column against
its true cyclic predecessor.  Conversely each IDF gives such a walk.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..digraph import ProductInstance, ProductKind
from ..idf import Labeling
from .result import CapExceededError, Method, ProgressCallback, SolveResult, notify

DEFAULT_MAX_ROWS = 6

# Any IDF weight is at most 2 * m * n, far below this; sums are clipped back
# to INF after every addition so int32 never overflows.
INF = np.int32(1 << 29)


@dataclass(frozen=True)
class TransferSystem:
    """All 3^m column states and the min-plus transition matrix.

    State ``s`` encodes the column labels in base 3 with row 0 as the most
    significant digit, so numeric order of states is lexicographic order
    of columns.
    """

    kind: ProductKind
    m: int
    digits: np.ndarray  # (3^m, m) labels of each state
    weights: np.ndarray  # (3^m,) column weight of each state
    cost: np.ndarray  # (3^m, 3^m) int32, cost[s, t] = weight(t) or INF

    @property
    def size(self) -> int:
        return len(self.weights)

    def encode(self, column) -> int:
        s = 0
        for x in column:
            s = 3 * s + int(x)
        return s

    def decode(self, state: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.digits[state])

    def feasible(self, s: int, t: int) -> bool:
        return bool(self.cost[s, t] < INF)


def build_transfer_system(kind: ProductKind, m: int, max_rows: int = DEFAULT_MAX_ROWS) -> TransferSystem:
    if m < 2:
        raise ValueError(f"columns need at least 2 rows, got {m}")
    if m > max_rows:
        raise CapExceededError(
            f"transfer matrix with 3^{m} states exceeds row cap {max_rows}", "--max-dp-rows"
        )
    S = 3**m
    codes = np.arange(S)
    powers = 3 ** np.arange(m - 1, -1, -1)
    digits = ((codes[:, None] // powers[None, :]) % 3).astype(np.int8)
    weights = digits.sum(axis=1).astype(np.int32)

    # Row i of a column is entered from row i-1 of the same column and from
    # row i (cartesian) or rows i and i-1 (strong) of the previous column.
    within = np.roll(digits, 1, axis=1).astype(np.int16)  # t(i-1)
    cross = digits.astype(np.int16)  # s(i)
    if kind is ProductKind.STRONG:
        cross = cross + np.roll(digits, 1, axis=1)  # + s(i-1)
    insum = cross[:, None, :] + within[None, :, :]  # [s, t, i]
    ok = ((digits[None, :, :] > 0) | (insum >= 2)).all(axis=2)
    cost = np.where(ok, weights[None, :], INF).astype(np.int32)
    return TransferSystem(kind, m, digits, weights, cost)


def _min_plus_rows(A: np.ndarray, B: np.ndarray, rows: slice, out: np.ndarray) -> None:
    block = A[rows]
    acc = np.full((block.shape[0], B.shape[1]), INF, dtype=np.int32)
    tmp = np.empty_like(acc)
    for k in range(A.shape[1]):
        col = block[:, k : k + 1]
        if (col >= INF).all():
            continue
        np.add(col, B[k : k + 1, :], out=tmp)
        np.minimum(acc, tmp, out=acc)
    np.minimum(acc, INF, out=acc)
    out[rows] = acc


def min_plus_product(A: np.ndarray, B: np.ndarray, threads: int = 1) -> np.ndarray:
    """``C[i, j] = min_k A[i, k] + B[k, j]`` with INF saturation.

    With ``threads > 1`` output rows are split across a thread pool; numpy
    releases the GIL inside the inner loop.  The result does not depend on
    the split.
    """
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch {A.shape} x {B.shape}")
    out = np.empty((A.shape[0], B.shape[1]), dtype=np.int32)
    n = A.shape[0]
    if threads <= 1 or n < 2 * threads:
        _min_plus_rows(A, B, slice(0, n), out)
        return out
    bounds = np.linspace(0, n, threads + 1).astype(int)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [
            pool.submit(_min_plus_rows, A, B, slice(bounds[i], bounds[i + 1]), out)
            for i in range(threads)
        ]
        for fut in futures:
            fut.result()
    return out


def min_plus_power(T: np.ndarray, n: int, threads: int = 1, squaring: bool = True) -> np.ndarray:
    """n-th min-plus power of a square matrix, n >= 1."""
    if n < 1:
        raise ValueError("power must be at least 1")
    if not squaring:
        P = T.copy()
        for _ in range(n - 1):
            P = min_plus_product(P, T, threads)
        return P
    result: Optional[np.ndarray] = None
    base = T
    while True:
        if n & 1:
            result = base if result is None else min_plus_product(result, base, threads)
        n >>= 1
        if not n:
            break
        base = min_plus_product(base, base, threads)
    assert result is not None
    return result


def _min_plus_vec(v: np.ndarray, T: np.ndarray) -> np.ndarray:
    """Row vector times matrix in min-plus."""
    finite = np.flatnonzero(v < INF)
    if finite.size == 0:
        return np.full(T.shape[1], INF, dtype=np.int32)
    return np.minimum((v[finite, None] + T[finite, :]).min(axis=0), INF).astype(np.int32)


def cyclic_walk(system: TransferSystem, start: int, n: int) -> tuple[int, list[int]]:
    """Cheapest closed walk of length n through ``start``.

    Returns its cost and the visited states ``[s_0 = start, s_1, ..., s_{n-1}]``.
    Backtracking picks the numerically smallest predecessor at each step.
    """
    T = system.cost
    dist = [np.full(system.size, INF, dtype=np.int32)]
    dist[0][start] = 0
    for _ in range(n):
        dist.append(_min_plus_vec(dist[-1], T))
    total = int(dist[n][start])
    if total >= INF:
        return total, []
    states = [start] * n
    cur = start
    for k in range(n - 1, 0, -1):
        target = dist[k + 1][cur]
        cand = np.flatnonzero((dist[k] < INF) & (T[:, cur] < INF) & (dist[k] + T[:, cur] == target))
        cur = int(cand[0])
        states[k] = cur
    return total, states


def solve_profile_dp(
    inst: ProductInstance,
    max_rows: int = DEFAULT_MAX_ROWS,
    threads: int = 1,
    progress: Optional[ProgressCallback] = None,
) -> SolveResult:
    """Exact minimum via the n-th min-plus power of the column transfer matrix.

    Columns are taken along the shorter cycle: when ``n < m`` the instance
    is transposed (both products are symmetric under swapping factors) and
    the witness is mapped back.
    """
    t0 = time.perf_counter()
    work = inst.transposed() if inst.n < inst.m else inst
    system = build_transfer_system(work.kind, work.m, max_rows)
    notify(progress, event="transfer", states=system.size)
    P = min_plus_power(system.cost, work.n, threads)
    diag = np.diagonal(P)
    gamma = int(diag.min())
    start = int(np.flatnonzero(diag == gamma)[0])
    total, states = cyclic_walk(system, start, work.n)
    assert total == gamma, (total, gamma)

    columns = [system.digits[s] for s in states]
    grid = [int(columns[j][i]) for i in range(work.m) for j in range(work.n)]
    witness = Labeling(grid)
    if work is not inst:
        witness = witness.transposed(work.m, work.n)
    stats = {
        "states": system.size,
        "rows": work.m,
        "transposed": work is not inst,
        "feasible_transitions": int((system.cost < INF).sum()),
        "elapsed_s": time.perf_counter() - t0,
    }
    notify(progress, event="done", weight=gamma)
    return SolveResult(gamma, witness, Method.PROFILE_DP, stats)
