"""Depth-first branch-and-bound for arbitrary digraphs."""

from __future__ import annotations

import time
from typing import Optional

from ..digraph import Digraph, max_out_degree
from ..idf import Labeling, order_upper_bound_is_tight
from .result import CapExceededError, Method, ProgressCallback, SolveResult, notify

DEFAULT_MAX_ORDER = 24
_REPORT_EVERY = 50_000


def remainder_lower_bound(need_total: int, max_out: int) -> int:
    """Weight still required on undecided vertices.

    ``need(v) = max(0, 2 - decided in-neighbor sum)`` over every undecided
    vertex and every decided 0-vertex.  A positive undecided vertex clears
    at most 2 of its own need, and each unit of weight supplies at most
    ``max_out`` units to out-neighbors, so weight W covers at most
    ``(2 + max_out) * W`` need.  With nothing decided this is the classic
    ``ceil(2n / (2 + max out-degree))``.
    """
    return -(-need_total // (2 + max_out))


def solve_branch_and_bound(
    d: Digraph,
    max_order: int = DEFAULT_MAX_ORDER,
    progress: Optional[ProgressCallback] = None,
) -> SolveResult:
    """Exact minimum IDF weight by DFS over vertices 0..n-1.

    Branches try labels 0, 1, 2 in that order.  A branch is cut when a
    0-vertex can no longer reach in-neighbor sum 2, or when the partial
    weight plus ``remainder_lower_bound`` reaches the incumbent.  Digraphs
    with all degrees at most 1 are answered without search.
    """
    N = d.order
    t0 = time.perf_counter()
    if order_upper_bound_is_tight(d):
        return SolveResult(
            N, Labeling.constant(N, 1), Method.BRANCH_AND_BOUND,
            {"nodes": 0, "short_circuit": "max degree <= 1", "elapsed_s": time.perf_counter() - t0},
        )
    if N > max_order:
        raise CapExceededError(f"branch-and-bound order {N} exceeds cap {max_order}", "--max-bnb")

    ins = d.in_adjacency
    outs = d.out_adjacency
    dmax = max_out_degree(d)
    label = [-1] * N
    insum = [0] * N
    undecided_in = [len(x) for x in ins]
    need = [2] * N  # need per vertex that still counts toward the bound
    need_total = 2 * N

    best = N
    best_label = [1] * N
    nodes = 0

    def alive(v: int) -> bool:
        return label[v] != 0 or insum[v] + 2 * undecided_in[v] >= 2

    def dfs(pos: int, partial: int) -> None:
        nonlocal best, best_label, nodes, need_total
        nodes += 1
        if progress is not None and nodes % _REPORT_EVERY == 0:
            notify(progress, event="nodes", nodes=nodes, incumbent=best)
        if pos == N:
            if partial < best:
                best = partial
                best_label = label[:]
                notify(progress, event="incumbent", weight=best, nodes=nodes)
            return
        v = pos
        for x in (0, 1, 2):
            if partial + x >= best:
                break
            label[v] = x
            # v's own need: cleared if positive, kept (and still counted) if 0.
            delta = -need[v] if x else 0
            old_v = need[v]
            if x:
                need[v] = 0
            changed = []
            for w in outs[v]:
                insum[w] += x
                undecided_in[w] -= 1
                if x and need[w]:
                    new = max(0, 2 - insum[w]) if label[w] <= 0 else 0
                    if new != need[w]:
                        changed.append((w, need[w]))
                        delta += new - need[w]
                        need[w] = new
            need_total += delta
            ok = alive(v) and all(alive(w) for w in outs[v])
            if ok and partial + x + remainder_lower_bound(need_total, dmax) < best:
                dfs(pos + 1, partial + x)
            need_total -= delta
            for w, old in changed:
                need[w] = old
            need[v] = old_v
            for w in outs[v]:
                insum[w] -= x
                undecided_in[w] += 1
            label[v] = -1

    dfs(0, 0)
    stats = {"nodes": nodes, "elapsed_s": time.perf_counter() - t0}
    return SolveResult(best, Labeling(best_label), Method.BRANCH_AND_BOUND, stats)
