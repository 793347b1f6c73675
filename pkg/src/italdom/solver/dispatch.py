from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional, Union

from ..constructions import certificate_for
from ..digraph import Digraph, ProductInstance
from ..idf import Labeling, order_upper_bound_is_tight
from . import branch_bound, brute, transfer
from .result import CapExceededError, Method, ProgressCallback, SolveResult, SolverRefusal

# Plain digraphs up to this order go to brute force rather than branch-and-bound.
TINY_ORDER = 10


@dataclass(frozen=True)
class SolverConfig:
    max_brute: int = brute.DEFAULT_MAX_ORDER
    max_dp_rows: int = transfer.DEFAULT_MAX_ROWS
    max_bnb: int = branch_bound.DEFAULT_MAX_ORDER
    threads: int = 1
    use_closed_form: bool = True


def _closed_form(inst: ProductInstance) -> Optional[SolveResult]:
    t0 = time.perf_counter()
    cert = certificate_for(inst)
    if cert is None:
        return None
    stats = {"source": cert.source.value, "elapsed_s": time.perf_counter() - t0}
    return SolveResult(cert.claimed_weight, cert.labeling, Method.CLOSED_FORM, stats)


def _solve_digraph(d: Digraph, cfg: SolverConfig, progress: Optional[ProgressCallback]) -> SolveResult:
    if order_upper_bound_is_tight(d):
        stats = {"rule": "max in/out-degree <= 1 implies gamma = order", "elapsed_s": 0.0}
        return SolveResult(d.order, Labeling.constant(d.order, 1), Method.CLOSED_FORM, stats)
    chain: list[tuple[str, CapExceededError]] = []
    attempts = [
        (Method.BRANCH_AND_BOUND, lambda: branch_bound.solve_branch_and_bound(d, cfg.max_bnb, progress)),
        (Method.BRUTE_FORCE, lambda: brute.solve_brute_force(d, cfg.max_brute, progress)),
    ]
    if d.order <= TINY_ORDER:
        attempts.reverse()
    for method, run in attempts:
        try:
            return run()
        except CapExceededError as err:
            chain.append((method.value, err))
    raise SolverRefusal(chain)


def solve(
    target: Union[ProductInstance, Digraph],
    config: Optional[SolverConfig] = None,
    progress: Optional[ProgressCallback] = None,
) -> SolveResult:
    """Italian domination number of a cycle product or an arbitrary digraph.

    Products use the explicit construction when the value is known in
    closed form, otherwise the profile DP, then the generic searches.
    Every returned witness is re-verified against the digraph.
    """
    cfg = config or SolverConfig()
    if isinstance(target, Digraph):
        return _solve_digraph(target, cfg, progress).check(target)

    inst = target
    d = inst.digraph
    if cfg.use_closed_form:
        res = _closed_form(inst)
        if res is not None:
            return res.check(d)
    chain: list[tuple[str, CapExceededError]] = []
    try:
        return transfer.solve_profile_dp(inst, cfg.max_dp_rows, cfg.threads, progress).check(d)
    except CapExceededError as err:
        chain.append((Method.PROFILE_DP.value, err))
    try:
        return _solve_digraph(d, cfg, progress).check(d)
    except SolverRefusal as err:
        raise SolverRefusal(chain + err.chain) from None
