"""Exact seed-set search, heuristics, and the unanimity special cases.

Exhaustive searches enumerate seed sets in cardinality-major lexicographic
order.  Maximization problems range over |S| <= k, minimization problems
over |S| = k; ties always go to the smaller, then lexicographically
smaller, seed.  The scans share propagation work between seeds that share
a prefix (see Propagator.push_one/pop_to), may stop early only when a seed
reaches the problem's hard value bound, and can partition the first-vertex
blocks of each cardinality across worker processes without changing any
reported field.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from math import comb
from typing import Callable, Sequence

from .instance import Instance
from .propagation import Propagator

DEFAULT_EVALUATION_LIMIT = 20_000_000


@dataclass(frozen=True)
class SolveResult:
    """Outcome of one solver call.

    `value` is the target-set size or influence value; `optimal` is set only
    when an exhaustive search finished (or provably found the optimum);
    `explored` counts the seed sets actually evaluated.  `seed` is None when
    a capped search exhausted its cap without a feasible set.
    """

    problem: str
    seed: frozenset[int] | None
    value: int | None
    optimal: bool
    explored: int
    k: int | None = None
    mode: str | None = None
    goal: str | None = None


# ---------------------------------------------------------------------------
# Scan kernels.  A "block" is the set of all size-c subsets of `universe`
# that start at universe[first]; blocks in index order concatenate to the
# full lexicographic enumeration of size-c subsets.

_WORKER_INST: Instance | None = None


def _pool_init(inst: Instance) -> None:
    global _WORKER_INST
    _WORKER_INST = inst


def _influence_block(
    args: tuple,
) -> tuple[int | None, tuple[int, ...] | None, int, bool]:
    """Scan one block for the best influence value.

    Returns (best_value, best_seed, seeds_scanned, stopped_at_bound); the
    scan stops early only when `stop_value` is reached, which no later seed
    in the enumeration could beat or tie-break.
    """
    inst, universe, c, first, mode, goal, stop_value = args
    prop = Propagator(inst if inst is not None else _WORKER_INST)
    closed = mode == "closed"
    maximize = goal == "max"
    best_v: int | None = None
    best_seed: tuple[int, ...] | None = None
    scanned = 0
    stopped = False
    u = len(universe)
    combo: list[int] = []

    def leaf_value() -> int:
        a = prop.active_count()
        return a if closed else a - c

    def rec(lo: int, need: int) -> bool:
        nonlocal best_v, best_seed, scanned, stopped
        if need == 0:
            scanned += 1
            val = leaf_value()
            if best_v is None or (val > best_v if maximize else val < best_v):
                best_v = val
                best_seed = tuple(combo)
            if stop_value is not None and val == stop_value:
                stopped = True
                return True
            return False
        for i in range(lo, u - need + 1):
            v = universe[i]
            token = prop.push_one(v)
            combo.append(v)
            halt = rec(i + 1, need - 1)
            combo.pop()
            prop.pop_to(token)
            if halt:
                return True
        return False

    prop.push_one(universe[first])
    combo.append(universe[first])
    rec(first + 1, c - 1)
    return best_v, best_seed, scanned, stopped


def _target_block(args: tuple) -> tuple[tuple[int, ...] | None, int]:
    """Scan one block for the first (lexicographic) target set.

    When a prefix already activates everything, its lexicographically first
    completion is the first target set in the block, so the scan may jump
    straight to it.
    """
    inst, universe, c, first = args
    prop = Propagator(inst if inst is not None else _WORKER_INST)
    u = len(universe)
    combo: list[int] = []
    scanned = 0

    def rec(lo: int, need: int) -> tuple[int, ...] | None:
        nonlocal scanned
        if need == 0:
            scanned += 1
            return tuple(combo) if prop.is_full() else None
        if prop.is_full():
            if lo + need <= u:
                scanned += 1
                return tuple(combo) + tuple(universe[lo : lo + need])
            return None
        for i in range(lo, u - need + 1):
            v = universe[i]
            token = prop.push_one(v)
            combo.append(v)
            winner = rec(i + 1, need - 1)
            combo.pop()
            prop.pop_to(token)
            if winner is not None:
                return winner
        return None

    prop.push_one(universe[first])
    combo.append(universe[first])
    return rec(first + 1, c - 1), scanned


def _map_blocks(
    inst: Instance,
    tasks: list[tuple],
    worker: Callable,
    threads: int,
    stop_field: Callable[[tuple], bool],
):
    """Run block tasks in order, sequentially or on a fork pool.

    Yields reports in block order either way; with a pool, every block of
    the batch is computed but reports after a stopping block are discarded
    by the caller, so results cannot depend on the thread count.
    """
    if threads <= 1 or len(tasks) <= 1:
        for t in tasks:
            report = worker((inst,) + t)
            yield report
            if stop_field(report):
                return
        return
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(processes=threads, initializer=_pool_init, initargs=(inst,)) as pool:
        for report in pool.imap(worker, [(None,) + t for t in tasks]):
            yield report


def optimal_target_set(
    inst: Instance, size_cap: int | None = None, *, threads: int = 1
) -> SolveResult:
    """Smallest target set, by exhaustive cardinality-major search.

    Seeds are enumerated by increasing cardinality and lexicographically
    within a cardinality; the first target set found is returned.  If no
    target set of size <= size_cap exists the result carries no seed and
    optimal=False.
    """
    n = inst.n
    cap = n if size_cap is None else min(size_cap, n)
    universe = tuple(range(1, n + 1))
    explored = 0
    for c in range(cap + 1):
        if c == 0:
            explored += 1
            if n == 0:
                return SolveResult(
                    "target-set", frozenset(), 0, True, explored
                )
            continue
        tasks = [(universe, c, first) for first in range(0, n - c + 1)]
        for winner, scanned in _map_blocks(
            inst, tasks, _target_block, threads, lambda r: r[0] is not None
        ):
            explored += scanned
            if winner is not None:
                return SolveResult(
                    "target-set", frozenset(winner), c, True, explored
                )
    return SolveResult("target-set", None, None, False, explored)


def k_influence(
    inst: Instance,
    k: int,
    mode: str = "closed",
    goal: str = "max",
    exact_cardinality: bool | None = None,
    *,
    universe: Sequence[int] | None = None,
    threads: int = 1,
    max_evaluations: int = DEFAULT_EVALUATION_LIMIT,
) -> SolveResult:
    """Exhaustive best-influence seed of bounded size.

    Maximization searches |S| <= k, minimization |S| = k, unless
    exact_cardinality overrides the convention.  `universe` restricts the
    vertices seeds may use.  Refuses enumerations larger than
    `max_evaluations` seed sets.
    """
    if mode not in ("open", "closed"):
        raise ValueError(f"mode must be 'open' or 'closed', got {mode!r}")
    if goal not in ("max", "min"):
        raise ValueError(f"goal must be 'max' or 'min', got {goal!r}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = inst.n
    if universe is None:
        uni = tuple(range(1, n + 1))
    else:
        uni = tuple(sorted(set(universe)))
        for v in uni:
            if not 1 <= v <= n:
                raise ValueError(f"universe vertex {v} out of range 1..{n}")
    exact = (goal == "min") if exact_cardinality is None else exact_cardinality
    if exact:
        if k > len(uni):
            raise ValueError(
                f"no seed of size {k} exists in a universe of {len(uni)} vertices"
            )
        sizes = [k]
    else:
        sizes = list(range(0, min(k, len(uni)) + 1))

    total = sum(comb(len(uni), c) for c in sizes)
    if total > max_evaluations:
        raise ValueError(
            f"enumeration would evaluate about {total} seed sets, "
            f"above the limit of {max_evaluations}"
        )

    maximize = goal == "max"
    best_v: int | None = None
    best_seed: tuple[int, ...] | None = None
    explored = 0
    for c in sizes:
        if maximize:
            stop_value = n if mode == "closed" else n - c
        else:
            stop_value = c if mode == "closed" else 0
        if c == 0:
            explored += 1
            val = 0
            if best_v is None or (val > best_v if maximize else val < best_v):
                best_v, best_seed = val, ()
            if val == stop_value:
                break
            continue
        tasks = [(uni, c, first, mode, goal, stop_value) for first in range(len(uni) - c + 1)]
        hit_bound = False
        for bv, bs, scanned, stopped in _map_blocks(
            inst, tasks, _influence_block, threads, lambda r: r[3]
        ):
            explored += scanned
            if bv is not None and (
                best_v is None or (bv > best_v if maximize else bv < best_v)
            ):
                best_v, best_seed = bv, bs
            if stopped:
                hit_bound = True
                break
        if hit_bound:
            break
    assert best_v is not None and best_seed is not None
    return SolveResult(
        "k-influence",
        frozenset(best_seed),
        best_v,
        True,
        explored,
        k=k,
        mode=mode,
        goal=goal,
    )


def greedy_target_set(inst: Instance) -> SolveResult:
    """Upper-bound heuristic: repeatedly seed the vertex with the largest
    marginal closed influence (ties to the smallest id) until everything
    activates."""
    n = inst.n
    prop = Propagator(inst)
    seed: list[int] = []
    explored = 0
    while not prop.is_full() and len(seed) < n:
        chosen = None
        best_gain = -1
        in_seed = set(seed)
        for v in range(1, n + 1):
            if v in in_seed:
                continue
            token = prop.push_one(v)
            explored += 1
            gain = prop.active_count()
            prop.pop_to(token)
            if gain > best_gain:
                best_gain = gain
                chosen = v
        assert chosen is not None
        seed.append(chosen)
        prop.push_one(chosen)
    prop.reset()
    return SolveResult("target-set-greedy", frozenset(seed), len(seed), False, explored)


def _require_unanimity(inst: Instance) -> None:
    for v in range(1, inst.n + 1):
        d = inst.graph.degree(v)
        if d >= 1 and inst.thr[v] != d:
            raise ValueError(
                f"vertex {v} has threshold {inst.thr[v]} but degree {d}; "
                "expected unanimity thresholds"
            )


def unanimity_target_set_2approx(inst: Instance) -> SolveResult:
    """Matching-based cover for unanimity thresholds.

    Both endpoints of a lexicographically greedy maximal matching form a
    vertex cover, hence a target set, of size at most twice the optimum;
    vertices without edges can only be seeded, so they are appended.
    """
    _require_unanimity(inst)
    matched: set[int] = set()
    for u, v in inst.graph.edges:
        if u not in matched and v not in matched:
            matched.add(u)
            matched.add(v)
    isolated = [v for v in range(1, inst.n + 1) if inst.graph.degree(v) == 0]
    seed = frozenset(matched) | frozenset(isolated)
    return SolveResult("target-set-unanimity-2approx", seed, len(seed), False, 0)


def _components(inst: Instance) -> list[list[int]]:
    seen = [False] * (inst.n + 1)
    comps = []
    for s in range(1, inst.n + 1):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = [s]
        while queue:
            u = queue.pop(0)
            for w in inst.graph.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def _bfs_tree(inst: Instance, comp: list[int]) -> dict[int, set[int]]:
    """Breadth-first spanning tree of one component, rooted at its smallest id."""
    tree: dict[int, set[int]] = {v: set() for v in comp}
    root = comp[0]
    seen = {root}
    queue = [root]
    while queue:
        u = queue.pop(0)
        for w in inst.graph.neighbors(u):
            if w not in seen:
                seen.add(w)
                tree[u].add(w)
                tree[w].add(u)
                queue.append(w)
    return tree


def _peel_leaves(tree: dict[int, set[int]], count: int) -> list[int]:
    """Remove `count` vertices, each the smallest-id current leaf.

    Peeling a spanning-tree leaf keeps the remainder of the tree spanning
    the remainder of the component, so after peeling, every unseeded vertex
    of a component with >= 2 survivors still has an unseeded neighbor.
    """
    peeled = []
    for _ in range(count):
        leaves = [v for v, nb in tree.items() if len(nb) <= 1]
        v = min(leaves)
        for w in tree[v]:
            tree[w].discard(v)
        del tree[v]
        peeled.append(v)
    return peeled


def min_open_influence_unanimity(inst: Instance, k: int) -> SolveResult:
    """Minimum open k-influence under unanimity thresholds, in polynomial
    time, with a witness seed.

    Under unanimity a vertex activates only when every neighbor is active,
    so an unseeded vertex stays inactive as long as it keeps an unseeded
    neighbor (or has no neighbor at all).  Per component of size c the seed
    amounts with zero spill are {0..c-2} and c (and both 0 and 1 for a
    single vertex); seeding all but one vertex of a component spills
    exactly one activation.  A small table over the components finds the
    cheapest way to place exactly k seeds, which yields optimum 0 or 1; the
    witness peels breadth-first spanning-tree leaves so component
    remainders stay connected.  The minimum closed value is this value
    plus k.
    """
    _require_unanimity(inst)
    n = inst.n
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in 0..{n}")
    comps = _components(inst)

    # dp[j] = fewest spilled activations placing exactly j seeds so far.
    INF = n + 1
    dp = [0] + [INF] * k
    choices: list[list[int | None]] = []
    for comp in comps:
        c = len(comp)
        options = [(p, 0) for p in range(0, max(c - 1, 1))]  # 0..c-2, or 0..1 if c==1
        if c == 1:
            options = [(0, 0), (1, 0)]
        else:
            options.append((c - 1, 1))
            options.append((c, 0))
        nxt = [INF] * (k + 1)
        pick: list[int | None] = [None] * (k + 1)
        for j in range(k + 1):
            if dp[j] == INF:
                continue
            for p, cost in options:
                if j + p > k:
                    continue
                if dp[j] + cost < nxt[j + p]:
                    nxt[j + p] = dp[j] + cost
                    pick[j + p] = p
        dp = nxt
        choices.append(pick)

    value = dp[k]
    assert value <= 1, "unanimity optimum is always 0 or 1"

    # Reconstruct per-component seed amounts, then peel witnesses.
    amounts = []
    j = k
    for comp, pick in zip(reversed(comps), reversed(choices)):
        p = pick[j]
        assert p is not None
        amounts.append(p)
        j -= p
    amounts.reverse()

    seed: list[int] = []
    for comp, p in zip(comps, amounts):
        if p == len(comp):
            seed.extend(comp)
        elif p:
            seed.extend(_peel_leaves(_bfs_tree(inst, comp), p))
    return SolveResult(
        "min-open-influence-unanimity",
        frozenset(seed),
        value,
        True,
        0,
        k=k,
        mode="open",
        goal="min",
    )
