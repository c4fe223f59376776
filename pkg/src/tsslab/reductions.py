"""Instance compilers: circuit satisfiability and independence/clique
problems rewritten as threshold-activation instances, with the padding
arithmetic that separates yes- and no-instances by a verifiable gap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterable

from .circuits import MonotoneCircuit, evaluate
from .gadgets import InstanceBuilder, ReducedInstance
from .instance import Graph
from .propagation import is_target_set

RHO_PRESETS = ("const", "linear", "poly")

X_SEARCH_LIMIT = 10_000_000


@dataclass(frozen=True)
class GapParameters:
    """Padding bundle (k, g, h, x) for the gap constructions.

    For the clique variant, g = k + C(k,2) + 4*C(k,2)^2, x is the smallest
    integer with x/rho(x) >= g, and h is the smallest integer making the
    construction's guaranteed yield k + (h+1)*C(k,2) + 4*h*C(k,2)^2 reach x.
    For the min-closed variant, h is the smallest integer >= 1 with
    k + h + 1 >= k*rho(k) and g = k + h + 1 (x is not used).  h may also be
    fixed directly via `with_h`, which is all the finite gap checks need.
    """

    variant: str  # "clique" | "min-closed"
    k: int
    g: int
    h: int
    x: int | None = None
    rho_label: str | None = None

    def __post_init__(self) -> None:
        if self.variant not in ("clique", "min-closed"):
            raise ValueError(f"unknown gap variant {self.variant!r}")
        if self.k < 1:
            raise ValueError("k must be positive")
        if self.h < 1:
            raise ValueError("h must be at least 1")

    @property
    def clique_yield(self) -> int:
        """Closed influence guaranteed by seeding a k-clique."""
        c2 = comb(self.k, 2)
        return self.k + (self.h + 1) * c2 + 4 * self.h * c2 * c2

    @classmethod
    def with_h(cls, k: int, h: int, variant: str = "clique") -> "GapParameters":
        if variant == "clique":
            c2 = comb(k, 2)
            return cls(variant, k, k + c2 + 4 * c2 * c2, h)
        return cls(variant, k, k + h + 1, h)


def rho_preset(label: str) -> Callable[[int], Fraction]:
    """Parse `const:c`, `linear:c`, or `poly:c,d` into a ratio function."""
    name, _, arg = label.partition(":")
    try:
        if name == "const":
            c = Fraction(arg)
            return lambda t: c
        if name == "linear":
            c = Fraction(arg)
            return lambda t: c * t
        if name == "poly":
            cs, ds = arg.split(",")
            c, d = Fraction(cs), Fraction(ds)
            if d.denominator != 1:
                cf, df = float(c), float(d)
                return lambda t: Fraction(cf * t**df)
            return lambda t: c * t ** int(d)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"bad rho preset {label!r}")
    raise ValueError(
        f"unknown rho preset {name!r}; expected one of {RHO_PRESETS}"
    )


def choose_gap_padding(
    k: int,
    rho: Callable[[int], object],
    variant: str = "clique",
    *,
    rho_label: str | None = None,
    search_limit: int = X_SEARCH_LIMIT,
) -> GapParameters:
    """Compute the minimal padding parameters for a ratio function rho.

    The clique variant needs t/rho(t) nondecreasing and unbounded; the
    search for x walks upward from g and rejects rho as soon as a sampled
    ratio decreases, or gives up at `search_limit` if the ratio never
    reaches g.  The min-closed variant only evaluates rho at k.
    """
    if k < 2:
        raise ValueError("k must be at least 2")

    def ratio_at(t: int) -> Fraction:
        val = Fraction(rho(t))
        if val < 1:
            raise ValueError(f"rho({t}) = {val} is below 1")
        return Fraction(t) / val

    if variant == "clique":
        c2 = comb(k, 2)
        g = k + c2 + 4 * c2 * c2
        x = g
        prev = None
        while True:
            r = ratio_at(x)
            if prev is not None and r < prev:
                raise ValueError(f"t/rho(t) decreases between t={x - 1} and t={x}")
            prev = r
            if r >= g:
                break
            x += 1
            if x - g > search_limit:
                raise ValueError(
                    f"x/rho(x) did not reach {g} within {search_limit} steps; "
                    "rho does not satisfy the growth requirement"
                )
        per_h = c2 + 4 * c2 * c2
        h = max(1, -((k + c2 - x) // per_h))  # ceil((x - k - c2) / per_h)
        return GapParameters("clique", k, g, h, x, rho_label)

    if variant == "min-closed":
        need = Fraction(k) * Fraction(rho(k))  # want k + h + 1 >= k*rho(k)
        h_min = need - k - 1
        h = max(1, -int(-h_min // 1))  # ceil for Fractions
        return GapParameters("min-closed", k, k + h + 1, h, None, rho_label)

    raise ValueError(f"unknown gap variant {variant!r}")


def mcs_to_tss(c: MonotoneCircuit) -> ReducedInstance:
    """Compile a monotone circuit into a target-set instance whose minimum
    target set size equals the circuit's minimum satisfying weight.

    One vertex per input node (threshold n+1, so inputs activate only once
    every replicated output fires back at them, or by seeding); n+1 merged
    copies of every gate (and-gates demand all their wires, or-gates any
    one); every circuit wire becomes a directed edge gadget, replicated per
    copy; and each copy's output feeds a gadget back into every input.
    """
    if c.n_nodes == 0:
        raise ValueError("cannot compile an empty circuit")
    n = c.n_inputs
    copies = n + 1
    b = InstanceBuilder()
    input_vertex: dict[int, int] = {}
    for pos, node in enumerate(c.inputs, start=1):
        input_vertex[node] = b.add_vertex(n + 1, f"in{pos}")

    gate_vertex: dict[tuple[int, int], int] = {}
    for node in c.topo:
        kind = c.kinds[node]
        if kind == "input":
            continue
        thr = len(c.preds[node]) if kind == "and" else 1
        for copy in range(1, copies + 1):
            gate_vertex[node, copy] = b.add_vertex(thr, f"gate{node}.{copy}")

    for node in c.topo:
        for src in c.preds[node]:
            for copy in range(1, copies + 1):
                tail = (
                    input_vertex[src]
                    if c.kinds[src] == "input"
                    else gate_vertex[src, copy]
                )
                b.add_directed_edge_gadget(tail, gate_vertex[node, copy])

    if c.kinds[c.output] != "input":
        for copy in range(1, copies + 1):
            for node in c.inputs:
                b.add_directed_edge_gadget(
                    gate_vertex[c.output, copy], input_vertex[node]
                )
    return b.build("circuit-tss", source_circuit=c)


def map_target_set_to_assignment(
    r: ReducedInstance, seed: Iterable[int]
) -> frozenset[int]:
    """Project a target set of a circuit compilation onto a satisfying
    assignment of no larger weight.

    A target set of size >= n maps to the all-true assignment.  A smaller
    one must already succeed through its input vertices alone (the gate
    copies are too numerous for the seed to touch them all), so dropping
    every non-input vertex leaves a satisfying set of input positions.
    """
    if r.kind != "circuit-tss" or r.source_circuit is None:
        raise ValueError("expected a circuit compilation")
    c = r.source_circuit
    seed_set = frozenset(seed)
    if not is_target_set(r.instance, seed_set):
        raise ValueError("seed is not a target set of the compiled instance")
    n = c.n_inputs
    if len(seed_set) >= n:
        return frozenset(range(1, n + 1))
    assignment = frozenset(
        int(r.provenance[v][2:]) for v in seed_set if r.provenance[v].startswith("in")
    )
    if not evaluate(c, assignment):
        raise AssertionError(
            "input projection of a small target set failed to satisfy the circuit"
        )
    return assignment


def clique_to_max_influence(
    g: Graph, k: int, params: GapParameters | None = None, *, h: int | None = None
) -> ReducedInstance:
    """Incidence graph plus h replicated counter layers: a k-clique seed
    yields closed influence of at least k + (h+1)C(k,2) + 4hC(k,2)^2, while
    without a k-clique every k-seed stays below g = k + C(k,2) + 4C(k,2)^2.

    Layout: vertex side (threshold = source degree), edge side (threshold
    2), then the z layers (threshold C(k,2)), then gadget interiors.
    Requires k >= 4 so that k < C(k,2).
    """
    if k < 4:
        raise ValueError("clique construction requires k >= 4")
    if params is not None and h is not None:
        raise ValueError("give either params or h, not both")
    if params is None:
        params = GapParameters.with_h(k, 1 if h is None else h, "clique")
    if params.variant != "clique":
        raise ValueError("params must come from the clique variant")
    if params.k != k:
        raise ValueError(f"params computed for k={params.k}, construction got k={k}")

    c2 = comb(k, 2)
    b = InstanceBuilder()
    for v in range(1, g.n + 1):
        b.add_vertex(max(1, g.degree(v)), f"v{v}")
    edge_vertex: list[int] = []
    for u, v in g.edges:
        ev = b.add_vertex(2, f"e{u}-{v}")
        edge_vertex.append(ev)
        b.add_edge(u, ev)
        b.add_edge(v, ev)
    z: dict[tuple[int, int], int] = {}
    for layer in range(1, params.h + 1):
        for j in range(1, c2 + 1):
            z[layer, j] = b.add_vertex(c2, f"z{layer}.{j}")
    for ev in edge_vertex:
        for j in range(1, c2 + 1):
            b.add_directed_edge_gadget(ev, z[1, j])
    for layer in range(1, params.h):
        for j in range(1, c2 + 1):
            for t in range(1, c2 + 1):
                b.add_directed_edge_gadget(z[layer, j], z[layer + 1, t])
    return b.build("clique-max-influence", source_graph=g, k=k, params=params)


def is_to_influence_decision(g: Graph, k: int, mode: str = "closed") -> ReducedInstance:
    """Incidence graph with thresholds 1 on the vertex side and 2 on the
    edge side: a size-k seed keeps closed influence at k (open influence at
    0) exactly when it is an independent set of the source graph.

    The decision bound ell is k for the closed variant and 0 for the open
    variant.
    """
    if mode not in ("open", "closed"):
        raise ValueError(f"mode must be 'open' or 'closed', got {mode!r}")
    if not 0 <= k <= g.n:
        raise ValueError(f"k must lie in 0..{g.n}")
    b = InstanceBuilder()
    for v in range(1, g.n + 1):
        b.add_vertex(1, f"v{v}")
    for u, v in g.edges:
        ev = b.add_vertex(2, f"e{u}-{v}")
        b.add_edge(u, ev)
        b.add_edge(v, ev)
    return b.build(
        "independence-influence-decision",
        source_graph=g,
        k=k,
        ell=k if mode == "closed" else 0,
    )


def is_to_min_closed_influence(
    g: Graph, k: int, params: GapParameters | None = None, *, h: int | None = None
) -> ReducedInstance:
    """Incidence graph plus h trigger vertices joined completely to the
    edge side: minimum closed influence over size-k seeds is exactly k when
    the source graph has a size-k independent set and at least k + h + 1
    otherwise.
    """
    if not 1 <= k <= g.n:
        raise ValueError(f"k must lie in 1..{g.n}")
    if params is not None and h is not None:
        raise ValueError("give either params or h, not both")
    if params is None:
        params = GapParameters.with_h(k, 1 if h is None else h, "min-closed")
    if params.variant != "min-closed":
        raise ValueError("params must come from the min-closed variant")
    if params.k != k:
        raise ValueError(f"params computed for k={params.k}, construction got k={k}")

    b = InstanceBuilder()
    for v in range(1, g.n + 1):
        b.add_vertex(1, f"v{v}")
    edge_vertex = []
    for u, v in g.edges:
        ev = b.add_vertex(2, f"e{u}-{v}")
        edge_vertex.append(ev)
        b.add_edge(u, ev)
        b.add_edge(v, ev)
    for i in range(1, params.h + 1):
        fv = b.add_vertex(1, f"f{i}")
        for ev in edge_vertex:
            b.add_edge(ev, fv)
    return b.build(
        "independence-min-closed", source_graph=g, k=k, params=params
    )
