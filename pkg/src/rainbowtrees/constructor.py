"""Round-by-round construction of edge-disjoint rainbow spanning trees.

Given any proper (2m-1)-edge-coloring of K_{2m} the engine produces
omega(m) = floor(sqrt(6m+9)/3) pairwise edge-disjoint rainbow spanning
trees. Round k turns k-1 trees into k:

  * two fresh anchors r_k and w_k are taken from the common leaf pool, the
    vertices that are root-adjacent leaves in every current tree;
  * every existing tree i is rewired by one leaf exchange around its root,
    detaching r_k and a chosen vertex v_i and attaching the two edges that
    reuse the freed colors (r_k picks up w_i, v_i picks up v'_i);
  * the k-th tree grows alongside, starting from the spanning star at r_k
    and trading star edge (r_k, w_i) for (w_i, w'_i) at each step, where the
    replacement edge carries the color released one step earlier. The final
    exchange detaches w_k and closes that cycle of color hand-offs, which is
    what makes the finished tree rainbow.

The vertex v_i must clear the filter rules R1-R11 implemented in
:func:`admissible_candidates`. The filter can knock out at most 6k-7 pool
vertices, while leaf-count arithmetic keeps the pool larger than that for
every k <= omega(m), so a candidate always survives. Violations of any of
these guarantees raise InternalInvariantError subclasses: they can only mean
an implementation bug, never bad input, and are never absorbed.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field

from .coloring import EdgeColoring
from .errors import (
    ColorClash,
    CycleDetected,
    EmptyCandidateSet,
    FValidationFailed,
    InternalInvariantError,
    LeafSetExhausted,
    SchemaError,
    SwapError,
)
from .forest import Forest, RainbowTree, apply_swap, base_star, spans, tree_edge_of_color


def omega(m: int) -> int:
    """floor(sqrt(6m+9)/3) via integer square root: the guaranteed tree count.

    Integer arithmetic matters because 6m+9 is a perfect square exactly at
    the threshold values of m where the count steps up.
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    return math.isqrt(6 * m + 9) // 3


@dataclass(frozen=True)
class SelectionPolicy:
    """How the engine breaks ties among allowed choices.

    "min" and "max" take the smallest or largest admissible index; "random"
    draws from a generator seeded once per run. Every structural guarantee
    holds under any policy; policies exist to diversify artifacts while
    keeping runs reproducible.
    """

    kind: str = "min"
    seed: int | None = None

    def start(self) -> "_Chooser":
        if self.kind not in ("min", "max", "random"):
            raise ValueError(f"unknown selection policy {self.kind!r}")
        return _Chooser(self)


MIN_INDEX = SelectionPolicy("min")
MAX_INDEX = SelectionPolicy("max")


def random_policy(seed: int) -> SelectionPolicy:
    return SelectionPolicy("random", seed)


class _Chooser:
    """Per-run choice maker; holds the seeded generator for random policies."""

    def __init__(self, policy: SelectionPolicy):
        self.kind = policy.kind
        self._rng = random.Random(policy.seed) if policy.kind == "random" else None

    def root(self, n: int) -> int:
        if self.kind == "min":
            return 0
        if self.kind == "max":
            return n - 1
        return self._rng.randrange(n)

    def anchors(self, leaves: list[int]) -> tuple[int, int]:
        # leaves arrives sorted ascending
        if self.kind == "min":
            return leaves[0], leaves[1]
        if self.kind == "max":
            return leaves[-1], leaves[-2]
        pick = self._rng.sample(leaves, 2)
        return pick[0], pick[1]

    def candidate(self, cands: list[int]) -> int:
        if self.kind == "min":
            return cands[0]
        if self.kind == "max":
            return cands[-1]
        return self._rng.choice(cands)


@dataclass
class RoundRecord:
    """Vertices fixed during one round: anchors plus per-tree exchange data.

    For tree i the exchange detaches r_k and v_i and attaches (r_k, w_i) and
    (v_i, v'_i), where color(r_k, w_i) = color(r_i, v_i) and
    color(v_i, v'_i) = color(r_i, r_k). The star assembly records w'_i with
    color(w_i, w'_i) = color(r_k, w_k) for i = 1 and color(r_k, w_{i-1})
    afterwards, and finally w'_k with color(w_k, w'_k) = color(r_k, w_{k-1}).
    """

    k: int
    r_k: int
    w_k: int
    vs: list[int] = field(default_factory=list)
    ws: list[int] = field(default_factory=list)
    v_primes: list[int] = field(default_factory=list)
    w_primes: list[int] = field(default_factory=list)
    w_k_prime: int = -1


@dataclass
class StepTrace:
    """Filter diagnostics for the choice of v_i in round k."""

    k: int
    i: int
    candidates_before: list[int]
    eliminated: dict[str, list[int]]
    chosen: int
    bound_lhs: int
    bound_rhs: int
    w_i: int
    v_prime: int
    w_prime: int


@dataclass
class RoundTrace:
    """Everything needed to re-derive one round independently."""

    k: int
    roots: list[int]
    r_k: int
    w_k: int
    leaves: list[int]
    trees_before: list[list[tuple[int, int, int]]]
    steps: list[StepTrace] = field(default_factory=list)
    w_k_prime: int = -1
    leaves_after: list[int] = field(default_factory=list)


@dataclass
class ConstructionTrace:
    m: int
    rounds: list[RoundTrace] = field(default_factory=list)


class _PartialTree:
    """The k-th tree while it is being assembled from the star at r_k.

    Intermediate stages are spanning and acyclic but deliberately not
    rainbow: the color of edge (r_k, w_k) stays duplicated until the final
    exchange resolves the chain of color hand-offs.
    """

    __slots__ = ("root", "n", "adj", "edge_colors", "root_leaves")

    def __init__(self, star: RainbowTree):
        self.root = star.root
        self.n = star.n
        self.adj = {x: set(nbrs) for x, nbrs in star.adjacency.items()}
        self.edge_colors = {(u, v): c for u, v, c in star.edges}
        self.root_leaves = set(star.root_leaves)

    def swap_star_edge(self, leaf: int, new_neighbor: int, color: int) -> None:
        """Replace pendant edge (root, leaf) by (leaf, new_neighbor).

        The detached vertex is momentarily isolated, so the replacement edge
        cannot close a cycle; connectivity is still re-checked afterwards.
        """
        if leaf not in self.root_leaves:
            raise CycleDetected(
                f"vertex {leaf} is not a pendant neighbor of the new root {self.root}"
            )
        key = (leaf, new_neighbor) if leaf < new_neighbor else (new_neighbor, leaf)
        if key in self.edge_colors:
            raise CycleDetected(f"replacement edge {key} already present in the assembly")
        old = (self.root, leaf) if self.root < leaf else (leaf, self.root)
        del self.edge_colors[old]
        self.adj[self.root].discard(leaf)
        self.adj[leaf].discard(self.root)
        self.edge_colors[key] = color
        self.adj[leaf].add(new_neighbor)
        self.adj[new_neighbor].add(leaf)
        self.root_leaves.discard(leaf)
        self.root_leaves.discard(new_neighbor)
        seen = {self.root}
        stack = [self.root]
        while stack:
            x = stack.pop()
            for y in self.adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != self.n:
            raise CycleDetected("assembly stage is no longer spanning-connected")

    def to_tree(self, coloring: EdgeColoring) -> RainbowTree:
        edges = [(u, v, c) for (u, v), c in self.edge_colors.items()]
        return RainbowTree.from_edges(self.root, edges, self.n, coloring)


class ConstructionState:
    """Mutable working state of one construction run; confined to that run."""

    __slots__ = (
        "coloring",
        "k",
        "trees",
        "roots",
        "common_leaves",
        "partial",
        "record",
        "trace",
        "chooser",
        "lstar",
        "_pending_filter",
    )

    def __init__(self, coloring, trees, roots, common_leaves, chooser, trace):
        self.coloring = coloring
        self.trees = trees
        self.roots = roots
        self.common_leaves = set(common_leaves)
        self.k = len(trees) + 1
        self.chooser = chooser
        self.trace = trace
        self.partial = None
        self.record = None
        self.lstar: frozenset[int] = frozenset()
        self._pending_filter = None


def start_construction(
    coloring: EdgeColoring,
    policy: SelectionPolicy = MIN_INDEX,
    trace_on: bool = True,
) -> ConstructionState:
    """Base step: one spanning star rooted per policy; state is ready for round 2."""
    chooser = policy.start()
    r1 = chooser.root(coloring.n)
    star = base_star(coloring, r1)
    trace = ConstructionTrace(m=coloring.m) if trace_on else None
    return ConstructionState(coloring, [star], [r1], star.root_leaves, chooser, trace)


def select_anchors(state: ConstructionState) -> tuple[int, int]:
    """Pick the two distinct round anchors r_k, w_k from the common leaf pool."""
    if len(state.common_leaves) < 2:
        raise LeafSetExhausted(
            f"round {state.k} needs two common leaves, found {len(state.common_leaves)}"
        )
    return state.chooser.anchors(sorted(state.common_leaves))


def begin_round(state: ConstructionState) -> None:
    k, m = state.k, state.coloring.m
    # the structural floors of the previous round guarantee this much pool
    pool_floor = 2 * m - 3 * k * k + 6 * k - 1
    if len(state.common_leaves) < pool_floor:
        raise InternalInvariantError(
            f"round {k}: common leaf pool has {len(state.common_leaves)} vertices,"
            f" below the floor {pool_floor}"
        )
    r_k, w_k = select_anchors(state)
    state.record = RoundRecord(k=k, r_k=r_k, w_k=w_k)
    state.lstar = frozenset(state.common_leaves - {r_k, w_k})
    state.partial = _PartialTree(base_star(state.coloring, r_k))
    if state.trace is not None:
        state.trace.rounds.append(
            RoundTrace(
                k=k,
                roots=list(state.roots),
                r_k=r_k,
                w_k=w_k,
                leaves=sorted(state.common_leaves),
                trees_before=[list(t.edges) for t in state.trees],
            )
        )


_RULES = tuple(f"R{j}" for j in range(2, 12))


def admissible_candidates(state: ConstructionState, i: int) -> set[int]:
    """All pool vertices that may serve as v_i for tree i, per rules R1-R11.

    R1 is membership in the pool itself (the common leaves minus the two
    anchors). Every other rule forbids specific colors on one of v's edges,
    so each knocks out at most one pool vertex per forbidden color; the
    partner table turns each forbidden color directly into the vertex it
    eliminates. Trees 1..i-1 have already been rewired this round, trees
    i..k-1 have not, which is exactly the mix the lookups in R8/R9 need.
    Per-rule eliminations are kept for the trace.
    """
    col, k, rec = state.coloring, state.k, state.record
    if rec is None:
        raise ValueError("no round in progress")
    if not 1 <= i <= k - 1:
        raise ValueError(f"tree index {i} out of range for round {k}")
    rk, wk = rec.r_k, rec.w_k
    roots = state.roots
    ri = roots[i - 1]
    lstar = state.lstar
    elim: dict[str, set[int]] = {rule: set() for rule in _RULES}
    c_anchor = col.color_of(ri, rk)  # color freed at the root by detaching r_k

    def forbid_at(rule: str, color: int, apex: int) -> None:
        # the single pool vertex whose edge to `apex` carries `color`
        u = col.partner(color, apex)
        if u in lstar:
            elim[rule].add(u)

    for c in range(1, k):  # R2: v's edge to another root must not reuse color(r_i, r_k)
        if c != i:
            forbid_at("R2", c_anchor, roots[c - 1])
    for a in range(1, i):  # R3: color(v, r_i) must avoid every earlier color(r_a, v_a)
        forbid_at("R3", col.color_of(roots[a - 1], rec.vs[a - 1]), ri)
    for b in range(i + 1, k):  # R4: ... and color(r_k, r_b) of trees not yet rewired
        forbid_at("R4", col.color_of(rk, roots[b - 1]), ri)
    forbid_at("R5", col.color_of(rk, wk), ri)  # R5: ... and color(r_k, w_k)
    for a in range(1, i):  # R6: ... and color(r_k, w'_a)
        forbid_at("R6", col.color_of(rk, rec.w_primes[a - 1]), ri)
    if i >= 2:
        # R7: ... and color(r_k, alpha) for the alpha matching w_k through the
        # color the assembly is about to hand off
        alpha = col.partner(col.color_of(rk, rec.ws[i - 2]), wk)
        if alpha != rk:
            forbid_at("R7", col.color_of(rk, alpha), ri)
    if i == 1:
        # R8: both endpoints of the edge colored like (r_k, w_k) in every tree
        target = col.color_of(rk, wk)
        for t in state.trees:
            u, v, _ = tree_edge_of_color(t, target)
            for alpha in (u, v):
                if alpha != rk:
                    forbid_at("R8", col.color_of(rk, alpha), ri)
    else:
        # R9: both endpoints of the edge colored like (r_k, w_{i-1}) in every
        # tree, rewired or not
        target = col.color_of(rk, rec.ws[i - 2])
        for t in state.trees:
            u, v, _ = tree_edge_of_color(t, target)
            for alpha in (u, v):
                if alpha != rk:
                    forbid_at("R9", col.color_of(rk, alpha), ri)
    forbid_at("R10", c_anchor, wk)  # R10: v's edge to w_k must not reuse color(r_i, r_k)
    if i == k - 1:
        for d in range(1, k - 1):  # R11: last rewiring only: color(v, r_i) vs color(w_k, r_d)
            forbid_at("R11", col.color_of(wk, roots[d - 1]), ri)

    knocked_out = set().union(*elim.values())
    if i == k - 1 and len(knocked_out) > 6 * k - 7:
        raise InternalInvariantError(
            f"round {k} step {i}: {len(knocked_out)} eliminations exceed the cap {6 * k - 7}"
        )
    state._pending_filter = (
        i,
        sorted(lstar),
        {rule: sorted(vs) for rule, vs in elim.items()},
    )
    allowed = set(lstar) - knocked_out
    if not allowed:
        raise EmptyCandidateSet(f"round {k} step {i}: the filter left no candidate")
    return allowed


def revise_tree(state: ConstructionState, i: int, v_i: int) -> RainbowTree:
    """Rewire tree i around its root, then trade the matching star edge of
    the tree under assembly."""
    col, rec = state.coloring, state.record
    rk = rec.r_k
    ri = state.roots[i - 1]
    w_i = col.partner(col.color_of(ri, v_i), rk)
    v_prime = col.partner(col.color_of(ri, rk), v_i)
    new_tree = apply_swap(state.trees[i - 1], ri, rk, v_i, w_i, v_prime)
    state.trees[i - 1] = new_tree
    rec.vs.append(v_i)
    rec.ws.append(w_i)
    rec.v_primes.append(v_prime)
    extend_kth_partial(state, i)
    return new_tree


def extend_kth_partial(state: ConstructionState, i: int) -> _PartialTree:
    """Swap star edge (r_k, w_i) for (w_i, w'_i) in the assembly.

    The replacement edge carries color(r_k, w_k) at the first step and the
    color released by the previous step afterwards; the temporary color
    imbalance resolves at finalize.
    """
    col, rec = state.coloring, state.record
    rk, wk = rec.r_k, rec.w_k
    w_i = rec.ws[i - 1]
    handoff = col.color_of(rk, wk) if i == 1 else col.color_of(rk, rec.ws[i - 2])
    w_prime = col.partner(handoff, w_i)
    rec.w_primes.append(w_prime)
    state.partial.swap_star_edge(w_i, w_prime, handoff)
    return state.partial


def finalize_kth(state: ConstructionState) -> RainbowTree:
    """Detach w_k from the assembly and close the chain with edge (w_k, w'_k).

    The result must be a rainbow spanning tree whose root degree is exactly
    (2m-1) - k with at least (2m-1) - 2k root-adjacent leaves.
    """
    col, rec, k = state.coloring, state.record, state.k
    rk, wk = rec.r_k, rec.w_k
    handoff = col.color_of(rk, rec.ws[-1])
    w_prime = col.partner(handoff, wk)
    rec.w_k_prime = w_prime
    state.partial.swap_star_edge(wk, w_prime, handoff)
    tree = state.partial.to_tree(col)
    n = col.n
    if len(tree.edges) != n - 1:
        raise CycleDetected(f"assembled tree has {len(tree.edges)} edges, expected {n - 1}")
    colors = [c for _, _, c in tree.edges]
    if len(set(colors)) != len(colors):
        raise ColorClash("assembled tree repeats a color")
    if not spans(tree):
        raise CycleDetected("assembled tree is not spanning-connected")
    deg = tree.degree(rk)
    if deg != (n - 1) - k:
        raise InternalInvariantError(
            f"new root degree {deg} differs from the guaranteed {(n - 1) - k}"
        )
    if len(tree.root_leaves) < (n - 1) - 2 * k:
        raise InternalInvariantError(
            f"new root has {len(tree.root_leaves)} adjacent leaves,"
            f" below the floor {(n - 1) - 2 * k}"
        )
    state.trees.append(tree)
    state.roots.append(rk)
    return tree


def _check_structure(state: ConstructionState) -> None:
    """Exact root degrees and leaf floors that every round must restore."""
    n = state.coloring.n
    psi = len(state.trees)
    if len(set(state.roots)) != psi:
        raise FValidationFailed("roots are not pairwise distinct")
    for idx, tree in enumerate(state.trees, start=1):
        if idx == 1:
            want_deg = (n - 1) - 2 * (psi - 1)
            leaf_floor = (n - 1) - 4 * (psi - 1)
        else:
            want_deg = (n - 1) - idx - 2 * (psi - idx)
            leaf_floor = (n - 1) - 2 * idx - 4 * (psi - idx)
        deg = tree.degree(tree.root)
        if deg != want_deg:
            raise FValidationFailed(f"tree {idx}: root degree {deg}, expected {want_deg}")
        if len(tree.root_leaves) < max(leaf_floor, 0):
            raise FValidationFailed(
                f"tree {idx}: {len(tree.root_leaves)} root-adjacent leaves,"
                f" below the floor {max(leaf_floor, 0)}"
            )


def _close_round(state: ConstructionState) -> None:
    rec, k = state.record, state.k
    # every vertex that lost common-leaf status this round, by construction:
    # the anchors, each detached v_i, and each endpoint of a fresh edge
    dropped = {rec.r_k, rec.w_k, rec.w_k_prime}
    dropped.update(rec.vs)
    dropped.update(rec.ws)
    dropped.update(rec.v_primes)
    dropped.update(rec.w_primes)
    incremental = state.common_leaves - dropped
    scratch = set(state.trees[0].root_leaves)
    for t in state.trees[1:]:
        scratch &= t.root_leaves
    if incremental != scratch:
        raise InternalInvariantError(
            f"round {k}: incremental common-leaf update diverged from recomputation"
        )
    state.common_leaves = scratch
    _check_structure(state)
    if state.trace is not None:
        rt = state.trace.rounds[-1]
        rt.w_k_prime = rec.w_k_prime
        rt.leaves_after = sorted(scratch)
    state.record = None
    state.partial = None
    state.lstar = frozenset()
    state._pending_filter = None


def step(state: ConstructionState) -> ConstructionState:
    """Run one full round: k-1 leaf exchanges plus assembly of the k-th tree."""
    k = state.k
    begin_round(state)
    rec = state.record
    for i in range(1, k):
        cands = admissible_candidates(state, i)
        v_i = state.chooser.candidate(sorted(cands))
        revise_tree(state, i, v_i)
        if state.trace is not None:
            _, before, elim = state._pending_filter
            state.trace.rounds[-1].steps.append(
                StepTrace(
                    k=k,
                    i=i,
                    candidates_before=before,
                    eliminated=elim,
                    chosen=v_i,
                    bound_lhs=len(before),
                    bound_rhs=6 * k - 7,
                    w_i=rec.ws[-1],
                    v_prime=rec.v_primes[-1],
                    w_prime=rec.w_primes[-1],
                )
            )
    finalize_kth(state)
    _close_round(state)
    state.k += 1
    return state


def build_forest(
    coloring: EdgeColoring,
    policy: SelectionPolicy = MIN_INDEX,
    trace_on: bool = True,
) -> tuple[Forest, ConstructionTrace | None]:
    """Construct exactly omega(m) pairwise edge-disjoint rainbow spanning trees.

    For m <= 4 the single spanning star already meets the target. The engine
    never attempts rounds beyond omega(m) even when candidates remain; the
    guarantees only cover k <= omega(m). Returns (forest, trace); the trace
    is None when trace_on is false. Guarantee violations surface as
    InternalInvariantError or SwapError with the partial trace attached.
    """
    state = start_construction(coloring, policy, trace_on)
    target = omega(coloring.m)
    try:
        while len(state.trees) < target:
            step(state)
    except (SwapError, InternalInvariantError) as exc:
        exc.trace = state.trace
        raise
    forest = Forest(
        m=coloring.m, trees=tuple(state.trees), coloring_digest=coloring.digest()
    )
    return forest, state.trace


def trace_to_jsonl(trace: ConstructionTrace) -> bytes:
    """One JSON record per (k, i); the i = 1 record of each round also carries
    the round context needed to re-derive everything."""
    lines = []
    for rt in trace.rounds:
        for st in rt.steps:
            rec = {
                "k": st.k,
                "i": st.i,
                "candidates_before": st.candidates_before,
                "eliminated": st.eliminated,
                "chosen": st.chosen,
                "bound_lhs": st.bound_lhs,
                "bound_rhs": st.bound_rhs,
                "w_i": st.w_i,
                "v_prime": st.v_prime,
                "w_prime": st.w_prime,
            }
            if st.i == 1:
                rec["round"] = {
                    "roots": rt.roots,
                    "r_k": rt.r_k,
                    "w_k": rt.w_k,
                    "leaves": rt.leaves,
                    "leaves_after": rt.leaves_after,
                    "w_k_prime": rt.w_k_prime,
                    "trees_before": [
                        [list(e) for e in edges] for edges in rt.trees_before
                    ],
                }
            lines.append(json.dumps(rec, sort_keys=True, separators=(",", ":")))
    return ("\n".join(lines) + ("\n" if lines else "")).encode("utf-8")


def trace_from_jsonl(data, m: int | None = None) -> ConstructionTrace:
    """Rebuild a ConstructionTrace from its JSONL form.

    An empty file is a legal trace for runs with a single tree; m must then
    be supplied by the caller.
    """
    if isinstance(data, (bytes, bytearray)):
        data = data.decode("utf-8")
    rounds: list[RoundTrace] = []
    for line_no, line in enumerate(data.splitlines(), start=1):
        if not line.strip():
            continue
        rec = json.loads(line)
        if not isinstance(rec, dict):
            raise SchemaError(f"trace line {line_no} is not an object")
        required = (
            "k",
            "i",
            "candidates_before",
            "eliminated",
            "chosen",
            "bound_lhs",
            "bound_rhs",
            "w_i",
            "v_prime",
            "w_prime",
        )
        for key in required:
            if key not in rec:
                raise SchemaError(f"trace line {line_no} is missing {key!r}")
        if rec["i"] == 1:
            ctx = rec.get("round")
            if not isinstance(ctx, dict):
                raise SchemaError(f"trace line {line_no} lacks the round context object")
            trees_before = []
            for edges in ctx["trees_before"]:
                triples = []
                for e in edges:
                    if not isinstance(e, list) or len(e) != 3:
                        raise SchemaError(
                            f"trace line {line_no}: tree snapshot edge {e!r} is not a triple"
                        )
                    triples.append(tuple(e))
                trees_before.append(triples)
            rounds.append(
                RoundTrace(
                    k=rec["k"],
                    roots=list(ctx["roots"]),
                    r_k=ctx["r_k"],
                    w_k=ctx["w_k"],
                    leaves=list(ctx["leaves"]),
                    trees_before=trees_before,
                    w_k_prime=ctx["w_k_prime"],
                    leaves_after=list(ctx["leaves_after"]),
                )
            )
        if not rounds or rounds[-1].k != rec["k"]:
            raise SchemaError(f"trace line {line_no} does not follow its round header")
        rounds[-1].steps.append(
            StepTrace(
                k=rec["k"],
                i=rec["i"],
                candidates_before=list(rec["candidates_before"]),
                eliminated={r: list(v) for r, v in rec["eliminated"].items()},
                chosen=rec["chosen"],
                bound_lhs=rec["bound_lhs"],
                bound_rhs=rec["bound_rhs"],
                w_i=rec["w_i"],
                v_prime=rec["v_prime"],
                w_prime=rec["w_prime"],
            )
        )
    if rounds:
        inferred = (len(rounds[0].trees_before[0]) + 1) // 2
        if m is not None and m != inferred:
            raise SchemaError(f"trace is for m={inferred}, expected m={m}")
        m = inferred
    elif m is None:
        raise SchemaError("empty trace needs an explicit m")
    return ConstructionTrace(m=m, rounds=rounds)
