"""From-scratch certificate checks for packed rainbow spanning trees.

Everything here recomputes from raw edge lists and coloring lookups. Nothing
is trusted from the construction's incremental bookkeeping (adjacency caches,
leaf sets, color indexes), so these checks referee the engine as well as
hand-edited files. Failures are results, not exceptions.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .coloring import EdgeColoring, canonical_json_bytes
from .constructor import ConstructionTrace
from .errors import SelfLoop
from .forest import Forest, RainbowTree


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass
class CheckResult:
    """Outcome of one verification aspect; empty failure list means pass."""

    passed: bool
    failures: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.passed


def _result(failures: list[str]) -> CheckResult:
    return CheckResult(passed=not failures, failures=failures)


def _component_count(n: int, pairs) -> int:
    adjacency: dict[int, list[int]] = {x: [] for x in range(n)}
    for u, v in pairs:
        adjacency[u].append(v)
        adjacency[v].append(u)
    seen = [False] * n
    comps = 0
    for start in range(n):
        if seen[start]:
            continue
        comps += 1
        seen[start] = True
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
    return comps


def _acyclic(n: int, pairs) -> bool:
    # for a simple graph: forest iff #components == n - #edges
    return _component_count(n, pairs) == n - len(pairs)


def _degrees(n: int, pairs) -> list[int]:
    deg = [0] * n
    for u, v in pairs:
        deg[u] += 1
        deg[v] += 1
    return deg


def _root_adjacent_leaves(n: int, pairs, root: int) -> set[int]:
    deg = _degrees(n, pairs)
    out = set()
    for u, v in pairs:
        if u == root and deg[v] == 1:
            out.add(v)
        elif v == root and deg[u] == 1:
            out.add(u)
    return out


def verify_rainbow_spanning_tree(coloring: EdgeColoring, tree: RainbowTree) -> CheckResult:
    """Pass iff the claimed tree has 2m-1 edges, spans all vertices, is
    connected and acyclic, repeats no color, and every stored color matches
    the coloring."""
    failures: list[str] = []
    n = coloring.n
    edges = list(tree.edges)
    if len(edges) != n - 1:
        failures.append(f"edge count {len(edges)} differs from {n - 1}")
    pairs: set[tuple[int, int]] = set()
    colors: list[int] = []
    for u, v, c in edges:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            failures.append(f"edge ({u},{v}) is not a valid vertex pair")
            continue
        p = _pair(u, v)
        if p in pairs:
            failures.append(f"edge {p} appears twice")
        pairs.add(p)
        if not 0 <= c < n - 1:
            failures.append(f"edge {p} carries out-of-range color {c}")
        elif coloring.color_of(u, v) != c:
            failures.append(
                f"edge {p} stores color {c} but the coloring says {coloring.color_of(u, v)}"
            )
        colors.append(c)
    dup_colors = sorted(c for c, k in Counter(colors).items() if k > 1)
    if dup_colors:
        failures.append(f"colors {dup_colors} are used more than once")
    comps = _component_count(n, pairs)
    if comps != 1:
        failures.append(f"graph splits into {comps} components instead of spanning")
    if comps != n - len(pairs):
        failures.append("graph contains a cycle")
    return _result(failures)


def verify_edge_disjoint(forest: Forest) -> CheckResult:
    """Pass iff no unordered vertex pair occurs in two different trees."""
    failures: list[str] = []
    counts: Counter = Counter()
    for t in forest.trees:
        for p in {(min(u, v), max(u, v)) for u, v, _ in t.edges}:
            counts[p] += 1
    for p, k in sorted(counts.items()):
        if k > 1:
            failures.append(f"edge {p} appears in {k} trees")
    return _result(failures)


def verify_structure_f(forest: Forest, psi: int, m: int) -> CheckResult:
    """Exact root degrees and root-adjacent-leaf floors after psi rounds.

    Tree 1 must have root degree (2m-1) - 2(psi-1) with at least
    (2m-1) - 4(psi-1) root-adjacent leaves; tree i (i >= 2) must have root
    degree (2m-1) - i - 2(psi-i) with at least (2m-1) - 2i - 4(psi-i).
    Degrees are equalities, leaf counts are floors clamped at zero, and the
    checks are positional in the forest's tree order.
    """
    failures: list[str] = []
    n = 2 * m
    if len(forest.trees) != psi:
        failures.append(f"forest has {len(forest.trees)} trees, expected {psi}")
        return _result(failures)
    roots = [t.root for t in forest.trees]
    if len(set(roots)) != psi:
        failures.append(f"roots {roots} are not pairwise distinct")
    for idx, tree in enumerate(forest.trees, start=1):
        pairs = [(min(u, v), max(u, v)) for u, v, _ in tree.edges]
        deg = _degrees(n, pairs)[tree.root] if all(0 <= x < n for p in pairs for x in p) else -1
        if idx == 1:
            want_deg = (n - 1) - 2 * (psi - 1)
            leaf_floor = (n - 1) - 4 * (psi - 1)
        else:
            want_deg = (n - 1) - idx - 2 * (psi - idx)
            leaf_floor = (n - 1) - 2 * idx - 4 * (psi - idx)
        if deg != want_deg:
            failures.append(f"tree {idx}: root degree {deg}, expected exactly {want_deg}")
        leaves = _root_adjacent_leaves(n, pairs, tree.root) if deg >= 0 else set()
        if len(leaves) < max(leaf_floor, 0):
            failures.append(
                f"tree {idx}: {len(leaves)} root-adjacent leaves, floor is {max(leaf_floor, 0)}"
            )
    return _result(failures)


def verify_trace_bounds(trace: ConstructionTrace, m: int) -> CheckResult:
    """Re-derive each recorded round by plain set arithmetic.

    Checks, per round k: the common leaf pool meets its floor
    2m - 3k^2 + 6k - 1 and exceeds 6k - 7 after removing the anchors; every
    candidate set is nonempty and contains the chosen vertex; no fresh edge
    of any rewired tree occurs in any other tree of the round (the disjointness
    suite P1-P11); every assembly stage is acyclic (P12, P13); and the
    recorded post-round leaf pool matches recomputation.
    """
    failures: list[str] = []
    n = 2 * m
    prev_final: list[set[tuple[int, int]]] | None = None
    prev_leaves_after: list[int] | None = None
    for rt in trace.rounds:
        k = rt.k
        tag = f"round {k}"
        if (
            len(rt.trees_before) != k - 1
            or len(rt.roots) != k - 1
            or [st.i for st in rt.steps] != list(range(1, k))
        ):
            failures.append(f"{tag}: record holds the wrong number of trees or steps")
            continue
        mentioned = [rt.r_k, rt.w_k, rt.w_k_prime, *rt.roots, *rt.leaves, *rt.leaves_after]
        for st in rt.steps:
            mentioned += [st.chosen, st.w_i, st.v_prime, st.w_prime]
        for edges in rt.trees_before:
            mentioned += [x for u, v, _ in edges for x in (u, v)]
        if any(not isinstance(x, int) or not 0 <= x < n for x in mentioned):
            failures.append(f"{tag}: record mentions a vertex outside [0, {n - 1}]")
            continue
        pool_floor = 2 * m - 3 * k * k + 6 * k - 1
        if len(rt.leaves) < pool_floor:
            failures.append(f"{tag}: leaf pool {len(rt.leaves)} below floor {pool_floor}")
        if rt.r_k not in rt.leaves or rt.w_k not in rt.leaves or rt.r_k == rt.w_k:
            failures.append(f"{tag}: anchors are not two distinct recorded leaves")
        lstar = sorted(set(rt.leaves) - {rt.r_k, rt.w_k})
        if not len(lstar) > 6 * k - 7:
            failures.append(f"{tag}: pool minus anchors has {len(lstar)} <= {6 * k - 7} vertices")
        if prev_leaves_after is not None and rt.leaves != prev_leaves_after:
            failures.append(f"{tag}: entry leaf pool differs from the previous round's exit pool")
        e_before = [{_pair(u, v) for u, v, _ in edges} for edges in rt.trees_before]
        if prev_final is not None and e_before != prev_final:
            failures.append(f"{tag}: entry trees differ from the previous round's exit trees")
        e_curr = [set(s) for s in e_before]
        partial = {_pair(rt.r_k, x) for x in range(n) if x != rt.r_k}
        ok_so_far = True
        for st in rt.steps:
            i = st.i
            step_tag = f"(k={k}, i={i})"
            if st.candidates_before != lstar:
                failures.append(f"{step_tag}: recorded pool differs from leaves minus anchors")
            eliminated = set().union(*(set(vs) for vs in st.eliminated.values()))
            allowed = set(st.candidates_before) - eliminated
            if not allowed:
                failures.append(f"{step_tag}: candidate set is empty")
                ok_so_far = False
                break
            if st.chosen not in allowed:
                failures.append(f"{step_tag}: chosen vertex {st.chosen} was eliminated")
            if st.bound_lhs != len(lstar) or st.bound_rhs != 6 * k - 7:
                failures.append(f"{step_tag}: recorded bounds are inconsistent")
            ri = rt.roots[i - 1]
            removed = {_pair(ri, rt.r_k), _pair(ri, st.chosen)}
            fresh = {_pair(rt.r_k, st.w_i), _pair(st.chosen, st.v_prime)}
            if not removed <= e_curr[i - 1]:
                failures.append(f"{step_tag}: a detached edge was not present in tree {i}")
                ok_so_far = False
                break
            e_old = e_curr[i - 1] - removed
            for a in range(i - 1):  # trees already rewired this round
                if fresh & e_curr[a]:
                    failures.append(f"{step_tag}: fresh edge reappears in rewired tree {a + 1}")
                if e_old & e_curr[a]:
                    failures.append(f"{step_tag}: retained edges collide with rewired tree {a + 1}")
            for b0 in range(i, k - 1):  # trees still awaiting their rewiring
                if fresh & e_before[b0]:
                    failures.append(f"{step_tag}: fresh edge already sits in tree {b0 + 1}")
                if e_old & e_before[b0]:
                    failures.append(f"{step_tag}: retained edges collide with tree {b0 + 1}")
            e_curr[i - 1] = e_old | fresh
            if len(e_curr[i - 1]) != n - 1:
                failures.append(f"{step_tag}: rewired tree {i} does not keep {n - 1} edges")
            star_edge = _pair(rt.r_k, st.w_i)
            if star_edge not in partial:
                failures.append(f"{step_tag}: assembly detached a missing star edge")
                ok_so_far = False
                break
            partial = (partial - {star_edge}) | {_pair(st.w_i, st.w_prime)}
            if len(partial) != n - 1:
                failures.append(f"{step_tag}: assembly stage does not keep {n - 1} edges")
            for a in range(i):
                if partial & e_curr[a]:
                    failures.append(
                        f"{step_tag}: assembly stage shares an edge with rewired tree {a + 1}"
                    )
            for b0 in range(i, k - 1):
                shared = partial & e_before[b0]
                if shared != {_pair(rt.r_k, rt.roots[b0])}:
                    failures.append(
                        f"{step_tag}: assembly stage shares {sorted(shared)} with tree {b0 + 1},"
                        f" expected only the root-to-root edge"
                    )
            if not _acyclic(n, partial):
                failures.append(f"{step_tag}: assembly stage contains a cycle")
        if not ok_so_far:
            prev_final = None
            prev_leaves_after = None
            continue
        final_tag = f"round {k} finish"
        anchor_edge = _pair(rt.r_k, rt.w_k)
        if anchor_edge not in partial:
            failures.append(f"{final_tag}: edge to w_k was already gone from the assembly")
            prev_final = None
            prev_leaves_after = None
            continue
        closing = _pair(rt.w_k, rt.w_k_prime)
        tkk = (partial - {anchor_edge}) | {closing}
        if len(tkk) != n - 1:
            failures.append(f"{final_tag}: new tree does not keep {n - 1} edges")
        for a in range(k - 1):
            if closing in e_curr[a]:
                failures.append(f"{final_tag}: closing edge sits in tree {a + 1}")
            if tkk & e_curr[a]:
                failures.append(f"{final_tag}: new tree shares an edge with tree {a + 1}")
        if not _acyclic(n, tkk):
            failures.append(f"{final_tag}: new tree contains a cycle")
        pool = None
        for pairs, root in zip(e_curr + [tkk], list(rt.roots) + [rt.r_k]):
            leaves = _root_adjacent_leaves(n, pairs, root)
            pool = leaves if pool is None else pool & leaves
        if sorted(pool) != rt.leaves_after:
            failures.append(f"{final_tag}: recorded exit leaf pool differs from recomputation")
        prev_final = e_curr + [tkk]
        prev_leaves_after = rt.leaves_after
    return _result(failures)


def _verify_trace_definitions(coloring: EdgeColoring, trace: ConstructionTrace) -> list[str]:
    """Confirm the recorded exchange vertices satisfy their defining color
    equations under this coloring."""
    failures: list[str] = []
    if trace.m != coloring.m:
        failures.append(f"trace is for m={trace.m}, coloring has m={coloring.m}")
        return failures
    for rt in trace.rounds:
        k = rt.k
        if len(rt.roots) != k - 1 or [st.i for st in rt.steps] != list(range(1, k)):
            continue  # already reported by the structural pass
        ws: list[int] = []
        try:
            for st in rt.steps:
                i = st.i
                tag = f"(k={k}, i={i})"
                ri = rt.roots[i - 1]
                if coloring.partner(coloring.color_of(ri, st.chosen), rt.r_k) != st.w_i:
                    failures.append(
                        f"{tag}: w_i does not satisfy color(r_k, w_i) = color(r_i, v_i)"
                    )
                if coloring.partner(coloring.color_of(ri, rt.r_k), st.chosen) != st.v_prime:
                    failures.append(
                        f"{tag}: v'_i does not satisfy color(v_i, v'_i) = color(r_i, r_k)"
                    )
                handoff = (
                    coloring.color_of(rt.r_k, rt.w_k)
                    if i == 1
                    else coloring.color_of(rt.r_k, ws[-1])
                )
                if coloring.partner(handoff, st.w_i) != st.w_prime:
                    failures.append(f"{tag}: w'_i does not carry the handed-off color")
                ws.append(st.w_i)
            if ws:
                handoff = coloring.color_of(rt.r_k, ws[-1])
                if coloring.partner(handoff, rt.w_k) != rt.w_k_prime:
                    failures.append(f"round {k}: w'_k does not carry the final handed-off color")
        except (SelfLoop, IndexError):
            failures.append(f"round {k}: recorded vertices do not form valid edge lookups")
    return failures


@dataclass
class VerificationReport:
    """Aggregated verdict over every check the package knows how to make."""

    m: int
    tree_count: int
    tree_checks: list[CheckResult]
    disjointness: CheckResult
    structure: CheckResult
    trace_bounds: CheckResult | None
    digest_match: bool | None
    shared_edges: list[list[int]]

    @property
    def verdict(self) -> bool:
        if not all(c.passed for c in self.tree_checks):
            return False
        if not self.disjointness.passed or not self.structure.passed:
            return False
        if self.trace_bounds is not None and not self.trace_bounds.passed:
            return False
        if self.digest_match is False:
            return False
        return True

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "tree_count": self.tree_count,
            "trees": [
                {"passed": c.passed, "failures": c.failures} for c in self.tree_checks
            ],
            "disjointness": {
                "passed": self.disjointness.passed,
                "failures": self.disjointness.failures,
            },
            "structure": {
                "passed": self.structure.passed,
                "failures": self.structure.failures,
            },
            "trace_bounds": None
            if self.trace_bounds is None
            else {
                "passed": self.trace_bounds.passed,
                "failures": self.trace_bounds.failures,
            },
            "digest_match": self.digest_match,
            "shared_edges": self.shared_edges,
            "verdict": "pass" if self.verdict else "fail",
        }

    def to_json(self) -> bytes:
        return canonical_json_bytes(self.as_dict())


def verify_all(
    coloring: EdgeColoring,
    forest: Forest,
    trace: ConstructionTrace | None = None,
) -> VerificationReport:
    """Run every check against a coloring, a claimed forest, and optionally a
    construction trace; the verdict passes only if every part passes."""
    tree_checks = [verify_rainbow_spanning_tree(coloring, t) for t in forest.trees]
    disjoint = verify_edge_disjoint(forest)
    structure = verify_structure_f(forest, len(forest.trees), forest.m)
    trace_check: CheckResult | None = None
    if trace is not None:
        trace_check = verify_trace_bounds(trace, forest.m)
        extra = _verify_trace_definitions(coloring, trace)
        if extra:
            trace_check = CheckResult(False, trace_check.failures + extra)
    digest_match: bool | None = None
    if forest.coloring_digest is not None:
        digest_match = forest.coloring_digest == coloring.digest()
    tree_pairs = [{(min(u, v), max(u, v)) for u, v, _ in t.edges} for t in forest.trees]
    shared = [
        [len(a & b) if i != j else len(a) for j, b in enumerate(tree_pairs)]
        for i, a in enumerate(tree_pairs)
    ]
    return VerificationReport(
        m=forest.m,
        tree_count=len(forest.trees),
        tree_checks=tree_checks,
        disjointness=disjoint,
        structure=structure,
        trace_bounds=trace_check,
        digest_match=digest_match,
        shared_edges=shared,
    )
