"""Shared helpers for the test suite."""

from rainbowtrees import Forest, RainbowTree


def mutate_forest(forest, coloring, rng):
    """One random single-field corruption of a forest.

    Kinds: replace an edge pair (either recomputing the stored color so it
    stays consistent with the coloring, or keeping the old stored color),
    change one stored color, or change one root. Always produces an object
    different from the input.
    """
    trees = list(forest.trees)
    t_idx = rng.randrange(len(trees))
    tree = trees[t_idx]
    kind = rng.choice(("edge_consistent", "edge_keep_color", "color", "root"))
    n = tree.n
    edges = list(tree.edges)
    if kind == "root":
        new_root = rng.choice([x for x in range(n) if x != tree.root])
        trees[t_idx] = RainbowTree.from_edges(new_root, edges, n)
    elif kind == "color":
        e_idx = rng.randrange(len(edges))
        u, v, c = edges[e_idx]
        edges[e_idx] = (u, v, rng.choice([x for x in range(n - 1) if x != c]))
        trees[t_idx] = RainbowTree.from_edges(tree.root, edges, n)
    else:
        e_idx = rng.randrange(len(edges))
        u, v, c = edges[e_idx]
        present = {(min(a, b), max(a, b)) for a, b, _ in edges}
        choices = [
            (a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in present
        ]
        a, b = rng.choice(choices)
        stored = coloring.color_of(a, b) if kind == "edge_consistent" else c
        edges[e_idx] = (a, b, stored)
        trees[t_idx] = RainbowTree.from_edges(tree.root, edges, n)
    mutant = Forest(m=forest.m, trees=tuple(trees), coloring_digest=forest.coloring_digest)
    return mutant, kind
