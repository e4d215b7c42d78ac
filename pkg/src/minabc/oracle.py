"""Independent ground truth: exhaustive search over small trees.

Free trees are enumerated one isomorphism class at a time by running
the canonical-level-sequence successor over rooted trees and keeping
exactly the sequences that are the canonical form of their own tree
when re-rooted at a centroid.  Correctness is gated on the known count
sequence 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, ... rather than on trusting
the generator.

``family_exhaustive`` is the other half of the oracle: the family
minimizer with every degree-threshold pruning disabled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .solver import SolveResult, solve
from .trees import Tree, abc_index, abc_index_hp, tree_from_edges

MAX_BRUTE_ORDER = 20  # class counts explode beyond this

# classes of free trees on 1..14 vertices
KNOWN_FREE_TREE_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159)


class OrderCapExceeded(ValueError):
    pass


def _rooted_level_sequences(n: int):
    """All canonical rooted level sequences on n vertices, path first.

    Level sequences are depth-first vertex depths (root depth 1) with
    children ordered so the sequence is lexicographically maximal.  The
    successor trims the rightmost vertex deeper than 2 and tiles the
    rest of the sequence with the block between that vertex's parent
    and itself.
    """
    levels = list(range(1, n + 1))
    yield levels
    if n < 3:
        return
    while True:
        p = -1
        for i in range(n - 1, -1, -1):
            if levels[i] > 2:
                p = i
                break
        if p < 0:
            return
        q = p - 1
        while levels[q] != levels[p] - 1:
            q -= 1
        nxt = levels[:p]
        block = levels[q:p]
        while len(nxt) < n:
            nxt.extend(block[: n - len(nxt)])
        levels = nxt
        yield levels


def _levels_to_adjacency(levels: list[int]) -> list[list[int]]:
    n = len(levels)
    adj: list[list[int]] = [[] for _ in range(n)]
    stack = [0]
    for v in range(1, n):
        depth = levels[v]
        while len(stack) >= depth:
            stack.pop()
        parent = stack[-1]
        adj[parent].append(v)
        adj[v].append(parent)
        stack.append(v)
    return adj


def _centroids(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    if n == 1:
        return [0]
    size = [1] * n
    order = []
    parent = [-1] * n
    stack = [0]
    seen = [False] * n
    seen[0] = True
    while stack:
        u = stack.pop()
        order.append(u)
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                stack.append(v)
    for u in reversed(order):
        if parent[u] >= 0:
            size[parent[u]] += size[u]
    best, cands = n + 1, []
    for u in range(n):
        heaviest = n - size[u]
        for v in adj[u]:
            if v != parent[u]:
                heaviest = max(heaviest, size[v])
        if heaviest < best:
            best, cands = heaviest, [u]
        elif heaviest == best:
            cands.append(u)
    return cands


def _canonical_levels(adj: list[list[int]], root: int) -> list[int]:
    """Level sequence of the canonical (lexicographically maximal) rooting."""

    def sub(v: int, par: int, depth: int) -> list[int]:
        branches = sorted(
            (sub(u, v, depth + 1) for u in adj[v] if u != par),
            reverse=True,
        )
        out = [depth]
        for b in branches:
            out.extend(b)
        return out

    return sub(root, -1, 1)


def enumerate_trees(n: int):
    """Yield one representative Tree per isomorphism class of free trees."""
    if not (1 <= n <= MAX_BRUTE_ORDER):
        raise OrderCapExceeded(f"free-tree enumeration capped at {MAX_BRUTE_ORDER}, got {n}")
    if n == 1:
        yield Tree(1, ((),), 0)
        return
    for levels in _rooted_level_sequences(n):
        adj = _levels_to_adjacency(levels)
        canonical = max(_canonical_levels(adj, c) for c in _centroids(adj))
        if canonical == levels:
            yield Tree(n, tuple(tuple(sorted(a)) for a in adj), 0)


def free_tree_count(n: int) -> int:
    return sum(1 for _ in enumerate_trees(n))


@dataclass
class BruteResult:
    n: int
    trees: list[Tree]  # all argmins, in enumeration order
    abc_value: float
    searched: int = 0

    @property
    def tree(self) -> Tree:
        return self.trees[0]


def brute_min_abc(n: int) -> BruteResult:
    """Minimum-ABC tree of order n by exhaustive isomorphism-class search.

    Argmins within 1e-12 relative of the minimum are re-compared with
    40-digit arithmetic; every surviving argmin is reported.
    """
    if not (4 <= n <= MAX_BRUTE_ORDER):
        raise OrderCapExceeded(f"brute force supports 4 <= n <= {MAX_BRUTE_ORDER}, got {n}")
    best = math.inf
    close: list[tuple[float, Tree]] = []
    searched = 0
    for t in enumerate_trees(n):
        searched += 1
        v = abc_index(t)
        if v < best:
            best = v
        if v <= best * (1.0 + 5e-12):
            close.append((v, t))
    close = [(v, t) for v, t in close if v <= best * (1.0 + 1e-12)]
    if len(close) > 1:
        hp = [(abc_index_hp(t), t) for _, t in close]
        hp_min = min(h for h, _ in hp)
        tol = hp_min * type(hp_min)("1e-25")
        argmins = [t for h, t in hp if abs(h - hp_min) <= abs(tol)]
    else:
        argmins = [t for _, t in close]
    return BruteResult(n=n, trees=argmins, abc_value=best, searched=searched)


def family_exhaustive(n: int) -> SolveResult:
    """Family minimizer over the full constraint box, no prunings."""
    return solve(n, prune=False)
