"""Explicit trees and the atom-bond-connectivity index.

The ABC index of a tree is the sum over edges uv of

    sqrt((d(u) + d(v) - 2) / (d(u) * d(v))),

where d(.) is the vertex degree.  This module holds the one tree
representation shared by the whole package (adjacency lists, root 0 by
convention), the edge-weight function, the edge-sum evaluation of the
index, and the degree-preserving edge switch used by the non-increase
property tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


class TreeStructureError(ValueError):
    """Raised when an adjacency structure is not a valid tree."""


class DomainError(ValueError):
    """Raised when the edge-weight function is evaluated outside x, y >= 1."""


def edge_weight(x: float, y: float) -> float:
    """Weight sqrt((x + y - 2) / (x * y)) of an edge joining degrees x and y.

    Defined for real x, y >= 1; symmetric in its arguments.  Note that any
    edge with a degree-2 endpoint weighs exactly 1/sqrt(2), which is why
    pendant paths contribute multiples of sqrt(2)/2.
    """
    if x < 1 or y < 1:
        raise DomainError(f"edge_weight requires x, y >= 1, got ({x}, {y})")
    return math.sqrt((x + y - 2.0) / (x * y))


@dataclass(frozen=True)
class Tree:
    """Immutable tree on vertices 0..vertex_count-1 with adjacency lists.

    Invariants (checked by :func:`validate_tree`): exactly vertex_count - 1
    edges, symmetric adjacency, connected, acyclic.  Vertex 0 is the root by
    convention; rootedness only affects exports, never the ABC value.
    """

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    root: int = 0

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def edges(self) -> list[tuple[int, int]]:
        """Edge list with u < v, ascending lexicographic order."""
        out = []
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    out.append((u, v))
        out.sort()
        return out


def tree_from_edges(vertex_count: int, edges, root: int = 0) -> Tree:
    """Build and validate a Tree from an iterable of (u, v) pairs."""
    adj: list[list[int]] = [[] for _ in range(vertex_count)]
    for u, v in edges:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise TreeStructureError(f"edge ({u}, {v}) out of range")
        adj[u].append(v)
        adj[v].append(u)
    t = Tree(vertex_count, tuple(tuple(n) for n in adj), root)
    validate_tree(t)
    return t


def validate_tree(t: Tree) -> None:
    n = t.vertex_count
    if n < 1:
        raise TreeStructureError("tree needs at least one vertex")
    if len(t.adjacency) != n:
        raise TreeStructureError("adjacency length does not match vertex_count")
    if not (0 <= t.root < n):
        raise TreeStructureError("root out of range")
    m = sum(len(nbrs) for nbrs in t.adjacency)
    if m != 2 * (n - 1):
        raise TreeStructureError(f"expected {n - 1} edges, found {m / 2:g}")
    for u, nbrs in enumerate(t.adjacency):
        if len(set(nbrs)) != len(nbrs) or u in nbrs:
            raise TreeStructureError(f"parallel edge or loop at vertex {u}")
        for v in nbrs:
            if not (0 <= v < n) or u not in t.adjacency[v]:
                raise TreeStructureError(f"asymmetric adjacency at ({u}, {v})")
    if not _connected(t.adjacency, n):
        raise TreeStructureError("graph is disconnected")


def _connected(adj, n: int) -> bool:
    if n == 0:
        return False
    seen = bytearray(n)
    stack = [0]
    seen[0] = 1
    count = 1
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = 1
                count += 1
                stack.append(v)
    return count == n


def abc_index(t: Tree) -> float:
    """ABC index of ``t``: the exact-rounded sum of all edge weights.

    Uses math.fsum so the result does not depend on edge iteration order.
    """
    validate_tree(t)
    deg = t.degrees()
    terms = []
    for u, nbrs in enumerate(t.adjacency):
        du = deg[u]
        for v in nbrs:
            if u < v:
                terms.append(edge_weight(du, deg[v]))
    return math.fsum(terms)


def abc_index_hp(t: Tree, precision: int = 40):
    """ABC index as a Decimal carrying ``precision`` significant digits."""
    from decimal import Decimal, localcontext

    validate_tree(t)
    deg = t.degrees()
    with localcontext() as ctx:
        ctx.prec = precision + 10
        total = Decimal(0)
        for u, nbrs in enumerate(t.adjacency):
            du = deg[u]
            for v in nbrs:
                if u < v:
                    dv = deg[v]
                    total += (Decimal(du + dv - 2) / Decimal(du * dv)).sqrt()
        return +total


class SwitchRejected(ValueError):
    """Raised when an edge switch would not produce a tree."""


def apply_switch(t: Tree, pq: tuple[int, int], rs: tuple[int, int]) -> Tree:
    """Rewire t by removing edges pq and rs and adding ps and qr.

    Requires pq and rs to be vertex-disjoint edges of t with ps and qr not
    already present; the result must again be a tree (otherwise the switch
    is rejected).  All four vertices keep their degrees, so the rewire only
    moves subtrees around.
    """
    p, q = pq
    r, s = rs
    if len({p, q, r, s}) != 4:
        raise SwitchRejected("switch needs four distinct vertices")
    adj = [list(nbrs) for nbrs in t.adjacency]
    if q not in adj[p] or s not in adj[r]:
        raise SwitchRejected("pq and rs must both be edges")
    if s in adj[p] or r in adj[q]:
        raise SwitchRejected("ps and qr must not be edges already")
    adj[p].remove(q)
    adj[q].remove(p)
    adj[r].remove(s)
    adj[s].remove(r)
    adj[p].append(s)
    adj[s].append(p)
    adj[q].append(r)
    adj[r].append(q)
    if not _connected(adj, t.vertex_count):
        raise SwitchRejected("switch disconnects the tree")
    return Tree(t.vertex_count, tuple(tuple(n) for n in adj), t.root)


def relabel(t: Tree, perm: list[int]) -> Tree:
    """Apply a vertex permutation; perm[v] is the new label of v."""
    n = t.vertex_count
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, nbrs in enumerate(t.adjacency):
        adj[perm[u]] = sorted(perm[v] for v in nbrs)
    return Tree(n, tuple(tuple(a) for a in adj), perm[t.root])


def path_tree(n: int) -> Tree:
    """The path on n vertices, 0-1-...-(n-1)."""
    return tree_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_tree(n: int) -> Tree:
    """The star on n vertices with center 0."""
    return tree_from_edges(n, [(0, i) for i in range(1, n)])
