"""Canonical forms and isomorphism-free enumeration of small hypergraphs.

Canonical labelling uses colour refinement plus individualisation, keeping
the lexicographically smallest relabelled face list over all leaves of the
search tree.  That is exhaustive and exact, and fast enough below a dozen
vertices.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Iterator

from .core import Hypergraph, is_separated


def _refine(n: int, incidence: list[list[int]], colors: list[int]) -> list[int]:
    ncls = len(set(colors))
    while True:
        sig = []
        for v in range(n):
            parts = []
            for f in incidence[v]:
                others = []
                g = f & ~(1 << v)
                while g:
                    b = g & -g
                    others.append(colors[b.bit_length() - 1])
                    g ^= b
                others.sort()
                parts.append((len(others), tuple(others)))
            parts.sort()
            sig.append((colors[v], tuple(parts)))
        order = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [order[s] for s in sig]
        if len(order) == ncls:
            return new
        colors, ncls = new, len(order)


def canonical_masks(n: int, faces: Iterable[int], colors: list[int] | None = None) -> tuple[int, ...]:
    """Canonical sorted tuple of face bitmasks for faces over vertices 0..n-1.

    ``colors`` optionally fixes an invariant vertex colouring that any
    isomorphism must respect.
    """
    faces = list(set(faces))
    incidence: list[list[int]] = [[] for _ in range(n)]
    for f in faces:
        for v in range(n):
            if f >> v & 1:
                incidence[v].append(f)
    start = list(colors) if colors is not None else [0] * n
    best: list = [None]
    face_set = set(faces)

    def swap_is_automorphism(u: int, v: int) -> bool:
        bu, bv = 1 << u, 1 << v
        for f in faces:
            if bool(f & bu) != bool(f & bv):
                if (f ^ bu ^ bv) not in face_set:
                    return False
        return True

    def leaf(cols: list[int]) -> tuple[int, ...]:
        out = []
        for f in faces:
            m = 0
            g = f
            while g:
                b = g & -g
                m |= 1 << cols[b.bit_length() - 1]
                g ^= b
            out.append(m)
        out.sort()
        return tuple(out)

    def search(cols: list[int]) -> None:
        cols = _refine(n, incidence, cols)
        if len(set(cols)) == n:
            enc = leaf(cols)
            if best[0] is None or enc < best[0]:
                best[0] = enc
            return
        counts: dict[int, int] = {}
        for c in cols:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        tried: list[int] = []
        for v in range(n):
            if cols[v] == target:
                # a vertex interchangeable with one already tried gives the same leaves
                if any(swap_is_automorphism(u, v) for u in tried):
                    continue
                tried.append(v)
                nxt = [2 * c for c in cols]
                nxt[v] -= 1
                search(nxt)

    search(start)
    return best[0] if best[0] is not None else ()


def to_masks(H: Hypergraph) -> list[int]:
    return [sum(1 << (v - 1) for v in f) for f in H.faces]


def from_masks(n: int, masks: Iterable[int]) -> Hypergraph:
    faces = [frozenset(v + 1 for v in range(n) if m >> v & 1) for m in masks]
    return Hypergraph(n, frozenset(faces))


def canonical_form(H: Hypergraph) -> tuple:
    """Isomorphism invariant that determines H up to relabelling."""
    return (H.mu, canonical_masks(H.mu, to_masks(H)))


def canonical_hypergraph(H: Hypergraph) -> Hypergraph:
    return from_masks(H.mu, canonical_form(H)[1])


def are_isomorphic(A: Hypergraph, B: Hypergraph) -> bool:
    return canonical_form(A) == canonical_form(B)


# -- graphs ------------------------------------------------------------------

Graph = tuple  # (n, frozenset of (u, v) pairs with 0 <= u < v < n)


def _graph_canon(n: int, edges: Iterable[tuple[int, int]]) -> tuple:
    return canonical_masks(n, [(1 << u) | (1 << v) for u, v in edges])


def _edges_of(n: int, masks: tuple) -> frozenset:
    out = []
    for m in masks:
        vs = [v for v in range(n) if m >> v & 1]
        out.append((vs[0], vs[1]))
    return frozenset(out)


def is_bipartite_graph(n: int, edges: Iterable[tuple[int, int]]) -> bool:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    side = [-1] * n
    for s in range(n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def cycle_rank(n: int, edges: Iterable[tuple[int, int]]) -> int:
    """Number of independent cycles: |E| - |V| + #components."""
    edges = list(edges)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for u, v in edges:
        a, b = find(u), find(v)
        if a != b:
            parent[a] = b
            comps -= 1
    return len(edges) - n + comps


def is_connected_graph(n: int, edges: Iterable[tuple[int, int]]) -> bool:
    return n <= 1 or cycle_rank(n, edges) == len(list(edges)) - n + 1


HEREDITARY = {
    "all": lambda n, e: True,
    "bipartite": is_bipartite_graph,
    "forest": lambda n, e: cycle_rank(n, e) == 0,
    "unicyclic": lambda n, e: cycle_rank(n, e) <= 1,
}


@lru_cache(maxsize=None)
def graphs(n: int, family: str = "all") -> tuple:
    """All graphs on n vertices in a hereditary family, one per isomorphism class.

    Each graph is a frozenset of edges (u, v) with 0 <= u < v < n.
    """
    pred = HEREDITARY[family]
    if n == 0:
        return (frozenset(),)
    out = {}
    for g in graphs(n - 1, family):
        new = n - 1
        for k in range(n):
            for nbrs in combinations(range(new), k):
                edges = set(g) | {(u, new) for u in nbrs}
                if not pred(n, edges):
                    continue
                key = _graph_canon(n, edges)
                if key not in out:
                    out[key] = frozenset(edges)
    return tuple(out[k] for k in sorted(out))


def one_dimensional(n: int, family: str = "all", connected: bool = False,
                    separated: bool = True,
                    edge_filter: Callable[[int, frozenset], bool] | None = None) -> Iterator[Hypergraph]:
    """1-dimensional hypergraphs on n vertices: a graph plus a set of closed vertices."""
    for edges in graphs(n, family):
        if connected and not is_connected_graph(n, edges):
            continue
        if edge_filter is not None and not edge_filter(n, edges):
            continue
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        forced = sum(1 << v for v in range(n) if deg[v] == 0)
        seen = set()
        emasks = [(1 << u) | (1 << v) for u, v in edges]
        for closed in range(1 << n):
            if closed & forced != forced:
                continue
            masks = emasks + [1 << v for v in range(n) if closed >> v & 1]
            key = canonical_masks(n, masks)
            if key in seen:
                continue
            seen.add(key)
            H = from_masks(n, key)
            if separated and not is_separated(H):
                continue
            yield H


def all_hypergraphs(n: int, separated: bool = False, max_faces: int | None = None) -> Iterator[Hypergraph]:
    """Every face set on n vertices covering all of them, up to isomorphism.

    The count grows doubly exponentially; n <= 4 is exhaustive in seconds,
    n = 5 needs ``max_faces``.
    """
    full = (1 << n) - 1
    subsets = list(range(1, 1 << n))
    limit = len(subsets) if max_faces is None else max_faces
    level = {()}
    emitted = set()
    for _ in range(limit + 1):
        for key in level:
            cover = 0
            for m in key:
                cover |= m
            if cover == full and key not in emitted:
                emitted.add(key)
                H = from_masks(n, key)
                if not separated or is_separated(H):
                    yield H
        nxt = set()
        for key in level:
            have = set(key)
            for s in subsets:
                if s not in have:
                    nxt.add(canonical_masks(n, list(key) + [s]))
        level = nxt
        if not level:
            break


def strings(n: int) -> Iterator[Hypergraph]:
    """Separated strings on n vertices (path 1..n, endpoints closed), up to reversal."""
    if n == 1:
        yield Hypergraph.from_faces([[1]])
        return
    edges = [[i, i + 1] for i in range(1, n)]
    seen = set()
    for inner in range(1 << max(n - 2, 0)):
        closed = [1, n] + [i + 2 for i in range(n - 2) if inner >> i & 1]
        H = Hypergraph.from_faces(edges + [[c] for c in closed], mu=n)
        key = canonical_form(H)
        if key not in seen:
            seen.add(key)
            yield H


def cycles(n: int) -> Iterator[Hypergraph]:
    """Separated cycles on n >= 3 vertices (any closed set), up to dihedral symmetry."""
    edges = [[i, i % n + 1] for i in range(1, n + 1)]
    seen = set()
    for closed in range(1 << n):
        cl = [i + 1 for i in range(n) if closed >> i & 1]
        H = Hypergraph.from_faces(edges + [[c] for c in cl], mu=n)
        key = canonical_form(H)
        if key not in seen and is_separated(H):
            seen.add(key)
            yield H


def random_hypergraph(n: int, rng: random.Random, max_faces: int = 8,
                      separated: bool = True, tries: int = 1000) -> Hypergraph:
    for _ in range(tries):
        k = rng.randint(1, max_faces)
        masks = {rng.randint(1, (1 << n) - 1) for _ in range(k)}
        cover = 0
        for m in masks:
            cover |= m
        missing = ((1 << n) - 1) & ~cover
        for v in range(n):
            if missing >> v & 1:
                masks.add(1 << v)
        H = from_masks(n, masks)
        if not separated or is_separated(H):
            return H
    raise RuntimeError("could not draw a separated hypergraph")


def has_adjacent_closed(H: Hypergraph) -> bool:
    return any(H.is_closed(u) and H.is_closed(v) for u, v in H.edges())


__all__ = [
    "canonical_masks",
    "canonical_form",
    "canonical_hypergraph",
    "are_isomorphic",
    "to_masks",
    "from_masks",
    "graphs",
    "one_dimensional",
    "all_hypergraphs",
    "strings",
    "cycles",
    "random_hypergraph",
    "is_bipartite_graph",
    "is_connected_graph",
    "cycle_rank",
    "has_adjacent_closed",
]
