"""Run decompositions of strings and star structures of 1-dimensional hypergraphs.

A string is read as a sequence of closed/open flags from its far end ``w``
towards an anchor endpoint ``v``.  Open runs are the maximal blocks of open
vertices; a 1-1 configuration is a block of consecutive runs whose two end
runs are 1 mod 3 and whose inner runs are 2 mod 3, and a 1-0 configuration
from ``v`` has its anchor-side run 1 mod 3, its far run 0 mod 3 and inner runs
2 mod 3.  Configurations are disjoint when they use disjoint runs; they may
share the closed vertex between them.  A single run never forms a 1-1
configuration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .core import Hypergraph, components
from .enumeration import cycle_rank


# -- runs and configurations -------------------------------------------------

def open_runs(closed: Sequence[bool]) -> list[tuple[int, int]]:
    """(start, length) of each maximal open block, in sequence order."""
    runs = []
    i = 0
    n = len(closed)
    while i < n:
        if closed[i]:
            i += 1
            continue
        j = i
        while j < n and not closed[j]:
            j += 1
        runs.append((i, j - i))
        i = j
    return runs


def _greedy(mods: list[int], first: int, last: int, used: set[int]) -> list[tuple[int, int]]:
    """Disjoint blocks [a, b] (a < b) of run indices with mods[a] == first,
    mods[b] == last and 2 mod 3 inside, scanning from index 0 and always
    taking the block that ends earliest.  Indices in ``used`` are unavailable."""
    chosen = []
    pos = 0
    s = len(mods)
    while pos < s:
        found = None
        for b in range(pos + 1, s):
            if b in used or mods[b] != last:
                continue
            a = b - 1
            while a >= pos and a not in used and mods[a] == 2:
                a -= 1
            if a >= pos and a not in used and mods[a] == first:
                found = (a, b)
                break
        if found is None:
            break
        chosen.append(found)
        pos = found[1] + 1
    return chosen


def count_11(lengths: Sequence[int]) -> int:
    """Maximal number of disjoint 1-1 configurations in a linear run sequence."""
    return len(_greedy([x % 3 for x in lengths], 1, 1, set()))


def count_11_cyclic(lengths: Sequence[int]) -> int:
    """Same as count_11 for runs arranged on a cycle."""
    s = len(lengths)
    if s < 2:
        return 0
    return max(count_11(list(lengths[k:]) + list(lengths[:k])) for k in range(s))


@dataclass(frozen=True)
class StringProfile:
    """Orientation-aware invariants of a string read from ``w`` to the anchor.

    ``runs`` lists open-run lengths n_1..n_s with n_1 farthest from the anchor.
    """

    closed: tuple
    vertices: tuple
    runs: tuple
    m_count: int
    o_count: int
    w_count: int
    q: int
    nr: int
    run_starts: tuple = ()
    ones: tuple = ()
    ten: tuple = ()

    @property
    def n(self) -> int:
        return len(self.closed)

    @property
    def anchor(self):
        return self.vertices[-1] if self.vertices else None

    @property
    def s(self) -> int:
        return len(self.runs)

    def run_of(self, position: int) -> int | None:
        """Index of the run containing the 0-based position, if open."""
        for k, (st, ln) in enumerate(zip(self.run_starts, self.runs)):
            if st <= position < st + ln:
                return k
        return None

    def in_11_configuration(self, position: int) -> bool:
        k = self.run_of(position)
        return k is not None and any(a <= k <= b for a, b in self.ones)

    def in_10_configuration(self, position: int) -> bool:
        k = self.run_of(position)
        return k is not None and any(a <= k <= b for a, b in self.ten)


def profile_from_flags(closed: Sequence[bool], vertices: Sequence | None = None,
                       check: bool = True) -> StringProfile:
    """Profile of the sequence v_1..v_n (index 0 = far end, last = anchor)."""
    closed = tuple(bool(c) for c in closed)
    n = len(closed)
    if vertices is None:
        vertices = tuple(range(1, n + 1))
    if check:
        for a, b in zip(closed, closed[1:]):
            if a and b:
                raise ValueError("string has two adjacent closed vertices")
    runs = open_runs(closed)
    lengths = [ln for _, ln in runs]
    s = len(lengths)
    # anchor-first view of the runs
    rev = [x % 3 for x in reversed(lengths)]

    def back(blocks):
        return tuple(sorted((s - 1 - b, s - 1 - a) for a, b in blocks))

    ones_rev = _greedy(rev, 1, 1, set())
    used = {k for a, b in ones_rev for k in range(a, b + 1)}
    ten_rev = _greedy(rev, 1, 0, used)
    m_count = len(ones_rev)
    o_count = len(ten_rev)
    w_count = sum(1 for x in lengths if x % 3 == 0) - o_count
    q, nr = divmod(n - m_count - w_count, 3)
    return StringProfile(closed, tuple(vertices), tuple(lengths), m_count, o_count,
                         w_count, q, nr, tuple(st for st, _ in runs), back(ones_rev), back(ten_rev))


def string_order(S: Hypergraph, v: int | None = None) -> list[int]:
    """Vertices of a string hypergraph in path order, ending at endpoint v."""
    if not is_string(S):
        raise ValueError("not a string")
    if S.mu == 1:
        return [1]
    adj = {u: S.edge_neighbors(u) for u in S.vertices}
    ends = [u for u in S.vertices if len(adj[u]) == 1]
    if v is None:
        v = ends[-1]
    if v not in ends:
        raise ValueError(f"vertex {v} is not an endpoint")
    order = [v]
    prev = None
    cur = v
    while True:
        nxt = [u for u in adj[cur] if u != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        order.append(cur)
    order.reverse()
    return order


def string_profile(S: Hypergraph, v: int | None = None) -> StringProfile:
    """Profile of string S anchored at endpoint v (default: the larger endpoint)."""
    order = string_order(S, v)
    return profile_from_flags([S.is_closed(u) for u in order], order)


def is_11_special(S: Hypergraph) -> bool:
    prof = string_profile(S)
    mods = [x % 3 for x in prof.runs]
    return (len(mods) >= 2 and mods[0] == 1 and mods[-1] == 1
            and all(x == 2 for x in mods[1:-1]))


def is_10_special(S: Hypergraph, v: int) -> bool:
    prof = string_profile(S, v)
    mods = [x % 3 for x in prof.runs]
    return (len(mods) >= 2 and mods[-1] == 1 and mods[0] == 0
            and all(x == 2 for x in mods[1:-1]))


# -- shape predicates --------------------------------------------------------

def _adjacency(H: Hypergraph) -> dict[int, set[int]]:
    adj = {v: set() for v in H.vertices}
    for u, w in H.edges():
        adj[u].add(w)
        adj[w].add(u)
    return adj


def _connected(H: Hypergraph) -> bool:
    return H.mu <= 1 or len(components(H)) == 1


def is_string(H: Hypergraph) -> bool:
    """Connected, 1-dimensional, acyclic, every degree at most 2."""
    if H.mu == 0 or not H.is_one_dimensional() or not _connected(H):
        return False
    adj = _adjacency(H)
    if any(len(a) > 2 for a in adj.values()):
        return False
    return len(H.edges()) == H.mu - 1


def is_cycle(H: Hypergraph) -> bool:
    if H.mu < 3 or not H.is_one_dimensional() or not _connected(H):
        return False
    adj = _adjacency(H)
    return all(len(a) == 2 for a in adj.values())


def cycle_order(C: Hypergraph) -> list[int]:
    if not is_cycle(C):
        raise ValueError("not a cycle")
    adj = _adjacency(C)
    order = [1]
    prev, cur = None, 1
    while True:
        nxt = min(u for u in adj[cur] if u != prev)
        if nxt == 1 or len(order) == C.mu:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return order


def graph_cycle_rank(H: Hypergraph) -> int:
    return cycle_rank(H.mu, [(u - 1, w - 1) for u, w in H.edges()])


# -- stars -------------------------------------------------------------------

@dataclass(frozen=True)
class StarKind:
    """One star: a backbone vertex with pendant strings hanging from it."""

    center: int
    branches: tuple
    open_center: bool

    @property
    def d(self) -> int:
        return max((len(b) for b in self.branches), default=0)

    @property
    def proper_d(self) -> bool:
        return True

    def is_proper(self, d: int) -> bool:
        return self.d == d


@dataclass(frozen=True)
class StarDecomposition:
    """Stars of a connected 1-dimensional hypergraph joined at their centers.

    ``stars`` follow the backbone order for strings and cycles.
    """

    tag: str
    stars: tuple
    backbone_edges: tuple = field(default=())

    @property
    def T(self) -> int:
        return sum(1 for s in self.stars if s.d == 2)

    @property
    def d(self) -> int:
        return max((s.d for s in self.stars), default=0)

    @property
    def num_vertices(self) -> int:
        return sum(1 + sum(len(b) for b in s.branches) for s in self.stars)


def _pendant_paths(adj: dict[int, set[int]], center: int, start: int,
                   backbone: set[int]) -> list[int] | None:
    """Path from start away from center if it is a hanging string, else None."""
    path = [start]
    prev, cur = center, start
    while True:
        nxt = [u for u in adj[cur] if u != prev]
        if not nxt:
            return path
        if len(nxt) > 1 or nxt[0] in backbone:
            return None
        prev, cur = cur, nxt[0]
        path.append(cur)


def _path_between(adj, a, b):
    prev = {a: None}
    stack = [a]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in prev:
                prev[w] = u
                stack.append(w)
    out = [b]
    while out[-1] != a:
        out.append(prev[out[-1]])
    return out


def classify_connected(H: Hypergraph) -> StarDecomposition | None:
    """Star decomposition of a connected 1-dimensional hypergraph, or None."""
    if not H.is_one_dimensional() or not _connected(H):
        return None
    adj = _adjacency(H)
    rank = graph_cycle_rank(H)
    if rank > 1:
        return None
    if H.mu == 1:
        return StarDecomposition("string", (StarKind(1, (), not H.is_closed(1)),))
    if rank == 1:
        # peel leaves to find the cycle
        deg = {v: len(adj[v]) for v in H.vertices}
        alive = set(H.vertices)
        stack = [v for v in alive if deg[v] == 1]
        while stack:
            v = stack.pop()
            if v not in alive:
                continue
            alive.discard(v)
            for u in adj[v]:
                if u in alive:
                    deg[u] -= 1
                    if deg[u] == 1:
                        stack.append(u)
        ring = set(alive)
        order = [min(ring)]
        prev = None
        while True:
            cur = order[-1]
            nxt = sorted(u for u in adj[cur] if u in ring and u != prev)
            if not nxt or nxt[0] == order[0]:
                if len(order) == len(ring):
                    break
            step = [u for u in nxt if u not in order]
            if not step:
                break
            prev = cur
            order.append(step[0])
        backbone = order
        tag = "cycle"
    else:
        joints = [v for v in H.vertices if len(adj[v]) >= 3]
        if not joints:
            ends = [v for v in H.vertices if len(adj[v]) == 1]
            backbone = _path_between(adj, ends[0], ends[1])
            tag = "string"
        else:
            hull = set()
            for j in joints[1:]:
                hull.update(_path_between(adj, joints[0], j))
            hull.add(joints[0])
            hdeg = {v: sum(1 for u in adj[v] if u in hull) for v in hull}
            if any(d > 2 for d in hdeg.values()):
                backbone = sorted(hull)
                tag = "tree"
            else:
                if len(hull) == 1:
                    backbone = [joints[0]]
                else:
                    ends = [v for v in hull if hdeg[v] == 1]
                    backbone = _path_between(adj, ends[0], ends[1])
                tag = "string"
                backbone = _extend_ends(adj, backbone)
    bset = set(backbone)
    stars = []
    for c in backbone:
        branches = []
        for u in sorted(adj[c]):
            if u in bset:
                continue
            p = _pendant_paths(adj, c, u, bset)
            if p is None:
                return None
            branches.append(tuple(p))
        stars.append(StarKind(c, tuple(branches), not H.is_closed(c)))
    bedges = tuple(sorted((min(a, b), max(a, b)) for a in backbone for b in adj[a]
                          if b in bset and a < b))
    return StarDecomposition(tag, tuple(stars), bedges)


def _extend_ends(adj, backbone: list[int]) -> list[int]:
    """Prolong a backbone path along pendant strings longer than two."""
    bset = set(backbone)

    def longest_branch(c):
        best = None
        for u in adj[c]:
            if u in bset:
                continue
            p = _pendant_paths(adj, c, u, bset)
            if p is not None and len(p) > 2 and (best is None or len(p) > len(best)):
                best = p
        return best

    tail = longest_branch(backbone[-1])
    if tail:
        backbone = backbone + tail
        bset.update(tail)
    head = longest_branch(backbone[0])
    if head:
        backbone = list(reversed(head)) + backbone
        bset.update(head)
    return backbone


def classify_stars(H: Hypergraph) -> tuple[list[StarDecomposition], str]:
    """Decompose each component; tag is 'none' if one of them fails.

    Tags: 'string-of-stars', 'cycle-of-stars', 'tree-of-stars', 'mixed' for a
    disconnected input whose components differ, or 'none'.
    """
    decs = []
    for C in components(H):
        dec = classify_connected(C)
        if dec is None:
            return [], "none"
        decs.append(dec)
    tags = {d.tag for d in decs}
    if len(tags) == 1:
        return decs, tags.pop() + "-of-stars"
    return decs, "mixed"


def backbone_runs(opens: Sequence[bool]) -> list[int]:
    """Lengths of maximal runs of open centers along a linear backbone."""
    return [ln for _, ln in open_runs([not o for o in opens])]


def backbone_runs_cyclic(opens: Sequence[bool]) -> list[int] | None:
    """Runs of open centers around a cycle; None if every center is open."""
    n = len(opens)
    if all(opens):
        return None
    k = next(i for i in range(n) if not opens[i])
    rotated = list(opens[k:]) + list(opens[:k])
    return backbone_runs(rotated)


def star_modularity(segments: Sequence[tuple[Sequence[bool], bool]]) -> int:
    """M*: disjoint 1-1 star configurations summed over backbone pieces.

    Each piece is (open flags along the backbone, cyclic?).
    """
    total = 0
    for opens, cyclic in segments:
        if cyclic:
            runs = backbone_runs_cyclic(opens)
            total += 0 if runs is None else count_11_cyclic(runs)
        else:
            total += count_11(backbone_runs(opens))
    return total


__all__ = [
    "StringProfile",
    "StarKind",
    "StarDecomposition",
    "open_runs",
    "count_11",
    "count_11_cyclic",
    "profile_from_flags",
    "string_profile",
    "string_order",
    "is_11_special",
    "is_10_special",
    "is_string",
    "is_cycle",
    "cycle_order",
    "classify_connected",
    "classify_stars",
    "backbone_runs",
    "backbone_runs_cyclic",
    "star_modularity",
    "graph_cycle_rank",
]
