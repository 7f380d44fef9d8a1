"""Combinatorial tests for pd(H) = |V| - 1 and pd(H) = |V| - 2.

* ``check_star``: the condition for pd = |V| - 1 (a spanning complete
  bipartite graph on the open vertices, or a vertex adjacent to all of them);
* ``check_star_star``: its negation with W(H) nonempty, i.e. pd <= |V| - 2;
* ``check_sharp``: a partition V1, V2 whose two closures both pass
  ``check_star``, which forces pd = |V| - 2;
* generalized Ferrers graphs, and the scan asking whether the partition
  condition characterises pd = |V| - 2 for bipartite graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .core import Hypergraph, close_outside, cut_face, is_separated, restrict
from .enumeration import is_bipartite_graph, one_dimensional


# -- (star) and (star star) ----------------------------------------------------

def _open_graph(H: Hypergraph) -> tuple[list[int], set[frozenset]]:
    W = sorted(H.open_vertices())
    Wset = set(W)
    edges = {f for f in H.faces if len(f) == 2 and f <= Wset}
    return W, edges


def _complement_disconnected(W: list[int], edges: set[frozenset]) -> tuple[set, set] | None:
    """A split of W into two nonempty parts with every cross pair an edge, if any."""
    if len(W) < 2:
        return None
    seen = {W[0]}
    stack = [W[0]]
    while stack:
        u = stack.pop()
        for x in W:
            if x not in seen and frozenset((u, x)) not in edges:
                seen.add(x)
                stack.append(x)
    if len(seen) == len(W):
        return None
    return seen, set(W) - seen


def _dominating_vertex(H: Hypergraph, W: list[int]) -> int | None:
    Wset = set(W)
    for v in H.vertices:
        others = Wset - {v}
        if others and all(frozenset((v, w)) in H.faces for w in others):
            return v
    return None


@dataclass
class StarEvidence:
    holds: bool
    clause: str = ""
    parts: tuple = ()
    vertex: int | None = None


def check_star(H: Hypergraph) -> tuple[bool, StarEvidence]:
    """Whether pd(H) = |V| - 1 by the spanning-bipartite / dominating-vertex test."""
    W, edges = _open_graph(H)
    if not W:
        return False, StarEvidence(False, "no open vertex")
    split = _complement_disconnected(W, edges)
    if split is not None:
        a, b = split
        return True, StarEvidence(True, "complete-bipartite", (tuple(sorted(a)), tuple(sorted(b))))
    v = _dominating_vertex(H, W)
    if v is not None:
        return True, StarEvidence(True, "dominating-vertex", vertex=v)
    return False, StarEvidence(False, "neither clause")


def has_spanning_complete_bipartite(H: Hypergraph) -> bool:
    """Brute force over bipartitions of W(H); used to cross-check the complement test."""
    W, edges = _open_graph(H)
    for k in range(1, len(W)):
        for A in combinations(W, k):
            if W[0] not in A:
                continue
            B = [x for x in W if x not in A]
            if all(frozenset((a, b)) in edges for a in A for b in B):
                return True
    return False


def check_star_star(H: Hypergraph) -> bool:
    """W(H) nonempty and the |V| - 1 test fails, i.e. pd(H) <= |V| - 2."""
    return bool(H.open_vertices()) and not check_star(H)[0]


# -- (sharp) -----------------------------------------------------------------

@dataclass
class PartitionWitness:
    V1: frozenset
    V2: frozenset
    evidence: tuple = field(default=())

    def __post_init__(self):
        if not self.V1 or not self.V2 or self.V1 & self.V2:
            raise ValueError("sides must be disjoint and nonempty")


def sharp_witness_valid(H: Hypergraph, V1, V2) -> PartitionWitness | None:
    V1, V2 = frozenset(V1), frozenset(V2)
    if V1 | V2 != frozenset(H.vertices) or not V1 or not V2 or V1 & V2:
        return None
    ok1, ev1 = check_star(close_outside(H, V1))
    if not ok1:
        return None
    ok2, ev2 = check_star(close_outside(H, V2))
    if not ok2:
        return None
    return PartitionWitness(V1, V2, (ev1, ev2))


def check_sharp(H: Hypergraph) -> PartitionWitness | None:
    """A partition certifying pd(H) = |V| - 2, or None."""
    if not check_star_star(H):
        return None
    verts = list(H.vertices)
    W = H.open_vertices()
    first, rest = verts[0], verts[1:]
    # V1 always holds the first vertex; each side needs an open vertex
    for k in range(len(rest)):
        for extra in combinations(rest, k):
            V1 = frozenset((first,) + extra)
            V2 = frozenset(verts) - V1
            if not (V1 & W) or not (V2 & W):
                continue
            wit = sharp_witness_valid(H, V1, V2)
            if wit is not None:
                return wit
    return None


def bipartite_parts(H: Hypergraph) -> tuple[frozenset, frozenset] | None:
    edges = [(u - 1, w - 1) for u, w in H.edges()]
    if not H.is_one_dimensional() or not is_bipartite_graph(H.mu, edges):
        return None
    side: dict[int, int] = {}
    for s in H.vertices:
        if s in side:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for x in H.edge_neighbors(u):
                if x not in side:
                    side[x] = 1 - side[u]
                    stack.append(x)
    return (frozenset(v for v in side if side[v] == 0),
            frozenset(v for v in side if side[v] == 1))


@dataclass
class CutWitness:
    V1: frozenset
    V2: frozenset
    G1: Hypergraph
    G2: Hypergraph
    consistent: bool


def bipartite_cut_witness(H: Hypergraph) -> CutWitness | None:
    """Split off a non-adjacent open pair and cut every edge between the sides.

    Returns None when no such pair exists.  ``consistent`` records whether
    both sides pass ``check_star``; for H with pd = |V| - 2 it should.
    """
    parts = bipartite_parts(H)
    if parts is None:
        raise ValueError("H must be a 1-dimensional bipartite graph")
    W = H.open_vertices()
    for W1, W2 in (parts, parts[::-1]):
        for v in sorted(W1 & W):
            for w in sorted(W2 & W):
                if frozenset((v, w)) in H.faces:
                    continue
                V1 = frozenset({v} | (W2 - {w}))
                V2 = frozenset({w} | (W1 - {v}))
                G = H
                for f in list(H.faces):
                    if len(f) == 2 and f & V1 and f & V2:
                        G = cut_face(G, f)
                G1 = restrict(G, V1)
                G2 = restrict(G, V2)
                ok = check_star(G1)[0] and check_star(G2)[0]
                return CutWitness(V1, V2, G1, G2, ok)
    return None


# -- generalized Ferrers graphs --------------------------------------------

@dataclass(frozen=True)
class FerrersShape:
    lam: tuple
    tau: tuple

    def __post_init__(self):
        lam, tau = tuple(self.lam), tuple(self.tau)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "tau", tau)
        if not lam or len(tau) != len(lam):
            raise ValueError("lambda and tau must be nonempty and of equal length")
        if any(x <= 0 for x in lam) or any(a < b for a, b in zip(lam, lam[1:])):
            raise ValueError("lambda must be positive and non-increasing")
        if tau[0] != 0 or any(a > b for a, b in zip(tau, tau[1:])):
            raise ValueError("tau must start at 0 and be non-decreasing")
        if any(t >= l for t, l in zip(tau, lam)):
            raise ValueError("each row needs tau_i < lambda_i")

    @property
    def s(self) -> int:
        return len(self.lam)

    @property
    def num_vertices(self) -> int:
        return self.s + self.lam[0]

    def edges(self) -> list[tuple[int, int]]:
        """(row i, column j), 1-based, for tau_i < j <= lambda_i."""
        return [(i + 1, j) for i, (t, l) in enumerate(zip(self.tau, self.lam))
                for j in range(t + 1, l + 1)]


def ferrers_shapes(max_vertices: int, min_vertices: int = 2):
    """Every valid (lambda, tau) with s + lambda_1 between the bounds."""
    def rows(left, lam_cap, tau_floor):
        yield ()
        if left == 0:
            return
        for lam in range(lam_cap, 0, -1):
            for tau in range(tau_floor, lam):
                for rest in rows(left - 1, lam, tau):
                    yield ((lam, tau),) + rest

    for lam1 in range(1, max_vertices):
        for s in range(1, max_vertices - lam1 + 1):
            if s + lam1 < min_vertices:
                continue
            for rest in rows(s - 1, lam1, 0):
                if len(rest) != s - 1:
                    continue
                lam = (lam1,) + tuple(r[0] for r in rest)
                tau = (0,) + tuple(r[1] for r in rest)
                yield FerrersShape(lam, tau)


def ferrers_generate(shape: FerrersShape, closed_extras: int = 0) -> Hypergraph:
    """Rows are vertices 1..s, columns s+1..s+lambda_1, then the closed extras.

    Each closed extra z_k is a pendant closed vertex hung on row 1, so the
    result is connected and separated as long as the Ferrers part is.
    """
    s = shape.s
    faces = [[i, s + j] for i, j in shape.edges()]
    n = shape.num_vertices
    labels = [f"f{i}" for i in range(1, s + 1)] + [f"g{j}" for j in range(1, shape.lam[0] + 1)]
    for k in range(1, closed_extras + 1):
        z = n + k
        faces += [[z], [1, z]]
        labels.append(f"z{k}")
    return Hypergraph.from_faces(faces, mu=n + closed_extras, labels=labels)


def find_spanning_ferrers(H: Hypergraph) -> tuple[list[int], list[int]] | None:
    """Rows and columns of a spanning generalized Ferrers subgraph on W(H).

    Rows come first-row-first, columns first-column-first, so that the first
    row meets every column and the first column meets every row.  Row
    intervals of a Ferrers graph are nested, so such a subgraph exists
    exactly when some open edge {f, g} has every other open vertex adjacent
    to f or to g.
    """
    W, edges = _open_graph(H)
    if len(W) < 2:
        return None
    adj = {v: {x for x in W if frozenset((v, x)) in edges} for v in W}
    for f in W:
        for g in sorted(adj[f]):
            rows, cols = [f], [g]
            ok = True
            for u in W:
                if u in (f, g):
                    continue
                if u in adj[f]:
                    cols.append(u)
                elif u in adj[g]:
                    rows.append(u)
                else:
                    ok = False
                    break
            if ok:
                return rows, cols
    return None


def detect_spanning_ferrers(H: Hypergraph) -> bool:
    return find_spanning_ferrers(H) is not None


def has_spanning_ferrers_bruteforce(H: Hypergraph) -> bool:
    """Search bipartitions and row/column orders for a staircase; small W only."""
    from itertools import permutations
    W, edges = _open_graph(H)
    for k in range(1, len(W)):
        for rows in combinations(W, k):
            cols = [x for x in W if x not in rows]
            for rord in permutations(rows):
                for cord in permutations(cols):
                    if _fits_staircase(rord, cord, edges):
                        return True
    return False


def _fits_staircase(rows, cols, edges) -> bool:
    lam_prev, tau_prev = len(cols), 0
    for i, r in enumerate(rows):
        nb = [j for j, c in enumerate(cols, start=1) if frozenset((r, c)) in edges]
        if not nb:
            return False
        if i == 0:
            if len(nb) != len(cols):
                return False
            continue
        # choose the interval (t, l] inside the neighbourhood, nested in the previous
        ok = False
        for t in range(tau_prev, lam_prev):
            for l in range(t + 1, lam_prev + 1):
                if all(j in nb for j in range(t + 1, l + 1)):
                    tau_prev, lam_prev = t, l
                    ok = True
                    break
            if ok:
                break
        if not ok:
            return False
    return True


def pd_via_babyF(H: Hypergraph) -> int | None:
    """|V| - 2 when pd <= |V| - 2 and W(H) has a spanning Ferrers subgraph."""
    if not check_star_star(H):
        return None
    return H.mu - 2 if detect_spanning_ferrers(H) else None


def babyF_witness(H: Hypergraph) -> PartitionWitness | None:
    """The partition built from a spanning Ferrers subgraph, checked."""
    found = find_spanning_ferrers(H)
    if found is None or not check_star_star(H):
        return None
    rows, cols = found
    closed = H.closed_vertices()
    V1 = frozenset([cols[0]] + rows[1:]) | closed
    V2 = frozenset([rows[0]] + cols[1:])
    return sharp_witness_valid(H, V1, V2)


# -- the characterization scan -----------------------------------------------

@dataclass
class ScanReport:
    max_vertices: int
    examined: int = 0
    excluded: int = 0
    low_pd: int = 0
    pd_minus_two: int = 0
    sharp: int = 0
    counterexamples: list = field(default_factory=list)
    by_size: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def bipartite_population(max_vertices: int, connected: bool = False):
    for n in range(1, max_vertices + 1):
        yield from one_dimensional(n, "bipartite", connected=connected)


def conjecture_scan(max_vertices: int = 8, pd=None, connected: bool = False,
                    population=None) -> ScanReport:
    """Compare pd = |V| - 2 with the partition condition on bipartite graphs."""
    from .oracle import pd_bruteforce
    pd = pd_bruteforce if pd is None else pd
    rep = ScanReport(max_vertices)
    items = population if population is not None else bipartite_population(max_vertices, connected)
    for H in items:
        if not is_separated(H) or not H.is_one_dimensional() or bipartite_parts(H) is None:
            rep.excluded += 1
            continue
        rep.examined += 1
        p = pd(H)
        counts = rep.by_size.setdefault(H.mu, [0, 0, 0])
        counts[0] += 1
        if p > H.mu - 2:
            continue
        rep.low_pd += 1
        wit = check_sharp(H)
        if p == H.mu - 2:
            rep.pd_minus_two += 1
            counts[1] += 1
        if wit is not None:
            rep.sharp += 1
            counts[2] += 1
        if (p == H.mu - 2) != (wit is not None):
            rep.counterexamples.append((H, p, wit))
    return rep


__all__ = [
    "StarEvidence",
    "check_star",
    "check_star_star",
    "has_spanning_complete_bipartite",
    "PartitionWitness",
    "sharp_witness_valid",
    "check_sharp",
    "bipartite_parts",
    "CutWitness",
    "bipartite_cut_witness",
    "FerrersShape",
    "ferrers_shapes",
    "ferrers_generate",
    "find_spanning_ferrers",
    "detect_spanning_ferrers",
    "has_spanning_ferrers_bruteforce",
    "pd_via_babyF",
    "babyF_witness",
    "ScanReport",
    "bipartite_population",
    "conjecture_scan",
]
