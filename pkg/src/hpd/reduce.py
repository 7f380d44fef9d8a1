"""Projective dimension of dual hypergraphs by combinatorial reduction.

Four evaluators live here:

* closed forms for strings, cycles and strings/cycles of small stars;
* ``pd_unique_cycle``: detach branches from joints (string cuts and tree
  cuts) until only strings and at most one cycle per component remain;
* ``algpd_connected``: the vertex-scanning trimming algorithm, step by step;
* ``pd_recursive``: split at a closed vertex v into H_v and the colon by m_v,
  memoised on canonical forms.

Every reducing evaluator can log its steps into a ``ReductionTrace``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (Hypergraph, cancel_face, colon_vertex, components, cut_face,
                   induced, is_separated, minimalize, remove_vertex)
from .enumeration import canonical_form
from .errors import NeedsOracle, UnsupportedShape
from .invariants import (StringProfile, backbone_runs, backbone_runs_cyclic,
                         classify_connected, count_11, count_11_cyclic,
                         graph_cycle_rank, is_cycle, is_string, profile_from_flags,
                         string_order)

RULES = (
    "isolated", "red", "ref2a", "ref2b", "eq-cancel", "cutTree-a", "cutTree-b",
    "attach-cut-i", "attach-cut-ii", "string-formula", "cycle-formula",
    "star-formula", "recursive-split", "oracle-fallback",
)


@dataclass
class ReductionStep:
    rule: str
    vertices: tuple = ()
    faces: tuple = ()
    delta: int = 0

    def as_dict(self) -> dict:
        return {"rule": self.rule, "vertices": list(self.vertices),
                "faces": [list(f) for f in self.faces], "delta": self.delta}


@dataclass
class ReductionTrace:
    steps: list = field(default_factory=list)

    def add(self, rule: str, H: Hypergraph | None = None, vertices=(), faces=(), delta: int = 0) -> None:
        if rule not in RULES:
            raise ValueError(f"unknown rule {rule}")
        if H is not None:
            vertices = tuple(H.label(v) for v in vertices)
            faces = tuple(tuple(sorted((H.label(v) for v in f), key=_sort_key)) for f in faces)
        self.steps.append(ReductionStep(rule, tuple(vertices), tuple(faces), delta))

    @property
    def total(self) -> int:
        return sum(s.delta for s in self.steps)

    def rules(self) -> list[str]:
        return [s.rule for s in self.steps]


def _sort_key(x):
    return (0, x) if isinstance(x, int) else (1, str(x))


def _child(trace: ReductionTrace | None) -> ReductionTrace:
    return trace if trace is not None else ReductionTrace()


# -- closed forms ------------------------------------------------------------

def eq_cancel_all(H: Hypergraph, trace: ReductionTrace | None = None) -> Hypergraph:
    """Cancel every face of size >= 2 whose vertices are all closed."""
    while True:
        closed = H.closed_vertices()
        bad = sorted((sorted(f) for f in H.faces if len(f) >= 2 and f <= closed))
        if not bad:
            return H
        F = frozenset(bad[0])
        if trace is not None:
            trace.add("eq-cancel", H, faces=[F])
        H = cancel_face(H, F)


def string_formula(closed: list[bool]) -> int:
    """|V| - s - sum floor((n_i - 1)/3) + M for a string without adjacent closed vertices."""
    lengths = [ln for ln in profile_from_flags(closed).runs]
    return len(closed) - len(lengths) - sum((x - 1) // 3 for x in lengths) + count_11(lengths)


def open_cycle_formula(n: int) -> int:
    return n - 1 - (n - 2) // 3


def pd_string(S: Hypergraph, anchor: int | None = None) -> int:
    """pd of a string hypergraph via its closed form."""
    if not is_string(S):
        raise UnsupportedShape("not a string")
    if not is_separated(S):
        return pd_recursive(S)
    T = eq_cancel_all(S)
    if T is not S:
        return sum(pd_string(C) for C in components(T))
    order = string_order(S, anchor)
    return string_formula([S.is_closed(u) for u in order])


def _pd_strings(H: Hypergraph) -> int:
    return sum(pd_string(C) for C in components(H)) if H.mu else 0


def pd_cycle(C: Hypergraph) -> int:
    """pd of a cycle: all-open closed form, otherwise split at a closed vertex."""
    if not is_cycle(C):
        raise UnsupportedShape("not a cycle")
    if not is_separated(C):
        return pd_recursive(C)
    T = eq_cancel_all(C)
    if T is not C:
        return _pd_strings(T)
    closed = sorted(C.closed_vertices())
    if not closed:
        return open_cycle_formula(C.mu)
    v = closed[0]
    return max(_pd_strings(remove_vertex(C, v)), _pd_strings(colon_vertex(C, v)) + 1)


def cycle_closed_form(C: Hypergraph) -> int:
    """|V| - s - sum floor((n_i - 1)/3) + M with runs read around the cycle."""
    if not is_cycle(C):
        raise UnsupportedShape("not a cycle")
    from .invariants import cycle_order
    opens = [not C.is_closed(v) for v in cycle_order(C)]
    runs = backbone_runs_cyclic(opens)
    if runs is None:
        return open_cycle_formula(C.mu)
    return C.mu - len(runs) - sum((x - 1) // 3 for x in runs) + count_11_cyclic(runs)


# -- branches ----------------------------------------------------------------

def _adj(H: Hypergraph) -> dict[int, set[int]]:
    adj = {v: set() for v in H.vertices}
    for u, w in H.edges():
        adj[u].add(w)
        adj[w].add(u)
    return adj


def branches(H: Hypergraph) -> list[tuple[int, list[int]]]:
    """(joint w, [v_1..v_n]) for every string hanging from a joint; v_n is the leaf."""
    adj = _adj(H)
    out = []
    for w in H.vertices:
        if len(adj[w]) < 3:
            continue
        for u in sorted(adj[w]):
            path = [u]
            prev, cur = w, u
            ok = True
            while len(adj[cur]) == 2:
                nxt = next(x for x in adj[cur] if x != prev)
                if nxt == w:
                    ok = False
                    break
                prev, cur = cur, nxt
                path.append(cur)
            if ok and len(adj[cur]) == 1:
                out.append((w, path))
    return out


def _walk_branch(H: Hypergraph, v1: int) -> list[int]:
    adj = _adj(H)
    if len(adj[v1]) != 1:
        raise ValueError(f"vertex {v1} is not a branch endpoint")
    path = [v1]
    prev, cur = None, v1
    while True:
        nxt = [x for x in adj[cur] if x != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        if len(adj[cur]) > 2:
            break
        path.append(cur)
    return path


def branch_trim(H: Hypergraph, v1: int) -> tuple[Hypergraph, int]:
    """Drop the endpoint of a branch: (H_{v1}, +1) or (H_{v1,v2,v3}, +2)."""
    path = _walk_branch(H, v1)
    if len(path) < 2:
        raise ValueError("branch has fewer than two vertices")
    v2 = path[1]
    if H.is_closed(v2):
        return remove_vertex(H, v1), 1
    nb = [x for x in H.edge_neighbors(v2) if x != v1]
    if len(nb) != 1:
        raise ValueError("second vertex of the branch must have degree 2")
    return remove_vertex(H, v1, v2, nb[0]), 2


@dataclass
class AttachCut:
    edge: frozenset
    case: str
    host: Hypergraph
    piece: Hypergraph
    piece_pd: int
    formula_pd: int
    profile: StringProfile


def attach_case(H: Hypergraph, path: list[int], amended: bool = True) -> tuple[str, StringProfile]:
    """Which edge to cut: 'i' for v_{n~+1} v_{n~+2}, 'ii' for v_{n~} v_{n~+1}.

    With ``amended`` an open v_1 lying in a counted 1-1 configuration next
    to an open joint also takes the shifted cut; the unshifted cut
    overcounts by one there.
    """
    prof = profile_from_flags([H.is_closed(u) for u in path], path)
    first_open = not prof.closed[0]
    if first_open and prof.runs and prof.runs[0] % 3 == 0 and not prof.in_10_configuration(0):
        return "i", prof
    if amended and first_open and prof.in_11_configuration(0):
        return "i", prof
    return "ii", prof


def attach_string_cut(H: Hypergraph, w: int, path: list[int], amended: bool = True,
                      force: str | None = None) -> AttachCut:
    """Cut a long branch off the joint w at the position given by nr(S; v_n).

    ``force`` ('i' or 'ii') overrides the case choice, which is how a wrong
    cut can be produced deliberately.
    """
    if len(path) < 3:
        raise ValueError("branch too short for a string cut")
    case, prof = attach_case(H, path, amended)
    if force is not None:
        if force not in ("i", "ii"):
            raise ValueError("force must be 'i' or 'ii'")
        case = force
    nt = prof.nr
    seq = [w] + list(path)  # seq[k] is v_k, with v_0 = w
    if case == "i":
        a, b = nt + 1, nt + 2
    else:
        a, b = nt, nt + 1
    if b >= len(seq):
        raise UnsupportedShape("cut position falls outside the branch")
    E = frozenset((seq[a], seq[b]))
    cut = cut_face(H, E)
    host = piece = None
    for C in components(cut):
        labs = set(C.labels)
        if H.label(w) in labs:
            host = C
        if H.label(path[-1]) in labs:
            piece = C
    if host is None or piece is None or host is piece:
        raise UnsupportedShape("string cut did not detach the branch")
    formula = prof.m_count + prof.w_count + 2 * prof.q
    return AttachCut(E, case, host, piece, pd_string(piece), formula, prof)


def cut_tree_step(H: Hypergraph, w: int, path: list[int]) -> Hypergraph:
    """Short branch at a joint: cancel the edge (length 1) or remove w (length 2)."""
    if len(path) == 1:
        return cancel_face(H, {w, path[0]})
    if len(path) == 2:
        return remove_vertex(H, w)
    raise ValueError("branch longer than two; cut it with attach_string_cut first")


# -- the unique-cycle driver --------------------------------------------------

def pd_unique_cycle(H: Hypergraph) -> tuple[int, ReductionTrace]:
    """Reduce a 1-dimensional hypergraph to strings and cycles, adding up pd."""
    if not H.is_one_dimensional():
        raise UnsupportedShape("hypergraph is not 1-dimensional")
    trace = ReductionTrace()
    work = [minimalize(H) if not is_separated(H) else H]
    while work:
        G = eq_cancel_all(work.pop(), trace)
        comps = components(G)
        if len(comps) > 1:
            work.extend(reversed(comps))
            continue
        if G.mu == 0:
            continue
        if G.mu == 1:
            trace.add("isolated", G, vertices=[1], delta=1)
            continue
        if is_string(G):
            trace.add("string-formula", G, vertices=list(G.vertices), delta=pd_string(G))
            continue
        if is_cycle(G):
            trace.add("cycle-formula", G, vertices=list(G.vertices), delta=pd_cycle(G))
            continue
        found = branches(G)
        if not found:
            raise UnsupportedShape("component has several cycles and no branch to detach")
        w, path = max(found, key=lambda wp: (len(wp[1]), -wp[0], [-x for x in wp[1]]))
        if len(path) >= 3:
            cut = attach_string_cut(G, w, path)
            trace.add("attach-cut-" + cut.case, G, vertices=[w] + path, faces=[cut.edge],
                      delta=cut.piece_pd)
            work.append(cut.host)
        elif len(path) == 2:
            trace.add("cutTree-b", G, vertices=[w] + path)
            work.append(remove_vertex(G, w))
        else:
            trace.add("cutTree-a", G, vertices=[w] + path, faces=[{w, path[0]}])
            work.append(cancel_face(G, {w, path[0]}))
    return trace.total, trace


def _component_of(G: Hypergraph, labels) -> Hypergraph:
    want = set(labels)
    for C in components(G):
        if want <= set(C.labels):
            return C
    raise ValueError(f"no component holds {sorted(want, key=_sort_key)}")


def _drop(G: Hypergraph, C: Hypergraph) -> Hypergraph:
    return remove_vertex(G, *(G.vertex_of_label(x) for x in C.labels))


def replay_trace(H: Hypergraph, steps) -> int:
    """Re-run a ``pd_unique_cycle`` trace with core operations and return pd.

    Every delta is recomputed from the graph the step acts on; a step that
    does not fit the current graph, or a graph left over at the end, raises
    ValueError.
    """
    G = minimalize(H) if not is_separated(H) else H
    total = 0
    for st in steps:
        if isinstance(st, dict):
            st = ReductionStep(st["rule"], tuple(st["vertices"]),
                               tuple(tuple(f) for f in st["faces"]), st["delta"])
        pos = G.vertex_of_label
        if st.rule in ("eq-cancel", "cutTree-a"):
            G = cancel_face(G, {pos(x) for x in st.faces[0]})
            continue
        if st.rule == "cutTree-b":
            G = remove_vertex(G, pos(st.vertices[0]))
            continue
        if st.rule in ("isolated", "string-formula", "cycle-formula"):
            C = _component_of(G, st.vertices)
            if set(C.labels) != set(st.vertices):
                raise ValueError(f"{st.rule} step does not cover its component")
            if st.rule == "isolated":
                delta = 1 if C.mu == 1 else -1
            elif st.rule == "string-formula":
                delta = pd_string(C) if is_string(C) else -1
            else:
                delta = pd_cycle(C) if is_cycle(C) else -1
            if delta != st.delta:
                raise ValueError(f"{st.rule} step claims {st.delta}, recomputed {delta}")
            total += delta
            G = _drop(G, C)
            continue
        if st.rule in ("attach-cut-i", "attach-cut-ii"):
            G = cut_face(G, {pos(x) for x in st.faces[0]})
            piece = _component_of(G, [st.vertices[-1]])
            if st.vertices[0] in piece.labels or not is_string(piece):
                raise ValueError("string cut did not detach a string")
            delta = pd_string(piece)
            if delta != st.delta:
                raise ValueError(f"{st.rule} step claims {st.delta}, recomputed {delta}")
            total += delta
            G = _drop(G, piece)
            continue
        raise UnsupportedShape(f"rule {st.rule} cannot be replayed")
    if G.mu:
        raise ValueError(f"{G.mu} vertices left after the last step")
    return total


# -- the scanning algorithm --------------------------------------------------

def _deg(G: Hypergraph, pos: dict, i: int, mu: int) -> int:
    """Number of 1-dimensional neighbors of i, giving up at 3."""
    n = 0
    vi = pos[i]
    for j in range(1, mu + 1):
        if j == i or j not in pos:
            continue
        if frozenset((vi, pos[j])) in G.faces:
            n += 1
            if n == 3:
                break
    return n


def algpd_connected(H: Hypergraph) -> tuple[int, ReductionTrace]:
    """Scan vertices in ascending order, trimming leaves, until a cycle or nothing is left."""
    if not H.is_one_dimensional():
        raise UnsupportedShape("hypergraph is not 1-dimensional")
    mu = H.mu
    # work on original vertex numbers; user labels only for the trace
    user = H.labels
    G = H.with_labels(tuple(H.vertices))
    trace = ReductionTrace()

    def rec(rule, vs=(), fs=(), delta=0):
        trace.add(rule, None, vertices=tuple(user[v - 1] for v in vs),
                  faces=tuple(tuple(user[v - 1] for v in sorted(f)) for f in fs), delta=delta)

    P = 0
    v = mu
    i = 1
    while True:
        # Step 1
        if G.mu == 0:
            return P, trace
        c = 0
        if i == mu + 1:
            i = 1
        # Step 2
        while True:
            pos = {lab: k for k, lab in enumerate(G.labels, start=1)}
            if i not in pos:
                i = i + 1 if i < mu else 1
                continue
            d = _deg(G, pos, i, mu)
            if d == 0:
                rec("isolated", [i], delta=1)
                G = remove_vertex(G, pos[i])
                P, v, i = P + 1, v - 1, i + 1
                break
            if d == 1:
                # Step 3
                j = next(j for j in range(1, mu + 1)
                         if j != i and j in pos and frozenset((pos[i], pos[j])) in G.faces)
                # Step 4
                if G.is_closed(pos[j]):
                    rec("red", [i, j], delta=1)
                    G = remove_vertex(G, pos[i])
                    P, v, i = P + 1, v - 1, i + 1
                    break
                # Step 5
                if _deg(G, pos, j, mu) != 2:
                    rec("cutTree-a", [j, i], [(i, j)])
                    rec("isolated", [i], delta=1)
                    keep = [u for u in G.vertices if u != pos[i]]
                    drop = {frozenset((pos[i], pos[j])), frozenset((pos[i],))}
                    G = induced(G, keep, [f for f in G.faces if f not in drop])
                    P, v, i = P + 1, v - 1, i + 1
                    break
                # Step 6
                k = next(k for k in range(1, mu + 1)
                         if k not in (i, j) and k in pos and frozenset((pos[j], pos[k])) in G.faces)
                rec("ref2b", [i, j, k], delta=2)
                G = remove_vertex(G, pos[i], pos[j], pos[k])
                P, v, i = P + 2, v - 3, i + 1
                break
            c += 1
            if c == v:
                # Step 7
                if not is_cycle(G):
                    raise UnsupportedShape("scan stopped on a component that is not a cycle")
                pc = pd_cycle(G)
                rec("cycle-formula", list(G.labels), delta=pc)
                return P + pc, trace
            i = i + 1 if i != mu else 1


# -- general recursion -------------------------------------------------------

def pd_recursive(H: Hypergraph, memo: dict | None = None) -> int:
    """max(pd(H_v), pd(Q_v) + 1) at closed vertices, down to closed-form pieces."""
    memo = {} if memo is None else memo
    return _recursive(minimalize(H), memo)


def _recursive(H: Hypergraph, memo: dict) -> int:
    if H.mu == 0:
        return 0
    comps = components(H)
    if len(comps) > 1:
        return sum(_recursive(C, memo) for C in comps)
    key = canonical_form(H)
    if key in memo:
        return memo[key]
    closed = sorted(H.closed_vertices())
    if len(closed) == H.mu:
        val = H.mu
    elif not closed:
        if is_cycle(H):
            val = open_cycle_formula(H.mu)
        else:
            raise NeedsOracle("every vertex is open and the component is not a cycle")
    else:
        v = closed[0]
        val = max(_recursive(remove_vertex(H, v), memo),
                  _recursive(colon_vertex(H, v), memo) + 1)
    memo[key] = val
    return val


# -- stars -------------------------------------------------------------------

def _star_formula_connected(C: Hypergraph, skeleton_of: Hypergraph | None = None) -> tuple[int, str]:
    """Closed form for one connected component made of small stars."""
    base = C if skeleton_of is None else skeleton_of
    dec = classify_connected(base)
    if dec is None:
        raise UnsupportedShape("not a string, cycle or tree of stars")
    stars = dec.stars
    n = C.mu
    if dec.d > 2:
        raise UnsupportedShape("a star has a branch longer than two")
    if skeleton_of is not None and dec.d > 1:
        raise UnsupportedShape("higher-dimensional faces need 1-stars")
    T = dec.T
    if stars and all(s.d == 2 for s in stars):
        return n - T, "2-stars"
    if dec.tag not in ("string", "cycle"):
        raise UnsupportedShape("trees of stars need every star to be a proper 2-star")
    removed = [s.d == 2 for s in stars]
    opens = [s.open_center for s in stars]
    L = len(stars)
    cyclic = dec.tag == "cycle"
    if cyclic and T == 0 and all(opens):
        return n - 1 - (L - 2) // 3, "open-cycle"
    # centers next to a removed center become closed
    for k in range(L):
        if removed[k]:
            continue
        nbrs = []
        if k > 0 or cyclic:
            nbrs.append((k - 1) % L)
        if k < L - 1 or cyclic:
            nbrs.append((k + 1) % L)
        if any(removed[m] for m in nbrs if m != k):
            opens[k] = False
    segments: list[tuple[list[bool], bool]] = []
    if cyclic and T == 0:
        segments.append((opens, True))
    else:
        start = next((k for k in range(L) if removed[k]), None) if cyclic else None
        order = list(range(L)) if start is None else [(start + t) % L for t in range(L)]
        cur: list[bool] = []
        for k in order:
            if removed[k]:
                if cur:
                    segments.append((cur, False))
                cur = []
            else:
                cur.append(opens[k])
        if cur:
            segments.append((cur, False))
    runs: list[int] = []
    mstar = 0
    for flags, cyc in segments:
        if cyc:
            r = backbone_runs_cyclic(flags) or []
            mstar += count_11_cyclic(r)
        else:
            r = backbone_runs(flags)
            mstar += count_11(r)
        runs.extend(r)
    val = n - T - len(runs) - sum((x - 1) // 3 for x in runs) + mstar
    return val, "stars"


def _higher_faces_ok(H: Hypergraph, sk: Hypergraph) -> bool:
    dec = classify_connected(sk)
    if dec is None:
        return False
    owner = {}
    for s in dec.stars:
        group = {s.center} | {u for b in s.branches for u in b}
        for u in group:
            owner[u] = s.center
    for f in H.faces:
        if len(f) > 2 and len({owner[u] for u in f}) > 1:
            return False
    return True


def pd_stars(H: Hypergraph, trace: ReductionTrace | None = None) -> int:
    """Closed forms for unions of trees/cycles of proper 2-stars, strings and
    cycles of 2-stars, and strings/cycles of 1-stars with private higher faces."""
    if not is_separated(H):
        raise UnsupportedShape("star formulas need a separated hypergraph")
    trace = _child(trace)
    G = eq_cancel_all(H, trace)
    total = 0
    for C in components(G):
        if C.mu == 1:
            trace.add("isolated", C, vertices=[1], delta=1)
            total += 1
            continue
        if C.is_one_dimensional():
            val, _ = _star_formula_connected(C)
        else:
            low = [f for f in C.faces if len(f) <= 2]
            covered = set().union(*low) if low else set()
            if len(covered) != C.mu:
                raise UnsupportedShape("some vertex lies only in higher-dimensional faces")
            sk = Hypergraph(C.mu, frozenset(low), C.labels)
            if not is_separated(sk) or not _higher_faces_ok(C, sk):
                raise UnsupportedShape("higher-dimensional faces are shared between stars")
            val, _ = _star_formula_connected(C, skeleton_of=sk)
        trace.add("star-formula", C, vertices=list(C.vertices), delta=val)
        total += val
    return total


def star_reduced(H: Hypergraph) -> Hypergraph:
    """H* of a string or cycle of 2-stars: the centers of proper 2-stars removed."""
    dec = classify_connected(H)
    if dec is None:
        raise UnsupportedShape("not a string or cycle of stars")
    centers = [s.center for s in dec.stars if s.d == 2]
    return remove_vertex(H, *centers) if centers else H


# -- dispatch ----------------------------------------------------------------

METHODS = ("auto", "algpd", "reduce", "recursive", "stars", "oracle")


def compute_pd(H: Hypergraph, method: str = "auto", fallback: str | None = None) -> tuple[int, ReductionTrace]:
    """pd(H) by the named method; 'auto' tries stars, then reduce, then recursive."""
    from .oracle import pd_bruteforce

    trace = ReductionTrace()
    if method == "oracle":
        val = pd_bruteforce(H)
        trace.add("oracle-fallback", H, vertices=list(H.vertices), delta=val)
        return val, trace
    if method == "stars":
        t = ReductionTrace()
        return pd_stars(H, t), t
    if method == "algpd":
        total = 0
        G = minimalize(H) if not is_separated(H) else H
        for C in components(G):
            p, t = algpd_connected(C)
            trace.steps.extend(t.steps)
            total += p
        return total, trace
    if method == "reduce":
        return pd_unique_cycle(H)
    if method == "recursive":
        val = pd_recursive(H)
        trace.add("recursive-split", H, vertices=list(H.vertices), delta=val)
        return val, trace
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    for attempt in ("stars", "reduce", "recursive"):
        try:
            return compute_pd(H, attempt)
        except (UnsupportedShape, NeedsOracle):
            continue
    if fallback == "oracle":
        return compute_pd(H, "oracle")
    raise UnsupportedShape("no combinatorial method applies; rerun with --fallback oracle")


__all__ = [
    "RULES",
    "ReductionStep",
    "ReductionTrace",
    "AttachCut",
    "eq_cancel_all",
    "string_formula",
    "open_cycle_formula",
    "cycle_closed_form",
    "pd_string",
    "pd_cycle",
    "branches",
    "branch_trim",
    "attach_case",
    "attach_string_cut",
    "cut_tree_step",
    "pd_unique_cycle",
    "replay_trace",
    "algpd_connected",
    "pd_recursive",
    "pd_stars",
    "star_reduced",
    "compute_pd",
    "METHODS",
]
