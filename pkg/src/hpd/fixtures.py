"""Named example hypergraphs with known projective dimensions.

Vertex numbers are 1-based; ``labels`` carry the names used in the
drawings (0-based for the nine-face example, f/g/z for the Ferrers ones).
Figures 4-7 were transcribed from their drawings; figure5 and figure7 use
the vertex labels of figure4 and figure6 so the reductions can be compared
vertex by vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Hypergraph


@dataclass(frozen=True)
class Fixture:
    name: str
    hypergraph: Hypergraph
    pd: int | None = None
    note: str = ""
    extra: dict = field(default_factory=dict, compare=False)


def _graph(edges, closed, mu=None, labels=None, higher=()) -> Hypergraph:
    faces = [list(e) for e in edges] + [[c] for c in closed] + [list(f) for f in higher]
    return Hypergraph.from_faces(faces, mu=mu, labels=labels)


def _relabelled(labels, edges, closed) -> Hypergraph:
    pos = {lab: i for i, lab in enumerate(labels, start=1)}
    return _graph([(pos[a], pos[b]) for a, b in edges], [pos[c] for c in closed],
                  mu=len(labels), labels=labels)


def nine_face() -> Hypergraph:
    """{6},{6,0},{0,5},{5},{0,1},{1,2},{2,3},{3,4},{4} on vertices 0..6."""
    raw = [[6], [6, 0], [0, 5], [5], [0, 1], [1, 2], [2, 3], [3, 4], [4]]
    return Hypergraph.from_faces([[v + 1 for v in f] for f in raw], mu=7, labels=range(7))


def six_cycle() -> Hypergraph:
    return _graph([(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)], [1, 4])


def open_cycle(n: int) -> Hypergraph:
    return _graph([(i, i % n + 1) for i in range(1, n + 1)], [], mu=n)


def seven_string() -> Hypergraph:
    """Path v1..v7 with v1, v5, v7 closed."""
    return _graph([(i, i + 1) for i in range(1, 7)], [1, 5, 7])


# -- the operations example --------------------------------------------------
# 1 = v (apex), 2..5 top row, 6 the closed right vertex, 7..9 bottom row
FIG1_V = 1
FIG1_F = (5, 6)
FIG1_E = (4, 5, 8, 9)
_FIG1_EDGES = [(1, 3), (2, 7), (2, 8), (2, 9), (3, 7), (3, 8), (4, 7), (4, 8),
               (5, 7), (5, 6), (6, 9)]


def figure1() -> Hypergraph:
    return _graph(_FIG1_EDGES, [1, 6], higher=[FIG1_E, (1, 2, 3)])


def figure2() -> dict[str, Hypergraph]:
    """The four panels as drawn: H_v, Q_v, H:F and H^E."""
    rest = [e for e in _FIG1_EDGES if e != (1, 3)]
    labels = list(range(2, 10))
    pos = {lab: i for i, lab in enumerate(labels, start=1)}

    def on8(edges, closed, higher):
        return _graph([(pos[a], pos[b]) for a, b in edges], [pos[c] for c in closed],
                      mu=8, labels=labels,
                      higher=[[pos[x] for x in f] for f in higher])

    hv = on8(rest + [(2, 3)], [3, 6], [FIG1_E])
    qv = on8(rest, [6], [FIG1_E])
    hf = _graph([e for e in _FIG1_EDGES if e != FIG1_F], [1, 6], higher=[FIG1_E, (1, 2, 3)])
    # the drawing of H^E leaves out the edge {6, 9}
    he = _graph([e for e in _FIG1_EDGES if e != (6, 9)], [1, 4, 5, 6, 8, 9], higher=[(1, 2, 3)])
    return {"H_v": hv, "Q_v": qv, "H:F": hf, "H^E": he}


# -- Ferrers examples --------------------------------------------------------

def figure3() -> Hypergraph:
    from .highpd import FerrersShape, ferrers_generate
    return ferrers_generate(FerrersShape((7, 7, 6, 5, 4), (0, 0, 1, 1, 2)))


FL_LABELS = tuple([f"f{i}" for i in range(1, 6)] + [f"g{j}" for j in range(1, 8)] + ["z1", "z2"])


def figure_fl() -> Hypergraph:
    idx = {lab: i for i, lab in enumerate(FL_LABELS, start=1)}
    rows = {"f1": 7, "f2": 5, "f3": 4, "f4": 3, "f5": 2}
    edges = [(f, f"g{j}") for f, lam in rows.items() for j in range(1, lam + 1)]
    edges += [("f4", "f5"), ("g2", "g3")]
    tri = [("z1", "g4", "f4"), ("g4", "g6", "z2"), ("f1", "g2", "g4"), ("f2", "f3", "g1")]
    faces = [[idx[a], idx[b]] for a, b in edges] + [[idx["z1"]], [idx["z2"]]]
    faces += [[idx[x] for x in t] for t in tri]
    return Hypergraph.from_faces(faces, mu=len(FL_LABELS), labels=FL_LABELS)


FL_PARTITION = (frozenset({"g1", "f2", "f3", "f4", "f5", "z1", "z2"}),
                frozenset({"f1", "g2", "g3", "g4", "g5", "g6", "g7"}))


# -- Figures 4/5: detaching branches until only strings remain ---------------

FIG4_CLOSED = [2, 3, 7, 10, 12, 15, 20, 21, 24, 28, 29, 31, 34, 35, 37]
FIG4_EDGES = [(1, 2), (1, 8), (3, 4), (4, 5), (5, 12), (6, 7), (6, 12), (7, 8), (8, 9),
              (9, 10), (11, 12), (11, 22), (12, 13), (12, 23), (13, 14), (14, 15), (14, 23),
              (15, 16), (15, 26), (16, 17), (16, 27), (17, 18), (18, 19), (19, 20), (21, 22),
              (22, 23), (23, 24), (23, 29), (23, 30), (23, 31), (24, 25), (24, 32), (25, 26),
              (26, 35), (27, 28), (30, 36), (32, 33), (33, 34), (36, 37)]
FIG4_CUT = [(17, 18), (24, 32)]
FIG4_CANCEL = [(11, 22), (26, 35)]
FIG4_REMOVE = [8, 12, 16, 23]

FIG5_VERTICES = [v for v in range(1, 38) if v not in FIG4_REMOVE]
FIG5_CLOSED = [1, 2, 3, 5, 6, 7, 9, 10, 11, 13, 14, 15, 17, 18, 20, 21, 22, 24, 27, 28,
               29, 30, 31, 32, 34, 35, 37]
FIG5_EDGES = [(1, 2), (3, 4), (4, 5), (6, 7), (9, 10), (13, 14), (14, 15), (15, 26),
              (18, 19), (19, 20), (21, 22), (24, 25), (25, 26), (27, 28), (30, 36),
              (32, 33), (33, 34), (36, 37)]


def figure4() -> Hypergraph:
    return _graph(FIG4_EDGES, FIG4_CLOSED)


def figure5() -> Hypergraph:
    return _relabelled(FIG5_VERTICES, FIG5_EDGES, FIG5_CLOSED)


# -- Figures 6/7: a cycle of 2-stars and its reduction ------------------------

FIG6_CLOSED = [1, 4, 5, 6, 9, 12, 14, 16, 17, 18, 19, 20, 24, 28, 29, 30, 31, 33, 35,
               36, 37]
FIG6_EDGES = [(1, 2), (2, 9), (3, 4), (3, 9), (5, 15), (6, 7), (6, 15), (7, 8), (8, 9),
              (8, 16), (8, 17), (8, 18), (9, 10), (10, 11), (11, 12), (12, 13), (12, 26),
              (12, 27), (13, 14), (15, 19), (15, 20), (20, 21), (21, 22), (21, 29), (21, 30),
              (22, 23), (23, 24), (23, 31), (23, 32), (23, 33), (24, 25), (24, 34), (25, 26),
              (26, 36), (27, 28), (32, 37), (34, 35)]
FIG6_REMOVE = [9, 12, 23, 24]

FIG7_VERTICES = [v for v in range(1, 38) if v not in FIG6_REMOVE]
FIG7_CLOSED = [1, 2, 3, 4, 5, 6, 8, 10, 11, 13, 14, 16, 17, 18, 19, 20, 22, 25, 26, 27,
               28, 29, 30, 31, 32, 33, 34, 35, 36, 37]
FIG7_EDGES = [(1, 2), (3, 4), (5, 15), (6, 7), (6, 15), (7, 8), (8, 16), (8, 17), (8, 18),
              (10, 11), (13, 14), (15, 19), (15, 20), (20, 21), (21, 22), (21, 29), (21, 30),
              (25, 26), (26, 36), (27, 28), (32, 37), (34, 35)]


def figure6() -> Hypergraph:
    return _graph(FIG6_EDGES, FIG6_CLOSED)


def figure7() -> Hypergraph:
    return _relabelled(FIG7_VERTICES, FIG7_EDGES, FIG7_CLOSED)


def fixtures() -> dict[str, Fixture]:
    fig2 = figure2()
    out = [
        Fixture("nine-face", nine_face(), 5, "branch 0-1-2-3-4 on the joint 0; labels are 0-based"),
        Fixture("six-cycle", six_cycle(), 4, "6-cycle with 1 and 4 closed"),
        Fixture("seven-cycle", open_cycle(7), 5, "open 7-cycle"),
        Fixture("seven-string", seven_string(), None, "path v1..v7, v1 v5 v7 closed",
                {"W_from_v1": 1, "W_from_v7": 0}),
        Fixture("figure1", figure1(), None, "operations example",
                {"v": FIG1_V, "F": FIG1_F, "E": FIG1_E}),
        Fixture("figure3-ferrers", figure3(), None, "lambda=(7,7,6,5,4), tau=(0,0,1,1,2)"),
        Fixture("figureFL", figure_fl(), len(FL_LABELS) - 2,
                "Ferrers subgraph plus higher faces and two closed vertices",
                {"partition": FL_PARTITION}),
        Fixture("figure4", figure4(), 28, "three cycles with hanging trees",
                {"cut": FIG4_CUT, "cancel": FIG4_CANCEL, "remove": FIG4_REMOVE}),
        Fixture("figure5", figure5(), 28, "figure4 after cutting, cancelling and removing"),
        Fixture("figure6", figure6(), 31, "cycle of 2-stars", {"remove": FIG6_REMOVE}),
        Fixture("figure7", figure7(), 31, "figure6 without its proper 2-star centers"),
    ]
    for key, H in fig2.items():
        out.append(Fixture(f"figure2-{key}", H, None, f"panel {key} of the operations example"))
    return {f.name: f for f in out}


__all__ = [
    "Fixture",
    "fixtures",
    "nine_face",
    "six_cycle",
    "open_cycle",
    "seven_string",
    "figure1",
    "figure2",
    "figure3",
    "figure_fl",
    "figure4",
    "figure5",
    "figure6",
    "figure7",
    "FIG1_V",
    "FIG1_F",
    "FIG1_E",
    "FL_LABELS",
    "FL_PARTITION",
    "FIG4_CUT",
    "FIG4_CANCEL",
    "FIG4_REMOVE",
    "FIG6_REMOVE",
]
