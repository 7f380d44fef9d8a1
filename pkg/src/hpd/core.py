"""Hypergraphs, square-free monomial ideals and the operations between them.

A hypergraph here is the dual object of a square-free monomial ideal: its
vertices 1..mu are the minimal generators, and every variable contributes the
face of generators it divides.  Values are immutable; every operation returns
a new hypergraph with vertices renumbered densely, carrying the original
labels along so results can be mapped back to the input.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .errors import MinimalityError

Face = frozenset


def _face_key(face: Iterable[int]) -> tuple:
    f = sorted(face)
    return (len(f), f)


@dataclass(frozen=True)
class Hypergraph:
    """Vertex count plus a set of nonempty faces covering {1..mu}.

    ``labels[v-1]`` is the user-facing name of vertex ``v``; labels do not
    take part in equality.
    """

    mu: int
    faces: frozenset
    labels: tuple = field(default=(), compare=False)

    def __post_init__(self):
        faces = frozenset(frozenset(f) for f in self.faces)
        object.__setattr__(self, "faces", faces)
        if self.mu < 0:
            raise ValueError("mu must be non-negative")
        covered = set()
        for f in faces:
            if not f:
                raise ValueError("faces must be nonempty")
            for v in f:
                if not isinstance(v, int) or v < 1 or v > self.mu:
                    raise ValueError(f"vertex {v!r} outside 1..{self.mu}")
            covered |= f
        if len(covered) != self.mu:
            missing = sorted(set(range(1, self.mu + 1)) - covered)
            raise ValueError(f"vertices {missing} lie in no face")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(1, self.mu + 1)))
        elif len(self.labels) != self.mu:
            raise ValueError("need exactly one label per vertex")
        else:
            object.__setattr__(self, "labels", tuple(self.labels))

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[int]], mu: int | None = None,
                   labels: Sequence | None = None) -> "Hypergraph":
        fs = [frozenset(f) for f in faces]
        if mu is None:
            mu = max((max(f) for f in fs if f), default=0)
        return cls(mu, frozenset(fs), tuple(labels) if labels else ())

    # -- basic structure -------------------------------------------------
    @property
    def vertices(self) -> range:
        return range(1, self.mu + 1)

    def sorted_faces(self) -> list[tuple[int, ...]]:
        return [tuple(sorted(f)) for f in sorted(self.faces, key=_face_key)]

    def is_closed(self, v: int) -> bool:
        return frozenset((v,)) in self.faces

    def closed_vertices(self) -> frozenset:
        return frozenset(next(iter(f)) for f in self.faces if len(f) == 1)

    def open_vertices(self) -> frozenset:
        """W(H): vertices whose singleton is not a face."""
        return frozenset(self.vertices) - self.closed_vertices()

    def dim(self) -> int:
        return max((len(f) for f in self.faces), default=0) - 1

    def is_one_dimensional(self) -> bool:
        return all(len(f) <= 2 for f in self.faces)

    def faces_containing(self, v: int) -> list[frozenset]:
        return [f for f in self.faces if v in f]

    def neighbors(self, v: int) -> frozenset:
        """Vertices sharing some face with v."""
        out = set()
        for f in self.faces:
            if v in f:
                out |= f
        out.discard(v)
        return frozenset(out)

    def edge_neighbors(self, v: int) -> frozenset:
        """Neighbors through 1-dimensional faces only."""
        return frozenset(u for f in self.faces if len(f) == 2 and v in f for u in f if u != v)

    def edges(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(f)) for f in self.faces if len(f) == 2)

    def label(self, v: int):
        return self.labels[v - 1]

    def vertex_of_label(self, lab) -> int:
        return self.labels.index(lab) + 1

    def with_labels(self, labels: Sequence) -> "Hypergraph":
        return Hypergraph(self.mu, self.faces, tuple(labels))

    def __repr__(self) -> str:
        body = ",".join("{" + ",".join(map(str, f)) + "}" for f in self.sorted_faces())
        return f"Hypergraph(mu={self.mu}, {{{body}}})"


@dataclass(frozen=True)
class MonomialIdeal:
    """Square-free monomial ideal; generators are sets of variable indices.

    The generating set is allowed to be redundant (``is_minimal`` tells);
    operations that need minimality check it.
    """

    var_names: tuple
    generators: tuple

    def __post_init__(self):
        names = tuple(str(n) for n in self.var_names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        gens = tuple(frozenset(g) for g in self.generators)
        for g in gens:
            if not g:
                raise ValueError("the unit monomial is not a valid generator")
            if min(g) < 0 or max(g) >= len(names):
                raise ValueError("generator uses an unknown variable")
        object.__setattr__(self, "var_names", names)
        object.__setattr__(self, "generators", gens)

    @classmethod
    def from_names(cls, gens: Iterable[Iterable[str]], var_names: Sequence[str] | None = None) -> "MonomialIdeal":
        gens = [list(dict.fromkeys(g)) for g in gens]
        if var_names is None:
            seen: dict[str, None] = {}
            for g in gens:
                for x in g:
                    seen.setdefault(x, None)
            var_names = list(seen)
        index = {x: i for i, x in enumerate(var_names)}
        return cls(tuple(var_names), tuple(frozenset(index[x] for x in g) for g in gens))

    @property
    def num_vars(self) -> int:
        return len(self.var_names)

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    def is_minimal(self) -> bool:
        gens = self.generators
        for a, ga in enumerate(gens):
            for b, gb in enumerate(gens):
                if a != b and ga <= gb:
                    return False
        return True

    def minimalized(self) -> "MonomialIdeal":
        keep = _minimal_indices(list(self.generators))
        return MonomialIdeal(self.var_names, tuple(self.generators[i] for i in keep))

    def used_variables(self) -> list[int]:
        used = set()
        for g in self.generators:
            used |= g
        return sorted(used)

    def compact(self) -> "MonomialIdeal":
        """Drop variables dividing no generator."""
        used = self.used_variables()
        remap = {old: new for new, old in enumerate(used)}
        return MonomialIdeal(tuple(self.var_names[i] for i in used),
                             tuple(frozenset(remap[x] for x in g) for g in self.generators))

    def generator_strings(self) -> list[str]:
        return ["*".join(self.var_names[i] for i in sorted(g)) for g in self.generators]

    def __repr__(self) -> str:
        return "MonomialIdeal(" + ", ".join(self.generator_strings()) + ")"


class DegreeClass(enum.Enum):
    ZERO = 0
    ONE = 1
    TWO = 2
    MORE_THAN_TWO = 3


# -- generator-side rebuilding ----------------------------------------------

def _minimal_indices(supports: list) -> list[int]:
    """Indices of generators surviving minimalization (first copy of equals)."""
    keep = []
    for a, sa in enumerate(supports):
        redundant = False
        for b, sb in enumerate(supports):
            if a == b:
                continue
            if sb < sa or (sb == sa and b < a):
                redundant = True
                break
        if not redundant:
            keep.append(a)
    return keep


def _from_supports(supports: list, labels: Sequence, minimalize: bool = True) -> Hypergraph:
    """Dual hypergraph of generators given by their variable supports.

    ``supports[j]`` is the set of (hashable) variables dividing generator j.
    """
    for s in supports:
        if not s:
            raise ValueError("a generator became the unit monomial; the ideal is the whole ring")
    idx = _minimal_indices(supports) if minimalize else list(range(len(supports)))
    faces: dict[Hashable, set] = {}
    for new, old in enumerate(idx, start=1):
        for x in supports[old]:
            faces.setdefault(x, set()).add(new)
    return Hypergraph(len(idx), frozenset(frozenset(f) for f in faces.values()),
                      tuple(labels[i] for i in idx))


def _supports(H: Hypergraph) -> list[set]:
    sup: list[set] = [set() for _ in range(H.mu)]
    for f in H.faces:
        for v in f:
            sup[v - 1].add(f)
    return sup


def minimalize(H: Hypergraph) -> Hypergraph:
    """Hypergraph of the minimalized standard ideal; separated by construction."""
    return _from_supports(_supports(H), H.labels)


# -- duality -----------------------------------------------------------------

def from_ideal(ideal: MonomialIdeal) -> Hypergraph:
    """Dual hypergraph H(I): one face per variable support, vertices = generators."""
    if not ideal.is_minimal():
        raise MinimalityError("generating set is not minimal")
    faces: dict[int, set] = {}
    for j, g in enumerate(ideal.generators, start=1):
        for x in g:
            faces.setdefault(x, set()).add(j)
    return Hypergraph(len(ideal.generators), frozenset(frozenset(f) for f in faces.values()))


def _var_name(face: Iterable[int]) -> str:
    return "x_" + "_".join(str(v) for v in sorted(face))


def to_standard_ideal(H: Hypergraph) -> MonomialIdeal:
    """Standard ideal I(H): one variable x_F per face, m_j = prod of x_F over F containing j."""
    faces = sorted(H.faces, key=_face_key)
    names = tuple(_var_name(f) for f in faces)
    gens = tuple(frozenset(i for i, f in enumerate(faces) if j in f) for j in H.vertices)
    return MonomialIdeal(names, gens)


def is_separated(H: Hypergraph) -> bool:
    sup = _supports(H)
    for a in range(H.mu):
        for b in range(a + 1, H.mu):
            if sup[a] <= sup[b] or sup[b] <= sup[a]:
                return False
    return True


def degree_class(H: Hypergraph, i: int) -> DegreeClass:
    """Count 1-dimensional neighbors of i, stopping once three are found."""
    if i < 1 or i > H.mu:
        raise IndexError(f"vertex {i} outside 1..{H.mu}")
    n = 0
    for j in H.vertices:
        if j == i:
            continue
        if frozenset((i, j)) in H.faces:
            n += 1
            if n == 3:
                return DegreeClass.MORE_THAN_TWO
    return DegreeClass(n)


# -- the four operations -----------------------------------------------------

def remove_vertex(H: Hypergraph, *vs: int) -> Hypergraph:
    """Remotion H_v (iterated for several vertices): drop the generators m_v."""
    drop = set(vs)
    for v in drop:
        if v < 1 or v > H.mu:
            raise IndexError(f"vertex {v} outside 1..{H.mu}")
    sup = _supports(H)
    keep = [j for j in range(H.mu) if j + 1 not in drop]
    return _from_supports([sup[j] for j in keep], [H.labels[j] for j in keep])


def colon_vertex(H: Hypergraph, v: int) -> Hypergraph:
    """Q_v: the hypergraph of (I_v : m_v)."""
    if v < 1 or v > H.mu:
        raise IndexError(f"vertex {v} outside 1..{H.mu}")
    sup = _supports(H)
    mv = sup[v - 1]
    keep = [j for j in range(H.mu) if j != v - 1]
    return _from_supports([sup[j] - mv for j in keep], [H.labels[j] for j in keep])


def cancel_face(H: Hypergraph, F: Iterable[int], minimalize: bool = True) -> Hypergraph:
    """H : F, the hypergraph of I : x_F.

    With ``minimalize=False`` the redundant generators are kept, which gives
    the (possibly non-separated) face set obtained by deleting F literally.
    """
    F = frozenset(F)
    if F not in H.faces:
        raise ValueError(f"{sorted(F)} is not a face")
    sup = _supports(H)
    return _from_supports([s - {F} for s in sup], H.labels, minimalize=minimalize)


def cut_face(H: Hypergraph, F: Iterable[int]) -> Hypergraph:
    """H^F: replace x_F by one fresh variable per vertex of F."""
    F = frozenset(F)
    if F not in H.faces:
        raise ValueError(f"{sorted(F)} is not a face")
    faces = set(H.faces)
    faces.discard(F)
    faces.update(frozenset((v,)) for v in F)
    return Hypergraph(H.mu, frozenset(faces), H.labels)


def open_vertex(H: Hypergraph, v: int) -> Hypergraph:
    """H^0 for a closed v: delete the singleton face {v}."""
    single = frozenset((v,))
    if single not in H.faces:
        raise ValueError(f"vertex {v} is not closed")
    faces = set(H.faces)
    faces.discard(single)
    return Hypergraph(H.mu, frozenset(faces), H.labels)


def add_faces(H: Hypergraph, new: Iterable[Iterable[int]]) -> Hypergraph:
    return Hypergraph(H.mu, H.faces | frozenset(frozenset(f) for f in new), H.labels)


def remove_faces(H: Hypergraph, old: Iterable[Iterable[int]]) -> Hypergraph:
    return Hypergraph(H.mu, H.faces - frozenset(frozenset(f) for f in old), H.labels)


# -- structural helpers ------------------------------------------------------

def induced(H: Hypergraph, U: Iterable[int], faces: Iterable[frozenset]) -> Hypergraph:
    """Renumber the vertex subset U densely and keep the given faces (inside U)."""
    order = sorted(set(U))
    pos = {v: i for i, v in enumerate(order, start=1)}
    fs = frozenset(frozenset(pos[v] for v in f) for f in faces)
    return Hypergraph(len(order), fs, tuple(H.labels[v - 1] for v in order))


def components(H: Hypergraph) -> list[Hypergraph]:
    """Connected components under the share-a-face relation."""
    parent = list(range(H.mu + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f in H.faces:
        it = iter(f)
        a = find(next(it))
        for b in it:
            rb = find(b)
            if rb != a:
                parent[rb] = a
    groups: dict[int, list[int]] = {}
    for v in H.vertices:
        groups.setdefault(find(v), []).append(v)
    out = []
    for vs in sorted(groups.values()):
        s = set(vs)
        out.append(induced(H, vs, [f for f in H.faces if f <= s]))
    return out


def is_connected(H: Hypergraph) -> bool:
    return H.mu <= 1 or len(components(H)) == 1


def disjoint_union(*parts: Hypergraph) -> Hypergraph:
    faces = []
    labels = []
    offset = 0
    for P in parts:
        faces.extend(frozenset(v + offset for v in f) for f in P.faces)
        labels.extend(P.labels)
        offset += P.mu
    if len(set(labels)) != len(labels):
        labels = []
    return Hypergraph(offset, frozenset(faces), tuple(labels))


def restrict(H: Hypergraph, U: Iterable[int]) -> Hypergraph:
    """H_U: faces contained in U (every vertex of U must stay covered)."""
    U = frozenset(U)
    return induced(H, U, [f for f in H.faces if f <= U])


def close_outside(H: Hypergraph, U: Iterable[int]) -> Hypergraph:
    """H with every vertex outside U made closed."""
    U = frozenset(U)
    return add_faces(H, [(i,) for i in H.vertices if i not in U])


def skeleton(H: Hypergraph, i: int) -> Hypergraph:
    """H^i: faces of dimension at most i."""
    return Hypergraph(H.mu, frozenset(f for f in H.faces if len(f) - 1 <= i), H.labels)


def relabel(H: Hypergraph, perm: Sequence[int]) -> Hypergraph:
    """Move vertex v to ``perm[v-1]`` (a permutation of 1..mu)."""
    fs = frozenset(frozenset(perm[v - 1] for v in f) for f in H.faces)
    labels = [None] * H.mu
    for v in H.vertices:
        labels[perm[v - 1] - 1] = H.labels[v - 1]
    return Hypergraph(H.mu, fs, tuple(labels))


__all__ = [
    "Hypergraph",
    "MonomialIdeal",
    "DegreeClass",
    "from_ideal",
    "to_standard_ideal",
    "is_separated",
    "degree_class",
    "minimalize",
    "remove_vertex",
    "colon_vertex",
    "cancel_face",
    "cut_face",
    "open_vertex",
    "add_faces",
    "remove_faces",
    "induced",
    "components",
    "is_connected",
    "disjoint_union",
    "restrict",
    "close_outside",
    "skeleton",
    "relabel",
]
