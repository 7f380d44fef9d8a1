"""Brute-force Betti numbers of square-free monomial ideals.

Everything here works from the generators alone and never calls into the
reduction code, so it can serve as ground truth.

Two engines compute the multigraded Betti numbers of R/I:

* ``"hochster"``: Hochster's formula as stated, beta_{i,s} = dim H~_{|s|-i-1}
  of the Stanley-Reisner complex restricted to the variable set s.  The
  complex lives on the variables, so the cost grows like 2^(number of
  variables).
* ``"nerve"`` (default): the same numbers after Alexander duality and the
  nerve lemma turn the restricted complex into the complex of generator sets
  whose lcm is a proper divisor of x^s; beta_{i,s} = dim H~_{i-2} of it.
  The cost grows like 2^(number of generators) instead.

Only squarefree degrees s in the lcm lattice can carry nonzero Betti numbers,
so both engines visit only those by default.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .core import Hypergraph, MonomialIdeal, is_separated, minimalize, to_standard_ideal
from .errors import CharacteristicDisagreement, OracleTooLarge

DEFAULT_CAP = 22
DEFAULT_CHARACTERISTICS = (2, 32003)


def oracle_cap() -> int:
    raw = os.environ.get("HPD_ORACLE_CAP")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_CAP


# -- ranks over finite fields -----------------------------------------------

def gf2_rank(rows: list[int]) -> int:
    """Rank over GF(2) of integer-bitset rows."""
    pivots: dict[int, int] = {}
    rank = 0
    for r in rows:
        while r:
            top = r.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = r
                rank += 1
                break
            r ^= p
    return rank


def gfp_rank(rows: list[dict[int, int]], p: int) -> int:
    """Rank over GF(p) of sparse rows given as {column: value}."""
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows:
        r = {c: v % p for c, v in row.items() if v % p}
        while r:
            col = max(r)
            piv = pivots.get(col)
            if piv is None:
                inv = pow(r[col], p - 2, p)
                pivots[col] = {c: (v * inv) % p for c, v in r.items()}
                rank += 1
                break
            factor = r[col]
            for c, v in piv.items():
                nv = (r.get(c, 0) - factor * v) % p
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
    return rank


def reduced_homology(faces: list[int], p: int) -> dict[int, int]:
    """Reduced homology ranks of a simplicial complex over GF(p).

    ``faces`` lists every face (including the empty face 0) as a bitmask;
    the empty face sits in degree -1, so the complex {empty} has H~_{-1} = 1.
    Returns {degree: rank} for the nonzero degrees only.
    """
    by_dim: dict[int, list[int]] = {}
    for f in faces:
        by_dim.setdefault(bin(f).count("1") - 1, []).append(f)
    if not by_dim:
        return {}
    index = {d: {f: i for i, f in enumerate(sorted(fs))} for d, fs in by_dim.items()}
    ranks: dict[int, int] = {}
    for d, fs in by_dim.items():
        if d < 0 or (d - 1) not in index:
            ranks[d] = 0
            continue
        lower = index[d - 1]
        if p == 2:
            rows = []
            for f in fs:
                row = 0
                g = f
                while g:
                    b = g & -g
                    row |= 1 << lower[f ^ b]
                    g ^= b
                rows.append(row)
            ranks[d] = gf2_rank(rows)
        else:
            rows = []
            for f in fs:
                row = {}
                g = f
                sign = 1
                while g:
                    b = g & -g
                    row[lower[f ^ b]] = sign
                    sign = -sign
                    g ^= b
                rows.append(row)
            ranks[d] = gfp_rank(rows, p)
    out = {}
    for d, fs in by_dim.items():
        h = len(fs) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


# -- Betti tables -----------------------------------------------------------

@dataclass
class BettiTable:
    """Multigraded Betti numbers beta_{i,s}(R/I) over one characteristic.

    Keys are (i, s) with s a frozenset of variable indices.
    """

    characteristic: int
    entries: dict = field(default_factory=dict)

    @property
    def pd(self) -> int:
        return max((i for (i, _), b in self.entries.items() if b), default=0)

    def graded(self) -> dict[int, int]:
        """Total Betti numbers beta_i."""
        out: dict[int, int] = {}
        for (i, _), b in self.entries.items():
            out[i] = out.get(i, 0) + b
        return dict(sorted(out.items()))

    def by_degree(self) -> dict[tuple[int, int], int]:
        """Coarse Betti numbers beta_{i,j} with j = |s|."""
        out: dict[tuple[int, int], int] = {}
        for (i, s), b in self.entries.items():
            out[(i, len(s))] = out.get((i, len(s)), 0) + b
        return dict(sorted(out.items()))


def _masks(ideal: MonomialIdeal) -> list[int]:
    return [sum(1 << x for x in g) for g in ideal.generators]


def _union_table(gens: list[int]) -> list[int]:
    n = len(gens)
    U = [0] * (1 << n)
    for S in range(1, 1 << n):
        low = S & -S
        U[S] = U[S ^ low] | gens[low.bit_length() - 1]
    return U


def _bits(mask: int) -> frozenset:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def _nerve_tables(gens: list[int], chars: tuple) -> dict[int, dict]:
    n = len(gens)
    U = _union_table(gens)
    tables: dict[int, dict] = {p: {(0, frozenset()): 1} for p in chars}
    lattice = sorted(set(U[1:]))
    for sigma in lattice:
        G = 0
        for j, g in enumerate(gens):
            if g & ~sigma == 0:
                G |= 1 << j
        faces = []
        S = G
        while True:
            if U[S] != sigma:
                faces.append(S)
            if S == 0:
                break
            S = (S - 1) & G
        for p in chars:
            for d, h in reduced_homology(faces, p).items():
                tables[p][(d + 2, _bits(sigma))] = h
    return tables


def _hochster_tables(gens: list[int], nvars: int, chars: tuple, all_subsets: bool) -> dict[int, dict]:
    tables: dict[int, dict] = {p: {} for p in chars}
    if all_subsets:
        degrees = range(1 << nvars)
    else:
        degrees = sorted(set(_union_table(gens)))
    for sigma in degrees:
        faces = []
        S = sigma
        while True:
            if all(g & ~S for g in gens):
                faces.append(S)
            if S == 0:
                break
            S = (S - 1) & sigma
        size = bin(sigma).count("1")
        for p in chars:
            for d, h in reduced_homology(faces, p).items():
                tables[p][(size - d - 1, _bits(sigma))] = h
    return tables


def betti_tables(ideal: MonomialIdeal, characteristics=DEFAULT_CHARACTERISTICS,
                 engine: str = "nerve", cap: int | None = None,
                 all_subsets: bool = False) -> dict[int, BettiTable]:
    """Betti tables of R/I for several characteristics in one pass."""
    cap = oracle_cap() if cap is None else cap
    chars = tuple(characteristics)
    gens = _masks(ideal)
    if engine == "nerve":
        if len(gens) > cap:
            raise OracleTooLarge(f"{len(gens)} generators exceed the oracle cap {cap}")
        raw = _nerve_tables(gens, chars)
    elif engine == "hochster":
        if ideal.num_vars > cap:
            raise OracleTooLarge(f"{ideal.num_vars} variables exceed the oracle cap {cap}")
        raw = _hochster_tables(gens, ideal.num_vars, chars, all_subsets)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return {p: BettiTable(p, raw[p]) for p in chars}


def betti_table(ideal: MonomialIdeal, p: int = 2, engine: str = "nerve",
                cap: int | None = None) -> BettiTable:
    return betti_tables(ideal, (p,), engine=engine, cap=cap)[p]


def pd_ideal(ideal: MonomialIdeal, characteristics=DEFAULT_CHARACTERISTICS,
             engine: str = "nerve", cap: int | None = None) -> int:
    """pd(R/I), raising if the characteristics disagree."""
    tables = betti_tables(ideal, characteristics, engine=engine, cap=cap)
    values = {p: t.pd for p, t in tables.items()}
    if len(set(values.values())) > 1:
        raise CharacteristicDisagreement(values)
    return next(iter(values.values()))


def pd_bruteforce(H: Hypergraph, characteristics=DEFAULT_CHARACTERISTICS,
                  engine: str = "nerve", cap: int | None = None) -> int:
    """pd(H) from the standard ideal of H."""
    if H.mu == 0:
        return 0
    return pd_ideal(to_standard_ideal(H), characteristics, engine=engine, cap=cap)


def big_height(ideal: MonomialIdeal) -> int:
    """Largest size of a minimal vertex cover of the generator supports."""
    gens = sorted(set(_masks(ideal)), key=lambda m: bin(m).count("1"))
    # drop non-minimal supports; they do not change the minimal covers
    gens = [g for g in gens if not any(h != g and h & g == h for h in gens)]
    best = 0
    seen: set[int] = set()

    def is_minimal_cover(cover: int) -> bool:
        c = cover
        while c:
            b = c & -c
            c ^= b
            if all(g & (cover ^ b) for g in gens):
                return False
        return True

    def grow(cover: int) -> None:
        nonlocal best
        if cover in seen:
            return
        seen.add(cover)
        for g in gens:
            if not g & cover:
                c = g
                while c:
                    b = c & -c
                    c ^= b
                    grow(cover | b)
                return
        if is_minimal_cover(cover):
            best = max(best, bin(cover).count("1"))

    grow(0)
    return best


# -- inequality harness ------------------------------------------------------

class _PdCache:
    def __init__(self, pd=None):
        self.pd = pd_bruteforce if pd is None else pd
        self.memo: dict = {}

    def __call__(self, H: Hypergraph) -> int:
        key = (H.mu, H.faces)
        if key not in self.memo:
            G = H if is_separated(H) else minimalize(H)
            self.memo[key] = self.pd(G)
        return self.memo[key]


def _covers(H: Hypergraph, faces) -> bool:
    seen = set()
    for f in faces:
        seen |= f
    return len(seen) == H.mu


def inequality_violations(H: Hypergraph, pd=None) -> list[str]:
    """Check the deformation inequalities on H with oracle pd values.

    * pd(H_v) <= pd(H) <= pd(H_v) + 1 for every vertex v;
    * pd(H') <= pd(H) when H' drops one face of H and still covers V;
    * pd(H:F) <= pd(H) <= pd(H^F) for every face F;
    * pd(H^0) <= pd(H) <= pd(H^0) + 1 when H^0 opens a closed vertex v,
      and pd(H) = max = min + 1 of pd(H^0), pd(H_v) when those differ.

    Returns a description of every failed inequality.
    """
    from .core import cancel_face, cut_face, open_vertex, remove_vertex
    pdf = pd if isinstance(pd, _PdCache) else _PdCache(pd)
    bad = []
    p = pdf(H)
    rem = {}
    for v in H.vertices:
        rem[v] = pdf(remove_vertex(H, v)) if H.mu > 1 else 0
        if not rem[v] <= p <= rem[v] + 1:
            bad.append(f"remotion v={v}: pd(H_v)={rem[v]} pd(H)={p}")
    for F in sorted(H.faces, key=lambda f: (len(f), sorted(f))):
        rest = H.faces - {F}
        if _covers(H, rest):
            sub = pdf(Hypergraph(H.mu, rest, H.labels))
            if sub > p:
                bad.append(f"subhypergraph without {sorted(F)}: {sub} > {p}")
        if _covers(H, rest) or len(F) > 1:
            try:
                can = pdf(cancel_face(H, F))
            except ValueError:
                can = None
            if can is not None and can > p:
                bad.append(f"cancel {sorted(F)}: pd(H:F)={can} > {p}")
        cut = pdf(cut_face(H, F))
        if p > cut:
            bad.append(f"cut {sorted(F)}: pd(H)={p} > pd(H^F)={cut}")
    for v in sorted(H.closed_vertices()):
        if not _covers(H, H.faces - {frozenset((v,))}):
            continue
        H0 = open_vertex(H, v)
        p0 = pdf(H0)
        if not p0 <= p <= p0 + 1:
            bad.append(f"opening v={v}: pd(H0)={p0} pd(H)={p}")
        if p0 != rem[v]:
            lo, hi = sorted((p0, rem[v]))
            if not (p == hi and p == lo + 1):
                bad.append(f"opening v={v}: pd(H0)={p0} pd(H_v)={rem[v]} but pd(H)={p}")
    return bad


__all__ = [
    "BettiTable",
    "betti_table",
    "betti_tables",
    "pd_ideal",
    "pd_bruteforce",
    "big_height",
    "reduced_homology",
    "gf2_rank",
    "gfp_rank",
    "oracle_cap",
    "inequality_violations",
]
