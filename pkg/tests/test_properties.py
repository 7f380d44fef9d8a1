from __future__ import annotations

import json

from hypothesis import given, settings
from hypothesis import strategies as st

from hpd.cli import parse_json, parse_hypergraph_text, to_json, to_text
from hpd.core import Hypergraph, from_ideal, is_separated, minimalize, relabel, to_standard_ideal
from hpd.enumeration import canonical_form
from hpd.errors import NeedsOracle, UnsupportedShape
from hpd.oracle import pd_bruteforce, pd_ideal
from hpd.reduce import compute_pd

SETTINGS = settings(max_examples=60, deadline=None)


@st.composite
def hypergraphs(draw, max_n=6, max_faces=7, one_dim=False):
    n = draw(st.integers(1, max_n))
    if one_dim:
        pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
        faces = [set(p) for p in draw(st.lists(st.sampled_from(pairs), max_size=2 * n))] if pairs else []
        faces += [{v} for v in draw(st.sets(st.integers(1, n)))]
    else:
        faces = [set(f) for f in draw(st.lists(
            st.sets(st.integers(1, n), min_size=1), min_size=1, max_size=max_faces))]
    covered = set().union(*faces) if faces else set()
    faces += [{v} for v in range(1, n + 1) if v not in covered]
    return Hypergraph.from_faces([sorted(f) for f in faces], mu=n)


@st.composite
def relabelled(draw, strategy):
    H = draw(strategy)
    perm = draw(st.permutations(range(1, H.mu + 1)))
    return H, relabel(H, perm)


@SETTINGS
@given(hypergraphs())
def test_minimalize_is_separated_and_dual(H):
    G = minimalize(H)
    assert is_separated(G)
    back = from_ideal(to_standard_ideal(G))
    assert (back.mu, back.faces) == (G.mu, G.faces)


@SETTINGS
@given(relabelled(hypergraphs()))
def test_canonical_form_ignores_vertex_order(pair):
    H, K = pair
    assert canonical_form(H) == canonical_form(K)


@SETTINGS
@given(relabelled(hypergraphs(max_n=5)))
def test_oracle_ignores_vertex_order(pair):
    H, K = pair
    assert pd_bruteforce(H) == pd_bruteforce(K)


@SETTINGS
@given(hypergraphs(max_n=5, max_faces=5))
def test_engines_agree(H):
    I = to_standard_ideal(H)
    assert pd_ideal(I, engine="nerve") == pd_ideal(I, engine="hochster")


@SETTINGS
@given(hypergraphs(max_n=7, one_dim=True))
def test_engine_matches_oracle_on_graphs(H):
    H = minimalize(H)
    try:
        value = compute_pd(H)[0]
    except (NeedsOracle, UnsupportedShape):
        return
    assert value == pd_bruteforce(H)


@SETTINGS
@given(hypergraphs())
def test_serialisation_round_trips(H):
    assert parse_json(json.dumps(to_json(H))) == H
    assert parse_hypergraph_text(to_text(H)) == H
