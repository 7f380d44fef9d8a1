from __future__ import annotations

import pytest

from hpd.enumeration import strings
from hpd.fixtures import figure6, figure7, nine_face, seven_string
from hpd.invariants import (classify_stars, is_10_special, is_11_special, profile_from_flags,
                            star_modularity, string_profile)
from hpd.oracle import pd_bruteforce
from hpd.reduce import branches

from conftest import hg


def path(n, closed):
    return hg(*([{i, i + 1} for i in range(1, n)] + [{c} for c in closed]), mu=n)


def test_orientation_changes_w():
    S = seven_string()
    assert string_profile(S, 1).w_count == 1
    assert string_profile(S, 7).w_count == 0


def test_nine_face_branch_profile():
    H = nine_face()
    w, br = next(b for b in branches(H) if len(b[1]) == 4)
    prof = profile_from_flags([H.is_closed(u) for u in br])
    assert (prof.runs, prof.m_count, prof.w_count, prof.q, prof.nr) == ((3,), 0, 1, 1, 0)


def test_five_string_profile():
    prof = string_profile(path(5, [1, 3, 5]), 5)
    assert (prof.runs, prof.m_count, prof.w_count, prof.q, prof.nr) == ((1, 1), 1, 0, 1, 1)
    assert pd_bruteforce(path(5, [1, 3, 5])) == 4


def test_profile_rejects_adjacent_closed():
    with pytest.raises(ValueError):
        profile_from_flags([True, True, False])


def test_profile_identities():
    for n in range(1, 10):
        for S in strings(n):
            for v in {1, S.mu}:
                if S.mu > 1 and len(S.edge_neighbors(v)) != 1:
                    continue
                try:
                    p = string_profile(S, v)
                except ValueError:
                    continue
                assert sum(p.runs) + sum(p.closed) == p.n
                assert p.n - p.m_count - p.w_count == 3 * p.q + p.nr
                assert p.nr in (0, 1, 2)
                assert min(p.m_count, p.o_count, p.w_count) >= 0
                assert p.o_count <= sum(1 for x in p.runs if x % 3 == 0)
                assert p.m_count <= len(p.runs) // 2


def test_11_special():
    assert is_11_special(path(5, [1, 3, 5]))
    # one run on its own is not a configuration
    assert not is_11_special(path(3, [1, 3]))
    assert pd_bruteforce(path(3, [1, 3])) == 2


def test_10_special_depends_on_anchor():
    S = seven_string()
    assert is_10_special(S, 7)
    assert not is_10_special(S, 1)


def test_figure6_is_cycle_of_two_stars():
    decs, tag = classify_stars(figure6())
    assert tag == "cycle-of-stars"
    assert [d.T for d in decs] == [4]


def test_figure7_star_modularity():
    decs, _ = classify_stars(figure7())
    segs = [([s.open_center for s in d.stars], d.tag == "cycle") for d in decs]
    assert star_modularity(segs) == 1


def test_plain_string_is_string_of_zero_stars():
    decs, tag = classify_stars(path(6, [1, 3, 6]))
    assert tag == "string-of-stars"
    assert decs[0].T == 0 and decs[0].d == 0


def test_single_star():
    decs, _ = classify_stars(hg({1, 2}, {1, 3}, {1, 4}, {2}, {3}, {4}))
    (star,) = decs[0].stars
    assert star.center == 1 and star.d == 1 and star.open_center


def test_star_modularity_is_additive():
    seg = ([True, False, True], False)
    one = star_modularity([seg])
    assert star_modularity([seg, seg]) == 2 * one
    assert star_modularity([([False, False, False], False)]) == 0


def test_long_legs_give_a_three_star():
    # spider with three legs of length 3: the middle leg hangs off as one branch
    H = hg({1, 2}, {2, 3}, {3, 4}, {1, 5}, {5, 6}, {6, 7}, {1, 8}, {8, 9}, {9, 10}, {4}, {7}, {10})
    decs, tag = classify_stars(H)
    assert tag == "string-of-stars"
    assert decs[0].d == 3


def test_two_cycles_are_not_stars():
    H = hg({1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6})
    assert classify_stars(H) == ([], "none")
