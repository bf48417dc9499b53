from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coincidence.abelian import INFINITE
from coincidence.catalog import suspension_power
from coincidence.errors import InvalidQuery, MissingData
from coincidence.nielsen import (
    Clause,
    NielsenQuery,
    hierarchy_check,
    levels,
    n0_by_homotopy,
    nielsen_function_profile,
    nielsen_number,
    nielsen_value,
)


@pytest.fixture(scope="module")
def tables(toda, g166):
    """``N_r`` on every pair of ``pi_16(S^6)`` for k = 1, 2 and every level."""
    elements = list(g166.enumerate())
    out = {}
    for k in (1, 2):
        for r in levels(toda, 16, 6):
            out[k, r] = [[nielsen_value(toda, 16, 6, k, r, a, b) for b in elements] for a in elements]
    return out


def el(G, *c):
    return G.element(c)


def test_levels(toda):
    assert levels(toda, 16, 6) == [0, 1, 2, 3, 4, 5, 6, INFINITE]


def test_loose_self_pair(toda, g166):
    x = el(g166, 4, 0, 0)
    v = nielsen_number(toda, NielsenQuery(16, 6, 2, 0, x, x))
    assert v.value == 0 and v.clause is Clause.N_EVEN_Z2_CASE_0


def test_order_eight_self_pair(toda, g166):
    x = el(g166, 1, 0, 0)
    v = nielsen_number(toda, NielsenQuery(16, 6, 2, 0, x, x))
    assert v.value == 1 and v.clause is Clause.N_EVEN_Z2_CASE_1


def test_zero_pair_vanishes(cat):
    for key in cat.keys():
        G = cat.group(key)
        m, n = key
        if m < 2 or n < 2:
            continue
        ks = (1, 2) if n % 2 == 0 else (1, 2, 3, 24)
        for k in ks:
            for r in (0, 1, INFINITE):
                try:
                    assert nielsen_value(cat, m, n, k, r, G.zero(), G.zero()) == 0
                except MissingData:
                    pass


def test_five_fold_suspension_witnesses(toda, g166):
    z = g166.zero()
    # nu6 sigma9 dies under E^5, the Z2 classes eta6 mu7 and beta1 survive
    assert nielsen_value(toda, 16, 6, 2, 5, el(g166, 1, 0, 0), z) == 0
    assert nielsen_value(toda, 16, 6, 2, 5, el(g166, 0, 1, 0), z) == 2
    assert nielsen_value(toda, 16, 6, 2, 5, el(g166, 0, 0, 1), z) == 2
    assert nielsen_value(toda, 16, 6, 2, 4, el(g166, 1, 0, 0), z) == 2


def test_odd_sphere_large_group(small):
    G = small.group((4, 3))
    v = nielsen_number(small, NielsenQuery(4, 3, 24, 0, G.generator(0), G.zero()))
    assert v.value == 24 and v.clause is Clause.N_ODD


def test_infinite_fundamental_group(toda, g166):
    v = nielsen_number(toda, NielsenQuery(16, 6, INFINITE, 0, el(g166, 1, 0, 0), g166.zero()))
    assert v.value == 0 and v.clause is Clause.INFINITE_PI1


def test_trivial_domain(small):
    G = small.group((21, 9))
    v = nielsen_number(small, NielsenQuery(21, 9, 2, 0, G.zero(), G.zero()))
    assert v.clause is Clause.TRIVIAL_DOMAIN


def test_hopf_invariant_separates(small):
    # pi_3(S^2) = Z: suspension kills 2 eta2 but h' does not
    G = small.group((3, 2))
    a, b = G.element((2,)), G.zero()
    assert nielsen_value(small, 3, 2, 1, 1, a, b) == 1
    assert nielsen_value(small, 3, 2, 1, 0, b, b) == 0


def test_invalid_queries(toda, g166):
    z = g166.zero()
    with pytest.raises(InvalidQuery):
        NielsenQuery(16, 6, 3, 0, z, z)
    with pytest.raises(InvalidQuery):
        NielsenQuery(16, 6, 2, -1, z, z)
    with pytest.raises(InvalidQuery):
        NielsenQuery(16, 6, 0, 0, z, z)
    with pytest.raises(InvalidQuery):
        NielsenQuery(16, 1, 2, 0, z, z)
    other = toda.group((17, 7)).zero()
    with pytest.raises(InvalidQuery):
        NielsenQuery(16, 6, 2, 0, z, other)


def test_profile(toda):
    expected = [(0,), (1, 2), (3,), (4,), (5, 6, INFINITE)]
    assert nielsen_function_profile(toda, 16, 6, 2) == expected
    assert nielsen_function_profile(toda, 16, 6, 1) == expected


def test_profile_stable_range(small):
    assert nielsen_function_profile(small, 8, 5, 2) == [(0, INFINITE)]


def test_profile_matches_tables(toda, tables):
    for k in (1, 2):
        for cls in nielsen_function_profile(toda, 16, 6, k):
            assert all(tables[k, r] == tables[k, cls[0]] for r in cls)
        reps = [c[0] for c in nielsen_function_profile(toda, 16, 6, k)]
        assert len({str(tables[k, r]) for r in reps}) == len(reps)


def test_hierarchy_example(toda, g166):
    rep = hierarchy_check(toda, 16, 6, 2, el(g166, 1, 0, 0), g166.zero())
    assert rep.passed
    assert list(rep.values.values()) == [2, 2, 2, 2, 2, 0, 0, 0]
    same = hierarchy_check(toda, 16, 6, 2, el(g166, 3, 1, 2), el(g166, 3, 1, 2))
    assert same.passed and len(set(same.values.values())) == 1


def test_value_set_symmetry_monotonicity_stability(toda, tables):
    rs = levels(toda, 16, 6)
    stable = toda.stable_from((16, 6))
    for k in (1, 2):
        for r in rs:
            t = tables[k, r]
            size = len(t)
            for i in range(size):
                for j in range(size):
                    assert t[i][j] in (0, 1, k)
                    assert t[i][j] == t[j][i]
        for a, b in zip(rs, rs[1:]):
            ta, tb = tables[k, a], tables[k, b]
            assert all(x >= y for ra, rb in zip(ta, tb) for x, y in zip(ra, rb))
        for r in rs:
            if r >= stable:
                assert tables[k, r] == tables[k, stable]


def test_level_zero_matches_homotopy_form(toda, tables, g166):
    elements = list(g166.enumerate())
    for k in (1, 2):
        for i, a in enumerate(elements):
            for j, b in enumerate(elements):
                assert tables[k, 0][i][j] == n0_by_homotopy(toda, NielsenQuery(16, 6, k, 0, a, b))


def test_tallies_match_known_rows(tables):
    flat = lambda t: Counter(v for row in t for v in row)
    assert flat(tables[2, 0]) == {0: 4, 1: 280, 2: 20452}
    assert flat(tables[2, 3]) == {0: 144, 1: 1440, 2: 19152}
    assert flat(tables[1, 4])[0] == 1728


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 143), st.integers(0, 143), st.sampled_from([0, 1, 2, 3, 4, 5, 6, INFINITE]))
def test_odd_sphere_rule(toda, a, b, r):
    # on pi_17(S^7) (n odd) a group of order 3 gives 3 or 0 by E^r separation
    G = toda.group((17, 7))
    elements = list(G.enumerate())
    f1, f2 = elements[a % len(elements)], elements[b % len(elements)]
    v = nielsen_value(toda, 17, 7, 3, r, f1, f2)
    E = suspension_power(toda, (17, 7), r)
    assert v == (3 if E(f1) != E(f2) else 0)


@pytest.mark.parametrize("key,k", [((3, 2), 1), ((3, 2), 2), ((4, 3), 2), ((4, 3), 5)])
def test_stable_values_where_stable_stem_is_two_torsion(small, key, k):
    # pi^S_1 = Z2 is killed by 2, so N_inf only takes the values 0 and #G
    G = small.group(key)
    samples = [G.element((a,)) for a in range(-4, 5)]
    for a in samples:
        for b in samples:
            assert nielsen_value(small, *key, k, INFINITE, a, b) in (0, k)
