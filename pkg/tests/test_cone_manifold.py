import math
from collections import deque
from fractions import Fraction
from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, settings

from orthopoly.angles import validate
from orthopoly.cone_manifold import (CONE_MANIFOLD, MANIFOLD, ORBIFOLD, bfs_components,
                                     classify, double_cover_components, element_count,
                                     gluing_graph, match_submultiple, stratum_angle,
                                     stratum_cos_half, strata)
from orthopoly.errors import DimensionTooSmall, TripleSumNotBelowPi
from orthopoly.orthoscheme import is_compact

from polygen import random_angles, random_rational_angles, seeds

PI = math.pi


def F(text):
    return validate(Fraction(x) for x in text.split(","))


def test_element_count():
    assert [element_count(n) for n in (2, 3, 5)] == [12, 60, 2520]
    with pytest.raises(DimensionTooSmall):
        element_count(1)


def test_pentagon_graph_connected():
    g = gluing_graph(F("2/5,2/5,2/5,2/5,2/5"))
    assert g.number_of_nodes() == 12
    assert bfs_components(F("2/5,2/5,2/5,2/5,2/5")) == 1
    import networkx as nx
    assert nx.is_connected(g)


def test_split_double_cover():
    a = validate([0.6 * PI, 0.6 * PI, 0.55 * PI, 0.15 * PI, 0.1 * PI])
    count, witness = double_cover_components(a)
    assert count == 2 and witness == (0, 1, 2)
    assert bfs_components(a) == 2
    assert double_cover_components(F("2/5,2/5,2/5,2/5,2/5")) == (1, None)


def test_node_count_generic():
    rng = np.random.default_rng(1)
    for N in (5, 6, 7):
        a = random_angles(rng, N)
        assert gluing_graph(a).number_of_nodes() == element_count(a.n)
        assert gluing_graph(a, double_cover=True).number_of_nodes() == 2 * element_count(a.n)


def test_gluing_needs_dimension_two():
    with pytest.raises(DimensionTooSmall):
        gluing_graph(F("1/2,1/2,1/2,1/2"))


def _bfs_count(a):
    """Components of the rotation-class graph, by hand: no networkx."""
    N = len(a)
    q = a.pi_units

    def canon(order):
        i = order.index(0)
        return order[i:] + order[:i]

    def below_pi(i, j):
        return q[i] + q[j] < 1 if a.exact else a[i].radians + a[j].radians < PI - 1e-12

    nodes = {canon((0,) + p) for p in permutations(range(1, N))}
    seen, comps = set(), 0
    for start in nodes:
        if start in seen:
            continue
        comps += 1
        seen.add(start)
        todo = deque([start])
        while todo:
            cur = todo.popleft()
            for p in range(N):
                x, y = cur[p], cur[(p + 1) % N]
                if not below_pi(x, y):
                    continue
                nxt = list(cur)
                nxt[p], nxt[(p + 1) % N] = y, x
                nxt = canon(tuple(nxt))
                if nxt not in seen:
                    seen.add(nxt)
                    todo.append(nxt)
    return comps


@settings(max_examples=120, deadline=None)
@given(seeds)
def test_criterion_agrees_with_bfs(seed):
    rng = np.random.default_rng(seed)
    N = int(rng.integers(5, 7))
    if rng.random() < 0.5:
        a = random_rational_angles(rng, N, den=int(rng.integers(4, 13)))
    else:
        a = random_angles(rng, N)
    count, _ = double_cover_components(a)
    assert count == bfs_components(a) == _bfs_count(a)


def test_stratum_quarter_quarter_five_twelfths():
    theta = stratum_angle(Fraction(1, 4), Fraction(1, 4), Fraction(5, 12))
    assert theta == pytest.approx(PI, abs=1e-12)
    assert stratum_cos_half(PI / 4, PI / 4, 5 * PI / 12) == pytest.approx(0.0, abs=1e-15)


def test_stratum_three_quarters():
    theta = stratum_angle(Fraction(1, 4), Fraction(1, 4), Fraction(1, 4))
    # each dihedral angle is pi/4 (ratio 1/2)
    assert theta == pytest.approx(6 * math.acos(math.sqrt(0.5)), abs=1e-12)
    assert math.cos(theta / 2) == pytest.approx(stratum_cos_half(PI / 4, PI / 4, PI / 4), abs=1e-12)


@settings(max_examples=200, deadline=None)
@given(seeds)
def test_stratum_closed_form_and_symmetry(seed):
    rng = np.random.default_rng(seed)
    x = rng.dirichlet(np.ones(4))[:3] * PI
    theta = stratum_angle(*x)
    assert 0 < theta < 3 * PI
    assert abs(math.cos(theta / 2) - stratum_cos_half(*x)) <= 1e-9
    for p in permutations(x):
        assert stratum_angle(*p) == pytest.approx(theta, abs=1e-12)


def test_stratum_rejects_large_triple():
    with pytest.raises(TripleSumNotBelowPi):
        stratum_angle(Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))
    with pytest.raises(TripleSumNotBelowPi):
        stratum_angle(1.0, 1.0, 1.2)


def test_match_submultiple():
    assert match_submultiple(PI) == 2
    assert match_submultiple(2 * PI) == 1
    assert match_submultiple(2 * PI / 7 + 1e-8) is None
    assert match_submultiple(1.0, cos_half=0.0) == 2


def test_row_eight_has_no_strata():
    a = F("1/2,1/2,1/2,1/4,1/4")
    reports, ideal, _ = strata(a)
    assert reports == () and len(ideal) > 0
    assert classify(a).verdict == MANIFOLD


def test_row_seventy_single_stratum_type():
    c = classify(F("2/3,5/12,5/12,1/4,1/4"))
    assert c.verdict == ORBIFOLD
    kinds = {tuple(sorted(v.pi_units for v in s.values)) for s in c.strata}
    assert kinds == {(Fraction(1, 4), Fraction(1, 4), Fraction(5, 12))}
    assert all(s.theta == pytest.approx(PI, abs=1e-12) and s.k == 2 for s in c.strata)
    assert len(c.distinct_strata()) == 1


def test_quarters_cone_manifold():
    c = classify(F(",".join(["1/4"] * 8)))
    assert c.verdict == CONE_MANIFOLD
    assert len(c.strata) == math.comb(8, 3)
    assert not c.compact


def test_thirds_manifold():
    c = classify(F("1/3,1/3,1/3,1/3,1/3,1/3"))
    assert c.verdict == MANIFOLD and c.strata == ()
    assert len(c.ideal_triples) == 20
    assert c.double_cover_components == 1


def test_row_six_and_seventy_one():
    assert classify(F("1/2,1/2,1/4,1/4,1/4,1/4")).verdict == CONE_MANIFOLD
    c = classify(F("7/12,5/12,1/2,1/4,1/4"))
    assert c.verdict == ORBIFOLD
    assert [tuple(sorted(v.pi_units for v in s.values)) for s in c.strata] == \
        [(Fraction(1, 4), Fraction(1, 4), Fraction(5, 12))]


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_classify_permutation_invariant(seed):
    rng = np.random.default_rng(seed)
    a = random_rational_angles(rng, int(rng.integers(5, 8)), den=12)
    base = classify(a)
    b = a.permuted(rng.permutation(len(a)))
    other = classify(b)
    assert other.verdict == base.verdict
    assert other.compact == base.compact
    assert other.double_cover_components == base.double_cover_components
    assert sorted(s.theta for s in other.strata) == pytest.approx(sorted(s.theta for s in base.strata))


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_regular_pair_count(seed):
    rng = np.random.default_rng(seed)
    a = random_rational_angles(rng, int(rng.integers(5, 9)), den=10)
    q = a.pi_units
    N = len(a)
    brute = 0
    for i, j, k, l in permutations(range(N), 4):
        if i < j and k < l and i < k and q[i] + q[j] < 1 and q[k] + q[l] < 1:
            brute += 1
    assert strata(a)[2] == brute


def test_compactness_uses_all_subsets():
    # no contiguous run sums to pi, but 1/3 + 2/3 does in another ordering
    b = F("1/3,1/4,2/3,1/4,1/2")
    assert is_compact(b).compact
    c = classify(b)
    assert c.compact is False and c.witness_noncompact == (0, 2)


def test_threads_do_not_change_strata():
    a = F("1/4,1/4,1/4,1/4,1/4,1/4,1/4,1/4")
    assert strata(a, workers=4) == strata(a)
