import random
from itertools import combinations

import pytest

from ambc.errors import EmptyPoset
from ambc.perm import PartialAffinePermutation, parse_window
from ambc.poset import greene_kleitman, longest_antichains, shi_poset, width


def _random_window(rng, n, spread=2):
    sigma = list(range(1, n + 1))
    rng.shuffle(sigma)
    return PartialAffinePermutation(n, tuple(s + n * rng.randint(-spread, spread) for s in sigma))


def _relation(w, i, j):
    wi, wj = w(i), w(j)
    return (i > j and wi < wj) or wj > wi + w.n


def _antichains(w):
    """Every antichain, by checking all pairs of every subset."""
    elems = w.defined_rows()
    out = []
    for k in range(1, len(elems) + 1):
        for sub in combinations(elems, k):
            if all(not _relation(w, a, b) and not _relation(w, b, a) for a, b in combinations(sub, 2)):
                out.append(frozenset(sub))
    return out


def _union_of_k(antichains, k):
    best = 0
    for family in combinations(antichains, k):
        best = max(best, len(frozenset().union(*family)))
    return best


def test_worked_gk_example():
    p = shi_poset(parse_window("[7,8,18,5,2,3,13]"))
    assert greene_kleitman(p) == (3, 2, 1, 1)
    assert width(p) == 3


def test_width_of_small_poset():
    assert width(shi_poset(parse_window("[4,1,6,11,2,3]"))) == 3


def test_larger_poset_is_closed_and_matches_definition():
    w = parse_window("[2,8,1,14,7,16,15,0,3,9]")
    p = shi_poset(w)
    for i in p.elements:
        for j in p.elements:
            if i != j:
                assert p.leq(i, j) == _relation(w, i, j)
    for (a, b) in p.relations:
        for (c, d) in p.relations:
            if b == c:
                assert (a, d) in p.relations


def test_identity_is_an_antichain():
    p = shi_poset(PartialAffinePermutation.identity(5))
    assert width(p) == 5
    assert greene_kleitman(p) == (5,)
    assert longest_antichains(p) == [frozenset(range(1, 6))]


def test_chain():
    # w = [1+3, 2, 3-3]: every pair is related
    w = parse_window("[7,2,-3]")
    p = shi_poset(w)
    assert greene_kleitman(p) == (1, 1, 1)
    assert longest_antichains(p) == [frozenset({1}), frozenset({2}), frozenset({3})]


def test_partial_permutation_uses_defined_rows():
    p = shi_poset(parse_window("[6,1,_,8,5,7,_,_]"))
    assert p.elements == (1, 2, 4, 5, 6)


def test_empty_poset():
    p = shi_poset(PartialAffinePermutation.empty(3))
    with pytest.raises(EmptyPoset):
        width(p)
    assert greene_kleitman(p) == ()


def test_width_matches_pairwise_oracle_on_random_posets():
    rng = random.Random(11)
    for _ in range(200):
        w = _random_window(rng, rng.randint(1, 8))
        anti = _antichains(w)
        best = max(len(a) for a in anti)
        assert width(shi_poset(w)) == best
        assert set(longest_antichains(shi_poset(w))) == {a for a in anti if len(a) == best}


def test_gk_matches_union_oracle():
    rng = random.Random(5)
    for _ in range(40):
        w = _random_window(rng, rng.randint(1, 6))
        anti = _antichains(w)
        gk = greene_kleitman(shi_poset(w))
        assert list(gk) == sorted(gk, reverse=True)
        assert sum(gk) == w.n
        for k in range(1, min(3, len(gk)) + 1):
            assert sum(gk[:k]) == _union_of_k(anti, k)
