import random

import pytest

from ambc.errors import NotEmptyForward
from ambc.forward import phi
from ambc.perm import PartialAffinePermutation, parse_window
from ambc.poset import greene_kleitman, shi_poset
from ambc.shi import comb, shi_p
from ambc.verify import random_window


def test_first_combing_move():
    assert comb(parse_window("[7,8,18,5,2,3,13]")) == parse_window("[5,8,18,2,3,13,14]")


def test_combing_chain_ends_increasing():
    w = parse_window("[7,8,18,5,2,3,13]")
    for _ in range(50):
        nxt = comb(w)
        if nxt == w:
            break
        w = nxt
    assert w == parse_window("[2,3,12,14,15,20,32]")


@pytest.mark.parametrize("text", ["[2,3,12,14,15,20,32]", "[_,_,1,2,3]"])
def test_increasing_windows_are_fixed(text):
    w = parse_window(text)
    assert comb(w) == w


def test_combing_keeps_the_residue_multiset():
    rng = random.Random(31)
    for _ in range(200):
        w = random_window(rng, rng.randint(1, 7), 3)
        u = comb(w)
        assert sorted(v % w.n for v in u.window) == sorted(v % w.n for v in w.window)
        assert sum(u.window) - sum(w.window) in (0, w.n)


def test_worked_tabloid():
    w = parse_window("[7,8,18,5,2,3,13]")
    assert greene_kleitman(shi_poset(w)) == (3, 2, 1, 1)
    assert shi_p(w) == ((1, 2, 3), (5, 7), (6,), (4,))


def test_agrees_with_forward_map():
    rng = random.Random(32)
    for _ in range(300):
        w = random_window(rng, rng.randint(1, 7), 3)
        assert shi_p(w) == phi(w).P


def test_empty_and_invalid_windows():
    assert shi_p(PartialAffinePermutation.empty(3)) == ()
    with pytest.raises(NotEmptyForward):
        comb(parse_window("[1,_,2]"))


def test_move_cap():
    with pytest.raises(RuntimeError):
        shi_p(parse_window("[7,8,18,5,2,3,13]"), max_moves=0)
