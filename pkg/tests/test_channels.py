import random
from functools import lru_cache
from itertools import combinations, product

import numpy as np
import pytest

from ambc.channels import (
    Channel,
    all_channels,
    channel_numbering,
    distance,
    interlacing_collections,
    is_southwest_of,
    max_disjoint_antichains,
    northeast_channel,
    rivers,
    sorted_disjoint_channels,
    southwest_channel,
)
from ambc.errors import NotEnoughChannels
from ambc.numbering import Numbering, is_continuous, is_monotone, is_proper
from ambc.perm import Cell, PartialAffinePermutation, parse_window
from ambc.poset import shi_poset, width
from ambc.verify import enumerate_windows

SAMPLES = ["[4,1,6,11,2,3]", "[6,1,8,3,10,5]", "[4,1,11,6,14,9,3,7,17]", "[1,2,17,5,14,18,20]", "[1,6,11,20,10,15]"]


def _path_worth_oracle(w, chan, d_chan, periods=6):
    """Longest NW path worth computed ball by ball in a finite window of explicit translates."""
    n = w.n
    balls = w.balls(-periods * n, 2 * n)
    on_channel = {b for b in balls if b in chan}

    @lru_cache(maxsize=None)
    def worth(b):
        best = d_chan(b) if b in on_channel else None
        for a in balls:
            if a.row < b.row and a.col < b.col:
                v = worth(a)
                if v is not None and (best is None or v + 1 > best):
                    best = v + 1
        return best

    return {b: worth(b) for b in w.balls(1, n)}


@pytest.mark.parametrize("text", SAMPLES)
def test_channel_numbering_matches_path_oracle(text):
    w = parse_window(text)
    for chan in all_channels(w):
        d = channel_numbering(w, chan)
        assert is_proper(d)
        assert d.period == width(shi_poset(w))
        oracle = _path_worth_oracle(w, chan, d)
        assert oracle == {b: d(b) for b in w.balls(1, w.n)}


def test_numbering_is_proper_with_period_three():
    w = parse_window("[4,1,6,11,2,3]")
    d = channel_numbering(w, southwest_channel(w))
    assert d.period == 3 and is_proper(d)
    # frozen from the path-worth oracle above
    assert d.values == (1, 1, 2, 3, 2, 3)


def test_four_step_path_into_channel():
    w = parse_window("[1,6,11,20,10,15]")
    chan = next(c for c in all_channels(w) if Cell(1, 1) in c)
    d = channel_numbering(w, chan)
    assert d(Cell(2, 6)) == 2
    path = [Cell(10, 26), Cell(9, 17), Cell(6, 15), Cell(3, 11), Cell(2, 6)]
    assert all(w(c.row) == c.col for c in path)
    assert all(b.row < a.row and b.col < a.col for a, b in zip(path, path[1:]))
    assert d(path[0]) == d(path[-1]) + 4 == 6


def test_channel_consecutive_and_anchor():
    w = parse_window("[4,1,11,6,14,9,3,7,17]")
    for chan in all_channels(w):
        d = channel_numbering(w, chan)
        vals = [d(c) for c in chan.generator]
        assert vals == list(range(vals[0], vals[0] + len(vals)))
        anchored = channel_numbering(w, chan, anchor=(chan.generator[0].translate(2, w.n), 10))
        assert anchored(chan.generator[0].translate(2, w.n)) == 10
        assert anchored.values == tuple(v + 10 - d(chan.generator[0].translate(2, w.n)) for v in d.values)


def test_identity_single_channel():
    w = PartialAffinePermutation.identity(4)
    (chan,) = all_channels(w)
    assert southwest_channel(w) == northeast_channel(w) == chan
    assert chan.generator == tuple(Cell(i, i) for i in range(1, 5))
    assert rivers(w) == [[chan]]


def test_two_channels_and_three_proper_numberings():
    w = parse_window("[6,1,8,3,10,5]")
    chans = all_channels(w)
    assert len(chans) == 2
    sw, ne = southwest_channel(w), northeast_channel(w)
    assert sw != ne
    assert distance(w, sw, ne) == distance(w, ne, sw) == 2
    # brute force: proper numberings with period 3, shift fixed by the ball in row 2
    reps = w.representatives()
    count = 0
    for vals in product(range(-4, 6), repeat=len(reps) - 1):
        values = (vals[0], 1) + vals[1:]
        if is_proper(Numbering(w.n, 3, tuple(reps), values)):
            count += 1
    assert count == 3  # the distance h allows exactly h + 1 proper numberings


def test_rivers_of_nine_periodic_permutation():
    w = parse_window("[4,1,11,6,14,9,3,7,17]")
    rs = rivers(w)
    assert len(rs) == 2
    for river in rs:
        for a, b in combinations(river, 2):
            assert distance(w, a, b) == 0


def test_southwest_channel_is_least_and_pseudometric():
    for w in enumerate_windows(3, 1):
        chans = all_channels(w)
        sw, ne = southwest_channel(w), northeast_channel(w)
        for c in chans:
            assert is_southwest_of(w, sw, c)
            assert is_southwest_of(w, c, ne)
            assert distance(w, c, c) == 0
        for a, b, c in product(chans, repeat=3):
            assert distance(w, a, c) <= distance(w, a, b) + distance(w, b, c)
        for a, b in combinations(chans, 2):
            if not is_southwest_of(w, a, b) and not is_southwest_of(w, b, a):
                assert distance(w, a, b) == 0


def test_sorted_disjoint_channels_and_interlacing():
    w = parse_window("[6,1,8,3,10,5]")
    Cs = sorted_disjoint_channels(w)
    assert len(Cs) == 2 and is_southwest_of(w, Cs[0], Cs[1])
    Cs2, Ds = interlacing_collections(w)
    assert Cs2 == Cs and len(Ds) == 1


def test_interlacing_requires_two_channels():
    with pytest.raises(NotEnoughChannels):
        interlacing_collections(parse_window("[4,1,6,11,2,3]"))


def test_interlacing_three_channels():
    rng = random.Random(3)
    seen = 0
    for _ in range(400):
        n = 6
        sigma = list(range(1, n + 1))
        rng.shuffle(sigma)
        w = PartialAffinePermutation(n, tuple(s + n * rng.randint(-1, 1) for s in sigma))
        if len(max_disjoint_antichains(w)) < 3:
            continue
        Cs, Ds = interlacing_collections(w)
        assert len(Cs) == len(Ds) + 1 >= 3
        assert len({d.rows for d in Ds}) == len(Ds)
        seen += 1
    assert seen > 0


def test_monotone_and_continuous_detect_breakage():
    w = parse_window("[4,1,6,11,2,3]")
    d = channel_numbering(w, southwest_channel(w))
    broken = Numbering(d.n, d.period, d.cells, (d.values[0] + 5,) + d.values[1:])
    assert not is_monotone(broken) or not is_continuous(broken)
    assert np.all(np.array(d.shifted(4).values) == np.array(d.values) + 4)
