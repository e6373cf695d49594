import random
from itertools import product

import pytest

from ambc.backward import psi
from ambc.errors import ShapeMismatch
from ambc.forward import OmegaTriple, phi
from ambc.streams import offset_constants
from ambc.verify import enumerate_triples, partitions
from ambc.weyl import blocks, dominant_representative, fiber_equivalent, is_dominant

P13 = ((1, 2, 3), (5, 7, 10), (4, 8, 11), (12, 13), (6, 9))
Q13 = ((1, 2, 5), (3, 8, 12), (4, 10, 11), (6, 13), (7, 9))


def test_blocks():
    assert blocks((3, 3, 3, 2, 2)) == [range(0, 3), range(3, 5)]
    assert blocks((4, 2, 1)) == [range(0, 1), range(1, 2), range(2, 3)]
    assert blocks(()) == []


def test_worked_example():
    t = OmegaTriple(13, P13, Q13, (2, 1, 0, 0, 0))
    assert not is_dominant(t)
    rep = dominant_representative(t)
    assert rep == (0, 1, 2, -1, 1)
    assert is_dominant(OmegaTriple(13, P13, Q13, rep))
    assert fiber_equivalent(P13, Q13, t.rho, rep, 13)
    assert psi(t) == psi(OmegaTriple(13, P13, Q13, rep))
    assert phi(psi(t)) == OmegaTriple(13, P13, Q13, rep)


def test_forward_images_are_dominant():
    from ambc.verify import random_window

    rng = random.Random(21)
    for _ in range(200):
        t = phi(random_window(rng, rng.randint(1, 6), 3))
        assert is_dominant(t)
        assert dominant_representative(t) == t.rho


@pytest.mark.parametrize("n", [1, 2, 3])
def test_fibers_are_block_orbits(n):
    """Group every triple of a small grid by its image; each group is one orbit of shifted weights."""
    for lam in partitions(n):
        groups: dict[tuple, list[OmegaTriple]] = {}
        for t in enumerate_triples(n, 1):
            if t.shape == lam:
                groups.setdefault((t.P, t.Q, psi(t)), []).append(t)
        for (P, Q, _w), members in groups.items():
            _r, s = offset_constants(P, Q, n)
            per_block = {
                tuple(tuple(sorted((m.rho[i] - s[i]) for i in b)) for b in blocks(lam)) for m in members
            }
            assert len(per_block) == 1, (P, Q, [m.rho for m in members])
            for a, b in product(members[:4], members[:4]):
                assert fiber_equivalent(P, Q, a.rho, b.rho, n)


def test_fiber_equivalence_detects_different_orbits():
    P = ((1, 2), (3, 4))
    Q = ((1, 3), (2, 4))
    assert not fiber_equivalent(P, Q, (0, 0), (0, 1), 4)
    assert psi(OmegaTriple(4, P, Q, (0, 0))) != psi(OmegaTriple(4, P, Q, (0, 1)))


def test_large_blocks_use_sorted_comparison():
    n = 9
    P = Q = tuple((i,) for i in range(1, n + 1))
    rho = tuple(range(9))
    assert fiber_equivalent(P, Q, rho, tuple(reversed(rho)), n)
    assert not fiber_equivalent(P, Q, rho, (0,) * 9, n)


def test_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        fiber_equivalent(((1, 2),), ((1,), (2,)), (0,), (0,), 2)
    with pytest.raises(ShapeMismatch):
        fiber_equivalent(((1, 2),), ((1, 2),), (0,), (0, 1), 2)
