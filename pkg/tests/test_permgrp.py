from itertools import product

import pytest

import oracles
from gen import random_perm
from invsemi.pbij import PartialBijection, identity
from invsemi.permgrp import contains, prescribed_image, schreier_sims


def cyc(n, *cycles):
    return PartialBijection.from_cycles(n, *cycles)


def brute_group(gens, n):
    return oracles.naive_closure([g.images for g in gens] + [tuple(range(1, n + 1))])


def test_orders():
    assert schreier_sims([cyc(3, (1, 2, 3))]).order() == 3
    assert schreier_sims([cyc(3, (1, 2)), cyc(3, (1, 2, 3))]).order() == 6
    assert schreier_sims([], degree=4).order() == 1


def test_membership_examples():
    c = schreier_sims([cyc(3, (1, 2, 3))])
    assert contains(c, identity(3))
    assert not contains(c, cyc(3, (1, 3)))
    assert not contains(c, PartialBijection.from_pairs(3, {1: 1}))


def test_prescribed_image_examples():
    c = schreier_sims([cyc(3, (1, 2, 3))])
    assert prescribed_image(c, [1], [2]) == cyc(3, (1, 2, 3))
    assert prescribed_image(c, [1, 2], [1, 3]) is None
    u = prescribed_image(c, [2, 3], [2, 3])
    assert u is not None and u(2) == 2 and u(3) == 3


def test_errors():
    with pytest.raises(ValueError):
        schreier_sims([PartialBijection.from_pairs(3, {1: 2})])
    with pytest.raises(ValueError):
        schreier_sims([identity(3)], base_hint=[1, 1])
    with pytest.raises(ValueError):
        prescribed_image(schreier_sims([identity(3)]), [1], [1, 2])


def test_against_brute_closure(rng):
    for _ in range(50):
        n = rng.randint(2, 5)
        gens = [random_perm(rng, n) for _ in range(2)]
        chain = schreier_sims(gens)
        group = brute_group(gens, n)
        assert chain.order() == len(group)
        assert {e.images for e in chain.elements()} == group
        for _ in range(5):
            g = random_perm(rng, n)
            assert contains(chain, g) == (g.images in group)


def test_prescribed_image_complete_and_sound(rng):
    for _ in range(30):
        n = rng.randint(2, 5)
        gens = [random_perm(rng, n) for _ in range(rng.randint(1, 2))]
        chain = schreier_sims(gens)
        group = brute_group(gens, n)
        k = rng.randint(1, n)
        pts = rng.sample(range(1, n + 1), k)
        for tgt in product(range(1, n + 1), repeat=k):
            if len(set(tgt)) < k:
                continue
            u = prescribed_image(chain, pts, list(tgt))
            exists = any(all(g[x - 1] == y for x, y in zip(pts, tgt)) for g in group)
            assert (u is not None) == exists
            if u is not None:
                assert u.images in group and all(u(x) == y for x, y in zip(pts, tgt))


def test_base_hint_is_kept():
    chain = schreier_sims([cyc(4, (1, 2, 3, 4)), cyc(4, (1, 2))], base_hint=[3, 1])
    assert chain.base[:2] == [3, 1] and chain.order() == 24
