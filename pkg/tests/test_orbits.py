from hypothesis import given, strategies as st

from gen import partial_bijections, permutations_of
from invsemi.orbits import (Chain, Cycle, chains_of, cycle_chain_type, cycle_type, cycles_of,
                            decompose, format_type)
from invsemi.pbij import (PartialBijection, all_partial_bijections, compose, empty, identity,
                          inverse)


def test_identity_is_all_fixed_points():
    cyc, ch = decompose(identity(3))
    assert len(cyc) == 3 and all(len(c) == 1 for c in cyc) and not ch


def test_empty_map_is_all_singleton_chains():
    cyc, ch = decompose(empty(3))
    assert not cyc and sorted(c.points for c in ch) == [(1,), (2,), (3,)]


def test_mixed_example():
    s = PartialBijection.from_pairs(5, {5: 1, 1: 2, 2: 3, 4: 4})
    assert cycles_of(s) == (Cycle((4,)),)
    assert chains_of(s) == (Chain((5, 1, 2, 3)),)


def test_type_examples():
    t = cycle_chain_type(PartialBijection.from_pairs(2, {1: 2}))
    assert t.cycles == {} and t.chains == {2: 1}
    assert cycle_chain_type(identity(4)).cycles == {1: 4}
    t = cycle_chain_type(PartialBijection.from_pairs(3, {1: 2, 2: 1}))
    assert t.cycles == {2: 1} and t.chains == {1: 1}
    assert cycle_type(identity(2)) == {1: 2}


def test_cycle_starts_at_minimum():
    s = PartialBijection.from_pairs(4, {3: 2, 2: 4, 4: 3})
    assert cycles_of(s)[0].points == (2, 4, 3)


def test_format_type():
    t = cycle_chain_type(PartialBijection.from_pairs(4, {1: 2, 2: 1, 3: 4}))
    assert format_type(t) == "cycles: 2:1\nchains: 2:1\n"


def test_partition_property_exhaustive_i4():
    for s in all_partial_bijections(4):
        cyc, ch = decompose(s)
        pts = [x for c in cyc for x in c.points] + [x for c in ch for x in c.points]
        assert sorted(pts) == [1, 2, 3, 4]
        for c in ch:
            assert s(c.points[-1]) is None
            assert all(s(x) != c.points[0] for x in range(1, 5))
            assert all(s(x) == y for x, y in zip(c.points, c.points[1:]))


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(partial_bijections(n), permutations_of(n))))
def test_type_invariant_under_permutation_conjugation(pair):
    s, g = pair
    assert cycle_chain_type(compose(compose(inverse(g), s), g)) == cycle_chain_type(s)


@given(partial_bijections())
def test_inverse_has_same_type(s):
    assert cycle_chain_type(inverse(s)) == cycle_chain_type(s)
