import numpy as np
import pytest

from gen import random_gens
from invsemi import abstract, closure
from invsemi.abstract import CayleyTable
from invsemi.pbij import all_partial_bijections, identity

NIL2 = CayleyTable([[0, 0], [0, 0]])  # {0, a}, a*a = 0
Z3 = CayleyTable([[(i + j) % 3 for j in range(3)] for i in range(3)])
EQUIV = ("o", "c", "pstar", "tr", "u", "i")


def test_rejects_non_associative():
    with pytest.raises(ValueError):
        CayleyTable([[1, 0], [0, 0]])


def test_nilpotent_basics():
    assert abstract.zero_element(NIL2) == 0
    assert abstract.idempotents(NIL2) == [0]
    assert abstract.omega(NIL2) == 2


def test_group_basics():
    assert set(abstract.units(Z3)) == {0, 1, 2}
    assert abstract.omega(Z3) == 3


def test_i2_is_inverse():
    T = closure.table_of(list(all_partial_bijections(2)))
    assert abstract.is_inverse_semigroup(T)
    assert len(abstract.idempotents(T)) == 4


def test_nilpotent_relations():
    assert abstract.conj(NIL2, 1, 0, "o")
    assert not abstract.conj(NIL2, 1, 0, "p")
    assert abstract.conj_classes(NIL2, "c").as_sets() == {frozenset({0}), frozenset({1})}


def test_p_over_s_alone_is_not_reflexive():
    assert not abstract.conj(NIL2, 1, 1, "p", unital=False)
    assert abstract.conj(NIL2, 1, 1, "p")


def test_group_u_classes_are_singletons():
    assert abstract.conj_classes(Z3, "u").as_sets() == {frozenset({i}) for i in range(3)}


def test_i_classes_on_i2_are_types():
    from invsemi.orbits import cycle_chain_type
    els = list(all_partial_bijections(2))
    T = closure.table_of(els)
    by_type = {}
    for i, e in enumerate(els):
        by_type.setdefault(cycle_chain_type(e), set()).add(i)
    assert abstract.conj_classes(T, "i").as_sets() == {frozenset(c) for c in by_type.values()}


def test_zero_gives_universal_o():
    T = closure.table_of(list(all_partial_bijections(2)))
    assert len(abstract.conj_classes(T, "o").classes) == 1


def test_adjoin_identity():
    T = abstract.adjoin_identity(NIL2)
    assert T.order == 3 and T.identity == 2


def test_requires_identity_for_u():
    with pytest.raises(abstract.PreconditionError):
        abstract.relation_matrix(NIL2, "u")


def test_omega_independence(rng):
    for _ in range(20):
        T = closure.to_cayley(closure.generate(random_gens(rng, 3), False))
        w = abstract.omega(T)
        for a in range(T.order):
            assert T.power(a, w + 1) == T.power(a, 2 * w + 1)
            e = T.power(a, w)
            assert T.mul(e, e) == e


def test_equivalences_on_random_monoids(rng):
    for _ in range(30):
        gens = random_gens(rng, 3) + [identity(3)]
        T = closure.to_cayley(closure.generate(gens, True))
        for r in EQUIV:
            assert abstract.is_equivalence(abstract.relation_matrix(T, r)), r
        p = abstract.relation_matrix(T, "p")
        assert np.all(np.diag(p)) and np.array_equal(p, p.T)


def test_weak_c_differs_from_i_on_an_inverse_semigroup():
    # id{2,3} and id{2} are related by the two-condition form via g = h = id{2}
    from invsemi.pbij import PartialBijection, partial_identity
    gens = [partial_identity(3, {2, 3}), PartialBijection.from_pairs(3, {1: 2}), identity(3)]
    S = closure.generate(gens, True)
    T = closure.to_cayley(S)
    a, b = S.index(partial_identity(3, {2, 3})), S.index(partial_identity(3, {2}))
    assert abstract.conj(T, a, b, "c", weak=True)
    assert not abstract.conj(T, a, b, "c")
    assert not abstract.conj(T, a, b, "i")


def test_cayley_round_trip():
    from invsemi.pbij import PartialBijection
    gens = [identity(2), PartialBijection.from_pairs(2, {1: 2})]
    T = closure.to_cayley(closure.generate(gens, True))
    U = abstract.parse_table(abstract.format_table(T))
    assert np.array_equal(T.table, U.table) and T.labels == U.labels and T.identity == U.identity


def test_cayley_parse_errors():
    with pytest.raises(ValueError):
        abstract.parse_table("cayley 2\norder 1\n1\n")
    with pytest.raises(ValueError):
        abstract.parse_table("cayley 1\norder 2\n1 1\n")
