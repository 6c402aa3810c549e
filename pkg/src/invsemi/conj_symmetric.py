"""Conjugacy deciders and witness constructions for elements of I_n.

All relations here are taken inside the full symmetric inverse monoid I_n,
where each one reduces to a statement about cycles and chains.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .orbits import Chain, chains_of, cycle_chain_type, cycle_type, cycles_of
from .pbij import PartialBijection, compose, inverse


@dataclass
class ChainMatching:
    """Injective chain maps ``phi: chains(a) -> chains(b)`` and ``psi`` back."""
    phi: dict = field(default_factory=dict)
    psi: dict = field(default_factory=dict)


@dataclass(frozen=True)
class PWitness:
    u: PartialBijection
    v: PartialBijection


def _check_degrees(a, b):
    if a.degree != b.degree:
        raise ValueError("degree mismatch")


def conj_i(a: PartialBijection, b: PartialBijection) -> bool:
    _check_degrees(a, b)
    return cycle_chain_type(a) == cycle_chain_type(b)


# In I_n every partial bijection extends to a permutation, so the unit
# conjugacy classes coincide with the ~i classes.
conj_u = conj_i


def conj_pstar(a: PartialBijection, b: PartialBijection) -> bool:
    _check_degrees(a, b)
    return cycle_type(a) == cycle_type(b)


conj_tr = conj_pstar


def conj_o(a: PartialBijection, b: PartialBijection) -> bool:
    # I_n has a zero (the empty map), which makes ~o universal.
    _check_degrees(a, b)
    return True


def _pair_by_length(src, dst):
    """Pair each structure of ``src`` with an unused one of equal length in ``dst``."""
    pool: dict[int, list] = {}
    for c in dst:
        pool.setdefault(len(c), []).append(c)
    pairs = []
    for c in src:
        bucket = pool.get(len(c))
        if not bucket:
            return None
        pairs.append((c, bucket.pop(0)))
    return pairs


def conj_i_witness(a: PartialBijection, b: PartialBijection) -> Optional[PartialBijection]:
    """A permutation ``g`` with ``g a g^-1 = b`` and ``g^-1 b g = a``, or None."""
    if not conj_i(a, b):
        return None
    cyc = _pair_by_length(cycles_of(b), cycles_of(a))
    ch = _pair_by_length(chains_of(b), chains_of(a))
    mapping = {}
    for src, dst in cyc + ch:
        mapping.update(zip(src.points, dst.points))
    g = PartialBijection.from_pairs(a.degree, mapping)
    gi = inverse(g)
    assert compose(compose(g, a), gi) == b and compose(compose(gi, b), g) == a
    return g


# -- ~p ------------------------------------------------------------------

def _chain_order(c: Chain, side: int):
    # longest first; ties by least point, then a-side before b-side
    return (-len(c), min(c.points), side)


def greedy_matching(a: PartialBijection, b: PartialBijection):
    """Run the greedy chain matching on ``a`` and ``b``.

    Returns ``(accepted, steps)`` where each step is ``(side, theta, partner)``
    in processing order; ``side`` is 0 when ``theta`` is a chain of ``a``.
    The caller is responsible for checking that the cycle counts agree.
    """
    chains = (chains_of(a), chains_of(b))
    long_pool = [{c for c in chains[s] if len(c) > 1} for s in (0, 1)]
    short_pool = [{c for c in chains[s] if len(c) == 1} for s in (0, 1)]
    steps = []
    while long_pool[0] or long_pool[1]:
        side, theta = min(
            ((s, c) for s in (0, 1) for c in long_pool[s]),
            key=lambda sc: _chain_order(sc[1], sc[0]))
        other = 1 - side
        candidates = long_pool[other] | short_pool[other]
        if not candidates:
            return False, steps
        partner = min(candidates, key=lambda c: _chain_order(c, other))
        if len(theta) > len(partner) + 1:
            return False, steps
        long_pool[side].discard(theta)
        long_pool[other].discard(partner)
        short_pool[other].discard(partner)
        steps.append((side, theta, partner))
    return True, steps


def conj_p(a: PartialBijection, b: PartialBijection) -> bool:
    _check_degrees(a, b)
    if cycle_type(a) != cycle_type(b):
        return False
    return greedy_matching(a, b)[0]


def matching_from_steps(steps) -> ChainMatching:
    """The inversive satisfying pair read off an accepting greedy run."""
    m = ChainMatching()
    for side, theta, partner in steps:
        fwd, back = (m.phi, m.psi) if side == 0 else (m.psi, m.phi)
        fwd[theta] = partner
        if len(partner) > 1:
            back[partner] = theta
    return m


def conj_p_witness(a: PartialBijection, b: PartialBijection) -> Optional[PWitness]:
    """Construct ``u, v`` with ``a = uv`` and ``b = vu``, or return None."""
    _check_degrees(a, b)
    if cycle_type(a) != cycle_type(b):
        return None
    ok, steps = greedy_matching(a, b)
    if not ok:
        return None

    maps = ({}, {})  # u, v as point dictionaries
    for ca, cb in _pair_by_length(cycles_of(a), cycles_of(b)):
        xs, ys = ca.points, cb.points
        k = len(xs)
        for i in range(k):
            maps[0][xs[i]] = ys[i]
            maps[1][ys[i]] = xs[(i + 1) % k]

    for side, theta, partner in steps:
        # theta on this side gets ``fwd``; the completing map is ``back``
        fwd, back = maps[side], maps[1 - side]
        xs, ys = theta.points, partner.points
        for i, y in enumerate(ys):
            fwd[xs[i]] = y
            if i + 1 < len(xs):
                back[y] = xs[i + 1]

    n = a.degree
    u = PartialBijection.from_pairs(n, maps[0])
    v = PartialBijection.from_pairs(n, maps[1])
    if compose(u, v) != a or compose(v, u) != b:
        raise AssertionError("witness construction failed to verify")
    return PWitness(u, v)


def _validate_matching(a, b, m: ChainMatching):
    ca, cb = set(chains_of(a)), set(chains_of(b))
    for src, dst, f in ((ca, cb, m.phi), (cb, ca, m.psi)):
        for k, v in f.items():
            if k not in src or v not in dst:
                raise ValueError("matching references a chain that does not exist")
    return ca, cb


def is_satisfying_pair(a: PartialBijection, b: PartialBijection, m: ChainMatching) -> bool:
    ca, cb = _validate_matching(a, b, m)
    for src, f in ((ca, m.phi), (cb, m.psi)):
        long = {c for c in src if len(c) > 1}
        if set(f) != long:
            return False
        if len(set(f.values())) != len(f):
            return False
        if any(len(k) > len(v) + 1 for k, v in f.items()):
            return False
    return True


def is_inversive_pair(a: PartialBijection, b: PartialBijection, m: ChainMatching) -> bool:
    if not is_satisfying_pair(a, b, m):
        return False
    for f, g in ((m.phi, m.psi), (m.psi, m.phi)):
        for theta, image in f.items():
            if image in g and g[image] != theta:
                return False
    return True


MAX_SEARCH_CHAINS = 8


def _exists_injection(src, dst) -> bool:
    if len(src) > MAX_SEARCH_CHAINS:
        raise ValueError(f"too many chains for exhaustive search (> {MAX_SEARCH_CHAINS})")
    used = [False] * len(dst)

    def place(i):
        if i == len(src):
            return True
        for j, d in enumerate(dst):
            if not used[j] and len(src[i]) <= len(d) + 1:
                used[j] = True
                if place(i + 1):
                    return True
                used[j] = False
        return False

    return place(0)


def exists_satisfying_pair(a: PartialBijection, b: PartialBijection) -> bool:
    """Exhaustive search for a satisfying pair.

    The two maps of a satisfying pair are constrained independently, so this
    is two separate injection searches.
    """
    _check_degrees(a, b)
    ca, cb = chains_of(a), chains_of(b)
    return (_exists_injection([c for c in ca if len(c) > 1], list(cb))
            and _exists_injection([c for c in cb if len(c) > 1], list(ca)))


RELATIONS = {
    "i": conj_i,
    "u": conj_u,
    "p": conj_p,
    "pstar": conj_pstar,
    "tr": conj_tr,
    "o": conj_o,
}
