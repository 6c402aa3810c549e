"""Stabilizer chains for permutation groups (deterministic Schreier-Sims).

Permutations are handled internally as 0-based tuples ``p`` with ``p[x]``
the image of ``x``; the public functions take and return total
:class:`PartialBijection` values. Products act on the right: ``x(gh) = (xg)h``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .pbij import PartialBijection, is_permutation


def _mul(g: tuple, h: tuple) -> tuple:
    return tuple(h[x] for x in g)


def _inv(g: tuple) -> tuple:
    out = [0] * len(g)
    for x, y in enumerate(g):
        out[y] = x
    return tuple(out)


def _to_tuple(p: PartialBijection) -> tuple:
    if not is_permutation(p):
        raise ValueError("not a permutation")
    return tuple(y - 1 for y in p.images)


def _from_tuple(p: tuple) -> PartialBijection:
    return PartialBijection._trusted(tuple(y + 1 for y in p))


@dataclass
class Level:
    base_point: int  # 0-based
    gens: list = field(default_factory=list)
    transversal: dict = field(default_factory=dict)  # orbit point -> rep mapping base_point there

    def rebuild(self, identity: tuple) -> None:
        b = self.base_point
        trans = {b: identity}
        frontier = [b]
        while frontier:
            nxt = []
            for x in frontier:
                rep = trans[x]
                for s in self.gens:
                    y = s[x]
                    if y not in trans:
                        trans[y] = _mul(rep, s)
                        nxt.append(y)
            frontier = nxt
        self.transversal = trans


class StabilizerChain:
    """Base, strong generators and explicit transversals for a permutation group."""

    def __init__(self, degree: int, levels: list[Level], generators: list[tuple]):
        self.degree = degree
        self.levels = levels
        self._gens = generators

    @property
    def base(self) -> list[int]:
        return [lvl.base_point + 1 for lvl in self.levels]

    @property
    def generators(self) -> list[PartialBijection]:
        return [_from_tuple(g) for g in self._gens]

    def order(self) -> int:
        out = 1
        for lvl in self.levels:
            out *= len(lvl.transversal)
        return out

    def strip(self, g: tuple, start: int = 0) -> tuple[tuple, int]:
        """Sift ``g`` through the levels from ``start``; returns (residue, drop-out level)."""
        for i in range(start, len(self.levels)):
            lvl = self.levels[i]
            y = g[lvl.base_point]
            rep = lvl.transversal.get(y)
            if rep is None:
                return g, i
            g = _mul(g, _inv(rep))
        return g, len(self.levels)

    def __contains__(self, g: PartialBijection) -> bool:
        return contains(self, g)

    def elements(self):
        """Enumerate the group (only sensible for small orders)."""
        ident = tuple(range(self.degree))
        out = [ident]
        for lvl in reversed(self.levels):
            out = [_mul(h, rep) for rep in lvl.transversal.values() for h in out]
        return [_from_tuple(g) for g in out]


def schreier_sims(gens: Sequence[PartialBijection], base_hint: Sequence[int] = (),
                  degree: Optional[int] = None) -> StabilizerChain:
    """Build a verified stabilizer chain whose base starts with ``base_hint``.

    ``degree`` is needed only when ``gens`` is empty.
    """
    if gens:
        degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise ValueError("degree mismatch")
    elif degree is None:
        raise ValueError("degree required for an empty generating set")
    if len(set(base_hint)) != len(base_hint):
        raise ValueError("base points must be distinct")
    if any(not 1 <= x <= degree for x in base_hint):
        raise ValueError("base point outside 1..n")

    ident = tuple(range(degree))
    tgens = [_to_tuple(g) for g in gens]
    tgens = [g for g in dict.fromkeys(tgens) if g != ident]
    base = [x - 1 for x in base_hint]

    def moved_point(g):
        return next(x for x in range(degree) if g[x] != x)

    for g in tgens:
        if all(g[b] == b for b in base):
            base.append(moved_point(g))

    levels = [Level(b) for b in base]
    for i, lvl in enumerate(levels):
        fixed = base[:i]
        lvl.gens = [g for g in tgens if all(g[b] == b for b in fixed)]
        lvl.rebuild(ident)
    chain = StabilizerChain(degree, levels, list(tgens))

    i = len(levels) - 1
    while i >= 0:
        lvl = levels[i]
        added = False
        for x, rep in list(lvl.transversal.items()):
            for s in lvl.gens:
                y = s[x]
                schreier = _mul(_mul(rep, s), _inv(lvl.transversal[y]))
                h, j = chain.strip(schreier, i + 1)
                if j < len(levels) or h != ident:
                    if j == len(levels):
                        levels.append(Level(moved_point(h)))
                    for lv in levels[i + 1:j + 1]:
                        lv.gens.append(h)
                        lv.rebuild(ident)
                    chain._gens.append(h)
                    i = j
                    added = True
                    break
            if added:
                break
        if not added:
            i -= 1
    return chain


def contains(chain: StabilizerChain, g: PartialBijection) -> bool:
    if g.degree != chain.degree:
        raise ValueError("degree mismatch")
    if not is_permutation(g):
        return False
    h, j = chain.strip(_to_tuple(g))
    return j == len(chain.levels) and h == tuple(range(chain.degree))


def prescribed_image(chain: StabilizerChain, points: Sequence[int],
                     targets: Sequence[int]) -> Optional[PartialBijection]:
    """A group element sending ``points[i]`` to ``targets[i]`` for every i, or None.

    If the chain's base does not start with ``points``, a new chain over the
    same strong generators is built with ``points`` as the base prefix.
    """
    if len(points) != len(targets):
        raise ValueError("length mismatch")
    if len(set(points)) != len(points) or len(set(targets)) != len(targets):
        return None
    if chain.base[:len(points)] != list(points):
        chain = schreier_sims(chain.generators, points, degree=chain.degree)

    # u = r_l ... r_2 r_1, built from the outermost level inward
    acc = tuple(range(chain.degree))
    for lvl, t in zip(chain.levels, targets):
        wanted = _inv(acc)[t - 1]
        rep = lvl.transversal.get(wanted)
        if rep is None:
            return None
        acc = _mul(rep, acc)
    u = _from_tuple(acc)
    assert all(u(x) == y for x, y in zip(points, targets))
    return u
