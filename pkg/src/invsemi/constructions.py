"""Instance generators and reductions: digraphs to nilpotent-or-not
semigroups, the membership-to-i-conjugacy lift, the Towers of Hanoi
semigroup, and semigroups realising a prescribed partition as
conjugacy classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from . import abstract
from .closure import DEFAULT_CAP, min_word_cost
from .pbij import PartialBijection, domain, range_of


# -- digraphs ---------------------------------------------------------------

@dataclass(frozen=True)
class Digraph:
    vertices: int
    edges: tuple  # (u, v) pairs, 1-based

    def __post_init__(self):
        for u, v in self.edges:
            if not (1 <= u <= self.vertices and 1 <= v <= self.vertices):
                raise ValueError(f"edge ({u}, {v}) references a missing vertex")

    def is_acyclic(self) -> bool:
        indeg = [0] * (self.vertices + 1)
        succ: dict = {}
        for u, v in set(self.edges):
            succ.setdefault(u, []).append(v)
            indeg[v] += 1
        stack = [v for v in range(1, self.vertices + 1) if indeg[v] == 0]
        seen = 0
        while stack:
            u = stack.pop()
            seen += 1
            for v in succ.get(u, ()):
                indeg[v] -= 1
                if indeg[v] == 0:
                    stack.append(v)
        return seen == self.vertices


def graph_to_semigroup(G: Digraph) -> list[PartialBijection]:
    """One generator per edge ``(u, v)``: defined only at ``u``, sending it to ``v``."""
    gens = []
    for u, v in G.edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        gens.append(PartialBijection.from_pairs(G.vertices, {u: v}))
    return gens


def parse_graph(text: str) -> Digraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or lines[0] != "digraph":
        raise ValueError("expected header 'digraph'")
    if len(lines) < 2 or not lines[1].startswith("vertices "):
        raise ValueError("expected 'vertices <N>' on line 2")
    n = int(lines[1].split()[1])
    edges = []
    for ln in lines[2:]:
        parts = ln.split()
        if len(parts) != 3 or parts[0] != "edge":
            raise ValueError(f"unexpected line {ln!r}")
        edges.append((int(parts[1]), int(parts[2])))
    return Digraph(n, tuple(edges))


def format_graph(G: Digraph) -> str:
    lines = ["digraph", f"vertices {G.vertices}"]
    lines += [f"edge {u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


# -- membership to i-conjugacy ------------------------------------------------

@dataclass(frozen=True)
class IConjInstance:
    n: int
    lifted: tuple  # the lifted generators
    a: PartialBijection
    b: PartialBijection

    @property
    def degree(self) -> int:
        return self.n * (self.n + 1)

    @property
    def generators(self) -> list[PartialBijection]:
        """Generators of the lifted semigroup (take the inverse closure)."""
        return list(self.lifted) + [self.a, self.b]


def pair_point(n: int, x: int, y: int) -> int:
    """Encode ``(x, y)`` in [n] x [n+1] as a point of [n(n+1)]."""
    return (x - 1) * (n + 1) + y


def lift(s: PartialBijection) -> PartialBijection:
    """Act by ``s`` on the first coordinate of [n] x [n+1]."""
    n = s.degree
    pairs = {}
    for x in range(1, n + 1):
        xs = s(x)
        if xs is None:
            continue
        for y in range(1, n + 2):
            pairs[pair_point(n, x, y)] = pair_point(n, xs, y)
    return PartialBijection.from_pairs(n * (n + 1), pairs)


def iconj_reduction(gens: Sequence[PartialBijection], h: PartialBijection) -> IConjInstance:
    """Lift ``(gens, h)`` so that membership of ``h`` becomes an i-conjugacy question."""
    n = h.degree
    if any(g.degree != n for g in gens):
        raise ValueError("degree mismatch")
    N = n * (n + 1)
    a_pairs, b_pairs = {}, {}
    for x in sorted(range_of(h)):
        for y in range(1, x + 1):
            a_pairs[pair_point(n, x, y)] = pair_point(n, x, y + 1)
    for x in sorted(domain(h)):
        for y in range(1, h(x) + 1):
            b_pairs[pair_point(n, x, y)] = pair_point(n, x, y + 1)
    return IConjInstance(
        n, tuple(lift(g) for g in gens),
        PartialBijection.from_pairs(N, a_pairs),
        PartialBijection.from_pairs(N, b_pairs),
    )


# -- Towers of Hanoi --------------------------------------------------------

@dataclass(frozen=True)
class HanoiInstance:
    disks: int
    named: tuple  # (name, generator) pairs: a_i, b_i, c_i for each disk, then d
    target: PartialBijection  # e

    @property
    def generators(self) -> list[PartialBijection]:
        return [g for _, g in self.named]

    @property
    def move_generators(self) -> list[PartialBijection]:
        return [g for name, g in self.named if name != "d"]

    @property
    def d(self) -> PartialBijection:
        return self.named[-1][1]


def hanoi_point(x: int, y: int) -> int:
    """Point for "disk y rests on peg x"; point 1 is the extra marker."""
    return 1 + 3 * (y - 1) + x


def _hanoi_move(n: int, disk: int, src: int, dst: int) -> PartialBijection:
    idle = 6 - src - dst
    pairs = {1: 1, hanoi_point(src, disk): hanoi_point(dst, disk)}
    for y in range(1, n + 1):
        for x in (1, 2, 3):
            if x == idle or y > disk:
                pairs[hanoi_point(x, y)] = hanoi_point(x, y)
    return PartialBijection.from_pairs(3 * n + 1, pairs)


def hanoi_instance(n: int) -> HanoiInstance:
    if n < 1:
        raise ValueError("need at least one disk")
    named = []
    for name, src, dst in (("a", 1, 2), ("b", 1, 3), ("c", 2, 3)):
        for i in range(1, n + 1):
            named.append((f"{name}{i}", _hanoi_move(n, i, src, dst)))
    deg = 3 * n + 1
    peg = lambda x: PartialBijection.from_pairs(  # noqa: E731
        deg, {hanoi_point(x, y): hanoi_point(x, y) for y in range(1, n + 1)})
    named.append(("d", peg(1)))
    return HanoiInstance(n, tuple(named), peg(2))


def hanoi_min_moves(inst: HanoiInstance, cap: int = DEFAULT_CAP) -> Optional[int]:
    """Fewest move letters (a/b/c or inverses) in any word equal to the target."""
    costs = [0 if name == "d" else 1 for name, _ in inst.named]
    return min_word_cost(inst.generators, costs, inst.target, True, cap)


# -- partition covering -----------------------------------------------------

@dataclass(frozen=True)
class Partition:
    size: int
    blocks: tuple  # tuples of sorted 1-based points, in the given order

    def __post_init__(self):
        pts = [x for b in self.blocks for x in b]
        if not self.blocks or any(not b for b in self.blocks):
            raise ValueError("blocks must be non-empty")
        if sorted(pts) != list(range(1, self.size + 1)):
            raise ValueError(f"blocks must partition 1..{self.size}")

    @classmethod
    def from_blocks(cls, blocks) -> "Partition":
        blocks = tuple(tuple(sorted(b)) for b in blocks)
        return cls(sum(len(b) for b in blocks), blocks)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"1,2|3|4,5"``."""
        try:
            blocks = [[int(x) for x in part.split(",")] for part in text.split("|")]
        except ValueError:
            raise ValueError(f"bad partition {text!r}") from None
        return cls.from_blocks(blocks)

    def __str__(self):
        return "|".join(",".join(map(str, b)) for b in self.blocks)

    def as_sets(self) -> set:
        return {frozenset(b) for b in self.blocks}


def set_partitions(n: int) -> Iterator[Partition]:
    """Every partition of [n] (Bell(n) of them)."""
    def rec(k):
        if k == 0:
            yield []
            return
        for p in rec(k - 1):
            for i in range(len(p)):
                yield p[:i] + [p[i] + [k]] + p[i + 1:]
            yield p + [[k]]
    for p in rec(n):
        yield Partition.from_blocks(p)


def _labelled(P: Partition, order: Sequence[int]):
    """Label point x of block ``order[j]`` as (i, j), i counting from 1."""
    label, point = {}, {}
    for j, bj in enumerate(order):
        for i, x in enumerate(P.blocks[bj], start=1):
            label[x] = (i, j)
            point[(i, j)] = x
    return label, point


def _table_from_rule(P: Partition, order, rule) -> abstract.CayleyTable:
    label, point = _labelled(P, order)
    N = P.size
    t = [[point[rule(label[x], label[y])] - 1 for y in range(1, N + 1)]
         for x in range(1, N + 1)]
    labels = [f"({label[x][0]},{label[x][1]})" for x in range(1, N + 1)]
    return abstract.CayleyTable(t, labels=labels)


def partition_o_semigroup(P: Partition) -> abstract.CayleyTable:
    """``(a,b)(c,d) = (1, b+d mod k)``; element ``x-1`` is ground point ``x``."""
    k = len(P.blocks)
    return _table_from_rule(P, range(k), lambda s, t: (1, (s[1] + t[1]) % k))


def partition_p_semigroup(P: Partition) -> abstract.CayleyTable:
    """``(a,b)(c,d) = (a,b)`` if ``b = d`` else ``(a,0)``, block 0 of maximum size."""
    k = len(P.blocks)
    big = max(range(k), key=lambda j: (len(P.blocks[j]), -j))
    order = [big] + [j for j in range(k) if j != big]
    return _table_from_rule(P, order, lambda s, t: s if s[1] == t[1] else (s[0], 0))


COVER_RELATIONS = ("o", "c", "p", "pstar", "tr")


def cover_table(P: Partition, relation: str) -> abstract.CayleyTable:
    """The semigroup whose ``relation`` classes are meant to be the blocks of P."""
    if relation == "o":
        return partition_o_semigroup(P)
    if relation in ("c", "p", "pstar", "tr"):
        # the additive construction has a zero when there is one block, and
        # its triple products never return to a non-leading label, so ~c is
        # realised by the left-zero/semilattice construction instead
        return partition_p_semigroup(P)
    raise ValueError(f"unknown relation {relation!r}")


def verify_partition_cover(P: Partition, relation: str) -> bool:
    T = cover_table(P, relation)
    cls = abstract.conj_classes(T, relation)
    got = {frozenset(x + 1 for x in c) for c in cls.classes}
    return cls.transitive and got == P.as_sets()
