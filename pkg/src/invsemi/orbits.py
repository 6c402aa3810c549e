"""Cycle/chain decomposition of partial bijections."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .pbij import PartialBijection


@dataclass(frozen=True)
class Cycle:
    """A periodic orbit ``(x1, ..., xk)``, reported starting at its least point."""
    points: tuple

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class Chain:
    """A maximal path ``[x1, ..., xk]``: x1 has no preimage, xk has no image."""
    points: tuple

    def __len__(self):
        return len(self.points)

    @property
    def start(self):
        return self.points[0]


@dataclass(frozen=True)
class CycleChainType:
    cycle_counts: tuple  # sorted (length, count) pairs, zero counts omitted
    chain_counts: tuple

    @property
    def cycles(self) -> dict:
        return dict(self.cycle_counts)

    @property
    def chains(self) -> dict:
        return dict(self.chain_counts)

    def degree(self) -> int:
        return sum(k * c for k, c in self.cycle_counts + self.chain_counts)


@lru_cache(maxsize=1 << 16)
def decompose(s: PartialBijection) -> tuple[tuple[Cycle, ...], tuple[Chain, ...]]:
    """Split [n] into the cycles and maximal chains of ``s``.

    Cycles come first, then chains, each sorted by least point.
    """
    images = s.images
    n = len(images)
    has_preimage = [False] * (n + 1)
    for y in images:
        if y is not None:
            has_preimage[y] = True

    seen = [False] * (n + 1)
    chains = []
    for x in range(1, n + 1):
        if has_preimage[x]:
            continue
        path = []
        y = x
        while y is not None:
            path.append(y)
            seen[y] = True
            y = images[y - 1]
        chains.append(Chain(tuple(path)))

    cycles = []
    for x in range(1, n + 1):
        if seen[x]:
            continue
        path = []
        y = x
        while not seen[y]:
            seen[y] = True
            path.append(y)
            y = images[y - 1]
        cycles.append(Cycle(tuple(path)))

    chains.sort(key=lambda c: min(c.points))
    return tuple(cycles), tuple(chains)


def cycles_of(s: PartialBijection) -> tuple[Cycle, ...]:
    return decompose(s)[0]


def chains_of(s: PartialBijection) -> tuple[Chain, ...]:
    return decompose(s)[1]


def cycle_chain_type(s: PartialBijection) -> CycleChainType:
    cycles, chains = decompose(s)
    return CycleChainType(
        tuple(sorted(Counter(len(c) for c in cycles).items())),
        tuple(sorted(Counter(len(c) for c in chains).items())),
    )


def cycle_type(s: PartialBijection) -> dict:
    """Map cycle length to number of cycles of that length."""
    return cycle_chain_type(s).cycles


def format_type(t: CycleChainType) -> str:
    cyc = " ".join(f"{k}:{c}" for k, c in t.cycle_counts)
    ch = " ".join(f"{k}:{c}" for k, c in t.chain_counts)
    return f"cycles: {cyc}".rstrip() + "\n" + f"chains: {ch}".rstrip() + "\n"
