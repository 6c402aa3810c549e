"""Partial bijections of {1..n}, the elements of the symmetric inverse monoid I_n.

Maps act on the right: ``x(st) = (xs)t``, so ``s * t`` means "apply s, then t".
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterable, Iterator, Optional, Sequence


class PartialBijection:
    """An injective partial map on the points {1..n}.

    ``images[i - 1]`` is the image of point ``i``, or ``None`` when ``i`` is
    outside the domain. Instances are immutable and hashable.
    """

    __slots__ = ("_images", "_hash")

    def __init__(self, images: Iterable[Optional[int]]):
        images = tuple(images)
        n = len(images)
        if n < 1:
            raise ValueError("degree must be at least 1")
        seen = set()
        for y in images:
            if y is None:
                continue
            if not isinstance(y, int) or not 1 <= y <= n:
                raise ValueError(f"image {y!r} outside 1..{n}")
            if y in seen:
                raise ValueError(f"not injective: {y} is hit twice")
            seen.add(y)
        self._images = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images: tuple) -> "PartialBijection":
        # caller guarantees a valid injective tuple
        obj = object.__new__(cls)
        obj._images = images
        obj._hash = hash(images)
        return obj

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "PartialBijection":
        """Build from ``{x: y}`` or an iterable of ``(x, y)`` pairs."""
        if hasattr(pairs, "items"):
            pairs = pairs.items()
        images: list[Optional[int]] = [None] * n
        for x, y in pairs:
            if not 1 <= x <= n:
                raise ValueError(f"point {x} outside 1..{n}")
            if images[x - 1] is not None:
                raise ValueError(f"point {x} mapped twice")
            images[x - 1] = y
        return cls(images)

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "PartialBijection":
        """A permutation of [n] given in cycle notation; unlisted points are fixed."""
        images: list[Optional[int]] = list(range(1, n + 1))
        for cyc in cycles:
            for i, x in enumerate(cyc):
                images[x - 1] = cyc[(i + 1) % len(cyc)]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self._images)

    @property
    def images(self) -> tuple:
        return self._images

    def __call__(self, x: int) -> Optional[int]:
        return self._images[x - 1]

    def __eq__(self, other):
        if not isinstance(other, PartialBijection):
            return NotImplemented
        return self._images == other._images

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "PartialBijection"):
        return self.sort_key() < other.sort_key()

    def sort_key(self) -> tuple:
        return tuple(0 if y is None else y for y in self._images)

    def __mul__(self, other: "PartialBijection") -> "PartialBijection":
        return compose(self, other)

    def __repr__(self):
        body = " ".join("-" if y is None else str(y) for y in self._images)
        return f"PartialBijection[{body}]"

    def __str__(self):
        return " ".join("-" if y is None else str(y) for y in self._images)

    def __reduce__(self):
        return (PartialBijection, (self._images,))


def compose(s: PartialBijection, t: PartialBijection) -> PartialBijection:
    """Apply ``s`` then ``t``."""
    if s.degree != t.degree:
        raise ValueError("degree mismatch")
    ti = t._images
    return PartialBijection._trusted(
        tuple(None if y is None else ti[y - 1] for y in s._images))


def inverse(s: PartialBijection) -> PartialBijection:
    images: list[Optional[int]] = [None] * s.degree
    for x, y in enumerate(s._images, start=1):
        if y is not None:
            images[y - 1] = x
    return PartialBijection._trusted(tuple(images))


def identity(n: int) -> PartialBijection:
    return PartialBijection(range(1, n + 1))


def empty(n: int) -> PartialBijection:
    return PartialBijection([None] * n)


def partial_identity(n: int, points: Iterable[int]) -> PartialBijection:
    return restrict(identity(n), points)


def domain(s: PartialBijection) -> frozenset:
    return frozenset(x for x, y in enumerate(s.images, start=1) if y is not None)


def range_of(s: PartialBijection) -> frozenset:
    return frozenset(y for y in s.images if y is not None)


def is_idempotent(s: PartialBijection) -> bool:
    return all(y is None or y == x for x, y in enumerate(s.images, start=1))


def is_permutation(s: PartialBijection) -> bool:
    return all(y is not None for y in s.images)


def restrict(s: PartialBijection, points: Iterable[int]) -> PartialBijection:
    """``s`` with its domain cut down to ``dom(s) & points``."""
    keep = set(points)
    if not keep <= set(range(1, s.degree + 1)):
        raise ValueError(f"restriction set not contained in 1..{s.degree}")
    return PartialBijection(
        y if x in keep else None for x, y in enumerate(s.images, start=1))


def all_partial_bijections(n: int) -> Iterator[PartialBijection]:
    """Every element of I_n, grouped by rank."""
    pts = range(1, n + 1)
    for k in range(n + 1):
        for dom in combinations(pts, k):
            for rng in combinations(pts, k):
                for img in permutations(rng):
                    images: list[Optional[int]] = [None] * n
                    for x, y in zip(dom, img):
                        images[x - 1] = y
                    yield PartialBijection(images)


# -- text format ----------------------------------------------------------

FORMAT_HEADER = "pb 1"


def format_elements(named: Sequence[tuple[str, PartialBijection]]) -> str:
    if not named:
        raise ValueError("nothing to write")
    n = named[0][1].degree
    lines = [FORMAT_HEADER, f"n {n}"]
    for name, s in named:
        if s.degree != n:
            raise ValueError("degree mismatch")
        lines.append(f"gen {name}: {s}")
    return "\n".join(lines) + "\n"


def parse_elements(text: str) -> list[tuple[str, PartialBijection]]:
    """Parse a ``pb 1`` file into ``(name, element)`` pairs."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or lines[0] != FORMAT_HEADER:
        raise ValueError(f"expected header {FORMAT_HEADER!r}")
    if len(lines) < 2 or not lines[1].startswith("n "):
        raise ValueError("expected 'n <N>' on line 2")
    try:
        n = int(lines[1].split()[1])
    except (IndexError, ValueError):
        raise ValueError("bad degree line") from None
    if n < 1:
        raise ValueError("degree must be at least 1")
    out = []
    for ln in lines[2:]:
        if not ln.startswith("gen "):
            raise ValueError(f"unexpected line {ln!r}")
        head, sep, body = ln[4:].partition(":")
        name = head.strip()
        if not sep or not name:
            raise ValueError(f"malformed gen line {ln!r}")
        tokens = body.split()
        if len(tokens) != n:
            raise ValueError(f"gen {name}: expected {n} entries, got {len(tokens)}")
        images = []
        for tok in tokens:
            if tok == "-":
                images.append(None)
            else:
                try:
                    images.append(int(tok))
                except ValueError:
                    raise ValueError(f"gen {name}: bad entry {tok!r}") from None
        out.append((name, PartialBijection(images)))
    return out
