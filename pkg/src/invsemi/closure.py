"""Enumerated closures of partial bijections and the generator-input
decision problems over them (membership, Green's relations, zero,
nilpotency, idempotent centrality, factorizability, ...).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import abstract
from .pbij import (PartialBijection, compose, domain, identity, inverse,
                   is_idempotent, is_permutation, range_of)
from .permgrp import prescribed_image, schreier_sims

DEFAULT_CAP = 200_000


class CapExceeded(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"cap exceeded (cap={cap})")
        self.cap = cap


def _uniform_degree(gens: Sequence[PartialBijection], degree: Optional[int]) -> int:
    if gens:
        n = gens[0].degree
        if any(g.degree != n for g in gens):
            raise ValueError("degree mismatch")
        if degree is not None and degree != n:
            raise ValueError("degree mismatch")
        return n
    if degree is None:
        raise ValueError("degree required for an empty generating set")
    return degree


def letters(gens: Sequence[PartialBijection], include_inverses: bool) -> list[PartialBijection]:
    """The generating alphabet: generators, then any new inverses, deduplicated."""
    out = list(dict.fromkeys(gens))
    if include_inverses:
        out += [g for g in dict.fromkeys(inverse(g) for g in gens) if g not in out]
    return out


@dataclass
class GeneratedSemigroup:
    degree: int
    generators: list
    inverse_closed: bool
    elements: list
    word_length: dict
    cap: int
    letters: list = field(repr=False, default_factory=list)
    right: Optional[np.ndarray] = field(repr=False, default=None)  # right[i, j] = elem_i * letter_j
    _index: dict = field(repr=False, default_factory=dict)
    _table: Optional[np.ndarray] = field(repr=False, default=None)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, h):
        return h in self._index

    def index(self, h: PartialBijection) -> int:
        return self._index[h]

    def table(self) -> np.ndarray:
        """Full multiplication table by element index (built on first use)."""
        if self._table is None:
            self._table = _product_table(self.elements, self._index)
        return self._table

    def left(self) -> np.ndarray:
        """``left[i, j]`` is the index of ``letter_j * elem_i``."""
        out = np.zeros((len(self), len(self.letters)), dtype=np.int64)
        for i, s in enumerate(self.elements):
            for j, g in enumerate(self.letters):
                out[i, j] = self._index[compose(g, s)]
        return out


def _encode(images: np.ndarray, n: int) -> np.ndarray:
    weights = (n + 1) ** np.arange(n, dtype=np.int64)
    return images @ weights


def _product_table(elements, index) -> np.ndarray:
    m = len(elements)
    n = elements[0].degree
    E = np.zeros((m, n + 1), dtype=np.int64)
    for i, s in enumerate(elements):
        E[i, 1:] = [0 if y is None else y for y in s.images]
    keys = _encode(E[:, 1:], n)
    order = np.argsort(keys)
    sorted_keys = keys[order]
    out = np.empty((m, m), dtype=np.int64)
    for a in range(m):
        prod = E[:, E[a, 1:]]  # prod[b, x] = image of x under a*b
        k = _encode(prod, n)
        pos = np.minimum(np.searchsorted(sorted_keys, k), m - 1)
        if not np.array_equal(sorted_keys[pos], k):
            raise ValueError("elements are not closed under composition")
        out[a] = order[pos]
    return out


def generate(gens: Sequence[PartialBijection], include_inverses: bool = False,
             cap: int = DEFAULT_CAP, degree: Optional[int] = None) -> GeneratedSemigroup:
    """Breadth-first closure of ``gens`` under composition.

    Elements are ordered by word length, then by image tuple. An empty
    generating set yields the trivial monoid ``{identity}`` (the empty word).
    """
    n = _uniform_degree(gens, degree)
    alpha = letters(gens, include_inverses)
    if not alpha:
        e = identity(n)
        return GeneratedSemigroup(n, [], include_inverses, [e], {e: 0}, cap,
                                  [], np.zeros((1, 0), dtype=np.int64), {e: 0})

    layer = sorted(set(alpha), key=PartialBijection.sort_key)
    elements: list = []
    index: dict = {}
    word_length: dict = {}
    depth = 1
    while layer:
        if len(elements) + len(layer) > cap:
            raise CapExceeded(cap)
        for s in layer:
            index[s] = len(elements)
            elements.append(s)
            word_length[s] = depth
        nxt = set()
        for s in layer:
            for g in alpha:
                p = compose(s, g)
                if p not in index:
                    nxt.add(p)
        layer = sorted(nxt, key=PartialBijection.sort_key)
        depth += 1

    right = np.array([[index[compose(s, g)] for g in alpha] for s in elements],
                     dtype=np.int64)
    return GeneratedSemigroup(n, list(gens), include_inverses, elements, word_length,
                              cap, alpha, right, index)


def contains(S: GeneratedSemigroup, h: PartialBijection) -> bool:
    if h.degree != S.degree:
        raise ValueError("degree mismatch")
    return h in S


def shortest_word_length(S: GeneratedSemigroup, h: PartialBijection) -> Optional[int]:
    if h.degree != S.degree:
        raise ValueError("degree mismatch")
    return S.word_length.get(h)


def min_word_cost(gens: Sequence[PartialBijection], costs: Sequence[int],
                  target: PartialBijection, include_inverses: bool = True,
                  cap: int = DEFAULT_CAP) -> Optional[int]:
    """Least total letter cost of a word equal to ``target``.

    ``costs[i]`` is the cost of ``gens[i]`` (its inverse costs the same) and
    must be 0 or 1. Returns None when ``target`` is not generated.
    """
    if len(costs) != len(gens):
        raise ValueError("one cost per generator required")
    alpha = []
    for g, c in zip(gens, costs):
        if c not in (0, 1):
            raise ValueError("costs must be 0 or 1")
        alpha.append((g, c))
        if include_inverses:
            alpha.append((inverse(g), c))
    best: dict = {}
    dq = deque()
    for g, c in alpha:
        if c < best.get(g, 2):
            best[g] = c
            if c == 0:
                dq.appendleft((c, g))
            else:
                dq.append((c, g))
    done = set()
    while dq:
        d, s = dq.popleft()
        if s in done or d != best[s]:
            continue
        done.add(s)
        if len(done) > cap:
            raise CapExceeded(cap)
        if s == target:
            return d
        for g, c in alpha:
            p = compose(s, g)
            nd = d + c
            if nd < best.get(p, nd + 1):
                best[p] = nd
                if c == 0:
                    dq.appendleft((nd, p))
                else:
                    dq.append((nd, p))
    return None


# -- transformation graph and zero -----------------------------------------

@dataclass(frozen=True)
class TransformationGraph:
    vertices: int  # vertices are 1..n+1, with n+1 the "outside" vertex
    edges: frozenset  # frozensets {p, q}, p != q


def transformation_graph(gens: Sequence[PartialBijection],
                         degree: Optional[int] = None) -> TransformationGraph:
    """Undirected graph on [n+1]: p--q when a generator maps one to the other,
    p--(n+1) when p is outside some generator's domain. Self-loops are dropped."""
    n = _uniform_degree(gens, degree)
    edges = set()
    for g in gens:
        for p, q in enumerate(g.images, start=1):
            if q is None:
                edges.add(frozenset((p, n + 1)))
            elif p != q:
                edges.add(frozenset((p, q)))
    return TransformationGraph(n + 1, frozenset(edges))


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def graph_components(G: TransformationGraph) -> list[frozenset]:
    uf = UnionFind(G.vertices + 1)
    for e in G.edges:
        p, q = tuple(e)
        uf.union(p, q)
    comps: dict = {}
    for v in range(1, G.vertices + 1):
        comps.setdefault(uf.find(v), set()).add(v)
    return [frozenset(c) for c in comps.values()]


def has_zero_graph(gens: Sequence[PartialBijection], degree: Optional[int] = None) -> bool:
    """Zero test from connectivity of the transformation graph alone."""
    G = transformation_graph(gens, degree)
    outside = G.vertices
    return all(outside in c for c in graph_components(G) if len(c) > 1)


def zero_element(S: GeneratedSemigroup) -> Optional[PartialBijection]:
    # z*s = s*z = z for every generating letter extends to all of S
    L = S.letters
    for z in S.elements:
        if all(compose(z, g) == z and compose(g, z) == z for g in L):
            return z
    return None


# -- Green's relations --------------------------------------------------------

def _scc_labels(succ: np.ndarray) -> np.ndarray:
    """Strongly connected component label per vertex (Kosaraju, iterative)."""
    m = succ.shape[0]
    adj = [sorted(set(row.tolist())) for row in succ]
    radj: list[list[int]] = [[] for _ in range(m)]
    for v, outs in enumerate(adj):
        for w in outs:
            radj[w].append(v)
    seen = [False] * m
    order = []
    for root in range(m):
        if seen[root]:
            continue
        seen[root] = True
        stack = [(root, iter(adj[root]))]
        while stack:
            v, it = stack[-1]
            for w in it:
                if not seen[w]:
                    seen[w] = True
                    stack.append((w, iter(adj[w])))
                    break
            else:
                stack.pop()
                order.append(v)
    label = np.full(m, -1, dtype=np.int64)
    c = 0
    for root in reversed(order):
        if label[root] >= 0:
            continue
        label[root] = c
        stack = [root]
        while stack:
            v = stack.pop()
            for w in radj[v]:
                if label[w] < 0:
                    label[w] = c
                    stack.append(w)
        c += 1
    return label


def green_classes(S: GeneratedSemigroup, relation: str) -> np.ndarray:
    """Class label per element for R, L or H, from the definition ``aS^1 = bS^1``.

    Two elements are R-related exactly when each is reachable from the other by
    right multiplication by generating letters.
    """
    if relation == "R":
        return _scc_labels(S.right)
    if relation == "L":
        return _scc_labels(S.left())
    if relation == "H":
        r, l = green_classes(S, "R"), green_classes(S, "L")
        pairs = {}
        return np.array([pairs.setdefault((a, b), len(pairs)) for a, b in zip(r, l)])
    raise ValueError(f"unknown Green's relation {relation!r}")


def green(S: GeneratedSemigroup, a: PartialBijection, b: PartialBijection,
          relation: str, method: str = "auto") -> bool:
    """Decide ``a R b``, ``a L b`` or ``a H b`` in S.

    ``method="criterion"`` compares domains/ranges and needs an inverse
    closure; ``"definitional"`` uses the ideal definition; ``"auto"`` picks
    the criterion when valid.
    """
    if relation not in ("R", "L", "H"):
        raise ValueError(f"unknown Green's relation {relation!r}")
    if a not in S or b not in S:
        raise ValueError("elements must belong to the semigroup")
    if method == "auto":
        method = "criterion" if S.inverse_closed else "definitional"
    if method == "criterion":
        if not S.inverse_closed:
            raise ValueError("criterion requires inverse semigroup")
        r = domain(a) == domain(b)
        l = range_of(a) == range_of(b)
        return {"R": r, "L": l, "H": r and l}[relation]
    if method == "definitional":
        labels = green_classes(S, relation)
        return bool(labels[S.index(a)] == labels[S.index(b)])
    raise ValueError(f"unknown method {method!r}")


# -- properties ---------------------------------------------------------------

PROPERTIES = (
    "commutative", "semilattice", "group", "left-identity", "right-identity",
    "completely-regular", "clifford", "r-trivial", "l-trivial",
    "central-idempotents", "nilpotent", "zero",
)


def _is_commutative(S):
    t = S.table()
    return bool(np.array_equal(t, t.T))


def _all_idempotent(S):
    t = S.table()
    return bool(np.all(np.diag(t) == np.arange(len(S))))


def _completely_regular(S):
    # dom(st) = dom(s) & dom(t) for all s, t in S
    doms = [domain(s) for s in S.elements]
    t = S.table()
    m = len(S)
    for i in range(m):
        for j in range(m):
            if doms[t[i, j]] != doms[i] & doms[j]:
                return False
    return True


def _central_idempotents(S):
    t = S.table()
    for e in range(len(S)):
        if t[e, e] == e and not np.array_equal(t[e], t[:, e]):
            return False
    return True


def _has_left_identity(S):
    t = S.table()
    r = np.arange(len(S))
    return any(np.array_equal(t[e], r) for e in range(len(S)))


def _has_right_identity(S):
    t = S.table()
    r = np.arange(len(S))
    return any(np.array_equal(t[:, e], r) for e in range(len(S)))


def _is_group(S):
    t = S.table()
    m = len(S)
    rows = all(len(set(row.tolist())) == m for row in t)
    cols = all(len(set(col.tolist())) == m for col in t.T)
    return rows and cols


def _trivial_classes(S, relation):
    labels = green_classes(S, relation)
    return len(set(labels.tolist())) == len(S)


def _nilpotent(S):
    z = zero_element(S)
    if z is None:
        return False
    return [s for s in S.elements if is_idempotent(s)] == [z]


def property_definitional(S: GeneratedSemigroup, prop: str) -> bool:
    """Decide ``prop`` directly over the enumerated elements of S."""
    if prop == "commutative":
        return _is_commutative(S)
    if prop == "semilattice":
        return _is_commutative(S) and _all_idempotent(S)
    if prop == "group":
        return _is_group(S)
    if prop == "left-identity":
        return _has_left_identity(S)
    if prop == "right-identity":
        return _has_right_identity(S)
    if prop == "completely-regular":
        return _completely_regular(S)
    if prop == "clifford":
        return _completely_regular(S) and _central_idempotents(S)
    if prop == "r-trivial":
        return _trivial_classes(S, "R")
    if prop == "l-trivial":
        return _trivial_classes(S, "L")
    if prop == "central-idempotents":
        return _central_idempotents(S)
    if prop == "nilpotent":
        return _nilpotent(S)
    if prop == "zero":
        return zero_element(S) is not None
    raise ValueError(f"unknown property {prop!r}")


def generator_shortcut(gens: Sequence[PartialBijection], prop: str,
                       include_inverses: bool = False,
                       degree: Optional[int] = None) -> Optional[bool]:
    """Answer ``prop`` from the generators alone when a criterion is known.

    Returns None when no generator-level criterion applies.
    """
    alpha = letters(gens, include_inverses)
    if not alpha:
        return None
    if prop == "commutative":
        return all(compose(g, h) == compose(h, g) for i, g in enumerate(alpha)
                   for h in alpha[i + 1:])
    if prop == "semilattice":
        # idempotents of I_n commute, and products of them stay idempotent
        return all(is_idempotent(g) for g in alpha)
    if prop == "group":
        d = domain(alpha[0])
        return all(domain(g) == d and range_of(g) == d for g in alpha)
    if prop == "zero":
        return has_zero_graph(alpha, degree)
    if include_inverses:
        if prop in ("r-trivial", "l-trivial"):
            return generator_shortcut(gens, "semilattice", True, degree)
        if prop == "nilpotent":
            # a regular nilpotent semigroup is trivial
            return len(alpha) == 1 and is_idempotent(alpha[0])
    return None


def check_property(gens: Sequence[PartialBijection], prop: str,
                   include_inverses: bool = False, cap: int = DEFAULT_CAP,
                   method: str = "auto", degree: Optional[int] = None) -> bool:
    """Decide ``prop`` for the semigroup generated by ``gens``.

    ``method`` is ``"auto"`` (generator shortcut when one exists),
    ``"shortcut"`` (error if none) or ``"definitional"``.
    """
    if prop not in PROPERTIES:
        raise ValueError(f"unknown property {prop!r}")
    if method in ("auto", "shortcut"):
        quick = generator_shortcut(gens, prop, include_inverses, degree)
        if quick is not None:
            return quick
        if method == "shortcut":
            raise ValueError(f"no generator-level criterion for {prop!r}")
    elif method != "definitional":
        raise ValueError(f"unknown method {method!r}")
    S = generate(gens, include_inverses, cap, degree)
    if method == "auto" and include_inverses and prop == "central-idempotents":
        return _completely_regular(S)
    return property_definitional(S, prop)


IDENTITY_RELATIONS = ("i", "o", "pstar", "tr")


def sim_is_identity(gens: Sequence[PartialBijection], relation: str,
                    include_inverses: bool = False, cap: int = DEFAULT_CAP,
                    degree: Optional[int] = None) -> bool:
    """Whether the given conjugacy is the identity relation on the closure.

    ~i: commutative (always on the inverse closure); ~o: commutative group;
    ~p*: commutative; ~tr: commutative and completely regular.
    """
    def prop(p, inv=include_inverses):
        return check_property(gens, p, inv, cap, degree=degree)

    if relation == "i":
        return prop("commutative", True)
    if relation == "o":
        return prop("commutative") and prop("group")
    if relation == "pstar":
        return prop("commutative")
    if relation == "tr":
        return prop("commutative") and prop("completely-regular")
    raise ValueError(f"unknown relation {relation!r}")


# -- factorizability --------------------------------------------------------

@dataclass(frozen=True)
class FactorizationReport:
    factorizable: bool
    per_generator: tuple  # one bool per input generator
    units: tuple  # witness unit per generator (None when not factorizable)


def is_factorizable(gens: Sequence[PartialBijection],
                    degree: Optional[int] = None) -> FactorizationReport:
    """Factorizability of the inverse monoid generated by ``gens`` and the identity.

    A generator ``a`` factors iff some unit agrees with ``a`` on ``dom(a)``;
    the units are generated by the permutation generators.
    """
    n = _uniform_degree(gens, degree)
    unit_gens = [g for g in dict.fromkeys(gens) if is_permutation(g)]
    verdicts, witnesses = [], []
    for a in gens:
        pts = sorted(domain(a))
        chain = schreier_sims(unit_gens, pts, degree=n)
        u = prescribed_image(chain, pts, [a(x) for x in pts])
        verdicts.append(u is not None)
        witnesses.append(u)
    return FactorizationReport(all(verdicts), tuple(verdicts), tuple(witnesses))


# -- export -------------------------------------------------------------------

def element_label(s: PartialBijection) -> str:
    return "[" + ",".join("-" if y is None else str(y) for y in s.images) + "]"


def to_cayley(S: GeneratedSemigroup) -> abstract.CayleyTable:
    t = S.table()
    return abstract.CayleyTable(t, labels=[element_label(s) for s in S.elements],
                                check=False)


def table_of(elements: Sequence[PartialBijection]) -> abstract.CayleyTable:
    """Cayley table of a composition-closed list of partial bijections."""
    elements = list(elements)
    index = {s: i for i, s in enumerate(elements)}
    t = _product_table(elements, index)
    return abstract.CayleyTable(t, labels=[element_label(s) for s in elements], check=False)
