"""Finite semigroups given by multiplication table, and the conjugacy
relations evaluated straight from their definitions.

Element indices are 0-based in the API; the ``cayley 1`` file format is
1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Optional, Sequence

import numpy as np


class PreconditionError(ValueError):
    pass


class CayleyTable:
    """A finite semigroup on ``{0..m-1}``; ``table[i, j]`` is the product ``i*j``."""

    def __init__(self, table, identity: Optional[int] = None,
                 labels: Optional[Sequence[str]] = None, check: bool = True):
        t = np.asarray(table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise ValueError("table must be a non-empty square array")
        m = t.shape[0]
        if t.min() < 0 or t.max() >= m:
            raise ValueError("table entries out of range")
        if check and not _is_associative(t):
            raise ValueError("table is not associative")
        if identity is not None:
            r = np.arange(m)
            if not (np.array_equal(t[identity], r) and np.array_equal(t[:, identity], r)):
                raise ValueError(f"element {identity} is not an identity")
        self.table = t
        self.table.setflags(write=False)
        self.identity = identity if identity is not None else _find_identity(t)
        self.labels = list(labels) if labels is not None else None
        self._omega = None

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __len__(self):
        return self.order

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def power(self, a: int, k: int) -> int:
        x = a
        for _ in range(k - 1):
            x = int(self.table[x, a])
        return x

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i + 1)


def _is_associative(t: np.ndarray) -> bool:
    m = t.shape[0]
    # (ab)c vs a(bc), one row of a at a time to bound memory
    for a in range(m):
        left = t[t[a]]              # [b, c] -> (ab)c
        right = t[a][t]             # [b, c] -> a(bc)
        if not np.array_equal(left, right):
            return False
    return True


def _find_identity(t: np.ndarray) -> Optional[int]:
    r = np.arange(t.shape[0])
    for e in range(t.shape[0]):
        if np.array_equal(t[e], r) and np.array_equal(t[:, e], r):
            return e
    return None


def adjoin_identity(S: CayleyTable) -> CayleyTable:
    """``S^1``: S itself when it is already a monoid, otherwise S plus a new identity."""
    if S.identity is not None:
        return S
    m = S.order
    t = np.empty((m + 1, m + 1), dtype=np.int64)
    t[:m, :m] = S.table
    t[m, :] = np.arange(m + 1)
    t[:, m] = np.arange(m + 1)
    labels = S.labels + ["1"] if S.labels else None
    return CayleyTable(t, identity=m, labels=labels, check=False)


def zero_element(S: CayleyTable) -> Optional[int]:
    t = S.table
    for z in range(S.order):
        if np.all(t[z] == z) and np.all(t[:, z] == z):
            return z
    return None


def idempotents(S: CayleyTable) -> list[int]:
    t = S.table
    return [i for i in range(S.order) if t[i, i] == i]


def units(S: CayleyTable) -> dict[int, int]:
    """Map each unit to its group inverse; empty when S is not a monoid."""
    e = S.identity
    if e is None:
        return {}
    t = S.table
    out = {}
    for u in range(S.order):
        vs = np.nonzero((t[u] == e) & (t[:, u] == e))[0]
        if len(vs):
            out[u] = int(vs[0])
    return out


def index_and_period(S: CayleyTable, a: int) -> tuple[int, int]:
    seen = {}
    x, k = a, 1
    while x not in seen:
        seen[x] = k
        x = S.mul(x, a)
        k += 1
    return seen[x], k - seen[x]


def omega(S: CayleyTable) -> int:
    """Smallest multiple of every period that is at least every index."""
    if S._omega is None:
        pairs = [index_and_period(S, a) for a in range(S.order)]
        L = lcm(*(p for _, p in pairs))
        top = max(i for i, _ in pairs)
        S._omega = L * max(1, -(-top // L))
    return S._omega


def inverses_of(S: CayleyTable, a: int) -> list[int]:
    t = S.table
    r = np.arange(S.order)
    # sts = s and tst = t
    ok = (t[t[a], a] == a) & (t[t[r, a], r] == r)
    return [int(x) for x in np.nonzero(ok)[0]]


def is_inverse_semigroup(S: CayleyTable) -> bool:
    return all(len(inverses_of(S, a)) == 1 for a in range(S.order))


# -- conjugacy relations --------------------------------------------------
#
# Every relation is computed as a full boolean m x m matrix; ``conj`` reads
# one entry.


def _sim_o(S: CayleyTable) -> np.ndarray:
    t = S.table
    m = S.order
    half = np.zeros((m, m), dtype=bool)  # half[a, b]: some g with ag = gb
    for g in range(m):
        half |= t[:, g][:, None] == t[g, :][None, :]
    return half & half.T


def _p_sets(S: CayleyTable) -> Optional[list[np.ndarray]]:
    """Membership masks of P(a) over S, or None when S has no zero."""
    z = zero_element(S)
    if z is None:
        return None
    t = S.table
    m = S.order
    out = []
    for a in range(m):
        left = set(t[:, a].tolist()) | {a}  # S^1 a
        left.discard(z)
        mask = np.ones(m, dtype=bool)
        for x in left:
            mask &= t[x] != z
        out.append(mask)
    return out


def _sim_c(S: CayleyTable, weak: bool = False) -> np.ndarray:
    """~c from the restricted sets P^1(a).

    Requires ``ag = gb``, ``bh = ha``, ``hag = b`` and ``gbh = a`` with
    ``g`` in P^1(a) and ``h`` in P^1(b); ``weak=True`` drops the last two
    conditions.
    """
    t = S.table
    m = S.order
    P = _p_sets(S)
    if P is None:
        allowed = np.ones((m, m), dtype=bool)
    else:
        allowed = np.array(P)  # allowed[a, g]: g in P(a)
    # g = 1 or h = 1 forces a = b, so only the diagonal comes from S^1 \ S
    half = np.zeros((m, m), dtype=bool)
    for g in range(m):
        half |= (t[:, g][:, None] == t[g, :][None, :]) & allowed[:, g][:, None]
    rel = half & half.T
    if not weak:
        for a, b in zip(*np.nonzero(rel)):
            G = np.nonzero(allowed[a] & (t[a, :] == t[:, b]))[0]
            H = np.nonzero(allowed[b] & (t[b, :] == t[:, a]))[0]
            hag = t[t[H, a]][:, G] == b          # [h, g]
            gbh = t[t[G, b]][:, H] == a          # [g, h]
            rel[a, b] = bool(np.any(hag & gbh.T))
    np.fill_diagonal(rel, True)
    z = zero_element(S)
    if z is not None:
        rel[z, :] = False
        rel[:, z] = False
        rel[z, z] = True
    return rel


def _sim_p(S: CayleyTable, unital: bool = True) -> np.ndarray:
    t = S.table
    rel = np.zeros((S.order, S.order), dtype=bool)
    rel[t, t.T] = True  # (uv, vu) for all u, v in S
    if unital:
        np.fill_diagonal(rel, True)  # u = 1
    return rel


def transitive_closure(rel: np.ndarray) -> np.ndarray:
    r = rel.copy()
    for k in range(r.shape[0]):
        r |= r[:, k][:, None] & r[k, :][None, :]
    return r


def _sim_tr(S: CayleyTable) -> np.ndarray:
    t = S.table
    m = S.order
    w = omega(S)
    pw = np.array([S.power(a, w) for a in range(m)])
    pw1 = t[pw, np.arange(m)]  # a^(w+1)
    rel = np.zeros((m, m), dtype=bool)
    for g in range(m):
        for h in range(m):
            if t[t[g, h], g] != g or t[t[h, g], h] != h:
                continue
            A = np.nonzero(pw == t[h, g])[0]
            B = np.nonzero(pw == t[g, h])[0]
            if not len(A) or not len(B):
                continue
            conj = t[t[g, pw1[A]], h]  # g a^(w+1) h for each a in A
            rel[np.ix_(A, B)] |= conj[:, None] == pw1[B][None, :]
    return rel


def _sim_u(S: CayleyTable) -> np.ndarray:
    if S.identity is None:
        raise PreconditionError("~u requires a monoid (identity element)")
    t = S.table
    m = S.order
    rel = np.zeros((m, m), dtype=bool)
    r = np.arange(m)
    for u, ui in units(S).items():
        b = t[t[u, r], ui]
        back = t[t[ui, b], u]
        ok = back == r
        rel[r[ok], b[ok]] = True
    return rel


def _sim_i(S: CayleyTable, unital: bool = True) -> np.ndarray:
    inv = []
    for s in range(S.order):
        cands = inverses_of(S, s)
        if len(cands) != 1:
            raise PreconditionError("~i requires an inverse semigroup")
        inv.append(cands[0])
    t = S.table
    m = S.order
    rel = np.zeros((m, m), dtype=bool)
    r = np.arange(m)
    for s in range(m):
        si = inv[s]
        b = t[t[s, r], si]
        ok = t[t[si, b], s] == r
        rel[r[ok], b[ok]] = True
    if unital:
        np.fill_diagonal(rel, True)  # s = 1
    return rel


RELATIONS = ("o", "c", "p", "pstar", "tr", "u", "i")


def relation_matrix(S: CayleyTable, relation: str, unital: bool = True,
                    weak: bool = False) -> np.ndarray:
    """Boolean matrix of ``relation`` on S.

    ``unital`` selects whether the witnesses of ~p and ~i range over S^1
    (default) or over S alone. ``weak`` selects the two-condition form of ~c.
    """
    if relation == "o":
        return _sim_o(S)
    if relation == "c":
        return _sim_c(S, weak)
    if relation == "p":
        return _sim_p(S, unital)
    if relation == "pstar":
        return transitive_closure(_sim_p(S, unital))
    if relation == "tr":
        return _sim_tr(S)
    if relation == "u":
        return _sim_u(S)
    if relation == "i":
        return _sim_i(S, unital)
    raise ValueError(f"unknown relation {relation!r}")


def conj(S: CayleyTable, a: int, b: int, relation: str, unital: bool = True,
         weak: bool = False) -> bool:
    return bool(relation_matrix(S, relation, unital, weak)[a, b])


@dataclass(frozen=True)
class ConjClasses:
    relation: str
    classes: tuple  # tuple of sorted index tuples, ordered by least element
    transitive: bool  # False when the raw relation is not an equivalence

    def as_sets(self) -> set:
        return {frozenset(c) for c in self.classes}


def classes_from_matrix(rel: np.ndarray) -> tuple[tuple, bool]:
    closure = transitive_closure(rel | rel.T | np.eye(rel.shape[0], dtype=bool))
    seen = set()
    classes = []
    for a in range(rel.shape[0]):
        if a in seen:
            continue
        cls = tuple(int(x) for x in np.nonzero(closure[a])[0])
        seen.update(cls)
        classes.append(cls)
    return tuple(classes), bool(np.array_equal(closure, rel))


def conj_classes(S: CayleyTable, relation: str, unital: bool = True,
                 weak: bool = False) -> ConjClasses:
    classes, exact = classes_from_matrix(relation_matrix(S, relation, unital, weak))
    return ConjClasses(relation, classes, exact)


def is_equivalence(rel: np.ndarray) -> bool:
    return (bool(np.all(np.diag(rel))) and np.array_equal(rel, rel.T)
            and np.array_equal(transitive_closure(rel), rel))


# -- file format ------------------------------------------------------------

def format_table(S: CayleyTable) -> str:
    lines = ["cayley 1", f"order {S.order}"]
    for row in S.table:
        lines.append(" ".join(str(int(x) + 1) for x in row))
    if S.identity is not None:
        lines.append(f"identity {S.identity + 1}")
    if S.labels:
        for i, name in enumerate(S.labels):
            lines.append(f"label {i + 1} {name}")
    return "\n".join(lines) + "\n"


def parse_table(text: str) -> CayleyTable:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or lines[0] != "cayley 1":
        raise ValueError("expected header 'cayley 1'")
    if len(lines) < 2 or not lines[1].startswith("order "):
        raise ValueError("expected 'order <m>' on line 2")
    m = int(lines[1].split()[1])
    if len(lines) < 2 + m:
        raise ValueError("table truncated")
    rows = []
    for ln in lines[2:2 + m]:
        row = [int(x) - 1 for x in ln.split()]
        if len(row) != m:
            raise ValueError(f"row has {len(row)} entries, expected {m}")
        rows.append(row)
    identity = None
    labels: list[Optional[str]] = [None] * m
    for ln in lines[2 + m:]:
        parts = ln.split(maxsplit=2)
        if parts[0] == "identity" and len(parts) == 2:
            identity = int(parts[1]) - 1
        elif parts[0] == "label" and len(parts) == 3:
            labels[int(parts[1]) - 1] = parts[2]
        else:
            raise ValueError(f"unexpected line {ln!r}")
    if any(x is not None for x in labels):
        labels = [x if x is not None else str(i + 1) for i, x in enumerate(labels)]
    else:
        labels = None
    return CayleyTable(rows, identity=identity, labels=labels)
