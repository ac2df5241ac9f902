"""Cayley-table semigroups, element partitions, canonical forms and table I/O.

Elements are the indices ``0..n-1``; ``table[i, j]`` is the product ``i*j``.
The monoid ``S^1`` is addressed by *extended* indices ``0..ext_order-1``:
when ``S`` already has an identity, ``S^1 = S``; otherwise the formal
identity gets the extra index ``n`` (``S.one``).
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from .errors import InternalError, ParseError, RangeError, ValidationError


class Semigroup:
    """An immutable finite semigroup given by its Cayley table.

    Construction validates range and associativity; use ``build_semigroup``
    for the checked entry point with an explicit order.
    """

    def __init__(self, table, *, check=True):
        t = np.array(table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] < 1:
            raise RangeError(f"table must be a non-empty square array, got shape {t.shape}")
        n = t.shape[0]
        if check:
            bad = np.argwhere((t < 0) | (t >= n))
            if len(bad):
                i, j = bad[0]
                raise RangeError(f"entry ({i},{j}) = {t[i, j]} outside 0..{n - 1}")
            _check_associative(t)
        t.setflags(write=False)
        self.n = n
        self.table = t
        self.zero = _find_zero(t)
        self.identity = _find_identity(t)

    # S^1 -----------------------------------------------------------------
    @property
    def is_monoid(self) -> bool:
        return self.identity is not None

    @property
    def has_zero(self) -> bool:
        return self.zero is not None

    @property
    def one(self) -> int:
        """Index of the identity of S^1 (the adjoined one when S is not a monoid)."""
        return self.identity if self.identity is not None else self.n

    @property
    def ext_order(self) -> int:
        return self.n if self.identity is not None else self.n + 1

    def is_adjoined(self, x: int) -> bool:
        return self.identity is None and x == self.n

    @cached_property
    def ext_table(self) -> np.ndarray:
        """Multiplication on S^1; a private working copy, never exposed as a fixture."""
        if self.identity is not None:
            return self.table
        n = self.n
        t = np.empty((n + 1, n + 1), dtype=np.int64)
        t[:n, :n] = self.table
        t[n, :] = np.arange(n + 1)
        t[:, n] = np.arange(n + 1)
        t.setflags(write=False)
        return t

    @cached_property
    def rows(self) -> tuple:
        return tuple(tuple(int(v) for v in row) for row in self.table)

    def mul(self, *xs: int) -> int:
        """Product of a sequence of S^1 elements."""
        t = self.ext_table
        acc = self.one
        for x in xs:
            acc = int(t[acc, x])
        return acc

    def power(self, a: int, k: int) -> int:
        if k < 1:
            raise ValueError("powers start at 1")
        acc = a
        for _ in range(k - 1):
            acc = int(self.table[acc, a])
        return acc

    def elements(self) -> range:
        return range(self.n)

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return isinstance(other, Semigroup) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Semigroup(n={self.n}, zero={self.zero}, identity={self.identity})"


def _check_associative(t: np.ndarray) -> None:
    left = t[t, :]  # left[i,j,k] = (i*j)*k
    right = t[:, t]  # right[i,j,k] = i*(j*k)
    bad = np.argwhere(left != right)
    if len(bad):
        i, j, k = (int(v) for v in bad[0])
        raise ValidationError(i, j, k, int(left[i, j, k]), int(right[i, j, k]))


def _find_zero(t: np.ndarray):
    n = t.shape[0]
    for z in range(n):
        if np.all(t[z, :] == z) and np.all(t[:, z] == z):
            return z
    return None


def _find_identity(t: np.ndarray):
    n = t.shape[0]
    r = np.arange(n)
    for e in range(n):
        if np.array_equal(t[e, :], r) and np.array_equal(t[:, e], r):
            return e
    return None


def build_semigroup(n: int, table) -> Semigroup:
    rows = [list(r) for r in table]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise RangeError(f"expected a {n}x{n} table")
    return Semigroup(rows)


def is_associative(table) -> bool:
    t = np.asarray(table, dtype=np.int64)
    return bool(np.array_equal(t[t, :], t[:, t]))


def anti(S: Semigroup) -> Semigroup:
    """The dual semigroup (x*y := y x)."""
    return Semigroup(S.table.T, check=False)


def relabel(S: Semigroup, perm: Sequence[int]) -> Semigroup:
    """Image of S under the bijection ``i -> perm[i]``."""
    p = np.asarray(perm, dtype=np.int64)
    inv = np.argsort(p)
    return Semigroup(p[S.table[np.ix_(inv, inv)]], check=False)


# Partitions and relations ------------------------------------------------

class EqPartition:
    """A partition of ``range(n)`` in canonical form.

    Classes are sorted by their minimum element and each class is ascending.
    """

    def __init__(self, n: int, classes: Iterable[Iterable[int]]):
        cls = [tuple(sorted(int(x) for x in c)) for c in classes]
        cls = [c for c in cls if c]
        cls.sort(key=lambda c: c[0])
        seen = sorted(x for c in cls for x in c)
        if seen != list(range(n)):
            raise ValueError("classes must be disjoint and cover 0..n-1")
        self.n = n
        self.classes = tuple(cls)

    @classmethod
    def from_labels(cls, labels) -> "EqPartition":
        groups: dict = {}
        for i, lab in enumerate(labels):
            groups.setdefault(lab, []).append(i)
        return cls(len(labels), groups.values())

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple]) -> "EqPartition":
        ds = DisjointSet(range(n))
        for a, b in pairs:
            ds.merge(int(a), int(b))
        return cls(n, ds.subsets())

    @classmethod
    def from_matrix(cls, m: np.ndarray) -> "EqPartition":
        """Partition induced by a boolean relation matrix, which must be an equivalence."""
        m = np.asarray(m, dtype=bool)
        labels = [m[i].tobytes() for i in range(m.shape[0])]
        part = cls.from_labels(labels)
        if not np.array_equal(part.matrix(), m):
            raise InternalError("relation matrix is not an equivalence")
        return part

    @classmethod
    def identity(cls, n: int) -> "EqPartition":
        return cls(n, ([i] for i in range(n)))

    @classmethod
    def universal(cls, n: int) -> "EqPartition":
        return cls(n, [range(n)])

    @cached_property
    def labels(self) -> np.ndarray:
        lab = np.empty(self.n, dtype=np.int64)
        for k, c in enumerate(self.classes):
            lab[list(c)] = k
        return lab

    def matrix(self) -> np.ndarray:
        lab = self.labels
        return lab[:, None] == lab[None, :]

    def same(self, a: int, b: int) -> bool:
        return bool(self.labels[a] == self.labels[b])

    def class_of(self, a: int) -> tuple:
        return self.classes[int(self.labels[a])]

    @property
    def is_identity(self) -> bool:
        return len(self.classes) == self.n

    @property
    def is_universal(self) -> bool:
        return len(self.classes) == 1

    def refines(self, other: "EqPartition") -> bool:
        return bool(np.all(~self.matrix() | other.matrix()))

    def meet(self, other: "EqPartition") -> "EqPartition":
        return EqPartition.from_labels(list(zip(self.labels.tolist(), other.labels.tolist())))

    def to_json(self):
        return [list(c) for c in self.classes]

    def __eq__(self, other):
        return isinstance(other, EqPartition) and self.n == other.n and self.classes == other.classes

    def __hash__(self):
        return hash((self.n, self.classes))

    def __str__(self):
        return " ".join("{" + ",".join(map(str, c)) + "}" for c in self.classes)

    def __repr__(self):
        return f"EqPartition({self})"


class PairRelation:
    """A reflexive symmetric relation stored as its non-loop unordered pairs."""

    def __init__(self, n: int, pairs: Iterable[tuple]):
        self.n = n
        self.pairs = frozenset((min(a, b), max(a, b)) for a, b in ((int(x), int(y)) for x, y in pairs) if a != b)

    @classmethod
    def from_matrix(cls, m: np.ndarray) -> "PairRelation":
        m = np.asarray(m, dtype=bool)
        if not np.array_equal(m, m.T):
            raise InternalError("relation matrix is not symmetric")
        iu = np.argwhere(np.triu(m, 1))
        return cls(m.shape[0], map(tuple, iu))

    def matrix(self) -> np.ndarray:
        m = np.eye(self.n, dtype=bool)
        for a, b in self.pairs:
            m[a, b] = m[b, a] = True
        return m

    def __contains__(self, pair) -> bool:
        a, b = pair
        return a == b or (min(a, b), max(a, b)) in self.pairs

    def closure(self) -> EqPartition:
        return EqPartition.from_pairs(self.n, self.pairs)

    @property
    def is_transitive(self) -> bool:
        return bool(np.array_equal(self.closure().matrix(), self.matrix()))

    def to_json(self):
        return [list(p) for p in sorted(self.pairs)]

    def __eq__(self, other):
        return isinstance(other, PairRelation) and self.n == other.n and self.pairs == other.pairs

    def __hash__(self):
        return hash((self.n, self.pairs))

    def __str__(self):
        return " ".join(f"{a}-{b}" for a, b in sorted(self.pairs))

    def __repr__(self):
        return f"PairRelation({self})"


# Predicates ---------------------------------------------------------------

@dataclass(frozen=True)
class BasicPredicates:
    commutative: bool
    cancellative: bool
    is_band: bool
    is_semilattice: bool
    is_null: bool
    is_rectangular_band: bool
    has_zero: bool
    is_monoid: bool
    is_group: bool


def is_group(S: Semigroup) -> bool:
    if S.identity is None:
        return False
    return bool(np.all(np.any(S.table == S.identity, axis=1)))


def basic_predicates(S: Semigroup) -> BasicPredicates:
    t = S.table
    n = S.n
    idx = np.arange(n)
    commutative = bool(np.array_equal(t, t.T))
    # left cancellation: row i injective; right cancellation: column j injective
    left = all(len(set(row)) == n for row in S.rows)
    right = all(len(set(t[:, j].tolist())) == n for j in range(n))
    band = bool(np.array_equal(t[idx, idx], idx))
    null = bool(np.all(t == t[0, 0]))
    rect = band and bool(np.all(t[t, idx[:, None]] == idx[:, None]))  # (x*y)*x == x
    return BasicPredicates(
        commutative=commutative,
        cancellative=left and right,
        is_band=band,
        is_semilattice=band and commutative,
        is_null=null,
        is_rectangular_band=rect,
        has_zero=S.has_zero,
        is_monoid=S.is_monoid,
        is_group=is_group(S),
    )


# Constructions on tables --------------------------------------------------

def adjoin_zero(S: Semigroup) -> Semigroup:
    n = S.n
    t = np.full((n + 1, n + 1), n, dtype=np.int64)
    t[:n, :n] = S.table
    return Semigroup(t, check=False)


def adjoin_identity(S: Semigroup, force: bool = True) -> Semigroup:
    if not force and S.is_monoid:
        return Semigroup(S.table, check=False)
    n = S.n
    t = np.empty((n + 1, n + 1), dtype=np.int64)
    t[:n, :n] = S.table
    t[n, :] = np.arange(n + 1)
    t[:, n] = np.arange(n + 1)
    return Semigroup(t, check=False)


# Canonical forms ----------------------------------------------------------

MAX_CANONICAL_ORDER = 8


def _perm_arrays(n: int):
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    return perms, np.argsort(perms, axis=1)


_PERM_CACHE: dict = {}


def _perms(n: int):
    if n not in _PERM_CACHE:
        _PERM_CACHE[n] = _perm_arrays(n)
    return _PERM_CACHE[n]


def canonical_forms(tables: np.ndarray, iso_only: bool = False) -> np.ndarray:
    """Canonical flattened tables for a batch of shape ``(B, n, n)``.

    The canonical form is the lexicographically least flattened table over all
    relabelings (and, unless ``iso_only``, over relabelings of the transpose).
    """
    tables = np.asarray(tables, dtype=np.int64)
    if tables.ndim == 2:
        tables = tables[None]
    B, n, _ = tables.shape
    if n > MAX_CANONICAL_ORDER:
        raise ValueError(f"canonical form limited to order <= {MAX_CANONICAL_ORDER}")
    sigma, inv = _perms(n)
    P = len(sigma)
    variants = [tables] if iso_only else [tables, tables.transpose(0, 2, 1)]
    sig_flat = sigma.ravel()
    offs = (np.arange(P) * n)[None, :, None, None]
    digits_per_chunk = max(1, int(62 // math.log2(max(n, 2))))
    weights = n ** np.arange(digits_per_chunk - 1, -1, -1, dtype=np.int64)
    out = np.empty((B, n * n), dtype=np.int64)
    # keep each batch around a few million entries
    step = max(1, 4_000_000 // (P * n * n * len(variants)))
    for s in range(0, B, step):
        chunk = []
        for tv in variants:
            tb = tv[s:s + step]
            u = tb[:, inv[:, :, None], inv[:, None, :]]  # (b, P, n, n)
            chunk.append(sig_flat[u + offs].reshape(len(tb), P, n * n))
        cand = np.concatenate(chunk, axis=1)  # (b, P', n^2)
        out[s:s + step] = _lexmin(cand, digits_per_chunk, weights)
    return out


def _lexmin(cand: np.ndarray, d: int, weights: np.ndarray) -> np.ndarray:
    b, p, L = cand.shape
    alive = np.ones((b, p), dtype=bool)
    big = np.iinfo(np.int64).max
    for start in range(0, L, d):
        seg = cand[:, :, start:start + d]
        w = weights[-seg.shape[2]:]
        key = seg @ w
        key = np.where(alive, key, big)
        best = key.min(axis=1)
        alive &= key == best[:, None]
    first = alive.argmax(axis=1)
    return cand[np.arange(b), first]


def canonical_form(S: Semigroup, iso_only: bool = False) -> tuple:
    return tuple(int(v) for v in canonical_forms(S.table[None], iso_only)[0])


def from_flat(flat: Sequence[int]) -> Semigroup:
    n = math.isqrt(len(flat))
    return Semigroup(np.asarray(flat, dtype=np.int64).reshape(n, n), check=False)


# Text and JSON formats ----------------------------------------------------

def parse_table(text: str) -> Semigroup:
    """Parse the line format (``n`` then ``n`` rows) or the JSON document form."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None
        if not isinstance(doc, dict) or "n" not in doc or "table" not in doc:
            raise ParseError("JSON document needs keys 'n' and 'table'")
        try:
            return build_semigroup(int(doc["n"]), doc["table"])
        except (TypeError, ValueError) as exc:
            raise ParseError(str(exc)) from None

    data = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        data.append((lineno, line))
    if not data:
        raise ParseError("empty input")
    lineno, line = data[0]
    try:
        n = int(line.split()[0])
        if len(line.split()) != 1:
            raise ValueError
    except ValueError:
        raise ParseError("first data line must be the order n", lineno, 1) from None
    if n < 1:
        raise ParseError("order must be positive", lineno, 1)
    rows = data[1:]
    if len(rows) != n:
        where = rows[-1][0] if rows else lineno
        raise ParseError(f"expected {n} rows, found {len(rows)}", where)
    table = []
    for lineno, line in rows:
        toks = line.split()
        if len(toks) != n:
            raise ParseError(f"expected {n} entries, found {len(toks)}", lineno, len(line.rstrip()) + 1)
        row = []
        for tok in toks:
            col = line.index(tok) + 1
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(f"not an integer: {tok!r}", lineno, col) from None
            if not 0 <= v < n:
                raise ParseError(f"entry {v} outside 0..{n - 1}", lineno, col)
            row.append(v)
        table.append(row)
    return Semigroup(table)


def serialize(S: Semigroup, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps({"n": S.n, "table": [list(r) for r in S.rows]})
    width = len(str(S.n - 1))
    lines = [str(S.n)]
    lines += [" ".join(str(v).rjust(width) for v in row) for row in S.rows]
    return "\n".join(lines) + "\n"


def load_table(path) -> Semigroup:
    with open(path) as fh:
        return parse_table(fh.read())
