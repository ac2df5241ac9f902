"""Finite partial injections, the symmetric inverse monoid and r-homomorphisms.

Maps are stored as tuples over ``0..n-1`` with ``-1`` for points outside the
domain. Composition reads left to right: ``x(fg) = (xf)g``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .core import Semigroup
from .errors import DimensionMismatch, ParseError, SizeLimit

ABSENT = -1
MAX_INJECTION_DEGREE = 5


@dataclass(frozen=True)
class PartialInjection:
    n: int
    map: tuple

    def __post_init__(self):
        if len(self.map) != self.n:
            raise DimensionMismatch(f"map has {len(self.map)} entries, expected {self.n}")
        vals = [v for v in self.map if v != ABSENT]
        if len(set(vals)) != len(vals) or any(not 0 <= v < self.n for v in vals):
            raise ValueError(f"not a partial injection: {self.map}")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple]) -> "PartialInjection":
        m = [ABSENT] * n
        for x, y in pairs:
            m[x] = y
        return cls(n, tuple(m))

    @classmethod
    def identity(cls, n: int, on: Iterable[int] | None = None) -> "PartialInjection":
        pts = range(n) if on is None else on
        return cls.from_pairs(n, ((x, x) for x in pts))

    @classmethod
    def empty(cls, n: int) -> "PartialInjection":
        return cls(n, (ABSENT,) * n)

    @property
    def dom(self) -> frozenset:
        return frozenset(x for x, y in enumerate(self.map) if y != ABSENT)

    @property
    def im(self) -> frozenset:
        return frozenset(y for y in self.map if y != ABSENT)

    @property
    def span(self) -> frozenset:
        return self.dom | self.im

    def __call__(self, x: int) -> int:
        return self.map[x]

    def __str__(self):
        return f"{self.n}; " + " ".join("-" if v == ABSENT else str(v) for v in self.map)


def parse_injection(text: str) -> PartialInjection:
    """Parse ``"n; x0 x1 ..."`` with ``-`` for points outside the domain."""
    head, sep, body = text.partition(";")
    if not sep:
        raise ParseError("expected 'n; images'")
    try:
        n = int(head)
        vals = tuple(ABSENT if tok == "-" else int(tok) for tok in body.split())
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    try:
        return PartialInjection(n, vals)
    except (ValueError, DimensionMismatch) as exc:
        raise ParseError(str(exc)) from None


def compose(f: PartialInjection, g: PartialInjection) -> PartialInjection:
    if f.n != g.n:
        raise DimensionMismatch("maps act on different sets")
    return PartialInjection(f.n, tuple(ABSENT if y == ABSENT else g.map[y] for y in f.map))


def inverse(f: PartialInjection) -> PartialInjection:
    return PartialInjection.from_pairs(f.n, ((y, x) for x, y in enumerate(f.map) if y != ABSENT))


# Decomposition ------------------------------------------------------------

@dataclass(frozen=True)
class Piece:
    kind: str  # "cycle" or "chain"
    points: tuple

    @property
    def length(self) -> int:
        # a chain written on k+1 points has length k
        return len(self.points) if self.kind == "cycle" else len(self.points) - 1

    def as_map(self, n: int) -> PartialInjection:
        pts = self.points
        if self.kind == "cycle":
            pairs = zip(pts, pts[1:] + pts[:1])
        else:
            pairs = zip(pts, pts[1:])
        return PartialInjection.from_pairs(n, pairs)

    def __str__(self):
        body = " ".join(map(str, self.points))
        return f"({body})" if self.kind == "cycle" else f"[{body}]"


def decompose(f: PartialInjection) -> list:
    """Cycles and chains of f; chains start at points of dom minus im."""
    pieces = []
    seen = set()
    starts = sorted(f.dom - f.im)
    for x in starts:
        pts = [x]
        while f.map[pts[-1]] != ABSENT:
            pts.append(f.map[pts[-1]])
        seen.update(pts)
        pieces.append(Piece("chain", tuple(pts)))
    for x in sorted(f.dom - seen):
        if x in seen:
            continue
        pts = [x]
        y = f.map[x]
        while y != x:
            pts.append(y)
            y = f.map[y]
        seen.update(pts)
        pieces.append(Piece("cycle", tuple(pts)))
    return pieces


def join(n: int, pieces: Iterable[Piece]) -> PartialInjection:
    m = [ABSENT] * n
    for p in pieces:
        for x, y in enumerate(p.as_map(n).map):
            if y != ABSENT:
                if m[x] != ABSENT:
                    raise ValueError("pieces overlap")
                m[x] = y
    return PartialInjection(n, tuple(m))


@dataclass(frozen=True)
class CycleChainType:
    cycles: tuple  # sorted (length, count) pairs
    chains: tuple

    @classmethod
    def of(cls, cycles: dict, chains: dict) -> "CycleChainType":
        return cls(tuple(sorted((k, c) for k, c in cycles.items() if c)),
                   tuple(sorted((k, c) for k, c in chains.items() if c)))

    @property
    def span_size(self) -> int:
        return sum(k * c for k, c in self.cycles) + sum((k + 1) * c for k, c in self.chains)

    def __str__(self):
        cyc = ",".join(f"{k}:{c}" for k, c in self.cycles)
        ch = ",".join(f"{k}:{c}" for k, c in self.chains)
        return f"cycles{{{cyc}}} chains{{{ch}}}"


def cc_type(f: PartialInjection) -> CycleChainType:
    cycles: dict = {}
    chains: dict = {}
    for p in decompose(f):
        d = cycles if p.kind == "cycle" else chains
        d[p.length] = d.get(p.length, 0) + 1
    return CycleChainType.of(cycles, chains)


def cycle_type(f: PartialInjection) -> tuple:
    return cc_type(f).cycles


# The symmetric inverse monoid ---------------------------------------------

@dataclass(frozen=True)
class InjectionCodec:
    n: int
    elements: tuple

    def index(self, f: PartialInjection) -> int:
        return self._lookup[f.map]

    def __getitem__(self, i: int) -> PartialInjection:
        return self.elements[i]

    def __len__(self):
        return len(self.elements)

    @property
    def _lookup(self) -> dict:
        d = self.__dict__.get("_lookup_cache")
        if d is None:
            d = {f.map: i for i, f in enumerate(self.elements)}
            object.__setattr__(self, "_lookup_cache", d)
        return d


def all_injections(n: int) -> list:
    """Ordered by domain size, then domain (lex), then image tuple (lex)."""
    out = []
    for k in range(n + 1):
        for dom in itertools.combinations(range(n), k):
            for img in itertools.permutations(range(n), k):
                m = [ABSENT] * n
                for x, y in zip(dom, img):
                    m[x] = y
                out.append(PartialInjection(n, tuple(m)))
    return out


def symmetric_inverse_monoid(n: int):
    if not 1 <= n <= MAX_INJECTION_DEGREE:
        raise SizeLimit(f"symmetric inverse monoid supported for 1 <= n <= {MAX_INJECTION_DEGREE}")
    elems = all_injections(n)
    N = len(elems)
    maps = np.array([f.map for f in elems], dtype=np.int64)
    # extra column n stands for "undefined" and maps to itself
    ext = np.full((N, n + 1), n, dtype=np.int64)
    ext[:, :n] = np.where(maps < 0, n, maps)
    # comp[i, j, x] = x(f_i f_j)
    comp = ext[np.arange(N)[None, :, None], ext[:, None, :n]]
    base = (n + 1) ** np.arange(n, dtype=np.int64)
    keys = comp @ base
    own = ext[:, :n] @ base
    order = np.argsort(own)
    pos = np.searchsorted(own[order], keys)
    table = order[pos]
    return Semigroup(table, check=False), InjectionCodec(n, tuple(elems))


# r-homomorphisms --------------------------------------------------------------

def _check_dims(*fs):
    if len({f.n for f in fs}) != 1:
        raise DimensionMismatch("maps act on different sets")


def is_r_homomorphism(phi: PartialInjection, alpha: PartialInjection, beta: PartialInjection) -> bool:
    """phi maps Gamma(alpha) into Gamma(beta), arcs to arcs and terminal vertices to terminal vertices."""
    _check_dims(phi, alpha, beta)
    span_a, span_b = alpha.span, beta.span
    if not span_a <= phi.dom:
        return False
    for x in span_a:
        y = phi.map[x]
        if y not in span_b:
            return False
        ax = alpha.map[x]
        if ax == ABSENT:
            if beta.map[y] != ABSENT:
                return False
        elif beta.map[y] != phi.map[ax]:
            return False
    return True


def find_r_homomorphism(alpha: PartialInjection, beta: PartialInjection):
    """Some injective r-homomorphism Gamma(alpha) -> Gamma(beta), or None."""
    _check_dims(alpha, beta)
    n = alpha.n
    src = sorted(alpha.span)
    targets = sorted(beta.span)
    assign: dict = {}
    used: set = set()

    def ok(x, y):
        # arc and terminal constraints against already assigned neighbours
        ax = alpha.map[x]
        if ax == ABSENT and beta.map[y] != ABSENT:
            return False
        if ax != ABSENT:
            if beta.map[y] == ABSENT:
                return False
            if ax in assign and assign[ax] != beta.map[y]:
                return False
            if ax == x and beta.map[y] != y:  # fixed points go to fixed points
                return False
        for w, z in assign.items():
            if alpha.map[w] == x and beta.map[z] != y:
                return False
        return True

    def rec(i):
        if i == len(src):
            return True
        x = src[i]
        for y in targets:
            if y not in used and ok(x, y):
                assign[x] = y
                used.add(y)
                if rec(i + 1):
                    return True
                del assign[x]
                used.discard(y)
        return False

    if not rec(0):
        return None
    phi = PartialInjection.from_pairs(n, assign.items())
    assert is_r_homomorphism(phi, alpha, beta)
    return phi


def c_oracle(alpha: PartialInjection, beta: PartialInjection) -> bool:
    return find_r_homomorphism(alpha, beta) is not None and find_r_homomorphism(beta, alpha) is not None


def conjugate_by(beta: PartialInjection, sigma: PartialInjection) -> PartialInjection:
    """sigma^-1 beta sigma."""
    return compose(compose(inverse(sigma), beta), sigma)


def permutation_witness(alpha: PartialInjection, beta: PartialInjection):
    """A permutation sigma with alpha = sigma^-1 beta sigma, or None when types differ."""
    _check_dims(alpha, beta)
    if cc_type(alpha) != cc_type(beta):
        return None
    n = alpha.n

    def key(p):
        return (p.kind, p.length)

    pa = sorted(decompose(alpha), key=key)
    pb = sorted(decompose(beta), key=key)
    # x alpha = ((x sigma^-1) beta) sigma, so sigma sends beta's pieces onto alpha's
    sigma = {}
    for qa, qb in zip(pa, pb):
        for xb, xa in zip(qb.points, qa.points):
            sigma[xb] = xa
    rest_b = [x for x in range(n) if x not in sigma]
    rest_a = [x for x in range(n) if x not in set(sigma.values())]
    sigma.update(zip(rest_b, rest_a))
    s = PartialInjection.from_pairs(n, sigma.items())
    if conjugate_by(beta, s) != alpha:
        raise AssertionError("permutation witness failed verification")
    return s


def chain(n: int, *points: int) -> PartialInjection:
    return Piece("chain", tuple(points)).as_map(n)


def cycle(n: int, *points: int) -> PartialInjection:
    return Piece("cycle", tuple(points)).as_map(n)
