"""Families of semigroups, variants, products and the named fixture tables."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .core import Semigroup, is_group
from .epigroup import in_W, is_completely_regular, pinv_map
from .errors import BadSandwich, NotAGroup, SizeLimit

ZERO = None  # sandwich entry meaning "zero" in the 0-variant


@dataclass(frozen=True)
class ReesSpec:
    G: Semigroup
    i_count: int
    lambda_count: int
    # P[lam][i]: a group element index, or ZERO (0-variant only)
    P: tuple = field(default=())

    def encode(self, i: int, g: int, lam: int) -> int:
        return (i * self.G.n + g) * self.lambda_count + lam

    def decode(self, x: int):
        rest, lam = divmod(x, self.lambda_count)
        i, g = divmod(rest, self.G.n)
        return i, g, lam

    @property
    def size(self) -> int:
        return self.i_count * self.G.n * self.lambda_count


def _sandwich(spec: ReesSpec, allow_zero: bool) -> np.ndarray:
    if not is_group(spec.G):
        raise NotAGroup("sandwich group must be a group")
    P = [list(row) for row in spec.P]
    if len(P) != spec.lambda_count or any(len(r) != spec.i_count for r in P):
        raise BadSandwich(f"sandwich matrix must be {spec.lambda_count}x{spec.i_count}")
    arr = np.array([[-1 if v is ZERO else v for v in row] for row in P], dtype=np.int64)
    if not allow_zero and np.any(arr < 0):
        raise BadSandwich("zero sandwich entries need the 0-variant")
    if np.any(arr >= spec.G.n):
        raise BadSandwich("sandwich entry outside the group")
    if allow_zero and (np.any(np.all(arr < 0, axis=0)) or np.any(np.all(arr < 0, axis=1))):
        raise BadSandwich("sandwich matrix has an all-zero row or column")
    return arr


def _rees_table(spec: ReesSpec, P: np.ndarray, with_zero: bool) -> np.ndarray:
    gt = spec.G.table
    I, L, k = spec.i_count, spec.lambda_count, spec.G.n
    size = spec.size
    elems = np.array([spec.decode(x) for x in range(size)], dtype=np.int64).reshape(size, 3)
    i1, a1, l1 = (elems[:, c][:, None] for c in range(3))
    j2, b2, m2 = (elems[:, c][None, :] for c in range(3))
    p = P[l1, j2]
    zero_idx = size
    mid = gt[a1, np.where(p < 0, 0, p)]
    prod = gt[mid, b2]
    out = (i1 * k + prod) * L + m2
    if with_zero:
        out = np.where(p < 0, zero_idx, out)
        t = np.full((size + 1, size + 1), zero_idx, dtype=np.int64)
        t[:size, :size] = out
        return t
    return out


def rees(spec: ReesSpec) -> Semigroup:
    """M(G; I, Lambda; P) with (i,a,l)(j,b,m) = (i, a p_lj b, m)."""
    P = _sandwich(spec, allow_zero=False)
    return Semigroup(_rees_table(spec, P, with_zero=False))


def rees_zero(spec: ReesSpec) -> Semigroup:
    """M^0(G; I, Lambda; P); the zero is the last element."""
    P = _sandwich(spec, allow_zero=True)
    return Semigroup(_rees_table(spec, P, with_zero=True))


def random_rees_spec(rng: np.random.Generator, max_group: int = 6, max_dim: int = 3,
                     zero_prob: float = 0.0) -> ReesSpec:
    G = cyclic_group(int(rng.integers(1, max_group + 1)))
    I = int(rng.integers(1, max_dim + 1))
    L = int(rng.integers(1, max_dim + 1))
    while True:
        P = [[ZERO if rng.random() < zero_prob else int(rng.integers(G.n)) for _ in range(I)]
             for _ in range(L)]
        arr = np.array([[v is ZERO for v in row] for row in P])
        if not (arr.all(axis=0).any() or arr.all(axis=1).any()):
            return ReesSpec(G, I, L, tuple(tuple(r) for r in P))


# Small families -------------------------------------------------------------

def null_semigroup(n: int) -> Semigroup:
    return Semigroup(np.zeros((n, n), dtype=np.int64))


def left_zero(n: int) -> Semigroup:
    return Semigroup(np.repeat(np.arange(n)[:, None], n, axis=1))


def rectangular_band(p: int, q: int) -> Semigroup:
    """Pairs (i, l) encoded as i*q + l with (i,l)(j,m) = (i,m)."""
    x = np.arange(p * q)
    return Semigroup((x[:, None] // q) * q + (x[None, :] % q))


def cyclic_group(n: int) -> Semigroup:
    x = np.arange(n)
    return Semigroup((x[:, None] + x[None, :]) % n)


def chain_semilattice(n: int) -> Semigroup:
    x = np.arange(n)
    return Semigroup(np.minimum(x[:, None], x[None, :]))


def antichain_with_0_1(n: int) -> Semigroup:
    """0, then n pairwise incomparable idempotents, then the identity."""
    size = n + 2
    t = np.zeros((size, size), dtype=np.int64)
    for x in range(1, n + 1):
        t[x, x] = x
    one = size - 1
    t[one, :] = np.arange(size)
    t[:, one] = np.arange(size)
    return Semigroup(t)


def symmetric_group(n: int) -> Semigroup:
    if n > 4:
        raise SizeLimit("symmetric_group supports n <= 4")
    perms = list(itertools.permutations(range(n)))
    pos = {p: i for i, p in enumerate(perms)}
    # compose left to right: x(pq) = (xp)q
    t = [[pos[tuple(q[p[x]] for x in range(n))] for q in perms] for p in perms]
    return Semigroup(t)


def direct_product(S: Semigroup, T: Semigroup) -> Semigroup:
    s, t = S.table, T.table
    m = T.n
    x = np.arange(S.n * m)
    a, b = x // m, x % m
    return Semigroup(s[a[:, None], a[None, :]] * m + t[b[:, None], b[None, :]], check=False)


# Variants ---------------------------------------------------------------

def variant(S: Semigroup, a: int) -> Semigroup:
    t = S.table
    return Semigroup(t[t[:, a][:, None], np.arange(S.n)[None, :]])


@dataclass(frozen=True)
class UnaryVariantReport:
    base_completely_regular: bool
    star_matches_pinv: bool
    mismatches: list
    variant_in_W: bool


def unary_variant_check(S: Semigroup, a: int) -> UnaryVariantReport:
    """Compare x* = (xa)' x (ax)' computed in S against pseudo-inverses in the variant."""
    t = S.table
    p = pinv_map(S)
    idx = np.arange(S.n)
    star = t[t[p[t[idx, a]], idx], p[t[a, idx]]]
    V = variant(S, a)
    pv = pinv_map(V)
    mism = [int(x) for x in np.flatnonzero(star != pv)]
    return UnaryVariantReport(
        base_completely_regular=is_completely_regular(S),
        star_matches_pinv=not mism,
        mismatches=mism,
        variant_in_W=in_W(V),
    )


# Named tables -------------------------------------------------------------

_FIXTURE_TABLES = {
    "F7_542155": [
        [0, 0, 0, 0, 4, 4, 0],
        [0, 0, 0, 0, 4, 4, 0],
        [0, 0, 0, 0, 4, 4, 0],
        [0, 0, 0, 0, 4, 4, 0],
        [4, 4, 4, 4, 4, 4, 4],
        [4, 4, 4, 4, 4, 4, 4],
        [0, 0, 2, 3, 4, 5, 6],
    ],
    # five elements, despite the historical name
    "F6_414_S": [
        [0, 0, 0, 0, 0],
        [0, 0, 0, 1, 2],
        [0, 1, 2, 1, 2],
        [0, 0, 0, 3, 4],
        [0, 3, 4, 3, 4],
    ],
    "F6_E2A": [
        [0, 0, 0, 3, 3, 3],
        [0, 1, 0, 3, 4, 3],
        [0, 0, 2, 3, 3, 5],
        [3, 3, 3, 0, 0, 0],
        [3, 3, 4, 0, 0, 1],
        [3, 5, 3, 0, 2, 0],
    ],
    # labels 1, a, 0, b, c, e, f -> 0..6
    "F7_E2B": [
        [0, 1, 2, 3, 4, 5, 6],
        [1, 0, 2, 5, 6, 3, 4],
        [2, 2, 2, 2, 2, 2, 2],
        [3, 6, 2, 2, 6, 3, 2],
        [4, 5, 2, 5, 2, 2, 4],
        [5, 4, 2, 2, 4, 5, 2],
        [6, 3, 2, 3, 2, 2, 6],
    ],
    "F6_STRONGC": [
        [0, 0, 0, 0, 0, 0],
        [0, 1, 2, 3, 4, 5],
        [0, 2, 0, 0, 2, 2],
        [0, 3, 0, 0, 2, 2],
        [0, 4, 2, 2, 5, 5],
        [0, 5, 2, 2, 5, 5],
    ],
    "F4_22": [[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 1], [0, 1, 1, 3]],
    "F4_113": [[0, 0, 0, 0], [0, 1, 1, 1], [0, 1, 2, 1], [0, 3, 3, 3]],
    "F4_56": [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 2, 2], [0, 0, 2, 3]],
    "F5_CMP": [
        [0, 0, 0, 0, 0],
        [0, 1, 2, 3, 4],
        [0, 2, 0, 2, 0],
        [0, 3, 4, 3, 4],
        [0, 4, 0, 4, 0],
    ],
    "F5_110": [
        [0, 0, 0, 0, 0],
        [0, 0, 0, 0, 1],
        [0, 0, 0, 0, 2],
        [0, 0, 1, 0, 3],
        [0, 1, 2, 3, 4],
    ],
    "F2_LZ": [[0, 0], [1, 1]],
}

FIXTURE_LABELS = {
    "F7_E2B": ("1", "a", "0", "b", "c", "e", "f"),
}

FIXTURE_IDS = tuple(_FIXTURE_TABLES)


def fixture(name: str) -> Semigroup:
    try:
        return Semigroup(_FIXTURE_TABLES[name])
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_IDS)}") from None


def fixtures() -> dict:
    return {name: fixture(name) for name in FIXTURE_IDS}
