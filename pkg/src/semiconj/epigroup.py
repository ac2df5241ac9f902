"""Monogenic structure, pseudo-inverses and epigroup variety membership."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .core import Semigroup
from .errors import InternalError


@dataclass(frozen=True)
class MonogenicData:
    index: int
    period: int
    omega_exp: int
    omega: int
    pinv: int
    double_pinv: int


def _power_sequence(S: Semigroup, a: int) -> list:
    """a, a^2, ... up to and including the first repeated value."""
    seen = {}
    seq = []
    x = a
    while x not in seen:
        seen[x] = len(seq)
        seq.append(x)
        x = int(S.table[x, a])
    seq.append(x)
    return seq


def monogenic(S: Semigroup, a: int) -> MonogenicData:
    seq = _power_sequence(S, a)
    # seq[k] = a^(k+1); the last entry repeats an earlier one
    first = seq.index(seq[-1])
    index = first + 1
    period = len(seq) - 1 - first
    omega_exp = index + (-index) % period
    x = max(index, 1)
    x += (-1 - x) % period
    t = S.table
    omega = S.power(a, omega_exp)
    pinv = S.power(a, x)
    dp = int(t[t[a, pinv], a])
    md = MonogenicData(index, period, omega_exp, omega, pinv, dp)
    _verify(S, a, md)
    return md


def _verify(S: Semigroup, a: int, m: MonogenicData) -> None:
    t = S.table
    p = m.pinv
    checks = [
        t[t[p, a], p] == p,
        t[a, p] == t[p, a],
        t[S.power(a, m.index + 1), p] == S.power(a, m.index),
        t[m.omega, m.omega] == m.omega,
        t[m.omega, a] == t[a, m.omega],
        t[a, p] == m.omega,
    ]
    if not all(checks):
        raise InternalError(f"pseudo-inverse identities fail for element {a}")


@lru_cache(maxsize=256)
def _profile_cached(S: Semigroup):
    data = [monogenic(S, a) for a in range(S.n)]
    pinv = np.array([m.pinv for m in data], dtype=np.int64)
    dp = np.array([m.double_pinv for m in data], dtype=np.int64)
    omega = np.array([m.omega for m in data], dtype=np.int64)
    index = np.array([m.index for m in data], dtype=np.int64)
    for arr in (pinv, dp, omega, index):
        arr.setflags(write=False)
    return data, pinv, dp, omega, index


def monogenic_all(S: Semigroup) -> list:
    return list(_profile_cached(S)[0])


def pinv_map(S: Semigroup) -> np.ndarray:
    """Vector of pseudo-inverses a -> a'."""
    return _profile_cached(S)[1]


def double_pinv_map(S: Semigroup) -> np.ndarray:
    return _profile_cached(S)[2]


def omega_map(S: Semigroup) -> np.ndarray:
    return _profile_cached(S)[3]


def index_map(S: Semigroup) -> np.ndarray:
    return _profile_cached(S)[4]


@dataclass(frozen=True)
class EpiClassification:
    epi_elements: list
    epi_index_bound: list
    is_epigroup: bool
    is_completely_regular: bool
    min_n_with_S_eq_Epi_n: int


def epi_classification(S: Semigroup) -> EpiClassification:
    idx = index_map(S)
    return EpiClassification(
        epi_elements=list(range(S.n)),
        epi_index_bound=[int(v) for v in idx],
        is_epigroup=True,
        is_completely_regular=bool(np.all(idx == 1)),
        min_n_with_S_eq_Epi_n=int(idx.max()),
    )


def is_completely_regular(S: Semigroup) -> bool:
    return bool(np.all(index_map(S) == 1))


@dataclass(frozen=True)
class VarietyMembership:
    max_index: int
    in_W: bool
    in_V: bool

    def in_E_n(self, n: int) -> bool:
        return self.max_index <= n

    @property
    def in_E_1(self) -> bool:
        return self.in_E_n(1)

    @property
    def in_E_2(self) -> bool:
        return self.in_E_n(2)


def satisfies_E_n_identity(S: Semigroup, n: int) -> bool:
    """Check x^(n+1) x' = x^n for all x, independently of the index computation."""
    t = S.table
    p = pinv_map(S)
    return all(t[S.power(x, n + 1), p[x]] == S.power(x, n) for x in range(S.n))


def in_W(S: Semigroup) -> bool:
    t = S.table
    if int(index_map(S).max()) > 2:
        return False
    dp = double_pinv_map(S)
    return bool(np.array_equal(dp[t], t))


def in_W_by_square(S: Semigroup) -> bool:
    """Membership via the subsemigroup S^2 being completely regular (second route)."""
    sq = np.unique(S.table)
    idx = index_map(S)
    return bool(np.all(idx[sq] == 1))


def in_V(S: Semigroup) -> bool:
    t = S.table
    dp = double_pinv_map(S)
    return bool(np.array_equal(t[dp, :], t) and np.array_equal(t[:, dp], t))


def variety_membership(S: Semigroup) -> VarietyMembership:
    return VarietyMembership(max_index=int(index_map(S).max()), in_W=in_W(S), in_V=in_V(S))


@dataclass
class IdentityReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def pinv_identity_suite(S: Semigroup) -> IdentityReport:
    """Check x'xx' = x', xx' = x'x, xx'x = x'', (xy)'x = x(yx)', x''' = x' everywhere."""
    t = S.table
    p = pinv_map(S)
    dp = double_pinv_map(S)
    idx = np.arange(S.n)
    rep = IdentityReport()

    def note(name, mask):
        for x in np.flatnonzero(mask):
            rep.violations.append((name, int(x)))

    note("x'xx' = x'", t[t[p, idx], p] != p)
    note("xx' = x'x", t[idx, p] != t[p, idx])
    note("xx'x = x''", t[t[idx, p], idx] != dp)
    note("x''' = x'", p[dp] != p)
    # (xy)'x and x(yx)' as n x n arrays
    lhs = t[p[t], idx[:, None]]
    rhs = t[idx[:, None], p[t.T]]
    for x, y in np.argwhere(lhs != rhs):
        rep.violations.append(("(xy)'x = x(yx)'", (int(x), int(y))))
    return rep
