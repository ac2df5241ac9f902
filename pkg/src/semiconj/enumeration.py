"""Backtracking enumeration of small semigroups and the c-conjugacy census of monoids."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .conjugacy import relation_character
from .core import Semigroup, canonical_forms, from_flat
from .errors import SizeLimit

DEDUPE_MODES = ("labeled", "iso", "equivalence")
MAX_ORDER = 5
LONG_MAX_ORDER = 6


@dataclass(frozen=True)
class EnumConstraints:
    order: int
    require_monoid: bool = False
    require_zero: bool = False
    require_zero_divisors: bool = False
    dedupe: str = "equivalence"

    def __post_init__(self):
        if self.dedupe not in DEDUPE_MODES:
            raise ValueError(f"dedupe must be one of {DEDUPE_MODES}")
        if self.require_zero_divisors and not self.require_zero:
            raise ValueError("zero divisors only make sense with a zero")
        if self.order < 1:
            raise ValueError("order must be positive")


@dataclass
class EnumResult:
    constraints: EnumConstraints
    tables: list = field(default_factory=list)  # flattened tuples, sorted

    @property
    def count(self) -> int:
        return len(self.tables)

    def semigroups(self):
        for flat in self.tables:
            yield from_flat(flat)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("CONJ_THREADS", "1")))
    except ValueError:
        return 1


# Search -----------------------------------------------------------------

def _prefill(n: int, monoid: bool, zero: bool):
    """Initial partial table (-1 = free) with the zero at 0 and identity at n-1."""
    T = [[-1] * n for _ in range(n)]
    if zero:
        for x in range(n):
            T[0][x] = T[x][0] = 0
    if monoid:
        e = n - 1
        for x in range(n):
            T[e][x] = T[x][e] = x
        if zero:
            T[e][0] = T[0][e] = 0
    return T


def _consistent(T, n, i, j, v) -> bool:
    """Associativity checks that became decidable after setting T[i][j] = v."""
    Ti = T[i]
    Tv = T[v]
    Tj = T[j]
    for k in range(n):
        # (ij)k = i(jk)
        a = Tv[k]
        jk = Tj[k]
        if a >= 0 and jk >= 0:
            b = Ti[jk]
            if b >= 0 and a != b:
                return False
        # (ki)j = k(ij)
        Tk = T[k]
        ki = Tk[i]
        b = Tk[v]
        if ki >= 0 and b >= 0:
            a = T[ki][j]
            if a >= 0 and a != b:
                return False
    for a in range(n):
        Ta = T[a]
        for b in range(n):
            # (ab)j with ab = i: compare i*j = v against a(bj)
            if Ta[b] == i:
                bj = T[b][j]
                if bj >= 0:
                    r = Ta[bj]
                    if r >= 0 and r != v:
                        return False
            # i(bc) with bc = j, here (a, b) plays (b, c): compare (ia)b against v
            if Ta[b] == j:
                ia = Ti[a]
                if ia >= 0:
                    r = T[ia][b]
                    if r >= 0 and r != v:
                        return False
    return True


def _search(n: int, T, free: list, out: list) -> None:
    if not free:
        out.append(tuple(v for row in T for v in row))
        return
    (i, j), rest = free[0], free[1:]
    for v in range(n):
        T[i][j] = v
        if _consistent(T, n, i, j, v):
            _search(n, T, rest, out)
    T[i][j] = -1


def _search_branch(args):
    n, T, free, v = args
    T = [row[:] for row in T]
    i, j = free[0]
    T[i][j] = v
    out: list = []
    if _consistent(T, n, i, j, v):
        _search(n, T, free[1:], out)
    return out


def labeled_tables(n: int, monoid: bool = False, zero: bool = False, threads: int | None = None) -> list:
    """All associative tables extending the prefilled identity/zero rows, sorted."""
    T = _prefill(n, monoid, zero)
    free = [(i, j) for i in range(n) for j in range(n) if T[i][j] < 0]
    if not free:
        return [tuple(v for row in T for v in row)]
    threads = threads or _threads()
    branches = [(n, T, free, v) for v in range(n)]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_search_branch, branches))
    else:
        parts = [_search_branch(b) for b in branches]
    return sorted(t for part in parts for t in part)


def has_zero_divisors(flat, n: int, zero: int = 0) -> bool:
    t = np.asarray(flat).reshape(n, n)
    nz = [x for x in range(n) if x != zero]
    return bool(np.any(t[np.ix_(nz, nz)] == zero))


def _filter(tables: list, c: EnumConstraints) -> list:
    # zero and identity positions are already fixed by the search
    n = c.order
    keep = []
    for flat in tables:
        if c.require_zero_divisors and not has_zero_divisors(flat, n):
            continue
        keep.append(flat)
    return keep


def enumerate_semigroups(constraints: EnumConstraints, visitor: Callable | None = None,
                         allow_long: bool = False, threads: int | None = None) -> EnumResult:
    n = constraints.order
    limit = LONG_MAX_ORDER if allow_long else MAX_ORDER
    if n > limit:
        raise SizeLimit(f"order {n} exceeds the supported bound {limit}"
                        + ("" if allow_long else " (order 6 needs allow_long)"))
    raw = labeled_tables(n, constraints.require_monoid, constraints.require_zero, threads)
    raw = _filter(raw, constraints)
    if constraints.dedupe == "labeled" or not raw:
        tables = raw
    else:
        canon = canonical_forms(np.asarray(raw, dtype=np.int64).reshape(-1, n, n),
                                iso_only=constraints.dedupe == "iso")
        tables = sorted({tuple(int(v) for v in row) for row in canon})
    res = EnumResult(constraints, tables)
    if visitor is not None:
        for S in res.semigroups():
            visitor(S)
    return res


# Census of c-conjugacy ------------------------------------------------------

@dataclass(frozen=True)
class Table1Row:
    n: int
    count: int
    c_identity: int
    c_universal_nonzero: int
    dedupe: str

    def as_tuple(self):
        return (self.n, self.count, self.c_identity, self.c_universal_nonzero)


def census_row(n: int, dedupe: str = "equivalence", allow_long: bool = False) -> Table1Row:
    cons = EnumConstraints(n, require_monoid=True, require_zero=True, require_zero_divisors=True, dedupe=dedupe)
    res = enumerate_semigroups(cons, allow_long=allow_long)
    ident = univ = 0
    for S in res.semigroups():
        ch = relation_character(S, "c")
        ident += ch.is_identity
        univ += ch.universal_on_nonzero
    return Table1Row(n, res.count, ident, univ, dedupe)


def table1(n_max: int, dedupe: str = "equivalence", allow_long: bool = False) -> list:
    if n_max > LONG_MAX_ORDER:
        raise SizeLimit("census supports orders up to 6")
    return [census_row(n, dedupe, allow_long or n_max >= 6) for n in range(3, n_max + 1)]


# Sweeps ---------------------------------------------------------------------

@dataclass
class SweepReport:
    checked: int = 0
    failures: list = field(default_factory=list)  # (check name, flat table, witness)
    skipped: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures


def all_semigroups(max_order: int, dedupe: str = "equivalence") -> list:
    out = []
    for n in range(1, max_order + 1):
        out.extend(enumerate_semigroups(EnumConstraints(n, dedupe=dedupe)).semigroups())
    return out


def sweep(constraints: EnumConstraints | list, checks: list | None = None) -> SweepReport:
    """Run the theorem suite (optionally only the named checks) on an enumerated family."""
    from .theorems import theorem_suite

    cons = constraints if isinstance(constraints, list) else [constraints]
    rep = SweepReport()
    wanted = set(checks) if checks else None
    for c in cons:
        for S in enumerate_semigroups(c).semigroups():
            rep.checked += 1
            for chk in theorem_suite(S).checks:
                if wanted is not None and chk.name not in wanted:
                    continue
                if chk.status == "fail":
                    rep.failures.append((chk.name, tuple(int(v) for v in S.table.ravel()), chk.witness))
                elif chk.status == "skip":
                    rep.skipped[chk.name] = rep.skipped.get(chk.name, 0) + 1
    return rep
