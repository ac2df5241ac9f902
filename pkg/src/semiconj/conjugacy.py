"""Conjugacy relations on finite semigroups and their witnesses.

All relations are computed as boolean ``n x n`` matrices over the elements of
``S``; conjugators range over ``S^1`` through ``S.ext_table``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import EqPartition, PairRelation, Semigroup
from .epigroup import double_pinv_map, omega_map, pinv_map
from .errors import FormulaInapplicable, InternalError, PreconditionError

RELATIONS = ("p", "p_star", "o", "c", "tr")


# Relation matrices ----------------------------------------------------------

@lru_cache(maxsize=256)
def p_matrix(S: Semigroup) -> np.ndarray:
    """m[a, b] iff a = uv and b = vu for some u, v in S^1."""
    E = S.ext_table
    n = S.n
    a = E
    b = E.T
    keep = (a < n) & (b < n)
    m = np.zeros((n, n), dtype=bool)
    m[a[keep], b[keep]] = True
    m.setflags(write=False)
    return m


def _intertwiners(S: Semigroup, allowed: np.ndarray | None = None) -> np.ndarray:
    """r[a, b] iff a g = g b for some g in S^1 (with allowed[a, g] if given)."""
    E = S.ext_table
    n = S.n
    r = np.zeros((n, n), dtype=bool)
    for g in range(E.shape[0]):
        hit = E[:n, g][:, None] == E[g, :n][None, :]
        if allowed is not None:
            hit &= allowed[:, g][:, None]
        r |= hit
    return r


@lru_cache(maxsize=256)
def o_matrix(S: Semigroup) -> np.ndarray:
    r = _intertwiners(S)
    m = r & r.T
    m.setflags(write=False)
    return m


@lru_cache(maxsize=256)
def conjugator_base(S: Semigroup) -> np.ndarray:
    """Boolean ``n x n`` matrix: row a is the membership vector of P(a)."""
    n = S.n
    m = np.ones((n, n), dtype=bool)
    z = S.zero
    if z is not None:
        t = S.table
        E = S.ext_table
        # left multiples m*a over m in S^1, minus zero
        left = np.zeros((n, n), dtype=bool)
        left[np.repeat(np.arange(n), E.shape[0]), E[:, :n].T.ravel()] = True
        left[:, z] = False
        kills = (left.astype(np.int64) @ (t == z).astype(np.int64)) > 0
        m = ~kills
        m[z, :] = False
        m[z, z] = True
    m.setflags(write=False)
    return m


@lru_cache(maxsize=256)
def conjugator_matrix(S: Semigroup) -> np.ndarray:
    """Boolean ``n x ext_order`` matrix: row a is the membership vector of P^1(a)."""
    m = np.zeros((S.n, S.ext_order), dtype=bool)
    m[:, :S.n] = conjugator_base(S)
    m[:, S.one] = True
    m.setflags(write=False)
    return m


@lru_cache(maxsize=256)
def c_matrix(S: Semigroup) -> np.ndarray:
    r = _intertwiners(S, conjugator_matrix(S))
    m = r & r.T
    m.setflags(write=False)
    return m


def mutually_inverse_pairs(S: Semigroup) -> np.ndarray:
    """All (g, h) in S^1 x S^1 with ghg = g and hgh = h, as a k x 2 array."""
    E = S.ext_table
    m = E.shape[0]
    idx = np.arange(m)
    gh = E
    ghg = E[gh, idx[:, None]]  # (g*h)*g
    ok = (ghg == idx[:, None]) & (ghg.T == idx[None, :])
    return np.argwhere(ok)


@lru_cache(maxsize=256)
def tr_matrix_definitional(S: Semigroup) -> np.ndarray:
    """Search g, h in S^1: ghg=g, hgh=h, g a'' h = b'', hg = a^w, gh = b^w."""
    E = S.ext_table
    n = S.n
    dp = double_pinv_map(S)
    om = omega_map(S)
    m = np.zeros((n, n), dtype=bool)
    for g, h in mutually_inverse_pairs(S):
        hg = E[h, g]
        gh = E[g, h]
        if hg >= n or gh >= n:
            continue
        avals = np.flatnonzero(om == hg)
        if len(avals) == 0:
            continue
        targets = E[E[g, dp[avals]], h]
        bmask = om == gh
        for a, x in zip(avals, targets):
            m[a] |= bmask & (dp == x)
    m.setflags(write=False)
    return m


@lru_cache(maxsize=256)
def tr_matrix_via_pp(S: Semigroup) -> np.ndarray:
    dp = double_pinv_map(S)
    m = p_matrix(S)[np.ix_(dp, dp)].copy()
    m.setflags(write=False)
    return m


def _strong(S: Semigroup, restrict: bool) -> np.ndarray:
    E = S.ext_table
    n = S.n
    P1 = conjugator_matrix(S)
    m = np.zeros((n, n), dtype=bool)
    for g, h in mutually_inverse_pairs(S):
        hit = (E[:n, g][:, None] == E[g, :n][None, :]) & (E[h, :n][:, None] == E[:n, h][None, :])
        if restrict:
            hit &= P1[:, g][:, None] & P1[:, h][None, :]
        m |= hit
    return m


# Public relation API ----------------------------------------------------------

def p_relation(S: Semigroup) -> PairRelation:
    return PairRelation.from_matrix(p_matrix(S))


def p_star(S: Semigroup) -> EqPartition:
    return p_relation(S).closure()


def p_is_transitive(S: Semigroup) -> bool:
    return p_relation(S).is_transitive


def o_conjugacy(S: Semigroup) -> EqPartition:
    return EqPartition.from_matrix(o_matrix(S))


def c_conjugacy(S: Semigroup) -> EqPartition:
    part = EqPartition.from_matrix(c_matrix(S))
    if S.zero is not None and part.class_of(S.zero) != (S.zero,):
        raise InternalError("c-class of zero is not a singleton")
    if S.zero is None and part != o_conjugacy(S):
        raise InternalError("c differs from o in a semigroup without zero")
    return part


def tr_conjugacy(S: Semigroup, method: str = "definitional") -> EqPartition:
    if method == "definitional":
        return EqPartition.from_matrix(tr_matrix_definitional(S))
    if method == "via_pp":
        return EqPartition.from_matrix(tr_matrix_via_pp(S))
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class ConjugatorSet:
    base: frozenset
    includes_adjoined_identity: bool = True

    def __contains__(self, g) -> bool:
        return g in self.base


def conjugator_set(S: Semigroup, a: int) -> ConjugatorSet:
    row = conjugator_base(S)[a]
    return ConjugatorSet(frozenset(int(g) for g in np.flatnonzero(row)))


@dataclass(frozen=True)
class StrongRelations:
    so: PairRelation
    sc: PairRelation


def strong_relations(S: Semigroup) -> StrongRelations:
    so = _strong(S, restrict=False)
    sc = _strong(S, restrict=True)
    if np.any(so & ~o_matrix(S)) or np.any(sc & ~c_matrix(S)):
        raise InternalError("strong relations escape their parent relations")
    return StrongRelations(PairRelation.from_matrix(so), PairRelation.from_matrix(sc))


def _pinv_ext(S: Semigroup, x: int) -> int:
    return S.one if S.is_adjoined(x) else int(pinv_map(S)[x])


def strong_o_witness(S: Semigroup, a: int, b: int, c: int, d: int, conjugators: str = "o"):
    """Mutually inverse (g, h) built from conjugators c, d with ac = cb, bd = da.

    With ``conjugators="c"`` the result must also satisfy g in P^1(a) and
    h in P^1(b); otherwise FormulaInapplicable carries the computed pair.
    """
    mul = S.mul
    if mul(a, c) != mul(c, b) or mul(b, d) != mul(d, a):
        raise PreconditionError("need ac = cb and bd = da")
    h = mul(d, a, _pinv_ext(S, mul(c, d, a)))
    g = mul(c, h, c)
    checks = {
        "ghg = g": mul(g, h, g) == g,
        "hgh = h": mul(h, g, h) == h,
        "ag = gb": mul(a, g) == mul(g, b),
        "bh = ha": mul(b, h) == mul(h, a),
    }
    if conjugators == "c":
        P1 = conjugator_matrix(S)
        checks["g in P1(a)"] = bool(P1[a, g])
        checks["h in P1(b)"] = bool(P1[b, h])
    failed = [k for k, ok in checks.items() if not ok]
    if failed:
        raise FormulaInapplicable("formula witness fails: " + ", ".join(failed), g, h)
    return g, h


def find_o_conjugators(S: Semigroup, a: int, b: int, restrict: bool = False):
    """Some (c, d) in S^1 with ac = cb and bd = da, or None."""
    E = S.ext_table
    P1 = conjugator_matrix(S)
    cs = [c for c in range(E.shape[0]) if E[a, c] == E[c, b] and (not restrict or P1[a, c])]
    ds = [d for d in range(E.shape[0]) if E[b, d] == E[d, a] and (not restrict or P1[b, d])]
    if not cs or not ds:
        return None
    return cs[0], ds[0]


# Characters and reports -----------------------------------------------------

@dataclass(frozen=True)
class RelationCharacter:
    is_identity: bool
    is_universal: bool
    universal_on_nonzero: bool


def relation_matrix(S: Semigroup, which: str) -> np.ndarray:
    if which == "p":
        return p_matrix(S)
    if which == "p_star":
        return p_star(S).matrix()
    if which == "o":
        return o_matrix(S)
    if which == "c":
        return c_matrix(S)
    if which == "tr":
        return tr_matrix_via_pp(S)
    raise ValueError(f"unknown relation {which!r}")


def character_of(S: Semigroup, m: np.ndarray) -> RelationCharacter:
    n = S.n
    keep = np.ones(n, dtype=bool)
    if S.zero is not None:
        keep[S.zero] = False
    return RelationCharacter(
        is_identity=bool(np.array_equal(m, np.eye(n, dtype=bool))),
        is_universal=bool(np.all(m)),
        universal_on_nonzero=bool(np.all(m[np.ix_(keep, keep)])),
    )


def relation_character(S: Semigroup, which: str) -> RelationCharacter:
    return character_of(S, relation_matrix(S, which))


def included(x: np.ndarray, y: np.ndarray) -> bool:
    return not np.any(x & ~y)


@dataclass(frozen=True)
class ConjugacyReport:
    p: PairRelation
    p_star: EqPartition
    o: EqPartition
    c: EqPartition
    tr: EqPartition
    so: PairRelation
    sc: PairRelation
    inclusion_diagram_ok: bool
    character: dict

    def to_json(self) -> dict:
        return {
            "p": self.p.to_json(),
            "p_transitive": self.p.is_transitive,
            "p_star": self.p_star.to_json(),
            "o": self.o.to_json(),
            "c": self.c.to_json(),
            "tr": self.tr.to_json(),
            "so": self.so.to_json(),
            "sc": self.sc.to_json(),
            "inclusion_diagram_ok": self.inclusion_diagram_ok,
            "character": {k: vars(v) for k, v in self.character.items()},
        }


def inclusion_diagram_ok(S: Semigroup) -> bool:
    p = p_matrix(S)
    ps = p_star(S).matrix()
    tr = tr_matrix_via_pp(S)
    o = o_matrix(S)
    c = c_matrix(S)
    return included(p, ps) and included(ps, tr) and included(tr, o) and included(c, o)


def conjugacy_report(S: Semigroup) -> ConjugacyReport:
    strong = strong_relations(S)
    return ConjugacyReport(
        p=p_relation(S),
        p_star=p_star(S),
        o=o_conjugacy(S),
        c=c_conjugacy(S),
        tr=tr_conjugacy(S, "via_pp"),
        so=strong.so,
        sc=strong.sc,
        inclusion_diagram_ok=inclusion_diagram_ok(S),
        character={w: relation_character(S, w) for w in RELATIONS},
    )


def theorem_suite(S: Semigroup):
    """Run every structural check on S; see ``semiconj.theorems``."""
    from .theorems import theorem_suite as run

    return run(S)
