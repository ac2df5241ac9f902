"""Structural checks relating the conjugacies to each other and to the semigroup's shape.

Each check is evaluated independently and reported with a status:
``pass``/``fail`` when its hypothesis applies, ``skip`` when it does not, and
``info`` for observations that are recorded without asserting either way.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .conjugacy import (
    c_matrix,
    included,
    o_matrix,
    p_matrix,
    p_star,
    strong_relations,
    tr_matrix_definitional,
    tr_matrix_via_pp,
)
from .core import EqPartition, Semigroup, basic_predicates, is_group
from .epigroup import (
    double_pinv_map,
    in_W,
    in_W_by_square,
    index_map,
    omega_map,
    pinv_map,
)
from .green import green, idempotents, ideal_structure, is_antichain, regularity, zero_direct_union

MINIMALITY_MAX_ORDER = 5


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    detail: str = ""
    witness: object = None


@dataclass
class SuiteReport:
    n: int
    checks: list = field(default_factory=list)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if c.status == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def get(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "ok": self.ok,
            "checks": [
                {"name": c.name, "status": c.status, "detail": c.detail,
                 "witness": None if c.witness is None else repr(c.witness)}
                for c in self.checks
            ],
        }


def _first_pair(mask: np.ndarray):
    hits = np.argwhere(mask)
    return tuple(int(v) for v in hits[0]) if len(hits) else None


def _is_identity(m: np.ndarray) -> bool:
    return bool(np.array_equal(m, np.eye(len(m), dtype=bool)))


def _power_table(S: Semigroup, kmax: int) -> np.ndarray:
    """pw[a, k] = a^k for 1 <= k <= kmax (column 0 unused)."""
    t = S.table
    idx = np.arange(S.n)
    pw = np.zeros((S.n, kmax + 1), dtype=np.int64)
    pw[:, 1] = idx
    for k in range(2, kmax + 1):
        pw[:, k] = t[pw[:, k - 1], idx]
    return pw


def set_partitions(n: int):
    """Restricted growth strings of length n."""
    lab = [0] * n

    def rec(i, top):
        if i == n:
            yield tuple(lab)
            return
        for v in range(top + 2):
            lab[i] = v
            yield from rec(i + 1, max(top, v))

    if n == 0:
        yield ()
    else:
        yield from rec(1, 0)


def _is_congruence(t: np.ndarray, lab: np.ndarray) -> bool:
    same = lab[:, None] == lab[None, :]
    lt = lab[t]  # class of a*c
    # a ~ b implies ac ~ bc and ca ~ cb
    right = np.all(lt[:, None, :] == lt[None, :, :], axis=2)
    left = np.all(lt.T[:, None, :] == lt.T[None, :, :], axis=2)
    return not np.any(same & ~(right & left))


def _quotient_cancellative(t: np.ndarray, lab: np.ndarray) -> bool:
    lt = lab[t]
    same = lab[:, None] == lab[None, :]
    # [a][c] = [b][c] for some c implies [a] = [b], and symmetrically on the left
    right = np.any(lt[:, None, :] == lt[None, :, :], axis=2)
    left = np.any(lt.T[:, None, :] == lt.T[None, :, :], axis=2)
    return not np.any((right | left) & ~same)


def theorem_suite(S: Semigroup) -> SuiteReport:
    rep = SuiteReport(S.n)
    add = rep.checks.append
    n = S.n
    t = S.table
    idx = np.arange(n)

    def verdict(name, ok, detail="", witness=None):
        add(Check(name, "pass" if ok else "fail", detail, witness))

    def skip(name, why):
        add(Check(name, "skip", why))

    p = p_matrix(S)
    ps = p_star(S).matrix()
    trd = tr_matrix_definitional(S)
    tr = tr_matrix_via_pp(S)
    o = o_matrix(S)
    c = c_matrix(S)
    strong = strong_relations(S)
    so = strong.so.matrix()
    sc = strong.sc.matrix()
    pinv = pinv_map(S)
    dp = double_pinv_map(S)
    om = omega_map(S)
    preds = basic_predicates(S)
    reg = regularity(S)
    ideals = ideal_structure(S)
    G = green(S)
    E = idempotents(S)
    comm = preds.commutative
    cr = bool(np.all(index_map(S) == 1))
    w = in_W(S)
    zero = S.zero

    # Inclusion diagram and its intersection nodes
    chain = [("p", p, "p*", ps), ("p*", ps, "tr", tr), ("tr", tr, "o", o), ("c", c, "o", o)]
    bad = [(x, y, _first_pair(mx & ~my)) for x, mx, y, my in chain if not included(mx, my)]
    verdict("inclusions", not bad, "p <= p* <= tr <= o and c <= o", bad or None)
    verdict("intersection-nodes", included(c & p, c & ps) and included(c & ps, c & tr),
            "c&p <= c&p* <= c&tr")
    verdict("tr-methods-agree", np.array_equal(trd, tr), "definitional search vs a'' ~p b''",
            _first_pair(trd ^ tr))
    verdict("strong-o", np.array_equal(so, o), "so = o", _first_pair(so ^ o))
    add(Check("strong-c-observed", "info", "sc = c" if np.array_equal(sc, c) else "sc != c",
              _first_pair(sc ^ c)))
    if w and zero is not None:
        verdict("strong-c", np.array_equal(sc, c), "in W with zero: sc = c", _first_pair(sc ^ c))
    else:
        skip("strong-c", "needs W and a zero")

    # Elementwise closure properties
    verdict("tr-double-prime", bool(np.all(tr[idx, dp])), "a ~tr a''")
    for name, m in (("tr", tr), ("o", o), ("p", p)):
        swapped = m[t, t.T]
        verdict(f"xy-{name}-yx", bool(np.all(swapped)), f"xy ~{name} yx", _first_pair(~swapped))
    pr = tr[np.ix_(pinv, pinv)]
    verdict("tr-primes", np.array_equal(tr, pr), "a ~tr b iff a' ~tr b'", _first_pair(tr ^ pr))
    for name, m in (("o", o), ("p", p)):
        pm = m[np.ix_(pinv, pinv)]
        verdict(f"{name}-primes", included(m, pm), f"a ~{name} b implies a' ~{name} b'",
                _first_pair(m & ~pm))
    kmax = max(2 * n, 8)
    pw = _power_table(S, kmax)
    for name, m in (("p", p), ("o", o), ("c", c), ("tr", tr)):
        fail = None
        for k in range(1, kmax + 1):
            mk = m[np.ix_(pw[:, k], pw[:, k])]
            if not included(m, mk):
                fail = (k, _first_pair(m & ~mk))
                break
        verdict(f"powers-{name}", fail is None, f"a ~{name} b implies a^k ~{name} b^k, k <= {kmax}", fail)

    # Identity and universality characterizations
    verdict("p-identity-iff-commutative", _is_identity(p) == comm)
    verdict("tr-identity-iff-commutative-cr", _is_identity(tr) == (comm and cr))
    verdict("o-identity-iff-commutative-cancellative", _is_identity(o) == (comm and preds.cancellative))
    all_id = all(_is_identity(m) for m in (p, o, tr, c))
    verdict("all-identity-iff-commutative-group", all_id == (comm and is_group(S)))
    if comm:
        lab = EqPartition.from_matrix(o).labels
        cong = _is_congruence(t, lab)
        canc = _quotient_cancellative(t, lab)
        detail = "o is a congruence with cancellative quotient"
        minimal = True
        if n <= MINIMALITY_MAX_ORDER:
            for rgs in set_partitions(n):
                cand = np.array(rgs)
                if _is_congruence(t, cand) and _quotient_cancellative(t, cand):
                    if not included(o, cand[:, None] == cand[None, :]):
                        minimal = False
                        break
            detail += "; minimum among cancellative congruences"
        else:
            detail += "; minimality skipped above order 5"
        verdict("o-commutative-congruence", cong and canc and minimal, detail)
    else:
        skip("o-commutative-congruence", "not commutative")

    # Five equivalent conditions for universal trace conjugacy
    Eset = np.array(E, dtype=np.int64)
    conds = [
        bool(np.all(tr)),
        is_antichain(S) and bool(np.array_equal(dp, om)),
        bool(np.all(t[t[pinv[:, None], idx[None, :]], pinv[:, None]] == pinv[:, None])),
        bool(np.all(t[t[om[:, None], idx[None, :]], om[:, None]] == om[:, None])),
        bool(np.all(t[t[Eset[None, :], idx[:, None]], Eset[None, :]] == Eset[None, :])),
    ]
    verdict("tr-universal-conditions", len(set(conds)) == 1, f"conditions (1)-(5): {conds}")

    pu = bool(np.all(p))
    if preds.is_rectangular_band:
        verdict("rectangular-band-p-universal", pu)
    else:
        skip("rectangular-band-p-universal", "not a rectangular band")
    if pu:
        verdict("p-universal-structure", ideals.is_simple and preds.is_rectangular_band,
                "p universal implies simple and (with an idempotent) a rectangular band")
    else:
        skip("p-universal-structure", "p not universal")

    if np.array_equal(tr, o):
        verdict("tr-eq-o-antichain", is_antichain(S), "tr = o implies E(S) antichain")
    else:
        skip("tr-eq-o-antichain", "tr != o")

    e1 = np.flatnonzero(index_map(S) == 1)
    sub = np.ix_(e1, e1)
    verdict("completely-regular-elements", np.array_equal(p[sub], tr[sub]) and np.array_equal(ps[sub], tr[sub]),
            "p = p* = tr on Epi_1")
    if w:
        verdict("W-p-transitive", np.array_equal(p, ps), "in W: p = p*")
    else:
        skip("W-p-transitive", "not in W")
    verdict("W-by-two-routes", w == in_W_by_square(S), "E2 + (xy)''=xy vs S^2 completely regular")
    verdict("E1-W-E2", (not cr or w) and (not w or int(index_map(S).max()) <= 2))

    if ideals.is_completely_simple:
        verdict("completely-simple-all-equal", np.array_equal(p, ps) and np.array_equal(ps, tr)
                and np.array_equal(tr, o), "p = p* = tr = o")
    else:
        skip("completely-simple-all-equal", "not completely simple")
    p_eq_o = bool(np.array_equal(p, o))
    if zero is None and reg.is_regular:
        verdict("regular-no-zero-p-eq-o", p_eq_o == ideals.is_completely_simple,
                "p = o iff completely simple")
    else:
        skip("regular-no-zero-p-eq-o", "needs a regular semigroup without zero")
    if zero is None and w:
        verdict("W-no-zero-p-eq-o", p_eq_o == ideals.is_completely_simple,
                "p = o iff completely simple")
    else:
        skip("W-no-zero-p-eq-o", "needs W without zero")

    if zero is not None:
        c_in_p = included(c, p)
        c_in_tr = included(c, tr)
        if reg.is_regular:
            zdu = zero_direct_union(S) is not None
            verdict("regular-zero-c-inclusions", c_in_p == c_in_tr == zdu,
                    f"c<=p {c_in_p}, c<=tr {c_in_tr}, 0-direct union {zdu}")
        else:
            skip("regular-zero-c-inclusions", "not regular")
        if c_in_tr:
            verdict("c-in-tr-nonzero-antichain", is_antichain(S, exclude_zero=True),
                    "c <= tr implies nonzero idempotents form an antichain")
        else:
            skip("c-in-tr-nonzero-antichain", "c not contained in tr")
        verdict("zero-c-class", bool(c[zero].sum() == 1), "c-class of 0 is {0}")
        verdict("zero-o-universal", bool(np.all(o)))
    else:
        for name in ("regular-zero-c-inclusions", "c-in-tr-nonzero-antichain",
                     "zero-c-class", "zero-o-universal"):
            skip(name, "no zero")
        verdict("no-zero-c-eq-o", np.array_equal(c, o))

    # Finite exponents transported along p
    ix = index_map(S)
    fail = None
    for a, b in np.argwhere(p):
        tb = int(ix[b])
        for m_ in range(tb, kmax + 1):
            for k in range(tb, m_):
                if pw[a, m_] == pw[a, k] and pw[b, m_] != pw[b, k]:
                    fail = (int(a), int(b), m_, k)
                    break
            if fail:
                break
        if fail:
            break
    verdict("p-finite-exponents", fail is None, "a ~p b, a^m = a^k (m,k >= index b) implies b^m = b^k", fail)
    if w:
        fail = None
        for a, b in np.argwhere(p):
            same_a = pw[a, 1:, None] == pw[a, None, 1:]
            same_b = pw[b, 1:, None] == pw[b, None, 1:]
            if np.any(same_a & ~same_b):
                fail = (int(a), int(b))
                break
        verdict("W-finite-exponents", fail is None, "in W: exponents transported for all m,k >= 1", fail)
    else:
        skip("W-finite-exponents", "not in W")

    # Green's relations sanity
    verdict("green-H-meet", G.H == G.L.meet(G.R))
    verdict("green-D-eq-J", G.D == G.J)
    return rep
