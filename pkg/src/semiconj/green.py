"""Green's relations, idempotents, regularity and ideal structure."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import EqPartition, Semigroup
from .errors import InternalError, NoZeroError


@dataclass(frozen=True)
class GreenData:
    L: EqPartition
    R: EqPartition
    H: EqPartition
    D: EqPartition
    J: EqPartition
    # boolean n x n matrices: row a is the membership vector of the principal ideal of a
    left_ideals: np.ndarray
    right_ideals: np.ndarray
    two_sided_ideals: np.ndarray


def principal_ideals(S: Semigroup):
    """Membership matrices of S^1 a, a S^1 and S^1 a S^1 for every a."""
    n = S.n
    t = S.table
    idx = np.arange(n)
    left = np.zeros((n, n), dtype=bool)
    right = np.zeros((n, n), dtype=bool)
    left[idx, idx] = True
    right[idx, idx] = True
    # left[a, s*a] and right[a, a*s]
    left[np.repeat(idx, n), t.T.ravel()] = True
    right[np.repeat(idx, n), t.ravel()] = True
    # S^1 a S^1 = (S^1 a) S^1: union of right ideals of the members of S^1 a
    two = (left.astype(np.int64) @ right.astype(np.int64)) > 0
    return left, right, two


def green(S: Semigroup) -> GreenData:
    left, right, two = principal_ideals(S)
    L = EqPartition.from_labels([r.tobytes() for r in left])
    R = EqPartition.from_labels([r.tobytes() for r in right])
    J = EqPartition.from_labels([r.tobytes() for r in two])
    H = L.meet(R)
    lm = L.matrix().astype(np.int64)
    rm = R.matrix().astype(np.int64)
    lr = (lm @ rm) > 0
    rl = (rm @ lm) > 0
    if not np.array_equal(lr, rl):
        raise InternalError("L o R differs from R o L")
    D = EqPartition.from_matrix(lr)
    return GreenData(L, R, H, D, J, left, right, two)


# Idempotents and their order ------------------------------------------------

def idempotents(S: Semigroup) -> list:
    idx = np.arange(S.n)
    return [int(e) for e in np.flatnonzero(S.table[idx, idx] == idx)]


def natural_order(S: Semigroup) -> set:
    """Pairs (e, f) of distinct idempotents with ef = fe = e."""
    E = idempotents(S)
    t = S.table
    return {(e, f) for e in E for f in E if e != f and t[e, f] == e and t[f, e] == e}


def is_antichain(S: Semigroup, exclude_zero: bool = False, exclude_identity: bool = False) -> bool:
    skip = set()
    if exclude_zero and S.zero is not None:
        skip.add(S.zero)
    if exclude_identity and S.identity is not None:
        skip.add(S.identity)
    return not any(e not in skip and f not in skip for e, f in natural_order(S))


def primitive_idempotents(S: Semigroup) -> list:
    """Nonzero idempotents with no nonzero idempotent strictly below them."""
    below = {}
    for e, f in natural_order(S):
        if e != S.zero:
            below.setdefault(f, []).append(e)
    return [e for e in idempotents(S) if e != S.zero and not below.get(e)]


# Regularity -----------------------------------------------------------------

@dataclass(frozen=True)
class Regularity:
    regular_elements: list
    is_regular: bool
    is_inverse: bool
    inverses: list


def regularity(S: Semigroup) -> Regularity:
    t = S.table
    idx = np.arange(S.n)
    # aba[a, b] = (a*b)*a
    aba = t[t, idx[:, None]]
    is_inv = (aba == idx[:, None]) & (aba.T == idx[None, :])
    regular = [int(a) for a in idx if np.any(aba[a] == a)]
    inverses = [[int(b) for b in np.flatnonzero(is_inv[a])] for a in idx]
    is_regular = len(regular) == S.n
    return Regularity(
        regular_elements=regular,
        is_regular=is_regular,
        is_inverse=all(len(v) == 1 for v in inverses),
        inverses=inverses,
    )


# Ideal structure ------------------------------------------------------------

@dataclass(frozen=True)
class IdealStructure:
    is_simple: bool
    is_zero_simple: bool
    is_completely_simple: bool
    is_completely_zero_simple: bool


def _square_is_zero(S: Semigroup) -> bool:
    return S.zero is not None and bool(np.all(S.table == S.zero))


def is_zero_simple(S: Semigroup) -> bool:
    if S.zero is None or S.n < 2 or _square_is_zero(S):
        return False
    _, _, two = principal_ideals(S)
    nonzero = np.ones(S.n, dtype=bool)
    nonzero[S.zero] = False
    # every nonzero a generates the whole of S as an ideal
    return bool(np.all(two[nonzero]))


def ideal_structure(S: Semigroup) -> IdealStructure:
    _, _, two = principal_ideals(S)
    simple = bool(np.all(two))
    zero_simple = is_zero_simple(S)
    return IdealStructure(
        is_simple=simple,
        is_zero_simple=zero_simple,
        is_completely_simple=simple and _has_minimal_idempotent(S),
        is_completely_zero_simple=zero_simple and bool(primitive_idempotents(S)),
    )


def _has_minimal_idempotent(S: Semigroup) -> bool:
    E = idempotents(S)
    bigger = {f for _, f in natural_order(S)}
    return any(e not in bigger for e in E)


def zero_direct_union(S: Semigroup):
    """Components of S minus 0 forming a 0-direct union of completely 0-simple semigroups.

    Returns a list of sorted element lists (empty for S = {0}), or None when
    the finest decomposition has a component that is not completely 0-simple.
    """
    if S.zero is None:
        raise NoZeroError("zero_direct_union needs a semigroup with zero")
    z = S.zero
    t = S.table
    nonzero = [x for x in range(S.n) if x != z]
    nz = np.array(nonzero, dtype=np.int64)
    sub = t[np.ix_(nz, nz)]
    linked = (sub != z) | (sub.T != z)
    pairs = [(nonzero[i], nonzero[j]) for i, j in np.argwhere(linked)]
    classes = [c for c in EqPartition.from_pairs(S.n, pairs).classes if c != (z,)]
    result = sorted((list(c) for c in classes), key=lambda c: c[0])

    for comp in result:
        members = [z] + comp
        sub = t[np.ix_(members, members)]
        pos = {m: i for i, m in enumerate(members)}
        if not all(int(v) in pos for v in sub.ravel()):
            return None
        sub = np.vectorize(pos.__getitem__)(sub)
        if not is_completely_zero_simple(Semigroup(sub, check=False)):
            return None
    # cross products vanish by construction of the components
    return result


def is_completely_zero_simple(S: Semigroup) -> bool:
    return is_zero_simple(S) and bool(primitive_idempotents(S))
