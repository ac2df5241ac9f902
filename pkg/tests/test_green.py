import numpy as np
import pytest

from semiconj.constructors import (
    antichain_with_0_1, chain_semilattice, cyclic_group, fixture, FIXTURE_LABELS, null_semigroup,
    rectangular_band, rees, ReesSpec, symmetric_group,
)
from semiconj.core import Semigroup, adjoin_zero
from semiconj.errors import NoZeroError
from semiconj.green import (
    green, idempotents, ideal_structure, is_antichain, natural_order, principal_ideals, regularity,
    zero_direct_union,
)
from semiconj.pinj import symmetric_inverse_monoid


def restrict(S, elems):
    pos = {x: i for i, x in enumerate(elems)}
    return Semigroup([[pos[int(S.table[a, b])] for b in elems] for a in elems])


def naive_ideals(S):
    t = S.table.tolist()
    n = S.n
    ext = list(range(n)) + [None]

    def m(x, y):
        if x is None:
            return y
        if y is None:
            return x
        return t[x][y]

    L = [frozenset(m(u, a) for u in ext) for a in range(n)]
    R = [frozenset(m(a, u) for u in ext) for a in range(n)]
    J = [frozenset(m(m(u, a), v) for u in ext for v in ext) for a in range(n)]
    return L, R, J


@pytest.mark.parametrize("S", [fixture("F7_542155"), fixture("F6_E2A"), fixture("F7_E2B"),
                               symmetric_group(3), chain_semilattice(3)])
def test_green_matches_naive_ideals(S):
    g = green(S)
    L, R, J = naive_ideals(S)
    for a in range(S.n):
        for b in range(S.n):
            assert g.L.same(a, b) == (L[a] == L[b])
            assert g.R.same(a, b) == (R[a] == R[b])
            assert g.J.same(a, b) == (J[a] == J[b])
            assert g.H.same(a, b) == (L[a] == L[b] and R[a] == R[b])
    assert g.D == g.J
    assert g.L.refines(g.D) and g.R.refines(g.D) and g.H == g.L.meet(g.R)


def test_group_is_one_class():
    g = green(cyclic_group(5))
    assert all(getattr(g, k).is_universal for k in "LRHDJ")


def test_symmetric_inverse_monoid_j_classes():
    S, _ = symmetric_inverse_monoid(3)
    sizes = sorted(len(c) for c in green(S).J.classes)
    assert sizes == [1, 6, 9, 18]


def test_principal_ideals_contain_generator():
    S = fixture("F4_22")
    for m in principal_ideals(S):
        assert np.all(np.diag(m))


def test_natural_order_and_antichains():
    chain = chain_semilattice(2)
    assert natural_order(chain) == {(0, 1)} and not is_antichain(chain)
    A = antichain_with_0_1(3)
    assert not is_antichain(A)
    assert is_antichain(A, exclude_zero=True, exclude_identity=True)
    B = rectangular_band(2, 3)
    assert idempotents(B) == list(range(6)) and is_antichain(B)


def test_regularity():
    assert regularity(fixture("F6_E2A")).is_inverse
    r = regularity(null_semigroup(2))
    assert r.regular_elements == [0] and not r.is_regular
    for n in (1, 2, 3):
        S, _ = symmetric_inverse_monoid(n)
        assert regularity(S).is_inverse


def test_ideal_structure():
    spec = ReesSpec(cyclic_group(2), 2, 2, ((0, 1), (1, 0)))
    assert ideal_structure(rees(spec)).is_completely_simple
    assert ideal_structure(adjoin_zero(cyclic_group(3))).is_zero_simple
    assert not ideal_structure(fixture("F7_542155")).is_simple


def test_zero_direct_union():
    S = fixture("F7_E2B")
    labels = FIXTURE_LABELS["F7_E2B"]
    brandt = restrict(S, [labels.index(x) for x in ("0", "b", "c", "e", "f")])
    assert brandt.zero == 0
    assert zero_direct_union(brandt) == [[1, 2, 3, 4]]
    # two group-with-zero copies glued at 0: {0, 1, 2} and {0, 3, 4}
    t = [[0] * 5 for _ in range(5)]
    for base in (1, 3):
        for i in range(2):
            for j in range(2):
                t[base + i][base + j] = base + (i + j) % 2
    U = Semigroup(t)
    assert zero_direct_union(U) == [[1, 2], [3, 4]]
    # {0, 1} as a 2-chain: {0, 1} is completely 0-simple on its own
    assert zero_direct_union(chain_semilattice(2)) == [[1]]
    assert zero_direct_union(chain_semilattice(3)) is None
    assert zero_direct_union(Semigroup([[0]])) == []
    with pytest.raises(NoZeroError):
        zero_direct_union(cyclic_group(2))
