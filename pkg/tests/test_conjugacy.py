import itertools

import numpy as np
import pytest

from oracles import c_pairs, o_pairs, p_pairs
from semiconj.conjugacy import (
    c_conjugacy, c_matrix, conjugacy_report, conjugator_set, find_o_conjugators, o_conjugacy,
    o_matrix, p_matrix, p_relation, p_star, relation_character, strong_o_witness, strong_relations,
    tr_conjugacy, tr_matrix_definitional, tr_matrix_via_pp,
)
from semiconj.constructors import (
    antichain_with_0_1, cyclic_group, fixture, FIXTURE_IDS, FIXTURE_LABELS, left_zero, null_semigroup,
    rectangular_band, symmetric_group,
)
from semiconj.core import EqPartition, adjoin_zero, anti
from semiconj.enumeration import all_semigroups
from semiconj.errors import FormulaInapplicable, PreconditionError

SMALL = all_semigroups(3)
CORPUS = SMALL + [fixture(k) for k in FIXTURE_IDS]


def pairs_of(m):
    return {(int(a), int(b)) for a, b in np.argwhere(m)}


@pytest.mark.parametrize("S", CORPUS, ids=lambda S: f"n{S.n}")
def test_relations_match_definitions(S):
    t = S.table.tolist()
    assert pairs_of(p_matrix(S)) == p_pairs(t)
    assert pairs_of(o_matrix(S)) == o_pairs(t)
    assert pairs_of(c_matrix(S)) == c_pairs(t)


def test_seven_element_example():
    S = fixture("F7_542155")
    assert str(p_relation(S)) == "0-2 0-3 4-5"
    assert str(p_star(S)) == "{0,2,3} {1} {4,5} {6}"
    assert str(c_conjugacy(S)) == "{0,1,2,3,6} {4} {5}"
    assert o_conjugacy(S).is_universal
    for a in (0, 1, 2, 3, 6):
        assert conjugator_set(S, a).base == {0, 1, 2, 3, 6}
    assert conjugator_set(S, 4).base == {4}
    assert conjugator_set(S, 5).base == frozenset()
    c = c_conjugacy(S)
    assert str(c.meet(p_star(S))) == "{0,2,3} {1} {4} {5} {6}"
    assert str(c.meet(tr_conjugacy(S))) == "{0,1,2,3} {4} {5} {6}"


def test_trace_on_seven_element_example():
    # p* sits inside tr, and 4-5 is a p-edge, so 4 and 5 share a trace class
    S = fixture("F7_542155")
    assert str(tr_conjugacy(S)) == "{0,1,2,3} {4,5} {6}"
    assert tr_conjugacy(S, "definitional") == tr_conjugacy(S, "via_pp")


def test_four_element_fixtures():
    assert str(tr_conjugacy(fixture("F4_56"))) == "{0,1} {2} {3}"
    assert str(c_conjugacy(fixture("F4_113"))) == "{0} {1,2,3}"
    c22 = c_conjugacy(fixture("F4_22"))
    assert c22.class_of(0) == (0,)


def test_e2_examples():
    S = fixture("F6_E2A")
    rel = p_relation(S)
    assert str(rel) == "1-2 3-4 3-5" and not rel.is_transitive
    assert p_star(S) == tr_conjugacy(S)
    assert str(c_conjugacy(S)) == "{0,1,2} {3,4,5}" == str(o_conjugacy(S))

    T = fixture("F7_E2B")
    lab = FIXTURE_LABELS["F7_E2B"]

    def named(part):
        return sorted(sorted(lab[x] for x in c) for c in part.classes)

    assert p_relation(T).is_transitive
    assert named(p_star(T)) == [["0", "b", "c"], ["1"], ["a"], ["e", "f"]]
    assert p_star(T) == tr_conjugacy(T)
    assert named(c_conjugacy(T)) == [["0"], ["1"], ["a"], ["b", "c"], ["e", "f"]]


def test_group_trace_is_group_conjugacy():
    S = symmetric_group(3)
    t = S.table
    inv = [int(np.flatnonzero(t[g] == S.identity)[0]) for g in range(S.n)]
    conj = EqPartition.from_pairs(S.n, [(a, int(t[t[inv[g], a], g])) for a in range(S.n) for g in range(S.n)])
    assert tr_conjugacy(S) == conj == o_conjugacy(S) == p_star(S)


def test_characters():
    assert p_relation(cyclic_group(4)).is_transitive
    assert relation_character(cyclic_group(4), "p").is_identity
    assert relation_character(adjoin_zero(cyclic_group(2)), "o").is_universal
    assert relation_character(left_zero(2), "o").is_universal
    assert relation_character(cyclic_group(5), "o").is_identity
    assert relation_character(fixture("F5_110"), "c").is_identity
    A = antichain_with_0_1(3)
    assert relation_character(A, "o").is_universal and relation_character(A, "c").is_identity
    assert relation_character(rectangular_band(2, 3), "p").is_universal


def test_null_semigroup_trace_universal_p_identity():
    S = null_semigroup(2)
    assert relation_character(S, "tr").is_universal
    assert relation_character(S, "p").is_identity


@pytest.mark.parametrize("S", CORPUS, ids=lambda S: f"n{S.n}")
def test_strong_o_equals_o_and_formula(S):
    st = strong_relations(S)
    assert np.array_equal(st.so.matrix(), o_matrix(S))
    for a, b in itertools.product(range(S.n), repeat=2):
        cd = find_o_conjugators(S, a, b)
        if cd is None:
            assert not o_matrix(S)[a, b]
            continue
        g, h = strong_o_witness(S, a, b, *cd)
        assert S.mul(g, h, g) == g and S.mul(a, g) == S.mul(g, b)


def test_strong_o_reflexive_case():
    S = fixture("F7_542155")
    for a in range(S.n):
        g, h = strong_o_witness(S, a, a, S.one, S.one)
        assert S.mul(g, h, g) == g and S.mul(h, g, h) == h


def test_strong_o_preconditions():
    S = fixture("F7_542155")
    with pytest.raises(PreconditionError):
        strong_o_witness(S, 5, 6, 6, 6)


def test_strong_c_fixture():
    S = fixture("F6_STRONGC")
    assert (2, 3) in strong_relations(S).sc
    assert S.mul(2, 5) == S.mul(5, 3) and S.mul(5, 5, 5) == 5
    # the closed formula with c = d = 4 leaves P1(2)
    assert strong_o_witness(S, 2, 3, 4, 4, conjugators="o") == (0, 0)
    with pytest.raises(FormulaInapplicable) as info:
        strong_o_witness(S, 2, 3, 4, 4, conjugators="c")
    assert (info.value.g, info.value.h) == (0, 0)


@pytest.mark.parametrize("name", FIXTURE_IDS)
def test_reports_are_consistent(name):
    S = fixture(name)
    rep = conjugacy_report(S)
    assert rep.inclusion_diagram_ok
    assert np.array_equal(tr_matrix_definitional(S), tr_matrix_via_pp(S))
    doc = rep.to_json()
    assert set(doc) >= {"p", "p_star", "o", "c", "tr", "so", "sc"}
    # p and o are left-right symmetric notions
    assert p_relation(anti(S)) == p_relation(S)
    assert o_conjugacy(anti(S)) == o_conjugacy(S)
    with pytest.raises(ValueError):
        tr_conjugacy(S, "nope")
