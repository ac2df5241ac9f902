import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from semiconj.conjugacy import c_conjugacy, p_matrix, p_star, tr_conjugacy
from semiconj.core import EqPartition
from semiconj.errors import DimensionMismatch, ParseError, SizeLimit
from semiconj.green import green
from semiconj.pinj import (
    PartialInjection, all_injections, c_oracle, cc_type, chain, compose, cycle, cycle_type,
    decompose, find_r_homomorphism, inverse, is_r_homomorphism, join, parse_injection,
    permutation_witness, symmetric_inverse_monoid,
)

# points 1..9 of the worked example shifted down by one
ALPHA9 = join(9, decompose(PartialInjection.from_pairs(9, [(1, 5), (5, 7), (7, 1), (0, 2), (3, 4), (4, 8)])))


def test_decomposition_of_worked_example():
    assert [str(p) for p in decompose(ALPHA9)] == ["[0 2]", "[3 4 8]", "(1 5 7)"]
    t = cc_type(ALPHA9)
    assert t.cycles == ((3, 1),) and t.chains == ((1, 1), (2, 1))
    assert str(t) == "cycles{3:1} chains{1:1,2:1}"


def test_compose_worked_example():
    sq = compose(ALPHA9, ALPHA9)
    expected = [ALPHA9.map[y] if y >= 0 else -1 for y in ALPHA9.map]
    assert list(sq.map) == expected
    assert [str(p) for p in decompose(sq)] == ["[3 8]", "(1 7 5)"]


def test_basic_algebra():
    f = chain(2, 0, 1)
    assert compose(f, inverse(f)) == PartialInjection.identity(2, on=[0])
    assert compose(f, PartialInjection.empty(2)) == PartialInjection.empty(2)
    assert cc_type(PartialInjection.identity(4)).cycles == ((1, 4),)
    assert cc_type(PartialInjection.empty(3)) == cc_type(PartialInjection.empty(3))
    assert cc_type(PartialInjection.empty(3)).cycles == () == cc_type(PartialInjection.empty(3)).chains
    with pytest.raises(DimensionMismatch):
        compose(chain(2, 0, 1), chain(3, 0, 1))


def test_parse():
    f = parse_injection("3; 1 - 0")
    assert f.map == (1, -1, 0) and str(f) == "3; 1 - 0"
    for bad in ("3 1 2", "2; 0 0", "2; 0", "x; 0 1"):
        with pytest.raises(ParseError):
            parse_injection(bad)


def test_symmetric_inverse_monoid_sizes():
    assert [symmetric_inverse_monoid(n)[0].n for n in (1, 2, 3, 4)] == [2, 7, 34, 209]
    with pytest.raises(SizeLimit):
        symmetric_inverse_monoid(6)


def test_table_matches_composition():
    S, codec = symmetric_inverse_monoid(3)
    for i, j in itertools.product(range(S.n), repeat=2):
        assert codec[int(S.table[i, j])] == compose(codec[i], codec[j])


def test_r_homomorphisms():
    a = cycle(3, 0, 1)
    assert is_r_homomorphism(PartialInjection.identity(3), a, a)
    z = PartialInjection.empty(3)
    c01 = chain(3, 0, 1)
    assert find_r_homomorphism(c01, z) is None
    for phi in all_injections(3):
        assert not is_r_homomorphism(phi, c01, z)
    assert not c_oracle(c01, z)


def test_permutation_witness():
    a = chain(4, 0, 1, 2)
    b = chain(4, 3, 1, 0)
    s = permutation_witness(a, b)
    assert s is not None and compose(compose(inverse(s), b), s) == a
    assert is_r_homomorphism(inverse(s), a, b) and is_r_homomorphism(s, b, a)
    assert permutation_witness(a, a) is not None
    assert permutation_witness(a, cycle(4, 0, 1)) is None


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_finite_characterizations(n):
    S, codec = symmetric_inverse_monoid(n)
    elems = codec.elements
    types = [cc_type(f) for f in elems]
    cycles = [cycle_type(f) for f in elems]
    c = c_conjugacy(S)
    assert c == EqPartition.from_labels(_labels(types))
    tr = tr_conjugacy(S)
    assert p_star(S) == tr == EqPartition.from_labels(_labels(cycles))
    assert c.refines(green(S).J)
    if n <= 3:
        for i, j in itertools.product(range(S.n), repeat=2):
            same = types[i] == types[j]
            assert c_oracle(elems[i], elems[j]) == same
            assert (permutation_witness(elems[i], elems[j]) is not None) == same


def _labels(keys):
    seen = {}
    return [seen.setdefault(k, len(seen)) for k in keys]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_c_strictly_inside_p(n):
    S, codec = symmetric_inverse_monoid(n)
    c = c_conjugacy(S).matrix()
    p = p_matrix(S)
    assert not np.any(c & ~p)
    x = codec.index(chain(n, 0, 1))
    z = codec.index(PartialInjection.empty(n))
    assert p[x, z] and not c[x, z]


inj_st = st.integers(0, 208).map(lambda i: symmetric_inverse_monoid(4)[1][i])


@settings(max_examples=60, deadline=None)
@given(f=inj_st)
def test_decompose_round_trip(f):
    pieces = decompose(f)
    spans = [set(p.points) for p in pieces]
    assert all(not (a & b) for a, b in itertools.combinations(spans, 2))
    assert join(f.n, pieces) == f
    assert inverse(inverse(f)) == f
    assert cc_type(inverse(f)) == cc_type(f)


@settings(max_examples=60, deadline=None)
@given(f=inj_st, g=inj_st)
def test_oracles_agree_on_pairs(f, g):
    same = cc_type(f) == cc_type(g)
    assert c_oracle(f, g) == same
    w = permutation_witness(f, g)
    assert (w is not None) == same
