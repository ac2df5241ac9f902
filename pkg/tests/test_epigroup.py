import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from semiconj.constructors import (
    cyclic_group, fixture, FIXTURE_IDS, null_semigroup, random_rees_spec, rectangular_band, rees,
    rees_zero,
)
from semiconj.core import Semigroup
from semiconj.epigroup import (
    epi_classification, in_V, in_W, in_W_by_square, monogenic, monogenic_all, pinv_identity_suite,
    satisfies_E_n_identity, variety_membership,
)


def naive_pinv(S, a):
    """The unique group-part inverse found by scanning powers."""
    t = S.table
    pw = [a]
    while len(pw) < 3 * S.n + 3:
        pw.append(int(t[pw[-1], a]))
    for x in pw:
        if (t[t[x, a], x] == x and t[a, x] == t[x, a]
                and any(t[pw[k + 1], x] == pw[k] for k in range(S.n + 1))):
            return x
    raise AssertionError("no pseudo-inverse among powers")


def test_idempotent_profile():
    S = fixture("F7_542155")
    m = monogenic(S, 4)
    assert (m.index, m.period, m.pinv, m.omega, m.double_pinv) == (1, 1, 4, 4, 4)


def test_cyclic_generator():
    m = monogenic(cyclic_group(4), 1)
    assert (m.index, m.period, m.pinv, m.omega) == (1, 4, 3, 0)


def test_strong_c_fixture_pseudo_inverses():
    S = fixture("F6_STRONGC")
    p = [m.pinv for m in monogenic_all(S)]
    assert p == [0, 1, 0, 0, 5, 5]


@pytest.mark.parametrize("name", FIXTURE_IDS)
def test_pinv_matches_naive_scan(name):
    S = fixture(name)
    for a in range(S.n):
        assert monogenic(S, a).pinv == naive_pinv(S, a)


def test_classification():
    for name in FIXTURE_IDS:
        assert epi_classification(fixture(name)).is_epigroup
    e2a = epi_classification(fixture("F6_E2A"))
    assert e2a.min_n_with_S_eq_Epi_n == 2 and not e2a.is_completely_regular
    assert epi_classification(rectangular_band(2, 2)).is_completely_regular


def test_varieties():
    assert in_W(null_semigroup(3))
    eab = Semigroup([[0, 1, 2], [1, 1, 1], [2, 1, 1]])
    vm = variety_membership(eab)
    assert vm.in_E_2 and not vm.in_W
    for S in (cyclic_group(4), rectangular_band(2, 3)):
        vm = variety_membership(S)
        assert vm.in_W and vm.in_E_1
    assert in_V(cyclic_group(3))


@pytest.mark.parametrize("name", FIXTURE_IDS)
def test_varieties_two_routes(name):
    S = fixture(name)
    assert in_W(S) == in_W_by_square(S)
    vm = variety_membership(S)
    assert satisfies_E_n_identity(S, vm.max_index)
    if vm.max_index > 1:
        assert not satisfies_E_n_identity(S, vm.max_index - 1)


def test_identity_suites():
    assert pinv_identity_suite(fixture("F7_542155")).ok
    assert pinv_identity_suite(cyclic_group(6)).ok
    rng = np.random.default_rng(11)
    for _ in range(20):
        spec = random_rees_spec(rng, max_group=4, max_dim=3, zero_prob=0.3)
        assert pinv_identity_suite(rees_zero(spec)).ok


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_rees_profiles(seed):
    S = rees(random_rees_spec(np.random.default_rng(seed), max_group=4, max_dim=2))
    for a, m in enumerate(monogenic_all(S)):
        t = S.table
        assert m.index == 1
        assert t[t[a, m.pinv], a] == a  # group inverse in a completely simple semigroup
        assert monogenic(S, m.pinv).pinv == m.double_pinv == a
