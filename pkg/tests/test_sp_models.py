from itertools import product

import pytest
from hypothesis import given, strategies as st

from dirac_unipotent.errors import ParameterError
from dirac_unipotent.sp_models import (
    SignedTableau,
    SpXPrimeSpec,
    SpXSpec,
    all_x_specs,
    all_xprime_specs,
    identify_xprime,
    infchar_sp,
    ktype_member_X,
    ktype_member_Xprime,
    lowest_ktypes_X,
    mirror_candidate,
    tableau_sp,
    tau_candidates_sp,
    tau_tail,
    xprime_branch_hits,
)
from dirac_unipotent.weights import Weight, norm2x4, rho_vectors, SpFamily


def test_infchar():
    assert infchar_sp(3, 1).strings() == ["2", "1", "0"]
    assert infchar_sp(4, 2).strings() == ["2", "1", "0", "-1"]
    with pytest.raises(ParameterError):
        infchar_sp(3, 3)


def test_candidates_n3_k1():
    cands = tau_candidates_sp(3, 1)
    assert [c.xLambda.strings() for c in cands] == [
        ["2", "1", "0"], ["2", "0", "-1"], ["1", "0", "-2"], ["0", "-1", "-2"],
    ]
    assert [c.tau.strings() for c in cands] == [
        ["1", "1", "1"], ["1", "0", "0"], ["0", "0", "-1"], ["-1", "-1", "-1"],
    ]
    assert [(c.u, c.v, c.special) for c in cands] == [
        (1, 0, True), (1, 0, False), (0, 1, True), (0, 1, False),
    ]
    assert tau_tail(cands[0]) == (2,)


@pytest.mark.parametrize("n", range(1, 8))
def test_candidate_count_and_norm(n):
    rho_k = rho_vectors(SpFamily(n)).rho_k
    for k in range(1, (n + 1) // 2 + 1):
        lam = infchar_sp(n, k)
        cands = tau_candidates_sp(n, k)
        assert len(cands) == 2 ** (n - 2 * k + 1)
        for c in cands:
            assert norm2x4(c.tau + rho_k) == norm2x4(lam)
            if 2 * k > n:
                assert c.tau == Weight((0,) * n, (n,))
                continue
            m = mirror_candidate(c)
            assert m.special != c.special and (m.u, m.v) == (c.v, c.u)
            assert mirror_candidate(m) == c
            assert m.tau.doubled == tuple(sorted((-d for d in c.tau.doubled), reverse=True))


def test_x_validation():
    with pytest.raises(ParameterError, match="even"):
        SpXSpec.make(3, 1, 2, 0, 0)
    with pytest.raises(ParameterError, match="exceeds"):
        SpXSpec.make(3, 2, 2, 0, 0)
    with pytest.raises(ParameterError, match="eps"):
        SpXSpec.make(3, 0, 2, 1, 0)
    with pytest.raises(ParameterError):
        SpXSpec.make(3, 1, 1, 2, 0)
    with pytest.raises(ParameterError):
        SpXSpec(3, 1, 1, 1, True, 0)


def test_x_ktypes():
    spec = SpXSpec.make(3, 1, 1, 0, 1)
    assert lowest_ktypes_X(spec).strings() == ["0", "0", "-1"]
    assert ktype_member_X(spec, Weight.of([2, 0, -1]))
    assert ktype_member_X(spec, Weight.of([0, 0, -3]))
    assert not ktype_member_X(spec, Weight.of([1, 0, -1]))
    assert not ktype_member_X(spec, Weight.of([0, 1, -1]))
    # (p-q)/2 shift is half-integral when p - q is odd
    spec = SpXSpec.make(4, 2, 0, 0, 0)
    assert lowest_ktypes_X(spec).strings() == ["1", "1", "1", "1"]
    assert ktype_member_X(spec, Weight.of([3, 1, 1, 1]))


@given(
    st.sampled_from(all_x_specs(5)),
    st.lists(st.integers(0, 3), min_size=5, max_size=5),
    st.lists(st.integers(0, 3), min_size=5, max_size=5),
)
def test_x_membership_roundtrip(spec, a, b):
    alpha = sorted((spec.eps + 2 * x for x in a[: spec.p]), reverse=True)
    beta = sorted((spec.eta + 2 * x for x in b[: spec.q]), reverse=True)
    vals = alpha + [0] * (spec.n - spec.p - spec.q) + [-x for x in reversed(beta)]
    mu = Weight(tuple(2 * v + spec.p - spec.q for v in vals), (spec.n,))
    assert ktype_member_X(spec, mu)
    if spec.p:
        bumped = list(mu.doubled)
        bumped[0] += 2  # flips the parity of alpha_1
        assert not ktype_member_X(spec, Weight(tuple(bumped), (spec.n,)))


def test_xprime_validation():
    with pytest.raises(ParameterError, match="odd"):
        SpXPrimeSpec(4, 2, 2, 2, 0, 0)
    with pytest.raises(ParameterError):
        SpXPrimeSpec.make(2, 2, 1, 1)
    with pytest.raises(ParameterError):
        SpXPrimeSpec.make(4, 0, 1, 0)


def test_identify_xprime():
    assert identify_xprime(SpXPrimeSpec.make(4, 0, 0, 0)) == SpXPrimeSpec.make(3, 1, 1, 0)
    assert identify_xprime(SpXPrimeSpec.make(0, 4, 0, 0)) == SpXPrimeSpec.make(1, 3, 0, 1)
    assert identify_xprime(SpXPrimeSpec.make(3, 1, 0, 1)) == SpXPrimeSpec.make(2, 2, 1, 0)
    assert identify_xprime(SpXPrimeSpec.make(1, 3, 0, 1)) == SpXPrimeSpec.make(1, 3, 0, 1)


@pytest.mark.parametrize("n", [1, 3, 5])
def test_xprime_identified_modules_share_ktypes(n):
    # compares the raw tables (no canonicalization) on a box of weights
    for spec in all_xprime_specs(n):
        canon = identify_xprime(spec)
        for vals in product(range(-3, 4), repeat=n):
            if list(vals) != sorted(vals, reverse=True):
                continue
            mu = Weight(tuple(2 * v for v in vals), (n,))
            assert ktype_member_Xprime(spec, mu, canonicalize=False) == ktype_member_Xprime(
                canon, mu, canonicalize=False
            ), (spec, mu)


def test_xprime_union_branches():
    spec = SpXPrimeSpec.make(2, 2, 0, 0)
    assert ktype_member_Xprime(spec, Weight.of([2, 2, 0]))
    assert ktype_member_Xprime(spec, Weight.of([0, -2, -2]))
    assert xprime_branch_hits(spec, Weight.of([0, 0, 0])) == 2
    assert xprime_branch_hits(spec, Weight.of([2, 0, -2])) == 2
    assert xprime_branch_hits(spec, Weight.of([2, 2, 0])) == 1
    assert not ktype_member_Xprime(spec, Weight.of([1, 0, -1]))


def test_xprime_zero_cases():
    spec = SpXPrimeSpec.make(4, 0, 0, 0)
    assert ktype_member_Xprime(spec, Weight.of([2, 2, 2]))
    assert ktype_member_Xprime(spec, Weight.of([4, 2, 2]))
    assert not ktype_member_Xprime(spec, Weight.of([3, 2, 2]))


def test_tableaux():
    assert tableau_sp(SpXSpec.make(4, 2, 2, 0, 0)) == (SignedTableau(2, 2, 4),)
    assert SignedTableau(2, 2, 4).partition == (2, 2, 2, 2)
    assert SignedTableau(1, 0, 3).partition == (2, 1, 1, 1, 1)
    assert tableau_sp(SpXPrimeSpec.make(2, 2, 0, 0)) == (SignedTableau(2, 1, 3), SignedTableau(1, 2, 3))
    assert tableau_sp(SpXPrimeSpec.make(2, 2, 1, 0)) == (SignedTableau(2, 1, 3),)
    # X'(3,1,0,1) = X'(2,2,1,0)
    assert tableau_sp(SpXPrimeSpec.make(3, 1, 0, 1)) == tableau_sp(SpXPrimeSpec.make(2, 2, 1, 0))


def test_enumerators():
    assert len(all_x_specs(1)) == 0
    # p = 2, 1, 0 contribute 2 + 4 + 2
    assert len(all_x_specs(2)) == 8
    assert len(all_xprime_specs(2)) == 0
    assert all(s.p + s.q == 4 for s in all_xprime_specs(3))
