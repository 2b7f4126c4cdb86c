import pytest

from dirac_unipotent.errors import InsufficientBoundError, ParameterError
from dirac_unipotent.solver import (
    binom,
    brute_multiplicity,
    closed_form_sp,
    closed_form_u,
    closed_form_xprime,
    cross_check,
    distinct_sigmas,
    parity_screen,
    required_bound,
    tail_screen,
    tensor_oracle_multiplicity,
)
from dirac_unipotent.sp_models import (
    SpXPrimeSpec,
    SpXSpec,
    all_x_specs,
    mirror_candidate,
    tau_candidates_sp,
)
from dirac_unipotent.u_models import UpqSpec, tau_candidates_u
from dirac_unipotent.weights import Weight


def _cand(n, k, tau):
    return next(c for c in tau_candidates_sp(n, k) if c.tau == Weight.of(tau))


def test_binom_convention():
    assert binom(3, 1) == 3
    assert binom(2, 3) == 0
    assert binom(2, -1) == 0
    assert binom(0, 0) == 1


def test_brute_single_witness():
    spec = SpXSpec.make(3, 1, 1, 0, 1)
    count, wits = brute_multiplicity(spec, _cand(3, 1, [1, 1, 1]))
    assert count == 1
    (w,) = wits
    assert w.sigmaRhoG.strings() == ["3", "1", "-2"]
    assert w.muHighest.strings() == ["2", "0", "-1"]
    assert w.wTau == Weight.of([1, 1, 1])


def test_brute_zero_by_parity():
    spec = SpXSpec.make(3, 2, 0, 0, 0)
    assert brute_multiplicity(spec, _cand(3, 1, [0, 0, -1])) == (0, [])


def test_brute_rejects_foreign_candidate():
    spec = SpXSpec.make(3, 1, 1, 0, 1)
    with pytest.raises(ParameterError, match="not a candidate"):
        brute_multiplicity(spec, Weight.of([2, 1, 1]))
    with pytest.raises(ParameterError):
        brute_multiplicity(spec, tau_candidates_u(UpqSpec(2, 2, 1, 1, 0))[0])


def test_closed_form_examples():
    spec = SpXSpec.make(4, 2, 2, 0, 0)
    cand = next(c for c in tau_candidates_sp(4, 2) if c.special and c.u == 0)
    assert cand.tau.strings() == ["1/2", "1/2", "1/2", "1/2"]
    assert closed_form_sp(spec, cand) == 1
    assert closed_form_sp(SpXSpec.make(3, 1, 1, 0, 1), _cand(3, 1, [1, 1, 1])) == 1
    assert all(closed_form_sp(SpXSpec.make(3, 1, 1, 0, 0), c) == 0 for c in tau_candidates_sp(3, 1))
    assert closed_form_xprime(SpXPrimeSpec.make(2, 2, 1, 0)) == 1
    assert closed_form_xprime(SpXPrimeSpec.make(2, 2, 0, 0)) == 2
    assert closed_form_xprime(SpXPrimeSpec.make(1, 3, 0, 0)) == 0
    assert closed_form_u(UpqSpec(2, 2, 1, 1, 0)) == 2
    assert closed_form_u(UpqSpec(3, 1, 0, 0, 1)) == 1
    # (3,3,2,1) has p + q = 9, so the same binomial is checked on (3,2,2,1)
    with pytest.raises(ParameterError, match="parity"):
        UpqSpec(3, 3, 2, 1, 0)
    assert closed_form_u(UpqSpec(3, 2, 2, 1, 0)) == 3
    r = cross_check(UpqSpec(3, 2, 2, 1, 0))
    assert r.allMatch and {e.brute for e in r.entries} == {3}


def test_cross_check_reports():
    r = cross_check(SpXSpec.make(3, 1, 1, 0, 1))
    assert len(r.entries) == 4 and r.allMatch
    assert all(e.brute == e.closed == 1 for e in r.entries if e.candidate.special)
    assert all(len(e.witnesses) == e.brute for e in r.entries)
    r = cross_check(SpXSpec.make(3, 1, 1, 0, 0))
    assert r.allMatch and all(e.brute == 0 for e in r.entries)
    r = cross_check(UpqSpec(2, 2, 1, 1, 0))
    assert [(e.brute, e.closed) for e in r.entries] == [(2, 2), (2, 2)]


def test_xprime_union_note():
    r = cross_check(SpXPrimeSpec.make(2, 2, 0, 0))
    (e,) = r.entries
    assert e.candidate.tau == Weight.of([0, 0, 0])
    assert e.brute == e.closed == 2
    assert e.notes == ()


@pytest.mark.parametrize("spec", all_x_specs(5), ids=lambda s: s.label())
def test_witness_screens_n5(spec):
    for e in cross_check(spec).entries:
        assert distinct_sigmas(e.witnesses)
        for w in e.witnesses:
            assert tail_screen(spec, e.candidate, w)
            if spec.p and spec.q:
                assert parity_screen(spec, w)


def test_symmetry_n4():
    for spec in all_x_specs(4):
        for c in tau_candidates_sp(4, spec.k):
            assert brute_multiplicity(spec, c)[0] == brute_multiplicity(spec.swapped(), mirror_candidate(c))[0]


def test_oracle_examples():
    c = _cand(3, 1, [1, 1, 1])
    assert tensor_oracle_multiplicity(SpXSpec.make(3, 1, 1, 0, 1), c) == 1
    assert tensor_oracle_multiplicity(SpXSpec.make(3, 2, 0, 0, 0), c) == 1
    u = UpqSpec(1, 1, 0, 0, 0)
    for cand in tau_candidates_u(u):
        assert tensor_oracle_multiplicity(u, cand) == brute_multiplicity(u, cand)[0]


def test_oracle_bound_guard():
    spec = SpXSpec.make(3, 1, 1, 0, 1)
    c = _cand(3, 1, [1, 1, 1])
    need = required_bound(spec, c)
    assert need == 3  # max|tau| = 1, max spin highest coordinate = 2
    with pytest.raises(InsufficientBoundError):
        tensor_oracle_multiplicity(spec, c, ktypeBound=need - 1)
    assert tensor_oracle_multiplicity(spec, c, ktypeBound=need + 1) == 1


def test_oracle_rank_guard():
    spec = SpXSpec.make(5, 1, 1, 0, 0)
    with pytest.raises(ParameterError, match="n <= 4"):
        tensor_oracle_multiplicity(spec, tau_candidates_sp(5, 1)[0])


def test_oracle_n4():
    for spec in all_x_specs(4)[:6]:
        for c in tau_candidates_sp(4, spec.k):
            assert tensor_oracle_multiplicity(spec, c) == brute_multiplicity(spec, c)[0]
