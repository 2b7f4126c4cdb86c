"""Multiplicity of tau in Dirac cohomology, computed two ways.

``brute_multiplicity`` counts pairs (sigma, mu) with sigma in W^1 and mu a
K-type of the module such that sigma(rho_g) - rho_k + (lowest weight of mu)
is a rearrangement of tau.  The closed forms evaluate the binomial formulas.
``cross_check`` runs both over every candidate tau of a module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Callable, Iterator, Sequence, Union

from .errors import InsufficientBoundError, ParameterError
from .sp_models import (
    SpTauCandidate,
    SpXPrimeSpec,
    SpXSpec,
    identify_xprime,
    ktype_member_X,
    ktype_member_Xprime,
    mirror_candidate,
    tau_candidates_sp,
    tau_tail,
    xprime_branch_hits,
)
from .tensor import reflect_to_dominant, spin_character
from .u_models import (
    UpqSpec,
    UTauCandidate,
    ktype_member_U,
    lowest_ktype_u,
    tau_candidates_u,
    tau_core_tail_u,
)
from .weights import (
    FamilyKind,
    SpFamily,
    Weight,
    UFamily,
    WeylElem,
    reverse_blocks,
    rho_vectors,
    w1_enumerate,
    weyl_apply,
)

ModelSpec = Union[SpXSpec, SpXPrimeSpec, UpqSpec]
Candidate = Union[SpTauCandidate, UTauCandidate]


def binom(a: int, b: int) -> int:
    """C(a, b), zero outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


# ---------------------------------------------------------------- model dispatch

def candidates_for(model: ModelSpec) -> list:
    if isinstance(model, SpXSpec):
        return tau_candidates_sp(model.n, model.k)
    if isinstance(model, SpXPrimeSpec):
        return tau_candidates_sp(model.n, model.k)
    if isinstance(model, UpqSpec):
        return tau_candidates_u(model)
    raise ParameterError(f"unknown model {model!r}")


def membership(model: ModelSpec) -> Callable[[Weight], bool]:
    if isinstance(model, SpXSpec):
        return lambda mu: ktype_member_X(model, mu)
    if isinstance(model, SpXPrimeSpec):
        return lambda mu: ktype_member_Xprime(model, mu)
    if isinstance(model, UpqSpec):
        return lambda mu: ktype_member_U(model, mu)
    raise ParameterError(f"unknown model {model!r}")


def _resolve_tau(model: ModelSpec, candidate) -> Weight:
    tau = candidate.tau if hasattr(candidate, "tau") else candidate
    if not isinstance(tau, Weight):
        raise ParameterError(f"not a candidate: {candidate!r}")
    if tau not in {c.tau for c in candidates_for(model)}:
        raise ParameterError(
            f"tau = {tau} is not a candidate for {model.label()} "
            "(tau + rho_k is not conjugate to the infinitesimal character)"
        )
    return tau


# ---------------------------------------------------------------- brute force

@dataclass(frozen=True)
class Witness:
    sigma: WeylElem
    muHighest: Weight
    wTau: Weight

    @property
    def sigmaRhoG(self) -> Weight:
        return weyl_apply(self.sigma, rho_vectors(_family_of(self.muHighest)).rho_g)


def _family_of(w: Weight) -> FamilyKind:
    if len(w.blocks) == 1:
        return SpFamily(len(w))
    return UFamily(*w.blocks)


def _block_arrangements(values: Sequence[int], shift: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Distinct arrangements w of ``values`` with w - shift non-decreasing."""
    pool = sorted(values)
    n = len(pool)
    used = [False] * n
    out: list[int] = []

    def rec(i: int, prev: int | None):
        if i == n:
            yield tuple(out)
            return
        last = None
        for j in range(n):
            if used[j] or pool[j] == last:
                continue
            last = pool[j]
            diff = pool[j] - shift[i]
            if prev is not None and diff < prev:
                continue
            used[j] = True
            out.append(pool[j])
            yield from rec(i + 1, diff)
            out.pop()
            used[j] = False

    yield from rec(0, None)


@lru_cache(maxsize=512)
def _prv_pairs(family: FamilyKind, tau: Weight) -> tuple[tuple[int, Weight, Weight], ...]:
    """(sigma index, w tau, highest weight mu) for every model-independent solution.

    Only requires the lowest weight w tau - (sigma rho_g - rho_k) to be
    anti-dominant in each block; the module's K-type test comes later.
    """
    rho = rho_vectors(family)
    found = []
    for idx, sigma in enumerate(w1_enumerate(family)):
        s = (weyl_apply(sigma, rho.rho_g) - rho.rho_k).doubled
        per_block = []
        start = 0
        for size, vals in zip(tau.blocks, tau.parts()):
            per_block.append(list(_block_arrangements(vals, s[start:start + size])))
            start += size
        for combo in _product(per_block):
            w = tau._trusted(tuple(x for chunk in combo for x in chunk))
            low = w._trusted(tuple(a - b for a, b in zip(w.doubled, s)))
            found.append((idx, w, reverse_blocks(low)))
    return tuple(found)


def _product(lists):
    if not lists:
        yield ()
        return
    for head in lists[0]:
        for rest in _product(lists[1:]):
            yield (head,) + rest


def brute_multiplicity(model: ModelSpec, candidate) -> tuple[int, list[Witness]]:
    tau = _resolve_tau(model, candidate)
    family = model.family
    sigmas = w1_enumerate(family)
    member = membership(model)
    witnesses = []
    for idx, w, mu in _prv_pairs(family, tau):
        if member(mu):
            witnesses.append(Witness(sigmas[idx], mu, w))
    return len(witnesses), witnesses


# ---------------------------------------------------------------- closed forms

def closed_form_sp(spec: SpXSpec, candidate: SpTauCandidate) -> int:
    p, q, eps, eta, k, n = spec.p, spec.q, spec.eps, spec.eta, spec.k, spec.n
    if not candidate.special:
        return closed_form_sp(spec.swapped(), mirror_candidate(candidate))
    if q == 0:
        return int(candidate.u % 2 == (eps + 1) % 2)
    if p == 0:
        return int(candidate.v % 2 == eta % 2)
    case_one = (eps + eta) % 2 == n % 2
    if p % 2 == 0:
        u_eps = candidate.u % 2 == eps % 2
        if case_one:
            return binom(k - 1, p // 2) if u_eps else binom(k - 1, (p - 2) // 2)
        return 0 if u_eps else binom(k, p // 2)
    return binom(k - 1, (p - 1) // 2) if case_one else 0


def _xprime_raw(p: int, q: int, eps: int, eta: int, k: int) -> int:
    if p % 2 == 0:
        return {
            (1, 0): binom(k - 1, p // 2),
            (0, 0): binom(k, p // 2),
            (0, 1): binom(k - 1, q // 2),
        }[(eps, eta)]
    return 0 if (eps, eta) == (0, 0) else binom(k - 1, (p - 1) // 2)


def closed_form_xprime(spec: SpXPrimeSpec) -> int:
    """Multiplicity of the trivial K-tilde type in H_D(X'(p,q,eps,eta))."""
    if spec.p == 0 or spec.q == 0:
        spec = identify_xprime(spec)
    return _xprime_raw(spec.p, spec.q, spec.eps, spec.eta, spec.k)


def closed_form_u(spec: UpqSpec) -> int:
    return binom(spec.p2 + spec.q2, spec.p2)


def closed_form(model: ModelSpec, candidate) -> int:
    if isinstance(model, SpXSpec):
        return closed_form_sp(model, candidate)
    if isinstance(model, SpXPrimeSpec):
        return closed_form_xprime(model)
    return closed_form_u(model)


# ---------------------------------------------------------------- reports

@dataclass(frozen=True)
class ReportEntry:
    candidate: Candidate
    brute: int
    closed: int
    witnesses: tuple[Witness, ...]
    notes: tuple[str, ...] = ()

    @property
    def match(self) -> bool:
        return self.brute == self.closed


@dataclass(frozen=True)
class MultiplicityReport:
    model: ModelSpec
    entries: tuple[ReportEntry, ...] = field(default_factory=tuple)

    @property
    def allMatch(self) -> bool:
        return all(e.match for e in self.entries)


def cross_check(model: ModelSpec) -> MultiplicityReport:
    entries = []
    for cand in candidates_for(model):
        count, wits = brute_multiplicity(model, cand)
        notes = []
        if isinstance(model, SpXPrimeSpec):
            doubled = [w.muHighest for w in wits if xprime_branch_hits(model, w.muHighest) > 1]
            if doubled:
                notes.append(f"{len(doubled)} K-type(s) lie in both branches; counted once")
        entries.append(ReportEntry(cand, count, closed_form(model, cand), tuple(wits), tuple(notes)))
    return MultiplicityReport(model, tuple(entries))


# ---------------------------------------------------------------- witness screens

def parity_screen(spec: SpXSpec, witness: Witness) -> bool:
    """First q coords of sigma(rho_g) positive, last p negative, each run alternating in parity."""
    vals = [d // 2 for d in witness.sigmaRhoG.doubled]
    n, p, q = spec.n, spec.p, spec.q
    head, foot = vals[:q], vals[n - p:]

    def alternating(xs):
        return all((a - b) % 2 == 1 for a, b in zip(xs, xs[1:]))

    return (
        all(x > 0 for x in head)
        and all(x < 0 for x in foot)
        and alternating(head)
        and alternating(foot)
    )


def tail_screen(model: ModelSpec, candidate: Candidate, witness: Witness) -> bool:
    """The coordinates of w tau outside the K-type's moving part equal the tail of tau."""
    if isinstance(model, SpXSpec):
        n, p, q = model.n, model.p, model.q
        return witness.wTau.doubled[q:n - p] == tau_tail(candidate)
    if isinstance(model, UpqSpec):
        left, right = witness.wTau.parts()
        t_left, t_right = tau_core_tail_u(model, candidate)
        p, q, p2, q2 = model.p, model.q, model.p2, model.q2
        return left[p2:p - q2] == t_left and right[q2:q - p2] == t_right
    # X': tau = 0, nothing to check beyond w tau = tau
    return witness.wTau == candidate.tau


def distinct_sigmas(witnesses: Sequence[Witness]) -> bool:
    sig = [w.sigma for w in witnesses]
    return len(set(sig)) == len(sig)


# ---------------------------------------------------------------- tensor oracle

def _rank_guard(model: ModelSpec) -> None:
    if isinstance(model, UpqSpec):
        if model.p + model.q > 4:
            raise ParameterError("tensor oracle is limited to p + q <= 4")
    elif model.n > 4:
        raise ParameterError("tensor oracle is limited to n <= 4")


def required_bound(model: ModelSpec, candidate) -> int:
    """Smallest box radius outside which no K-type can reach tau."""
    tau = candidate.tau if hasattr(candidate, "tau") else candidate
    rho = rho_vectors(model.family)
    spin_max = max(
        abs(d)
        for sigma in w1_enumerate(model.family)
        for d in (weyl_apply(sigma, rho.rho_g) - rho.rho_k).doubled
    )
    top = max((abs(d) for d in tau.doubled), default=0) + spin_max
    return -(-top // 2)


def _box_ktypes(model: ModelSpec, bound: int) -> Iterator[Weight]:
    """Every k-dominant weight of the module's lattice coset with |coords| <= bound."""
    family = model.family
    if isinstance(model, UpqSpec):
        parity = [d % 2 for d in lowest_ktype_u(model).doubled]
    else:
        parity = [0] * family.rank
    blocks = family.blocks

    def block_weights(size: int, par: int):
        lo, hi = -2 * bound, 2 * bound
        vals = [v for v in range(hi, lo - 1, -1) if v % 2 == par]

        def rec(prefix, start):
            if len(prefix) == size:
                yield tuple(prefix)
                return
            for i in range(start, len(vals)):
                yield from rec(prefix + [vals[i]], i)

        yield from rec([], 0)

    per_block, start = [], 0
    for size in blocks:
        per_block.append(list(block_weights(size, parity[start] if size else 0)))
        start += size
    for combo in _product(per_block):
        yield Weight(tuple(x for chunk in combo for x in chunk), blocks)


def tensor_oracle_multiplicity(model: ModelSpec, candidate, ktypeBound: int | None = None) -> int:
    """Multiplicity of E_tau in (sum of K-types in a box) tensor Spin.

    Spin enters through its full weight multiset (product over noncompact
    positive roots), not through the W^1 decomposition used by the brute force.
    """
    _rank_guard(model)
    tau = _resolve_tau(model, candidate)
    need = required_bound(model, tau)
    if ktypeBound is None:
        ktypeBound = need
    if ktypeBound < need:
        raise InsufficientBoundError(
            f"ktypeBound = {ktypeBound} is below the required {need} for tau = {tau}"
        )
    member = membership(model)
    spin = spin_character(model.family)
    total = 0
    for mu in _box_ktypes(model, ktypeBound):
        if not member(mu):
            continue
        for chi, m in spin.items():
            res = reflect_to_dominant(mu.with_doubled(a + b for a, b in zip(mu.doubled, chi)))
            if res is not None and res[1] == tau:
                total += res[0] * m
    assert total >= 0
    return total


__all__ = [
    "ModelSpec",
    "Witness",
    "ReportEntry",
    "MultiplicityReport",
    "binom",
    "candidates_for",
    "membership",
    "brute_multiplicity",
    "closed_form_sp",
    "closed_form_xprime",
    "closed_form_u",
    "closed_form",
    "cross_check",
    "parity_screen",
    "tail_screen",
    "distinct_sigmas",
    "required_bound",
    "tensor_oracle_multiplicity",
]
