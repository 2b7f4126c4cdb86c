"""Theta-lifted unipotent modules of Sp(2n,R): X(p,q,eps,eta) and X'(p,q,eps,eta).

Both families have integral infinitesimal character

    Lambda_k = (n-k, n-k-1, ..., 1, 0, -1, ..., -k+1),

whose last 2k coordinates form the *core* and whose first n-2k form the
*tail*.  K-types are decided by inverting the explicit lattice
descriptions, never by search.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import ParameterError
from .weights import SpFamily, Weight, rho_vectors

_XPRIME_SIGNS = ((0, 0), (0, 1), (1, 0))


def _check_int(name: str, value, lo: int = 0) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < lo:
        raise ParameterError(f"{name} must be an integer >= {lo}, got {value!r}")


@dataclass(frozen=True)
class SpXSpec:
    """X(p,q,eps,eta): theta lift of a character of O(p,q), p + q = 2k <= n.

    eps/eta are the parities of the alpha/beta strings of the K-types
    (the relabelled convention), so no twist by k is applied anywhere.
    """

    n: int
    k: int
    p: int
    q: int
    eps: int
    eta: int

    def __post_init__(self):
        for name in ("n", "k", "p", "q"):
            _check_int(name, getattr(self, name))
        if any(isinstance(x, bool) or x not in (0, 1) for x in (self.eps, self.eta)):
            raise ParameterError(f"eps, eta must be 0 or 1, got {self.eps!r}, {self.eta!r}")
        if self.k < 1:
            raise ParameterError(f"k must be >= 1, got {self.k}")
        if self.p + self.q != 2 * self.k:
            raise ParameterError(f"p + q = {self.p + self.q} must equal 2k = {2 * self.k}")
        if 2 * self.k > self.n:
            raise ParameterError(f"2k = {2 * self.k} exceeds n = {self.n}")
        if self.p == 0 and self.eps != 0:
            raise ParameterError("p = 0 requires eps = 0")
        if self.q == 0 and self.eta != 0:
            raise ParameterError("q = 0 requires eta = 0")

    @classmethod
    def make(cls, n: int, p: int, q: int, eps: int, eta: int) -> "SpXSpec":
        if (p + q) % 2:
            raise ParameterError(f"p + q = {p + q} must be even")
        return cls(n, (p + q) // 2, p, q, eps, eta)

    @property
    def family(self) -> SpFamily:
        return SpFamily(self.n)

    def swapped(self) -> "SpXSpec":
        """X(q,p,eta,eps), the image under the automorphism acting by -w0."""
        return SpXSpec(self.n, self.k, self.q, self.p, self.eta, self.eps)

    def label(self) -> str:
        return f"X({self.p},{self.q},{self.eps},{self.eta}) n={self.n}"


@dataclass(frozen=True)
class SpXPrimeSpec:
    """X'(p,q,eps,eta) for odd n with p + q = 2k = n + 1."""

    n: int
    k: int
    p: int
    q: int
    eps: int
    eta: int

    def __post_init__(self):
        for name in ("n", "k", "p", "q"):
            _check_int(name, getattr(self, name))
        if self.n % 2 != 1:
            raise ParameterError(f"X' modules need odd n, got {self.n}")
        if self.p + self.q != 2 * self.k or 2 * self.k != self.n + 1:
            raise ParameterError(
                f"X' needs p + q = 2k = n + 1; got p={self.p}, q={self.q}, k={self.k}, n={self.n}"
            )
        if isinstance(self.eps, bool) or isinstance(self.eta, bool) or (
            (self.eps, self.eta) not in _XPRIME_SIGNS
        ):
            raise ParameterError(f"(eps, eta) = {(self.eps, self.eta)} not in {_XPRIME_SIGNS}")
        if (self.p == 0 or self.q == 0) and (self.eps, self.eta) != (0, 0):
            raise ParameterError("p = 0 or q = 0 requires (eps, eta) = (0, 0)")

    @classmethod
    def make(cls, p: int, q: int, eps: int, eta: int) -> "SpXPrimeSpec":
        return cls(p + q - 1, (p + q) // 2, p, q, eps, eta)

    @property
    def family(self) -> SpFamily:
        return SpFamily(self.n)

    def label(self) -> str:
        return f"X'({self.p},{self.q},{self.eps},{self.eta}) n={self.n}"


@dataclass(frozen=True)
class SpTauCandidate:
    """A k-dominant regular conjugate x(Lambda) and tau = x(Lambda) - rho_k.

    ``u``/``v`` count the tail entries of x(Lambda) above k / below -k.
    ``special`` means the whole core k, k-1, ..., -k+1 survives in x(Lambda).
    """

    xLambda: Weight
    tau: Weight
    u: int
    v: int
    special: bool
    signPattern: tuple[int, ...]


def infchar_sp(n: int, k: int) -> Weight:
    _check_int("n", n, 1)
    _check_int("k", k, 1)
    if k > (n + 1) // 2:
        raise ParameterError(f"k = {k} out of range 1..{(n + 1) // 2} for n = {n}")
    return Weight(tuple(2 * (n - k - i) for i in range(n)), (n,))


def _candidate(n: int, k: int, x_lambda: Weight) -> SpTauCandidate:
    vals = [d // 2 for d in x_lambda.doubled]
    present = set(vals)
    base = [n - k - i for i in range(n)]
    return SpTauCandidate(
        xLambda=x_lambda,
        tau=x_lambda - rho_vectors(SpFamily(n)).rho_k,
        u=sum(1 for x in vals if x > k),
        v=sum(1 for x in vals if x < -k),
        special=k in present,
        signPattern=tuple(1 if x in present else -1 for x in base),
    )


def tau_candidates_sp(n: int, k: int) -> list[SpTauCandidate]:
    """All k-dominant regular W-conjugates of Lambda_k (2^(n-2k+1) of them).

    Ordered by decreasing x(Lambda), lexicographically.
    """
    lam = infchar_sp(n, k)
    base = [d // 2 for d in lam.doubled]
    free = [i for i, x in enumerate(base) if x != 0]
    found = set()
    for flips in product((1, -1), repeat=len(free)):
        signs = [1] * n
        for i, s in zip(free, flips):
            signs[i] = s
        image = tuple(sorted((s * x for s, x in zip(signs, base)), reverse=True))
        if len(set(image)) == n:
            found.add(image)
    return [
        _candidate(n, k, Weight(tuple(2 * x for x in image), (n,)))
        for image in sorted(found, reverse=True)
    ]


def mirror_candidate(cand: SpTauCandidate) -> SpTauCandidate:
    """The candidate for -w0(tau): x(Lambda) -> sort(-x(Lambda))."""
    n = len(cand.xLambda)
    image = tuple(sorted((-d for d in cand.xLambda.doubled), reverse=True))
    x_lambda = Weight(image, (n,))
    # 2k = n - (u + v)
    return _candidate(n, (n - cand.u - cand.v) // 2, x_lambda)


def tau_tail(cand: SpTauCandidate) -> tuple[int, ...]:
    """Doubled tail coordinates of tau: the first u and the last v entries."""
    d = cand.tau.doubled
    return d[: cand.u] + d[len(d) - cand.v:]


def _read_signed_string(values: list[int], parity: int) -> bool:
    # non-negative, non-increasing, all of the given parity
    return all(x >= 0 and x % 2 == parity for x in values) and all(
        a >= b for a, b in zip(values, values[1:])
    )


def ktype_member_X(spec: SpXSpec, highest: Weight) -> bool:
    """Is ``highest`` a K-type of X(p,q,eps,eta)?

    K-types are ((p-q)/2, ...) + (alpha_1..alpha_p, 0..0, -beta_q..-beta_1),
    alpha_i = eps mod 2 and beta_j = eta mod 2, both strings non-increasing
    and non-negative.
    """
    n, p, q = spec.n, spec.p, spec.q
    if len(highest) != n or len(highest.blocks) != 1:
        return False
    shift2 = p - q
    d = [x - shift2 for x in highest.doubled]
    if any(x % 2 for x in d):
        return False
    d = [x // 2 for x in d]
    alpha = d[:p]
    middle = d[p:n - q]
    beta = [-x for x in reversed(d[n - q:])]
    return (
        all(x == 0 for x in middle)
        and _read_signed_string(alpha, spec.eps)
        and _read_signed_string(beta, spec.eta)
    )


def identify_xprime(spec: SpXPrimeSpec) -> SpXPrimeSpec:
    """Canonical representative under the isomorphisms

    X'(p+1,q-1,0,1) = X'(p,q,1,0), X'(2k,0,0,0) = X'(2k-1,1,1,0),
    X'(0,2k,0,0) = X'(1,2k-1,0,1).

    X'(1,2k-1,0,1) has no (1,0) partner and stays as it is.
    """
    n, k, p, q = spec.n, spec.k, spec.p, spec.q
    if q == 0:
        return SpXPrimeSpec(n, k, p - 1, 1, 1, 0)
    if p == 0:
        return SpXPrimeSpec(n, k, 1, q - 1, 0, 1)
    if (spec.eps, spec.eta) == (0, 1) and p >= 2:
        return SpXPrimeSpec(n, k, p - 1, q + 1, 1, 0)
    return spec


def _xprime_branches(spec: SpXPrimeSpec) -> list[tuple[list[int], int, int]]:
    """(lowest K-type, #a, #b) for each branch, read straight off the table.

    K-types of a branch are lowest + (2a_1..2a_A, -2b_B..-2b_1) with
    non-increasing non-negative a and b; A + B = n.
    """
    n, p, q = spec.n, spec.p, spec.q
    c = (p - q) // 2
    if q == 0:
        return [([spec.k] * n, n, 0)]
    if p == 0:
        return [([-spec.k] * n, 0, n)]
    sign = (spec.eps, spec.eta)
    if sign == (1, 0):
        return [([c + 1] * p + [c] * (q - 1), p, q - 1)]
    if sign == (0, 1):
        return [([c] * (p - 1) + [c - 1] * q, p - 1, q)]
    return [([c] * n, p, q - 1), ([c] * n, p - 1, q)]


def _in_branch(values: list[int], lowest: list[int], n_a: int, n_b: int) -> bool:
    d = [x - y for x, y in zip(values, lowest)]
    if any(x % 2 for x in d):
        return False
    a = [x // 2 for x in d[:n_a]]
    b = [-x // 2 for x in reversed(d[n_a:])]
    return len(b) == n_b and _partition_like(a) and _partition_like(b)


def _partition_like(xs: list[int]) -> bool:
    return all(x >= 0 for x in xs) and all(x >= y for x, y in zip(xs, xs[1:]))


def ktype_member_Xprime(spec: SpXPrimeSpec, highest: Weight, canonicalize: bool = True) -> bool:
    """Is ``highest`` a K-type of X'(p,q,eps,eta)?

    For (eps, eta) = (0, 0) the two branches of the table are joined as a set.
    """
    if canonicalize:
        spec = identify_xprime(spec)
    if len(highest) != spec.n or len(highest.blocks) != 1:
        return False
    if any(d % 2 for d in highest.doubled):
        return False
    values = [d // 2 for d in highest.doubled]
    return any(_in_branch(values, low, na, nb) for low, na, nb in _xprime_branches(spec))


def xprime_branch_hits(spec: SpXPrimeSpec, highest: Weight) -> int:
    """How many of the table's branches contain ``highest`` (0, 1 or 2)."""
    spec = identify_xprime(spec)
    if len(highest) != spec.n or any(d % 2 for d in highest.doubled):
        return 0
    values = [d // 2 for d in highest.doubled]
    return sum(_in_branch(values, low, na, nb) for low, na, nb in _xprime_branches(spec))


def lowest_ktypes_X(spec: SpXSpec) -> Weight:
    """The K-type with every alpha_i = eps and every beta_j = eta."""
    n, p, q = spec.n, spec.p, spec.q
    vals = [spec.eps] * p + [0] * (n - p - q) + [-spec.eta] * q
    return Weight(tuple(2 * v + (p - q) for v in vals), (n,))


@dataclass(frozen=True)
class SignedTableau:
    """Signed tableau with rows of length 2: ``plus`` rows ending in +, ``minus`` in -."""

    plus: int
    minus: int
    n: int

    @property
    def partition(self) -> tuple[int, ...]:
        twos = self.plus + self.minus
        return (2,) * twos + (1,) * (2 * self.n - 2 * twos)


def tableau_sp(spec: SpXSpec | SpXPrimeSpec) -> tuple[SignedTableau, ...]:
    """Associated-cycle label(s); metadata only."""
    if isinstance(spec, SpXSpec):
        return (SignedTableau(spec.p, spec.q, spec.n),)
    canon = identify_xprime(spec)
    p, q = canon.p, canon.q
    if (canon.eps, canon.eta) == (0, 0):
        return (SignedTableau(p, q - 1, canon.n), SignedTableau(p - 1, q, canon.n))
    if (canon.eps, canon.eta) == (0, 1):
        # X'(p,q,0,1) = X'(p-1,q+1,1,0)
        return (SignedTableau(p - 1, q, canon.n),)
    return (SignedTableau(p, q - 1, canon.n),)


def all_x_specs(n: int) -> list[SpXSpec]:
    """Every admissible X(p,q,eps,eta) of Sp(2n,R), in canonical order."""
    out = []
    for k in range(1, n // 2 + 1):
        for p in range(2 * k, -1, -1):
            q = 2 * k - p
            for eps, eta in product((0, 1), repeat=2):
                if (p == 0 and eps) or (q == 0 and eta):
                    continue
                out.append(SpXSpec(n, k, p, q, eps, eta))
    return out


def all_xprime_specs(n: int) -> list[SpXPrimeSpec]:
    if n % 2 == 0:
        return []
    k = (n + 1) // 2
    out = []
    for p in range(2 * k, -1, -1):
        q = 2 * k - p
        for eps, eta in _XPRIME_SIGNS:
            if (p == 0 or q == 0) and (eps, eta) != (0, 0):
                continue
            out.append(SpXPrimeSpec(n, k, p, q, eps, eta))
    return out

