"""Cohomologically induced unipotent modules X(p1,q1,xi) of U(p,q).

The Levi factor is U(p1,q1) x U(p2,q2) with p = p1 + p2, q = q1 + q2,
p1 >= q2 and q1 >= p2.  Weights carry blocks (p, q).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import ParameterError
from .weights import UFamily, Weight, rho_vectors


@dataclass(frozen=True)
class UpqSpec:
    p1: int
    q1: int
    p2: int
    q2: int
    xi: int

    def __post_init__(self):
        for name in ("p1", "q1", "p2", "q2", "xi"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise ParameterError(f"{name} must be an integer, got {v!r}")
        for name in ("p1", "q1", "p2", "q2"):
            if getattr(self, name) < 0:
                raise ParameterError(f"{name} must be >= 0")
        if self.p + self.q < 1:
            raise ParameterError("p + q must be positive")
        if self.p1 < self.q2:
            raise ParameterError(f"p1 >= q2 fails: p1={self.p1}, q2={self.q2}")
        if self.q1 < self.p2:
            raise ParameterError(f"q1 >= p2 fails: q1={self.q1}, p2={self.p2}")
        if (self.p - self.q) % 2:
            raise ParameterError(f"p = {self.p} and q = {self.q} must have the same parity")
        # 2x the two inequalities, kept exact
        top1, top2 = self.n1 - 1 + 2 * self.xi, self.n2 - 1
        if top1 < top2:
            raise ParameterError(
                f"good range violated: (p1+q1-1)/2 + xi = {Fraction(top1, 2)} "
                f"< (p2+q2-1)/2 = {Fraction(top2, 2)}  (need -(a+b) <= xi <= a+b, "
                f"a+b = {self.shiftA + self.shiftB})"
            )
        if -(self.n2 - 1) < -(self.n1 - 1) + 2 * self.xi:
            raise ParameterError(
                f"good range violated (unipotence): -(p2+q2-1)/2 = {Fraction(-(self.n2 - 1), 2)} "
                f"< -(p1+q1-1)/2 + xi = {Fraction(-(self.n1 - 1) + 2 * self.xi, 2)}  "
                f"(need -(a+b) <= xi <= a+b, a+b = {self.shiftA + self.shiftB})"
            )

    @property
    def p(self) -> int:
        return self.p1 + self.p2

    @property
    def q(self) -> int:
        return self.q1 + self.q2

    @property
    def n1(self) -> int:
        return self.p1 + self.q1

    @property
    def n2(self) -> int:
        return self.p2 + self.q2

    @property
    def shiftA(self) -> Fraction:
        return Fraction(self.p1 - self.q2, 2)

    @property
    def shiftB(self) -> Fraction:
        return Fraction(self.q1 - self.p2, 2)

    @property
    def family(self) -> UFamily:
        return UFamily(self.p, self.q)

    def label(self) -> str:
        return f"U({self.p},{self.q}) X(p1={self.p1},q1={self.q1},p2={self.p2},q2={self.q2},xi={self.xi})"


def validate_u(p1: int, q1: int, p2: int, q2: int, xi: int) -> UpqSpec:
    return UpqSpec(p1, q1, p2, q2, xi)


@dataclass(frozen=True)
class UTauCandidate:
    xLambda: Weight
    tau: Weight
    r: int
    s: int
    t: int
    u: int
    shuffleWitness: tuple[int, ...]

    @property
    def special(self) -> bool:
        # both blocks always carry the full core
        return True


def _strings_doubled(spec: UpqSpec) -> tuple[list[int], list[int]]:
    first = [spec.n1 - 1 + 2 * spec.xi - 2 * i for i in range(spec.n1)]
    second = [spec.n2 - 1 - 2 * i for i in range(spec.n2)]
    return first, second


def infchar_u(spec: UpqSpec) -> Weight:
    first, second = _strings_doubled(spec)
    return Weight(tuple(first + second), (spec.p, spec.q))


def lowest_ktype_case(spec: UpqSpec) -> int:
    """Which of the four lowest-K-type formulas applies (1..4)."""
    a, b, xi = spec.shiftA, spec.shiftB, spec.xi
    if xi >= abs(a - b):
        return 1
    if -a + b <= xi < a - b:
        return 2
    if a - b <= xi < -a + b:
        return 3
    return 4


@lru_cache(maxsize=4096)
def lowest_ktype_u(spec: UpqSpec) -> Weight:
    """The lowest K-type mu_0 (all four cases, blocks (p, q))."""
    p1, q1, p2, q2, xi = spec.p1, spec.q1, spec.p2, spec.q2, spec.xi
    p, q = spec.p, spec.q
    # doubled values of the four constants
    c = 2 * xi + q2 - p2
    d = p1 - q1
    e = 2 * xi + p2 - q2
    f = q1 - p1
    case = lowest_ktype_case(spec)
    if case == 1:
        vals = [c] * p1 + [d] * p2 + [e] * q1 + [f] * q2
    elif case == 2:
        vals = [c] * p + [2 * (p2 - q2) + d] * p2 + [e] * (q1 - p2) + [f] * q2
    elif case == 3:
        vals = [2 * (q2 - p2) + f] * q2 + [c] * (p1 - q2) + [d] * p2 + [e] * q
    else:
        vals = [2 * (q2 - p2) + f] * q2 + [c] * (p - q2) + [2 * (p2 - q2) + d] * p2 + [e] * (q - p2)
    return Weight(tuple(vals), (p, q))


def _nonincreasing_nonneg(xs: list[int]) -> bool:
    return all(x >= 0 for x in xs) and all(x >= y for x, y in zip(xs, xs[1:]))


def ktype_member_U(spec: UpqSpec, highest: Weight) -> bool:
    """Is ``highest`` = mu_0 + (a.., 0.., -b.. | b.., 0.., -a..) with a, b partitions?

    a has q2 parts, b has p2 parts; each a_i appears at the start of the
    first block and (negated) at the end of the second, each b_j at the start
    of the second and (negated) at the end of the first.
    """
    p, q, p2, q2 = spec.p, spec.q, spec.p2, spec.q2
    if len(highest) != p + q or highest.blocks != (p, q):
        return False
    diff = [x - y for x, y in zip(highest.doubled, lowest_ktype_u(spec).doubled)]
    if any(x % 2 for x in diff):
        return False
    diff = [x // 2 for x in diff]
    left, right = diff[:p], diff[p:]
    a = left[:q2]
    b = right[:p2]
    expect_left = a + [0] * (p - q2 - p2) + [-x for x in reversed(b)]
    expect_right = b + [0] * (q - p2 - q2) + [-x for x in reversed(a)]
    return (
        left == expect_left
        and right == expect_right
        and _nonincreasing_nonneg(a)
        and _nonincreasing_nonneg(b)
    )


def _rstu(spec: UpqSpec, left: tuple[int, ...], right: tuple[int, ...]) -> tuple[int, int, int, int]:
    core_top = spec.n2 - 1
    r = sum(1 for x in left if x > core_top)
    s = sum(1 for x in left if x < -core_top)
    t = sum(1 for x in right if x > core_top)
    u = sum(1 for x in right if x < -core_top)
    return r, s, t, u


def rstu_relations_hold(spec: UpqSpec, r: int, s: int, t: int, u: int) -> bool:
    # doubled forms of the four linear relations
    return (
        2 * (r + t) == (spec.n1 - 1) + 2 * spec.xi - (spec.n2 - 1)
        and 2 * (s + u) == -(spec.n2 - 1) + (spec.n1 - 1) - 2 * spec.xi
        and r + s == spec.p1 - spec.q2
        and t + u == spec.q1 - spec.p2
    )


def tau_candidates_u(spec: UpqSpec) -> list[UTauCandidate]:
    """Every way to split Lambda into strictly decreasing blocks of sizes p and q.

    Ordered by decreasing x(Lambda).  Each split is checked against the
    (r, s, t, u) relations; a failure means the shuffle template is not
    exhaustive and raises AssertionError.
    """
    lam = infchar_u(spec)
    values = lam.doubled
    p, q = spec.p, spec.q
    rho_k = rho_vectors(spec.family).rho_k
    seen: dict[tuple[tuple[int, ...], tuple[int, ...]], tuple[int, ...]] = {}
    for chosen in combinations(range(p + q), p):
        left = tuple(sorted((values[i] for i in chosen), reverse=True))
        right = tuple(sorted((values[i] for i in range(p + q) if i not in chosen), reverse=True))
        if len(set(left)) != p or len(set(right)) != q:
            continue
        seen.setdefault((left, right), chosen)
    out = []
    for (left, right) in sorted(seen, reverse=True):
        r, s, t, u = _rstu(spec, left, right)
        assert rstu_relations_hold(spec, r, s, t, u), (spec, left, right)
        x_lambda = Weight(left + right, (p, q))
        out.append(UTauCandidate(x_lambda, x_lambda - rho_k, r, s, t, u, seen[(left, right)]))
    return out


def shuffle_count_u(spec: UpqSpec) -> int:
    """Number of x(Lambda) predicted by the shuffle template alone.

    Sum over (r, s, t, u) solving the relations of C(r+t, r) * C(s+u, s).
    """
    top = (spec.n1 - spec.n2) // 2 + spec.xi
    bottom = (spec.n1 - spec.n2) // 2 - spec.xi
    total = 0
    for r in range(0, min(top, spec.p1 - spec.q2) + 1):
        t, s = top - r, spec.p1 - spec.q2 - r
        u = bottom - s
        if min(t, s, u) < 0 or t + u != spec.q1 - spec.p2:
            continue
        total += comb(r + t, r) * comb(s + u, s)
    return total


def tau_core_tail_u(spec: UpqSpec, cand: UTauCandidate) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Doubled tail of tau in each block: (first r + last s | first t + last u)."""
    left, right = cand.tau.parts()
    return (
        left[: cand.r] + left[len(left) - cand.s:],
        right[: cand.t] + right[len(right) - cand.u:],
    )


def all_u_specs(max_pq: int) -> list[UpqSpec]:
    """All admissible (p1, q1, p2, q2, xi) with 1 <= p + q <= max_pq, canonical order."""
    out = []
    for total in range(1, max_pq + 1):
        for p1 in range(total + 1):
            for q1 in range(total - p1 + 1):
                for p2 in range(total - p1 - q1 + 1):
                    q2 = total - p1 - q1 - p2
                    if p1 < q2 or q1 < p2 or (p1 + q1 + p2 + q2) % 2:
                        continue
                    ab = (p1 + q1 - p2 - q2) // 2
                    for xi in range(-ab, ab + 1):
                        out.append(UpqSpec(p1, q1, p2, q2, xi))
    return out
