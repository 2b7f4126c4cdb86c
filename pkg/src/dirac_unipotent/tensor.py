"""Tensor products of K-types for K = U(b_1) x ... x U(b_m).

Products are decomposed with the signed weight-shift rule: for every
weight chi of E_mu (with multiplicity), lam + chi + rho_k is moved into the
dominant chamber; singular shifts drop out, the others contribute the sign
of the sorting permutation.  Weight multiplicities come from
Gelfand-Tsetlin patterns.  Everything works on doubled coordinates.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product

from .errors import ParameterError
from .weights import FamilyKind, SpFamily, Weight, is_k_dominant_regular


def _sort_sign(values: list[int]) -> tuple[int, tuple[int, ...]] | None:
    """(sign, decreasing sort) of distinct values, or None if two coincide."""
    if len(set(values)) != len(values):
        return None
    order = sorted(range(len(values)), key=lambda i: -values[i])
    # parity of the permutation via cycle decomposition
    sign, seen = 1, [False] * len(order)
    for i in range(len(order)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign, tuple(values[i] for i in order)


def _rho_k_doubled(blocks: tuple[int, ...]) -> list[int]:
    out = []
    for b in blocks:
        out.extend(b - 1 - 2 * i for i in range(b))
    return out


def reflect_to_dominant(nu: Weight) -> tuple[int, Weight] | None:
    """Dot-action straightening of an arbitrary weight.

    Returns (sign, lam) with sign * E_lam the virtual K-type of e^nu, or None
    when nu + rho_k is singular.
    """
    rho = _rho_k_doubled(nu.blocks)
    shifted = [a + b for a, b in zip(nu.doubled, rho)]
    sign, out, start = 1, [], 0
    for b in nu.blocks:
        res = _sort_sign(shifted[start:start + b])
        if res is None:
            return None
        s, sorted_part = res
        sign *= s
        out.extend(sorted_part)
        start += b
    return sign, nu.with_doubled(x - r for x, r in zip(out, rho))


@lru_cache(maxsize=None)
def _gt_weights_block(highest: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    # Works on integer rows; the caller removes a common half-integer shift.
    n = len(highest)
    if n == 0:
        return (((), 1),)
    counts: Counter = Counter()

    def below(row):
        ranges = [range(row[i + 1], row[i] + 1) for i in range(len(row) - 1)]
        return product(*ranges)

    def rec(row, sums):
        if len(row) == 1:
            # sums[i] is the sum of the row of length i+1
            weight = tuple(sums[i] - (sums[i - 1] if i else 0) for i in range(n))
            counts[weight] += 1
            return
        for nxt in below(row):
            rec(nxt, [sum(nxt)] + sums)

    rec(tuple(highest), [sum(highest)])
    return tuple(sorted(counts.items(), reverse=True))


def weight_multiplicities(highest: Weight) -> Counter:
    """Weights (as doubled tuples) of the irreducible with this highest weight."""
    if not is_k_dominant_regular(highest)[0]:
        raise ParameterError(f"{highest} is not k-dominant")
    per_block = []
    for part in highest.parts():
        shift = part[0] % 2 if part else 0
        ints = tuple((d - shift) // 2 for d in part)
        per_block.append([
            (tuple(2 * x + shift for x in wt), m) for wt, m in _gt_weights_block(ints)
        ])
    out: Counter = Counter()
    for combo in product(*per_block):
        wt = tuple(x for chunk, _ in combo for x in chunk)
        m = 1
        for _, mm in combo:
            m *= mm
        out[wt] += m
    return out


def decompose_with_character(lam: Weight, character: Counter) -> Counter:
    """E_lam tensor (a K-module given by its weight multiplicities)."""
    out: Counter = Counter()
    for chi, m in character.items():
        res = reflect_to_dominant(lam.with_doubled(a + b for a, b in zip(lam.doubled, chi)))
        if res is not None:
            sign, dom = res
            out[dom] += sign * m
    return Counter({k: v for k, v in out.items() if v})


def tensor_multiplicity(lam: Weight, mu: Weight, target: Weight) -> int:
    """Multiplicity of E_target in E_lam tensor E_mu."""
    return decompose_with_character(lam, weight_multiplicities(mu))[target]


def spin_character(family: FamilyKind) -> Counter:
    """Weights of Spin: all (1/2) sum(+-beta) over noncompact positive roots beta."""
    n = family.rank
    roots = []
    if isinstance(family, SpFamily):
        for i in range(n):
            for j in range(i, n):
                beta = [0] * n
                beta[i] += 1
                beta[j] += 1
                roots.append(beta)
    else:
        p = family.p
        for i in range(p):
            for j in range(p, n):
                beta = [0] * n
                beta[i], beta[j] = 1, -1
                roots.append(beta)
    # half a root in doubled coordinates is the root itself
    weights: Counter = Counter({(0,) * n: 1})
    for beta in roots:
        nxt: Counter = Counter()
        for wt, m in weights.items():
            nxt[tuple(a + b for a, b in zip(wt, beta))] += m
            nxt[tuple(a - b for a, b in zip(wt, beta))] += m
        weights = nxt
    return weights
