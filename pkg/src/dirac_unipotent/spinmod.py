"""The spin module as a sum of K-tilde types, one per element of W^1."""

from __future__ import annotations

from dataclasses import dataclass

from .weights import (
    FamilyKind,
    SpFamily,
    Weight,
    WeylElem,
    rho_vectors,
    w1_enumerate,
    weyl_apply,
    weyl_dim,
)


@dataclass(frozen=True)
class SpinDecomposition:
    family: FamilyKind
    summands: tuple[tuple[WeylElem, Weight], ...]

    def highest_weights(self) -> list[Weight]:
        return [h for _, h in self.summands]


def spin_weights(family: FamilyKind) -> SpinDecomposition:
    """Highest weights sigma(rho_g) - rho_k of the summands of Spin."""
    rho = rho_vectors(family)
    summands = tuple(
        (sigma, weyl_apply(sigma, rho.rho_g) - rho.rho_k) for sigma in w1_enumerate(family)
    )
    return SpinDecomposition(family, summands)


def spin_dimension(family: FamilyKind) -> int:
    """2^(dim s / 2): dim s = n(n+1) for sp(2n), 2pq for u(p,q)."""
    if isinstance(family, SpFamily):
        return 2 ** (family.n * (family.n + 1) // 2)
    return 2 ** (family.p * family.q)


def spin_dimension_check(family: FamilyKind) -> tuple[int, int, bool]:
    total = sum(weyl_dim(h) for h in spin_weights(family).highest_weights())
    expected = spin_dimension(family)
    return total, expected, total == expected
