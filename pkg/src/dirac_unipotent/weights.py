"""Half-integer weights, Weyl group elements and the rho-constants.

Every weight is stored as a tuple of *doubled* integers so that the
half-integral coordinates of rho_k and of the U(p,q) infinitesimal
characters are handled exactly.  A weight also carries its block structure:
one block for Sp(2n,R) (K = U(n)) and two blocks (p, q) for U(p,q)
(K = U(p) x U(q)).  Dominance, lowest weights, orbits and dimensions are
all taken blockwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import Iterable, Iterator, Sequence, Union

from .errors import ParameterError

Coord = Union[int, Fraction, str]


def _doubled(value: Coord) -> int:
    x = Fraction(value)
    d = 2 * x
    if d.denominator != 1:
        raise ParameterError(f"coordinate {value!r} is not a half-integer")
    return int(d)


def format_coord(doubled: int) -> str:
    """Render a doubled coordinate exactly: ``3`` -> ``"3/2"``, ``4`` -> ``"2"``."""
    if doubled % 2 == 0:
        return str(doubled // 2)
    return f"{doubled}/2"


@dataclass(frozen=True)
class Weight:
    """A weight vector with exact half-integer coordinates.

    ``doubled[i]`` is twice the i-th coordinate.  ``blocks`` lists the block
    lengths; within one block all coordinates are integral or all are
    half-integral.  A block of length zero is allowed (the compact
    U(p,0) case).
    """

    doubled: tuple[int, ...]
    blocks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "doubled", tuple(int(d) for d in self.doubled))
        object.__setattr__(self, "blocks", tuple(int(b) for b in self.blocks))
        if not self.blocks:
            raise ParameterError("a weight needs at least one block")
        if any(b < 0 for b in self.blocks):
            raise ParameterError(f"negative block length in {self.blocks}")
        if sum(self.blocks) != len(self.doubled):
            raise ParameterError(
                f"blocks {self.blocks} do not cover {len(self.doubled)} coordinates"
            )
        for part in self.parts():
            if len({d % 2 for d in part}) > 1:
                raise ParameterError(
                    "mixed integral and half-integral coordinates in one block: "
                    + str(self)
                )

    @classmethod
    def of(cls, values: Iterable[Coord], blocks: Sequence[int] | None = None) -> "Weight":
        doubled = tuple(_doubled(v) for v in values)
        if blocks is None:
            blocks = (len(doubled),)
        return cls(doubled, tuple(blocks))

    @classmethod
    def from_parts(cls, parts: Sequence[Sequence[Coord]]) -> "Weight":
        flat = [v for part in parts for v in part]
        return cls.of(flat, [len(part) for part in parts])

    def __len__(self) -> int:
        return len(self.doubled)

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(d, 2) for d in self.doubled)

    def parts(self) -> tuple[tuple[int, ...], ...]:
        """Doubled coordinates split into blocks."""
        out, start = [], 0
        for b in self.blocks:
            out.append(self.doubled[start:start + b])
            start += b
        return tuple(out)

    def with_doubled(self, doubled: Iterable[int]) -> "Weight":
        return Weight(tuple(doubled), self.blocks)

    def _trusted(self, doubled: tuple[int, ...]) -> "Weight":
        # skips validation; only for results that keep each block's parity
        w = object.__new__(Weight)
        object.__setattr__(w, "doubled", doubled)
        object.__setattr__(w, "blocks", self.blocks)
        return w

    def _check_same_shape(self, other: "Weight") -> None:
        if len(self) != len(other):
            raise ParameterError(f"length mismatch: {self} vs {other}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check_same_shape(other)
        if self.blocks != other.blocks:
            return self.with_doubled(a + b for a, b in zip(self.doubled, other.doubled))
        return self._trusted(tuple(a + b for a, b in zip(self.doubled, other.doubled)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check_same_shape(other)
        if self.blocks != other.blocks:
            return self.with_doubled(a - b for a, b in zip(self.doubled, other.doubled))
        return self._trusted(tuple(a - b for a, b in zip(self.doubled, other.doubled)))

    def __neg__(self) -> "Weight":
        return self._trusted(tuple(-d for d in self.doubled))

    def strings(self) -> list[str]:
        return [format_coord(d) for d in self.doubled]

    def __str__(self) -> str:
        chunks = [", ".join(format_coord(d) for d in part) for part in self.parts()]
        return "(" + " | ".join(chunks) + ")"


@dataclass(frozen=True)
class SpFamily:
    """K-side root data of Sp(2n,R): one U(n) block."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ParameterError(f"SpFamily needs n >= 1, got {self.n!r}")

    @property
    def blocks(self) -> tuple[int, ...]:
        return (self.n,)

    @property
    def rank(self) -> int:
        return self.n


@dataclass(frozen=True)
class UFamily:
    """K-side root data of U(p,q): blocks U(p) x U(q)."""

    p: int
    q: int

    def __post_init__(self):
        for name in ("p", "q"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise ParameterError(f"UFamily needs {name} >= 0, got {v!r}")
        if self.p + self.q < 1:
            raise ParameterError("UFamily needs p + q >= 1")

    @property
    def blocks(self) -> tuple[int, ...]:
        return (self.p, self.q)

    @property
    def rank(self) -> int:
        return self.p + self.q


FamilyKind = Union[SpFamily, UFamily]


@dataclass(frozen=True)
class RhoTriple:
    rho_g: Weight
    rho_k: Weight
    rho_n: Weight


def _descending_run(length: int, top_doubled: int) -> list[int]:
    return [top_doubled - 2 * i for i in range(length)]


def rho_vectors(family: FamilyKind) -> RhoTriple:
    """rho_g, rho_k and rho_n = rho_g - rho_k for the family."""
    if isinstance(family, SpFamily):
        n = family.n
        rho_g = Weight(tuple(_descending_run(n, 2 * n)), (n,))
        rho_k = Weight(tuple(_descending_run(n, n - 1)), (n,))
    elif isinstance(family, UFamily):
        p, q = family.p, family.q
        rho_g = Weight(tuple(_descending_run(p + q, p + q - 1)), (p, q))
        rho_k = Weight(
            tuple(_descending_run(p, p - 1) + _descending_run(q, q - 1)), (p, q)
        )
    else:
        raise ParameterError(f"unknown family {family!r}")
    return RhoTriple(rho_g, rho_k, rho_g - rho_k)


def is_k_dominant_regular(w: Weight) -> tuple[bool, bool]:
    """(dominant, regular): non-increasing / strictly decreasing in every block."""
    dominant = regular = True
    for part in w.parts():
        for a, b in zip(part, part[1:]):
            if a < b:
                dominant = regular = False
            elif a == b:
                regular = False
    return dominant, regular


@dataclass(frozen=True)
class WeylElem:
    """A Weyl group element acting by ``(e.w)[i] = signs[i] * w[perm[i]]``.

    ``kind`` is ``"C"`` (signed permutation) or ``"A"`` (permutation;
    ``signs`` is then all +1).
    """

    kind: str
    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ("A", "C"):
            raise ParameterError(f"unknown Weyl element kind {self.kind!r}")
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ParameterError(f"{self.perm} is not a permutation")
        if len(self.signs) != len(self.perm) or any(s not in (1, -1) for s in self.signs):
            raise ParameterError(f"bad sign vector {self.signs}")
        if self.kind == "A" and any(s != 1 for s in self.signs):
            raise ParameterError("type A elements carry no sign changes")

    @classmethod
    def identity(cls, size: int, kind: str = "C") -> "WeylElem":
        return cls(kind, tuple(range(size)), (1,) * size)

    def preserves_blocks(self, blocks: Sequence[int]) -> bool:
        start = 0
        for b in blocks:
            if sorted(self.perm[start:start + b]) != list(range(start, start + b)):
                return False
            start += b
        return True

    def label(self) -> str:
        if self.kind == "C":
            return "".join("+" if s > 0 else "-" for s in self._source_signs())
        return ",".join(str(i) for i in self.perm)

    def _source_signs(self) -> list[int]:
        # sign attached to each *source* coordinate
        out = [1] * len(self.perm)
        for i, j in enumerate(self.perm):
            out[j] = self.signs[i]
        return out


def weyl_apply(e: WeylElem, w: Weight) -> Weight:
    if len(e.perm) != len(w):
        raise ParameterError(f"Weyl element of size {len(e.perm)} applied to {w}")
    d = w.doubled
    return w.with_doubled(s * d[j] for s, j in zip(e.signs, e.perm))


def _sign_vector_element(signs: Sequence[int]) -> WeylElem:
    # For g-dominant x (strictly decreasing, positive) the flipped entries go
    # last in reverse order, which is exactly the sort of (signs*x).
    n = len(signs)
    pos = [i for i in range(n) if signs[i] > 0]
    neg = [i for i in reversed(range(n)) if signs[i] < 0]
    perm = tuple(pos + neg)
    return WeylElem("C", perm, tuple(signs[j] for j in perm))


def w1_enumerate(family: FamilyKind) -> list[WeylElem]:
    """Minimal-length representatives sigma with sigma(rho_g) k-dominant.

    Type C: one element per sign vector in {+1,-1}^n (2^n in all).
    Type A: one element per (p,q)-shuffle (C(p+q, p) in all).
    """
    if isinstance(family, SpFamily):
        return [_sign_vector_element(s) for s in product((1, -1), repeat=family.n)]
    p, q = family.p, family.q
    out = []
    for left in combinations(range(p + q), p):
        right = [j for j in range(p + q) if j not in left]
        out.append(WeylElem("A", tuple(left) + tuple(right), (1,) * (p + q)))
    return out


def distinct_arrangements(values: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Distinct permutations of a multiset, in decreasing lexicographic order."""
    counts: dict[int, int] = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    keys = sorted(counts, reverse=True)
    n = len(values)
    out: list[int] = []

    def rec():
        if len(out) == n:
            yield tuple(out)
            return
        for key in keys:
            if counts[key]:
                counts[key] -= 1
                out.append(key)
                yield from rec()
                out.pop()
                counts[key] += 1

    yield from rec()


def k_orbit(w: Weight) -> list[Weight]:
    """All distinct W_k-rearrangements of ``w`` (independent within each block)."""
    per_block = [list(distinct_arrangements(part)) for part in w.parts()]
    return [
        w.with_doubled(c for chunk in choice for c in chunk)
        for choice in product(*per_block)
    ]


def k_orbit_size(w: Weight) -> int:
    size = 1
    for part in w.parts():
        remaining = len(part)
        for v in set(part):
            m = part.count(v)
            size *= comb(remaining, m)
            remaining -= m
    return size


def reverse_blocks(w: Weight) -> Weight:
    return w._trusted(tuple(d for part in w.parts() for d in reversed(part)))


def lowest_weight(highest: Weight) -> Weight:
    """Lowest weight of the irreducible with the given k-dominant highest weight."""
    if not is_k_dominant_regular(highest)[0]:
        raise ParameterError(f"{highest} is not k-dominant")
    return reverse_blocks(highest)


def dominant_representative(w: Weight) -> Weight:
    """Sort each block into non-increasing order."""
    return w.with_doubled(d for part in w.parts() for d in sorted(part, reverse=True))


def weyl_dim(highest: Weight) -> int:
    """Dimension of the irreducible of prod_i U(b_i) with this highest weight."""
    if not is_k_dominant_regular(highest)[0]:
        raise ParameterError(f"{highest} is not k-dominant")
    num = den = 1
    for part in highest.parts():
        for i, j in combinations(range(len(part)), 2):
            # doubled entries: (l_i - l_j + j - i) / (j - i) = (d_i - d_j + 2(j-i)) / 2(j-i)
            num *= part[i] - part[j] + 2 * (j - i)
            den *= 2 * (j - i)
    dim, rem = divmod(num, den)
    assert rem == 0
    return dim


def norm2x4(w: Weight) -> int:
    """Four times the squared norm, i.e. the sum of squared doubled entries."""
    return sum(d * d for d in w.doubled)


__all__ = [
    "Weight",
    "SpFamily",
    "UFamily",
    "FamilyKind",
    "RhoTriple",
    "WeylElem",
    "rho_vectors",
    "is_k_dominant_regular",
    "w1_enumerate",
    "weyl_apply",
    "k_orbit",
    "k_orbit_size",
    "distinct_arrangements",
    "reverse_blocks",
    "lowest_weight",
    "dominant_representative",
    "weyl_dim",
    "norm2x4",
    "format_coord",
]
