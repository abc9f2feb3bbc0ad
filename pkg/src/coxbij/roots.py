"""Positive roots of types A and B in simple-root coordinates.

A positive root is stored as its full coefficient vector over the simple
roots ``r_1, ..., r_k``.  Type A roots are contiguous blocks of ones; type B
roots are either a contiguous block of ones or a prefix of twos starting at
``r_1`` followed by a block of ones.  Every index in this module is 1-based,
matching the usual ``r_i`` notation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidRootError, NotAnAntichainError, SystemMismatchError

FAMILIES = ("A", "B")

Antichain = tuple  # tuple[PositiveRoot, ...] in canonical order


@dataclass(frozen=True, order=True)
class RootSystemId:
    """A root system ``A_rank`` or ``B_rank``.

    ``rank`` always counts simple roots, so ``A_k`` acts on the ground set
    ``[k + 1]`` while ``B_n`` acts on ``[+-n]``.
    """

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected 'A' or 'B'")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError(f"rank must be a positive integer, got {self.rank!r}")

    @property
    def n(self) -> int:
        """Size of the (positive) ground set the group permutes."""
        return self.rank + 1 if self.family == "A" else self.rank

    @property
    def num_positive_roots(self) -> int:
        k = self.rank
        return k * (k + 1) // 2 if self.family == "A" else k * k

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "RootSystemId":
        text = text.strip()
        return cls(text[0].upper(), int(text[1:].lstrip("_")))


@dataclass(frozen=True)
class PositiveRoot:
    system: RootSystemId
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) != self.system.rank:
            raise InvalidRootError(
                f"{self.system} root needs {self.system.rank} coefficients, got {len(coeffs)}"
            )
        if not _valid_shape(self.system.family, coeffs):
            raise InvalidRootError(f"{coeffs} is not a positive root of {self.system}")

    # -- constructors -----------------------------------------------------

    @classmethod
    def span(cls, system: RootSystemId, first: int, last: int) -> "PositiveRoot":
        """The root ``r_first + ... + r_last``."""
        if not 1 <= first <= last <= system.rank:
            raise InvalidRootError(f"bad span [{first}, {last}] in {system}")
        return cls(system, tuple(1 if first <= i <= last else 0 for i in range(1, system.rank + 1)))

    @classmethod
    def doubled(cls, system: RootSystemId, double: int, last: int) -> "PositiveRoot":
        """The type B root ``2r_1 + ... + 2r_double + r_(double+1) + ... + r_last``."""
        if system.family != "B" or not 1 <= double < last <= system.rank:
            raise InvalidRootError(f"no doubled root ({double}, {last}) in {system}")
        return cls(
            system,
            tuple(2 if i <= double else (1 if i <= last else 0) for i in range(1, system.rank + 1)),
        )

    @classmethod
    def from_support(cls, system: RootSystemId, support: Iterable) -> "PositiveRoot":
        """Build a root from a support given as ``(index, multiplicity)`` pairs."""
        coeffs = [0] * system.rank
        for index, mult in support:
            if coeffs[index - 1]:
                raise InvalidRootError(f"r_{index} appears twice in support")
            coeffs[index - 1] = mult
        return cls(system, tuple(coeffs))

    # -- derived data -----------------------------------------------------

    @property
    def family(self) -> str:
        return self.system.family

    @property
    def first_index(self) -> int:
        return next(i for i, c in enumerate(self.coeffs, 1) if c)

    @property
    def last_index(self) -> int:
        return max(i for i, c in enumerate(self.coeffs, 1) if c)

    @property
    def num_doubles(self) -> int:
        return sum(1 for c in self.coeffs if c == 2)

    @property
    def has_doubles(self) -> bool:
        return self.num_doubles > 0

    @property
    def last_double_index(self) -> int | None:
        """Largest ``j`` with ``2r_j`` in the root, or None for double-free roots."""
        return self.num_doubles or None

    @property
    def support(self) -> frozenset:
        """Simple and double roots of this root, as ``(index, multiplicity)`` pairs."""
        return frozenset((i, c) for i, c in enumerate(self.coeffs, 1) if c)

    @property
    def overline_support(self) -> frozenset:
        """Indices of simple roots appearing either singly or doubled."""
        return frozenset(i for i, c in enumerate(self.coeffs, 1) if c)

    @property
    def double_set(self) -> frozenset:
        """Doubled simple roots other than ``r_1`` (the set written D_alpha)."""
        return frozenset(range(2, self.num_doubles + 1))

    def sort_key(self):
        return (self.last_index, self.first_index, self.num_doubles)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {"family": self.family, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj: dict) -> "PositiveRoot":
        coeffs = tuple(obj["coeffs"])
        return cls(RootSystemId(obj["family"], len(coeffs)), coeffs)

    def __str__(self):
        terms = [(f"2r{i}" if c == 2 else f"r{i}") for i, c in enumerate(self.coeffs, 1) if c]
        return "+".join(terms)

    def __repr__(self):
        return f"PositiveRoot({self.system}, {self})"


def _valid_shape(family: str, coeffs: Sequence[int]) -> bool:
    nonzero = [i for i, c in enumerate(coeffs) if c]
    if not nonzero:
        return False
    lo, hi = nonzero[0], nonzero[-1]
    if hi - lo + 1 != len(nonzero):
        return False
    block = coeffs[lo : hi + 1]
    if family == "A":
        return all(c == 1 for c in block)
    doubles = sum(1 for c in block if c == 2)
    if doubles == 0:
        return all(c == 1 for c in block)
    # twos must form a prefix starting at r_1 and be followed by at least one r
    return (
        lo == 0
        and all(c == 2 for c in block[:doubles])
        and all(c == 1 for c in block[doubles:])
        and doubles < len(block)
    )


@lru_cache(maxsize=None)
def positive_roots(system: RootSystemId) -> tuple:
    """All positive roots, sorted by (last index, first index, number of doubles)."""
    k = system.rank
    roots = [PositiveRoot.span(system, first, last) for last in range(1, k + 1) for first in range(1, last + 1)]
    if system.family == "B":
        roots += [PositiveRoot.doubled(system, d, last) for last in range(2, k + 1) for d in range(1, last)]
    roots.sort(key=PositiveRoot.sort_key)
    return tuple(roots)


def _check_same_system(a: PositiveRoot, b: PositiveRoot):
    if a.system != b.system:
        raise SystemMismatchError(f"roots from different systems: {a.system} and {b.system}")


def root_leq(a: PositiveRoot, b: PositiveRoot) -> bool:
    """Root order: ``b - a`` is a nonnegative combination of simple roots."""
    _check_same_system(a, b)
    return all(y >= x for x, y in zip(a.coeffs, b.coeffs))


def comparable(a: PositiveRoot, b: PositiveRoot) -> bool:
    return root_leq(a, b) or root_leq(b, a)


def antichain_pair_by_lemma(a: PositiveRoot, b: PositiveRoot) -> bool:
    """Decide incomparability of two distinct roots from their indices alone.

    Without doubles: the roots are incomparable iff both the first and the
    last indices are ordered the same way.  With doubles: taking ``a`` as the
    root with more doubles, they are incomparable iff ``a`` ends strictly
    before ``b``.
    """
    _check_same_system(a, b)
    if a == b:
        raise ValueError("antichain members must be distinct")
    if not a.has_doubles and not b.has_doubles:
        i1, j1, i2, j2 = a.first_index, a.last_index, b.first_index, b.last_index
        return (i1 < i2 and j1 < j2) or (i2 < i1 and j2 < j1)
    if b.num_doubles > a.num_doubles:
        a, b = b, a
    return a.last_index < b.last_index and a.num_doubles > b.num_doubles


def _check_distinct(roots: Sequence[PositiveRoot]):
    if len(set(roots)) != len(roots):
        raise ValueError("duplicate roots in antichain candidate")
    for a, b in zip(roots, roots[1:]):
        _check_same_system(a, b)


def is_antichain(roots: Sequence[PositiveRoot]) -> bool:
    roots = list(roots)
    _check_distinct(roots)
    return not any(comparable(a, b) for a, b in combinations(roots, 2))


def canonicalize_antichain(roots: Iterable[PositiveRoot]) -> Antichain:
    """Order an antichain by strictly increasing last index."""
    roots = list(roots)
    if not is_antichain(roots):
        raise NotAnAntichainError("roots " + ", ".join(map(str, roots)) + " are not pairwise incomparable")
    return tuple(sorted(roots, key=lambda r: r.last_index))


def antichain_to_json(antichain: Sequence[PositiveRoot]) -> list:
    return [r.to_json() for r in antichain]


def antichain_from_json(obj: list, system: RootSystemId | None = None) -> Antichain:
    roots = [PositiveRoot.from_json(r) for r in obj]
    if system is not None:
        for r in roots:
            if r.system != system:
                raise SystemMismatchError(f"root {r} is in {r.system}, expected {system}")
    return canonicalize_antichain(roots)


def format_antichain(antichain: Sequence[PositiveRoot]) -> str:
    return "(" + ", ".join(map(str, antichain)) + ")"
