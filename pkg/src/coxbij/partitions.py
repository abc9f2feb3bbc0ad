"""Set partitions, arc diagrams and (signed) permutations for types A and B.

Permutations compose like functions: ``(p * q)(x) == p(q(x))``, so a written
product of reflections ``t1 t2 ... tm`` applies ``tm`` first.

Three ground-set layouts are used for drawing and for the crossing/nesting
tests:

* type A: ``1, 2, ..., n``
* type B noncrossing (``style="nc"``): ``-1, -2, ..., -n, 1, 2, ..., n``
* type B nonnesting (``style="nn"``): ``-n, ..., -1, 0, 1, ..., n`` where the
  auxiliary ``0`` is inserted into the (unique) negation-symmetric block
  before arcs are drawn.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidPartitionError
from .roots import PositiveRoot, RootSystemId

STYLES = ("nc", "nn")


# ---------------------------------------------------------------------------
# signed permutations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SignedPermutation:
    """A permutation of ``[n]`` (family A) or a signed permutation of ``[+-n]``.

    ``images[i - 1]`` is the image of ``i``; images of negative points follow
    from ``w(-i) = -w(i)``.
    """

    family: str
    n: int
    images: tuple

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if self.family not in ("A", "B"):
            raise ValueError(f"unknown family {self.family!r}")
        if len(images) != self.n:
            raise ValueError(f"expected {self.n} images, got {len(images)}")
        if self.family == "A":
            ok = sorted(images) == list(range(1, self.n + 1))
        else:
            ok = sorted(abs(x) for x in images) == list(range(1, self.n + 1))
        if not ok:
            raise ValueError(f"{images} is not a bijection of the {self.family} ground set")

    @classmethod
    def identity(cls, family: str, n: int) -> "SignedPermutation":
        return cls(family, n, tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, family: str, n: int, cycles: Iterable[Sequence[int]]) -> "SignedPermutation":
        """Build from cycles; for family B a cycle's negative partner may be omitted."""
        table = {}

        def assign(x, y):
            if table.get(x, y) != y:
                raise ValueError(f"point {x} mapped twice")
            table[x] = y

        for cycle in cycles:
            cycle = [int(x) for x in cycle]
            if len(set(cycle)) != len(cycle):
                raise ValueError(f"repeated point in cycle {cycle}")
            for x, y in zip(cycle, cycle[1:] + cycle[:1]):
                if family == "A" and not (1 <= x <= n):
                    raise ValueError(f"point {x} outside [{n}]")
                if family == "B" and not (1 <= abs(x) <= n):
                    raise ValueError(f"point {x} outside [+-{n}]")
                assign(x, y)
                if family == "B":
                    assign(-x, -y)
        return cls(family, n, tuple(table.get(i, i) for i in range(1, n + 1)))

    @classmethod
    def reflection(cls, family: str, n: int, a: int, b: int) -> "SignedPermutation":
        """Transposition ``(a b)``; in family B also its mirror ``(-a -b)``."""
        if family == "B" and a == -b:
            return cls.from_cycles(family, n, [(a, -a)])
        return cls.from_cycles(family, n, [(a, b)])

    def __call__(self, x: int) -> int:
        if x > 0:
            return self.images[x - 1]
        if self.family == "A":
            raise ValueError(f"{x} is not in [{self.n}]")
        return -self.images[-x - 1]

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        if (self.family, self.n) != (other.family, other.n):
            raise ValueError("cannot multiply permutations of different groups")
        return SignedPermutation(self.family, self.n, tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> "SignedPermutation":
        inv = [0] * self.n
        for i in range(1, self.n + 1):
            y = self(i)
            if y > 0:
                inv[y - 1] = i
            else:
                inv[-y - 1] = -i
        return SignedPermutation(self.family, self.n, tuple(inv))

    def domain(self) -> list:
        if self.family == "A":
            return list(range(1, self.n + 1))
        return list(range(1, self.n + 1)) + [-i for i in range(1, self.n + 1)]

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def _raw_cycles(self) -> list:
        seen, cycles = set(), []
        for x in self.domain():
            if x in seen:
                continue
            cycle = [x]
            seen.add(x)
            y = self(x)
            while y != x:
                cycle.append(y)
                seen.add(y)
                y = self(y)
            if len(cycle) > 1:
                cycles.append(cycle)
        return cycles

    def positive_cycles(self) -> list:
        """One cycle from each ``{c, -c}`` pair: the one holding the smaller positive point.

        Each returned cycle starts at its smallest positive point.  Cycles
        containing negative points come first, then all-positive cycles, each
        group sorted by starting point.  For family A this is just the
        cycle decomposition sorted by minima.
        """
        chosen = {}
        for cycle in self._raw_cycles():
            positives = [x for x in cycle if x > 0]
            if not positives:
                continue
            start = min(positives)
            partner_pos = [-x for x in cycle if x < 0]
            if partner_pos and min(partner_pos) < start:
                continue  # the partner cycle holds a smaller positive point
            k = cycle.index(start)
            chosen[start] = tuple(cycle[k:] + cycle[:k])
        reps = sorted(chosen.values(), key=lambda c: (all(x > 0 for x in c), c[0]))
        return reps

    def cycles(self) -> list:
        """Canonical cycle list: each positive cycle followed by its mirror (type B)."""
        out = []
        for c in self.positive_cycles():
            out.append(c)
            if self.family == "B":
                mirror = tuple(-x for x in c)
                if set(mirror) != set(c):
                    out.append(mirror)
        return out

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        sep = " " if self.family == "A" else ","
        return "".join("(" + sep.join(str(x) for x in c) + ")" for c in cycles)

    def to_json(self) -> dict:
        return {"family": self.family, "n": self.n, "cycles": [list(c) for c in self.cycles()]}

    @classmethod
    def from_json(cls, obj: dict, family: str | None = None) -> "SignedPermutation":
        fam = obj.get("family", family)
        if fam is None:
            raise ValueError("permutation JSON lacks 'family' and none was supplied")
        return cls.from_cycles(fam, int(obj["n"]), obj["cycles"])


# ---------------------------------------------------------------------------
# arc partitions
# ---------------------------------------------------------------------------


def ground_labels(family: str, n: int, style: str = "nc") -> list:
    if family == "A":
        return list(range(1, n + 1))
    if style == "nc":
        return [-i for i in range(1, n + 1)] + list(range(1, n + 1))
    if style == "nn":
        return list(range(-n, n + 1))
    raise ValueError(f"unknown style {style!r}")


@dataclass(frozen=True)
class ArcPartition:
    """A set partition of ``[n]`` or ``[+-n]`` with a drawing convention."""

    family: str
    n: int
    blocks: tuple
    style: str = "nc"

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(int(x) for x in b)) for b in self.blocks))
        object.__setattr__(self, "blocks", blocks)
        if self.style not in STYLES:
            raise InvalidPartitionError(f"unknown style {self.style!r}")
        points = [x for b in blocks for x in b]
        if any(not b for b in blocks):
            raise InvalidPartitionError("empty block")
        expected = ground_labels(self.family, self.n, "nc")
        if sorted(points) != sorted(expected):
            raise InvalidPartitionError(f"blocks do not partition the {self.family}{self.n} ground set")
        if self.family == "B":
            block_set = {frozenset(b) for b in blocks}
            if any(frozenset(-x for x in b) not in block_set for b in block_set):
                raise InvalidPartitionError("type B blocks must be closed under negation")

    @classmethod
    def singletons(cls, family: str, n: int, style: str = "nc") -> "ArcPartition":
        return cls(family, n, tuple((x,) for x in ground_labels(family, n, "nc")), style)

    def with_style(self, style: str) -> "ArcPartition":
        return ArcPartition(self.family, self.n, self.blocks, style)

    @property
    def ground(self) -> list:
        return ground_labels(self.family, self.n, self.style)

    @property
    def arcs(self) -> list:
        return partition_arcs(self, self.style)

    def block_of(self, x: int) -> tuple:
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def to_json(self) -> dict:
        return {"type": self.family, "n": self.n, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, obj: dict, style: str = "nc") -> "ArcPartition":
        return cls(obj["type"], int(obj["n"]), tuple(tuple(b) for b in obj["blocks"]), obj.get("style", style))

    def __str__(self):
        return "{" + ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"


def partition_arcs(p: ArcPartition, style: str | None = None) -> list:
    """Arcs ``(left, right)`` joining consecutive block members in the layout's order."""
    style = style or p.style
    order = ground_labels(p.family, p.n, style)
    pos = {x: i for i, x in enumerate(order)}
    arcs = []
    for b in p.blocks:
        members = list(b)
        if p.family == "B" and style == "nn" and set(members) == {-x for x in members}:
            members.append(0)
        members.sort(key=pos.__getitem__)
        arcs.extend(zip(members, members[1:]))
    arcs.sort(key=lambda arc: (pos[arc[0]], pos[arc[1]]))
    return arcs


def _arc_positions(p: ArcPartition, style: str) -> list:
    pos = {x: i for i, x in enumerate(ground_labels(p.family, p.n, style))}
    return [(pos[a], pos[b]) for a, b in partition_arcs(p, style)]


def is_noncrossing(p: ArcPartition) -> bool:
    arcs = _arc_positions(p, "nc")
    for (a, c), (b, d) in combinations(arcs, 2):
        if a > b:
            (a, c), (b, d) = (b, d), (a, c)
        if a < b < c < d:
            return False
    return True


def is_nonnesting(p: ArcPartition) -> bool:
    arcs = _arc_positions(p, "nn")
    for (a, d), (b, c) in combinations(arcs, 2):
        if (a < b and c < d) or (b < a and d < c):
            return False
    return True


@dataclass(frozen=True)
class StatTriple:
    openers: frozenset
    transients: frozenset
    closers: frozenset

    def to_json(self) -> dict:
        return {
            "openers": sorted(self.openers),
            "transients": sorted(self.transients),
            "closers": sorted(self.closers),
        }


def stat_triple(p: ArcPartition) -> StatTriple:
    """Openers, transients and closers of a partition.

    For type B the extremes of a mixed-sign block are taken in the numeric
    order of the integers, so the result does not depend on the drawing
    layout.
    """
    openers, closers = set(), set()
    for b in p.blocks:
        if all(x > 0 for x in b):
            openers.add(min(b))
            closers.add(max(b))
        elif p.family == "B" and any(x > 0 for x in b):
            closers.add(abs(min(b)))
            closers.add(abs(max(b)))
    transients = set(range(1, p.n + 1)) - openers - closers
    return StatTriple(frozenset(openers), frozenset(transients), frozenset(closers))


# ---------------------------------------------------------------------------
# correspondences
# ---------------------------------------------------------------------------


def root_transposition(a: PositiveRoot) -> tuple:
    """The signed pair ``(x, y)`` whose reflection corresponds to the root."""
    first, last = a.first_index, a.last_index
    if a.family == "A":
        return (first, last + 1)
    if a.has_doubles:
        return (last, -a.last_double_index)
    if first == 1:
        return (last, -last)
    return (first - 1, last)


def root_to_permutation(a: PositiveRoot) -> SignedPermutation:
    """Reflection of a root: ``(j i)`` in type A; ``(i,-i)``, ``(i,j)(-i,-j)`` or ``(i,-j)(-i,j)`` in type B."""
    x, y = root_transposition(a)
    return SignedPermutation.reflection(a.family, a.system.n, x, y)


def transposition_to_root(system: RootSystemId, x: int, y: int) -> PositiveRoot:
    """Inverse of :func:`root_transposition` for a reflection written ``(x, y)``."""
    if system.family == "A":
        lo, hi = sorted((x, y))
        return PositiveRoot.span(system, lo, hi - 1)
    if x == -y:
        return PositiveRoot.span(system, 1, abs(x))
    lo, hi = sorted((abs(x), abs(y)))
    if (x > 0) == (y > 0):
        return PositiveRoot.span(system, lo + 1, hi)
    return PositiveRoot.doubled(system, lo, hi)


def reflection_product(system: RootSystemId, roots: Sequence[PositiveRoot]) -> SignedPermutation:
    """Product ``t1 t2 ... tm`` of the reflections of the given roots."""
    w = SignedPermutation.identity(system.family, system.n)
    for r in roots:
        w = w * root_to_permutation(r)
    return w


def permutation_to_partition(p: SignedPermutation, style: str = "nc") -> ArcPartition:
    """Orbit partition of the ground set under ``p``."""
    seen, blocks = set(), []
    for x in p.domain():
        if x in seen:
            continue
        orbit = {x}
        y = p(x)
        while y != x:
            orbit.add(y)
            y = p(y)
        seen |= orbit
        blocks.append(tuple(orbit))
    return ArcPartition(p.family, p.n, tuple(blocks), style)


def antichain_to_nonnesting(antichain: Sequence[PositiveRoot], system: RootSystemId | None = None) -> ArcPartition:
    """Nonnesting partition of an antichain: orbits of the product of its reflections."""
    if system is None:
        if not antichain:
            raise ValueError("system is required for the empty antichain")
        system = antichain[0].system
    return permutation_to_partition(reflection_product(system, antichain), style="nn")


def embed_b_in_s2n(p: SignedPermutation) -> SignedPermutation:
    """Relabel ``[+-n]`` as ``[2n]`` via ``i -> i`` and ``-i -> n + i``."""
    if p.family != "B":
        raise ValueError("embedding is defined for signed permutations only")
    n = p.n

    def relabel(x):
        return x if x > 0 else n - x

    images = [0] * (2 * n)
    for x in p.domain():
        images[relabel(x) - 1] = relabel(p(x))
    return SignedPermutation("A", 2 * n, tuple(images))


def circular_position(family: str, n: int, x: int) -> int:
    """Position of ``x`` on the Coxeter circle ``1..n`` (A) or ``1..n,-1..-n`` (B)."""
    return x - 1 if x > 0 else n - x - 1


def is_canonical_nc_element(p: SignedPermutation) -> bool:
    """Noncrossing orbit partition and every cycle running once around the circle increasingly."""
    if not is_noncrossing(permutation_to_partition(p)):
        return False
    for cycle in p._raw_cycles():
        pos = [circular_position(p.family, p.n, x) for x in cycle]
        descents = sum(1 for a, b in zip(pos, pos[1:] + pos[:1]) if b < a)
        if descents != 1:
            return False
    return True


def canonical_permutation(p: ArcPartition) -> SignedPermutation:
    """The permutation cycling each block increasingly around the Coxeter circle."""
    cycles = [sorted(b, key=lambda x: circular_position(p.family, p.n, x)) for b in p.blocks if len(b) > 1]
    table = {}
    for c in cycles:
        for x, y in zip(c, c[1:] + c[:1]):
            table[x] = y
    return SignedPermutation(p.family, p.n, tuple(table.get(i, i) for i in range(1, p.n + 1)))
