"""Exhaustive enumeration of nonnesting and noncrossing objects, and the sweep
that checks ``f`` against them."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from math import comb

from .bijection import FCounters, StructureViolation, f_map, g_map, l_map
from .errors import CoxbijError, LinkError, RankBoundError
from .partitions import (
    ArcPartition,
    SignedPermutation,
    antichain_to_nonnesting,
    canonical_permutation,
    circular_position,
    is_canonical_nc_element,
    stat_triple,
)
from .roots import RootSystemId, comparable, positive_roots

DEFAULT_MAX_RANK = {"A": 9, "B": 6}
ENV_MAX_RANK = "COXBIJ_MAX_RANK"


def max_rank(family: str) -> int:
    override = os.environ.get(ENV_MAX_RANK)
    if override:
        return int(override)
    return DEFAULT_MAX_RANK[family]


def check_bounds(system: RootSystemId, limit: int | None = None):
    limit = max_rank(system.family) if limit is None else limit
    if system.rank > limit:
        raise RankBoundError(
            f"{system} exceeds the enumeration bound (rank <= {limit} for type {system.family}); "
            f"set {ENV_MAX_RANK} to raise it"
        )


def catalan_count(system: RootSystemId) -> int:
    """Catalan(n) for A_(n-1) and C(2n, n) for B_n."""
    n = system.n
    if system.family == "A":
        return comb(2 * n, n) // (n + 1)
    return comb(2 * n, n)


def enumerate_antichains(system: RootSystemId, limit: int | None = None) -> list:
    """All antichains of the root poset in depth-first order, each canonical.

    Roots are added in the order of :func:`positive_roots`, which sorts by
    last index first, so every emitted tuple is already in canonical order.
    """
    check_bounds(system, limit)
    roots = positive_roots(system)
    size = len(roots)
    incomparable = [
        frozenset(j for j in range(size) if j != i and not comparable(roots[i], roots[j])) for i in range(size)
    ]
    out = []

    def extend(chosen, candidates, start):
        out.append(tuple(roots[i] for i in chosen))
        for j in range(start, size):
            if j in candidates:
                chosen.append(j)
                extend(chosen, candidates & incomparable[j], j + 1)
                chosen.pop()

    extend([], frozenset(range(size)), 0)
    return out


def _nc_partitions(points: int, symmetric_shift: int | None = None) -> list:
    """Noncrossing partitions of circle positions ``0 .. points-1`` as lists of blocks.

    With ``symmetric_shift = s`` only partitions invariant under the rotation
    ``x -> x + s (mod points)`` are produced.  Positions ``>= s`` are pruned
    against their already placed mirror images, so the search only branches
    freely on the first half.
    """
    results = []
    block_of = [None] * points
    blocks = []  # each block: list of positions
    stack = []  # open block ids, innermost last

    def consistent(p):
        s = symmetric_shift
        if s is None or p < s:
            return True
        q = p - s
        for x in range(p):
            mx = (x + s) % points
            if mx < p and (block_of[x] == block_of[p]) != (block_of[q] == block_of[mx]):
                return False
        return True

    def place(p):
        if p == points:
            results.append([list(b) for b in blocks])
            return
        for opt in [None] + list(stack):
            saved = list(stack)
            if opt is None:
                blocks.append([p])
                opt = len(blocks) - 1
                stack.append(opt)
                block_of[p] = opt
                if consistent(p):
                    place(p + 1)
                blocks.pop()
            else:
                # joining closes every block opened after ``opt``
                del stack[stack.index(opt) + 1 :]
                blocks[opt].append(p)
                block_of[p] = opt
                if consistent(p):
                    place(p + 1)
                blocks[opt].pop()
            stack[:] = saved
            block_of[p] = None

    place(0)
    return results


def _label(family: str, n: int, pos: int) -> int:
    return pos + 1 if pos < n else -(pos - n + 1)


def enumerate_nc(system: RootSystemId, limit: int | None = None) -> list:
    """All canonical noncrossing elements, each block cycled increasingly."""
    check_bounds(system, limit)
    n = system.n
    if system.family == "A":
        raw = _nc_partitions(n)
    else:
        raw = _nc_partitions(2 * n, symmetric_shift=n)
    out = []
    for blocks in raw:
        labelled = tuple(tuple(_label(system.family, n, x) for x in b) for b in blocks)
        out.append(canonical_permutation(ArcPartition(system.family, n, labelled)))
    return out


@dataclass
class VerificationReport:
    system: RootSystemId
    nn_count: int
    nc_count: int
    expected_count: int
    bijective: bool
    triples_preserved: bool
    lmap_agrees: bool | None
    structural_ok: bool
    case_a_steps: int = 0
    case_b_steps: int = 0
    roundtrip_failures: list = field(default_factory=list)
    triple_failures: list = field(default_factory=list)
    lmap_failures: list = field(default_factory=list)
    structural_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.bijective
            and self.triples_preserved
            and self.lmap_agrees is not False
            and self.structural_ok
        )

    def to_json(self) -> dict:
        return {
            "system": str(self.system),
            "nn_count": self.nn_count,
            "nc_count": self.nc_count,
            "expected_count": self.expected_count,
            "bijective": self.bijective,
            "triples_preserved": self.triples_preserved,
            "lmap_agrees": self.lmap_agrees,
            "structural_ok": self.structural_ok,
            "case_a_steps": self.case_a_steps,
            "case_b_steps": self.case_b_steps,
            "roundtrip_failures": self.roundtrip_failures,
            "triple_failures": self.triple_failures,
            "lmap_failures": self.lmap_failures,
            "structural_failures": self.structural_failures,
        }


def _fmt(antichain) -> str:
    return "(" + ", ".join(map(str, antichain)) + ")"


def verify_bijection(system: RootSystemId, limit: int | None = None) -> VerificationReport:
    """Sweep ``f`` over every antichain and ``g`` over every noncrossing element."""
    antichains = enumerate_antichains(system, limit)
    nc_elements = enumerate_nc(system, limit)
    expected = catalan_count(system)
    nc_set = set(nc_elements)
    roundtrip, triples, lmaps, structural = [], [], [], []
    images = set()
    counters = FCounters()
    for a in antichains:
        try:
            word = f_map(a, system, counters)
        except (StructureViolation, LinkError, CoxbijError) as exc:
            structural.append(f"f{_fmt(a)}: {exc}")
            continue
        w = word.product()
        images.add(w)
        if w not in nc_set or not is_canonical_nc_element(w):
            roundtrip.append(f"f{_fmt(a)} = {w} is not a canonical noncrossing element")
        try:
            back = g_map(w, system)
        except (CoxbijError, StructureViolation) as exc:
            roundtrip.append(f"g(f{_fmt(a)}) failed: {exc}")
        else:
            if back != a:
                roundtrip.append(f"g(f{_fmt(a)}) = {_fmt(back)}")
        nn = antichain_to_nonnesting(a, system)
        nc = word.partition()
        if stat_triple(nn) != stat_triple(nc):
            triples.append(f"{_fmt(a)}: {stat_triple(nn).to_json()} vs {stat_triple(nc).to_json()}")
        if system.family == "A":
            lm = l_map(nn)
            if lm.blocks != nc.blocks:
                lmaps.append(f"{_fmt(a)}: L-map {lm} vs f {nc}")
    for p in nc_elements:
        try:
            back = f_map(g_map(p, system), system).product()
        except CoxbijError as exc:
            roundtrip.append(f"f(g({p})) failed: {exc}")
            continue
        except StructureViolation as exc:
            structural.append(f"f(g({p})): {exc}")
            continue
        if back != p:
            roundtrip.append(f"f(g({p})) = {back}")
    structural.extend(counters.violations)
    injective = len(images) == len(antichains)
    counts_ok = len(antichains) == len(nc_elements) == expected
    bijective = injective and counts_ok and not roundtrip and not structural
    return VerificationReport(
        system=system,
        nn_count=len(antichains),
        nc_count=len(nc_elements),
        expected_count=expected,
        bijective=bijective,
        triples_preserved=not triples,
        lmap_agrees=(not lmaps) if system.family == "A" else None,
        structural_ok=not structural,
        case_a_steps=counters.case_a_steps,
        case_b_steps=counters.case_b_steps,
        roundtrip_failures=roundtrip,
        triple_failures=triples,
        lmap_failures=lmaps,
        structural_failures=structural,
    )
