"""The nonnesting-to-noncrossing map ``f``, its inverse ``g`` and the L-map.

``f_map`` turns an antichain of positive roots into a word of reflections
(an :class:`NcWord`) whose product is a noncrossing element.  It splits the
antichain into connected components and handles each component by one of
two rules: the union/intersection recursion for double-free components, and
the link construction (:func:`compute_links`) for type B components that mix
roots with and without doubled simple roots.

``g_map`` reverses the process from the cycle structure of a noncrossing
element, and ``l_map`` is the classical type A move that turns each
crossing of arcs into a nesting.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InvalidRootError, LinkError, NotAnAntichainError, NotNoncrossingError
from .partitions import (
    ArcPartition,
    SignedPermutation,
    is_canonical_nc_element,
    is_nonnesting,
    permutation_to_partition,
    reflection_product,
    transposition_to_root,
)
from .roots import PositiveRoot, RootSystemId, canonicalize_antichain, is_antichain

log = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# union and intersections of roots
# ---------------------------------------------------------------------------


def _check_pair(a: PositiveRoot, b: PositiveRoot):
    if a.system != b.system:
        raise ValueError(f"roots from different systems: {a.system} and {b.system}")
    if b.has_doubles:
        raise InvalidRootError(f"second argument {b} must not contain double roots")
    if not (a.overline_support & b.overline_support):
        raise InvalidRootError(f"supports of {a} and {b} are disjoint")


def root_union(a: PositiveRoot, b: PositiveRoot) -> PositiveRoot:
    """Root with support ``supp(a) | (supp(b) - overline_supp(a))``."""
    _check_pair(a, b)
    covered = a.overline_support
    support = set(a.support) | {(i, m) for i, m in b.support if i not in covered}
    return PositiveRoot.from_support(a.system, support)


def root_intersection(a: PositiveRoot, b: PositiveRoot) -> PositiveRoot:
    """Root with support ``overline_supp(a) & supp(b)``."""
    _check_pair(a, b)
    support = {(i, m) for i, m in b.support if i in a.overline_support}
    return PositiveRoot.from_support(a.system, support)


def root_d_intersection(a: PositiveRoot, b: PositiveRoot) -> PositiveRoot:
    """Root supported on the doubled simple roots of ``a`` (other than ``r_1``) met by ``b``."""
    if a.system != b.system:
        raise ValueError(f"roots from different systems: {a.system} and {b.system}")
    if not a.has_doubles:
        raise InvalidRootError(f"{a} has no double roots")
    if b.has_doubles:
        raise InvalidRootError(f"second argument {b} must not contain double roots")
    support = {(i, m) for i, m in b.support if i in a.double_set}
    if not support:
        raise InvalidRootError(f"d-intersection of {a} and {b} is empty")
    return PositiveRoot.from_support(a.system, support)


def _overlaps(a: PositiveRoot, b: PositiveRoot) -> bool:
    return not (a.last_index < b.first_index or b.last_index < a.first_index)


def connected_components(antichain: Sequence[PositiveRoot]) -> list:
    """Split a canonical antichain into maximal runs of overlapping neighbours."""
    components, current = [], []
    for root in antichain:
        if current and not _overlaps(current[-1], root):
            components.append(tuple(current))
            current = []
        current.append(root)
    if current:
        components.append(tuple(current))
    return components


# ---------------------------------------------------------------------------
# link construction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LinkLayout:
    """Links of a connected antichain mixing double and double-free roots.

    Positions are 1-based indices into the antichain.  ``gamma_split`` is the
    number of leading roots carrying doubles.
    """

    l_links: tuple
    u_links: tuple
    T: tuple
    gamma_split: int


def compute_links(antichain: Sequence[PositiveRoot]) -> LinkLayout:
    alpha = list(antichain)
    m = len(alpha)
    ell = sum(1 for r in alpha if r.has_doubles)
    if not 1 <= ell < m or any(r.has_doubles for r in alpha[ell:]):
        raise LinkError("links need leading double roots followed by double-free roots", {"antichain": alpha})
    if len(connected_components(alpha)) != 1:
        raise LinkError("links are defined for connected antichains only", {"antichain": alpha})
    gamma_d = list(range(ell))
    gamma = list(range(ell, m))

    # l-links: repeatedly take the largest free double-free root whose first
    # index i > 1 is doubled in some free double root, and pair it with the
    # rightmost such double root.
    l_links = []
    free_d, free = set(gamma_d), set(gamma)
    while True:
        found = None
        for mp in sorted(free, reverse=True):
            i = alpha[mp].first_index
            if i == 1:
                continue
            hosts = [k for k in free_d if alpha[k].num_doubles >= i]
            if hosts:
                found = (max(hosts), mp)
                break
        if found is None:
            break
        k, mp = found
        l_links.append(found)
        free_d.discard(k)
        free.discard(mp)
    l_linked_right = {mp for _, mp in l_links}
    l_linked_left = {k for k, _ in l_links}

    # u-links: admissible roots are scanned left to right; each is attached
    # to the leftmost earlier root covering r_i that has no u-link yet.
    admissible = [mp for mp in gamma if alpha[mp].first_index != 1 and mp not in l_linked_right]
    u_links, u_left = [], set()
    pending = list(admissible)
    while True:
        found = None
        for mp in pending:
            i = alpha[mp].first_index
            hosts = [k for k in range(mp) if k not in u_left and i in alpha[k].overline_support]
            if hosts:
                found = (min(hosts), mp)
                break
        if found is None:
            break
        u_links.append(found)
        u_left.add(found[0])
        pending.remove(found[1])
    if pending:
        raise LinkError(
            "admissible roots left without a u-link",
            {"antichain": alpha, "l_links": l_links, "u_links": u_links, "unlinked": pending},
        )

    T = sorted(
        [alpha[k].last_double_index for k in gamma_d if k not in l_linked_left]
        + [alpha[k].last_index for k in range(m) if k not in u_left]
    )
    if len(set(T)) != len(T):
        raise LinkError("repeated index in T", {"antichain": alpha, "T": T})
    expected = 2 * ell + (1 if alpha[ell].first_index == 1 else 0)
    if len(T) != expected:
        raise LinkError(f"|T| = {len(T)}, expected {expected}", {"antichain": alpha, "T": T})

    def one_based(pairs):
        return tuple((k + 1, mp + 1) for k, mp in pairs)

    return LinkLayout(one_based(l_links), one_based(u_links), tuple(T), ell)


# ---------------------------------------------------------------------------
# the map f
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NcWord:
    """A word of reflections, multiplied in the written order."""

    system: RootSystemId
    factors: tuple

    def __len__(self):
        return len(self.factors)

    def product(self) -> SignedPermutation:
        return reflection_product(self.system, self.factors)

    def partition(self) -> ArcPartition:
        return permutation_to_partition(self.product(), style="nc")

    def to_json(self) -> list:
        return [r.to_json() for r in self.factors]

    def __str__(self):
        return " ".join(f"({r})" for r in self.factors) or "()"


class StructureViolation(AssertionError):
    """A structural invariant of ``f`` failed; indicates a bug, not bad input."""


@dataclass
class FCounters:
    """Tallies of structural checks made while evaluating ``f``."""

    case_a_steps: int = 0
    case_b_steps: int = 0
    violations: list = field(default_factory=list)


def f_map(antichain: Sequence[PositiveRoot], system: RootSystemId | None = None, counters: FCounters | None = None) -> NcWord:
    """Apply ``f`` to a canonical antichain (the empty antichain maps to the empty word)."""
    antichain = tuple(antichain)
    if system is None:
        if not antichain:
            raise ValueError("system is required for the empty antichain")
        system = antichain[0].system
    factors = _f(antichain, counters)
    if len(factors) != len(antichain):
        raise StructureViolation(f"f produced {len(factors)} factors from {len(antichain)} roots")
    return NcWord(system, tuple(factors))


def _f(alpha: tuple, counters: FCounters | None) -> list:
    word = []
    for comp in connected_components(alpha):
        word.extend(_f_connected(comp, counters))
    return word


def _sub_antichain(roots: list, what: str, counters: FCounters | None) -> tuple:
    if not is_antichain(roots):
        msg = f"{what} " + ", ".join(map(str, roots)) + " is not an antichain"
        if counters is not None:
            counters.violations.append(msg)
        raise StructureViolation(msg)
    return tuple(sorted(roots, key=lambda r: r.last_index))


def _f_connected(alpha: tuple, counters: FCounters | None) -> list:
    m = len(alpha)
    if m == 1:
        return [alpha[0]]
    ell = sum(1 for r in alpha if r.has_doubles)
    if ell == m:
        return list(alpha)
    if ell == 0:
        if counters is not None:
            counters.case_a_steps += 1
        union = alpha[0]
        for r in alpha[1:]:
            union = root_union(union, r)
        bars = [root_intersection(a, b) for a, b in zip(alpha, alpha[1:])]
        return [union] + _f(_sub_antichain(bars, "intersection tuple", counters), counters)
    return _f_links(alpha, counters)


def _f_links(alpha: tuple, counters: FCounters | None) -> list:
    if counters is not None:
        counters.case_b_steps += 1
    system = alpha[0].system
    layout = compute_links(alpha)
    T = list(layout.T)
    word = []
    lo, hi = 0, len(T) - 1
    for _ in range(layout.gamma_split):
        word.append(PositiveRoot.doubled(system, T[lo], T[hi]))
        lo, hi = lo + 1, hi - 1
    if lo == hi:
        word.append(PositiveRoot.span(system, 1, T[lo]))
    for k, mp in sorted(layout.l_links, reverse=True):
        word.append(root_d_intersection(alpha[k - 1], alpha[mp - 1]))
    thetas = [root_intersection(alpha[k - 1], alpha[mp - 1]) for k, mp in sorted(layout.u_links, key=lambda p: p[1])]
    word.extend(_f(_sub_antichain(thetas, "u-link intersection tuple", counters), counters))
    return word


# ---------------------------------------------------------------------------
# the inverse map g
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InverseStep:
    """Bookkeeping of ``g`` on one connected block of reflections."""

    roots: tuple
    T: tuple
    F_st: tuple
    L_st: tuple
    gamma_prime: tuple
    gamma_prime_d: tuple
    output: tuple


def _support_points(t: tuple, family: str) -> frozenset:
    pts = set(t)
    if family == "B":
        pts |= {-x for x in t}
    return frozenset(pts)


def check_reordering(original: Sequence[tuple], reordered: Sequence[tuple], family: str):
    """Raise unless every pair of reflections whose order changed moves disjoint points."""
    rank = {t: i for i, t in enumerate(reordered)}
    for i, s in enumerate(original):
        for t in original[i + 1 :]:
            if rank[s] > rank[t] and _support_points(s, family) & _support_points(t, family):
                raise StructureViolation(f"reflections {s} and {t} were swapped but share points")


def reflection_sequence(p: SignedPermutation) -> list:
    """Factor ``p`` into reflections ordered as ``g`` needs them.

    Each positive cycle ``(i_1 ... i_j i_(j+1) ... i_k)``, positives first,
    contributes ``(i_1 i_(j+1))`` when it has negative points, then the chain
    ``(i_1 i_2) ... (i_(j-1) i_j)`` and the chain over its negative points
    (omitted for a negation-symmetric cycle, where it repeats the positive
    chain).  Sign-changing reflections go first, ordered by their positive
    point; the rest follow ordered by their least absolute value.
    """
    factored = []
    for cycle in p.positive_cycles():
        j = sum(1 for x in cycle if x > 0)
        pos, neg = cycle[:j], cycle[j:]
        if neg:
            factored.append((cycle[0], neg[0]))
        factored.extend(zip(pos, pos[1:]))
        if neg and set(neg) != {-x for x in pos}:
            factored.extend(zip(neg, neg[1:]))
    mixed = sorted((t for t in factored if (t[0] > 0) != (t[1] > 0)), key=lambda t: t[0])
    rest = sorted((t for t in factored if (t[0] > 0) == (t[1] > 0)), key=lambda t: min(abs(t[0]), abs(t[1])))
    check_reordering(factored, mixed + rest, p.family)
    return mixed + rest


def _clusters(roots: list) -> list:
    """Group roots into classes whose index intervals overlap transitively."""
    order = sorted(range(len(roots)), key=lambda i: roots[i].first_index)
    groups, reach = [], 0
    for i in order:
        r = roots[i]
        if groups and r.first_index <= reach:
            groups[-1].append(i)
            reach = max(reach, r.last_index)
        else:
            groups.append([i])
            reach = r.last_index
    return [tuple(roots[i] for i in sorted(g)) for g in groups]


def _g_component(seq: tuple) -> InverseStep:
    system = seq[0].system
    k = len(seq)
    gamma_d = [r for r in seq if r.has_doubles]
    gamma = [r for r in seq if not r.has_doubles]
    r = len(gamma_d)
    gamma_p, gamma_pd = [], []
    if gamma_d and gamma:
        bar = list(gamma)
        if bar[0].first_index == 1:
            bar = bar[1:]
        while bar:
            head = bar[0]
            hosts = [d for d in gamma_d if d not in gamma_pd and head.overline_support <= d.double_set]
            if hosts:
                host = hosts[-1]
                # of the roots nested in ``head`` take the one ending first; the
                # last-listed one can be an intersection that f produced from
                # the u-links rather than from an l-link
                inner = min((x for x in bar if x.overline_support <= head.overline_support), key=lambda x: x.last_index)
                gamma_p.append(inner)
                bar.remove(inner)
                gamma_pd.append(host)
            else:
                bar.pop(0)
    T = sorted(
        [d.last_double_index for d in gamma_d if d not in gamma_pd] + [x.last_index for x in gamma_p],
        reverse=True,
    )
    F = sorted(x.first_index for x in gamma)
    L = sorted(
        [x.last_index for x in gamma if x not in gamma_p]
        + [d.last_index for d in gamma_d]
        + [d.last_double_index for d in gamma_pd]
    )
    if len(T) != r or len(L) != k or len(set(L)) != k or len(set(T)) != r:
        raise NotNoncrossingError(f"inconsistent index sets T={T}, L={L} for reflections {list(map(str, seq))}")
    try:
        out = [PositiveRoot.doubled(system, t, l) for t, l in zip(T, L[:r])]
        out += [PositiveRoot.span(system, f, l) for f, l in zip(F, L[r:])]
    except InvalidRootError as exc:
        raise NotNoncrossingError(f"index sets T={T}, F={F}, L={L} do not pair into roots") from exc
    return InverseStep(tuple(seq), tuple(T), tuple(F), tuple(L), tuple(gamma_p), tuple(gamma_pd), tuple(out))


def g_trace(p: SignedPermutation, system: RootSystemId | None = None) -> list:
    """Run ``g`` and return one :class:`InverseStep` per connected block."""
    if system is None:
        system = RootSystemId(p.family, p.n - 1 if p.family == "A" else p.n)
    if not is_canonical_nc_element(p):
        raise NotNoncrossingError(f"{p} is not a canonical noncrossing element")
    roots = [transposition_to_root(system, x, y) for x, y in reflection_sequence(p)]
    return [_g_component(c) for c in _clusters(roots)]


def g_map(p: SignedPermutation, system: RootSystemId | None = None) -> tuple:
    """Inverse of ``f``: the antichain whose image has product ``p``."""
    roots = [r for step in g_trace(p, system) for r in step.output]
    try:
        return canonicalize_antichain(roots)
    except NotAnAntichainError as exc:
        raise NotNoncrossingError(f"g produced a non-antichain for {p}") from exc


# ---------------------------------------------------------------------------
# the L-map
# ---------------------------------------------------------------------------


def _crosses(a: tuple, b: tuple) -> bool:
    return a[0] < b[0] < a[1] < b[1]


def l_map_arcs(arcs: Sequence[tuple]) -> list:
    """Resolve crossings arc by arc, from the left.

    For each arc in order of left endpoint, while some arc crosses it from
    the right, the leftmost such arc ``(b, d)`` and the current ``(a, c)``
    become ``(a, d)`` and ``(b, c)``.  Left endpoints never move, so the
    processing order is stable.
    """
    arcs = sorted(arcs)
    for k in range(len(arcs)):
        while True:
            crossing = [j for j in range(len(arcs)) if _crosses(arcs[k], arcs[j])]
            if not crossing:
                break
            j = min(crossing, key=lambda j: arcs[j][0])
            (a, c), (b, d) = arcs[k], arcs[j]
            arcs[k], arcs[j] = (a, d), (b, c)
    if any(_crosses(x, y) for x in arcs for y in arcs):
        raise StructureViolation(f"crossings remain after one sweep: {arcs}")
    return arcs


def arcs_to_partition(n: int, arcs: Sequence[tuple]) -> ArcPartition:
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in arcs:
        parent[find(a)] = find(b)
    blocks = {}
    for x in range(1, n + 1):
        blocks.setdefault(find(x), []).append(x)
    return ArcPartition("A", n, tuple(tuple(b) for b in blocks.values()))


def l_map(p: ArcPartition) -> ArcPartition:
    """The L-map on a type A nonnesting partition."""
    if p.family != "A":
        raise ValueError("the L-map is defined for type A only")
    if not is_nonnesting(p):
        raise ValueError(f"{p} is not nonnesting")
    return arcs_to_partition(p.n, l_map_arcs(p.arcs))
