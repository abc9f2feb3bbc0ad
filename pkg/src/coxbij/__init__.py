"""Nonnesting/noncrossing partition bijection for root systems of types A and B."""

from .bijection import (
    LinkLayout,
    NcWord,
    compute_links,
    connected_components,
    f_map,
    g_map,
    g_trace,
    l_map,
    root_d_intersection,
    root_intersection,
    root_union,
)
from .enumeration import VerificationReport, catalan_count, enumerate_antichains, enumerate_nc, verify_bijection
from .partitions import (
    ArcPartition,
    SignedPermutation,
    StatTriple,
    antichain_to_nonnesting,
    embed_b_in_s2n,
    is_canonical_nc_element,
    is_noncrossing,
    is_nonnesting,
    permutation_to_partition,
    root_to_permutation,
    stat_triple,
)
from .roots import (
    PositiveRoot,
    RootSystemId,
    antichain_pair_by_lemma,
    canonicalize_antichain,
    is_antichain,
    positive_roots,
    root_leq,
)

__version__ = "0.1.0"
