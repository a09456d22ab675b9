"""Independent exhaustive oracle over families of k-subsets.

For small ``n`` every family of ``k``-subsets of ``{0..n-1}`` is generated.
A family survives when it is exactly the set of ``k``-cliques of the
hypergraph it spans, that hypergraph has clique number ``k``, and the
family has empty intersection. Survivors are reported up to isomorphism.
"""

from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Dict, List, Tuple

from hypercert.errors import OutOfRange, SearchTooLarge
from hypercert.hypergraph import Hypergraph3, from_clique_family, is_isomorphic
from hypercert.logging import get_logger
from hypercert.realize import Realization, realization_from_hypergraph

logger = get_logger(__name__)

DEFAULT_MAX_SUBSETS = 25
DEFAULT_WORKERS = 1


@dataclass(frozen=True)
class _Tables:
    n: int
    k: int
    subsets: Tuple[Tuple[int, ...], ...]
    vertex_masks: Tuple[int, ...]
    triple_masks: Tuple[int, ...]
    larger_masks: Tuple[int, ...]


def _tables(n: int, k: int) -> _Tables:
    triple_index = {t: i for i, t in enumerate(combinations(range(n), 3))}

    def triple_mask(vertices: Tuple[int, ...]) -> int:
        mask = 0
        for t in combinations(vertices, 3):
            mask |= 1 << triple_index[t]
        return mask

    subsets = tuple(combinations(range(n), k))
    return _Tables(
        n=n,
        k=k,
        subsets=subsets,
        vertex_masks=tuple(sum(1 << v for v in s) for s in subsets),
        triple_masks=tuple(triple_mask(s) for s in subsets),
        larger_masks=tuple(triple_mask(s) for s in combinations(range(n), k + 1)),
    )


def _scan(n: int, k: int, lowest: int) -> List[int]:
    """Surviving families whose first member is the ``lowest``-th subset."""
    tables = _tables(n, k)
    count = len(tables.subsets)
    everyone = (1 << n) - 1
    survivors = []
    for extra in range(1 << (count - lowest - 1)):
        family = (1 << lowest) | (extra << (lowest + 1))

        common, triples = everyone, 0
        rest = family
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            common &= tables.vertex_masks[i]
            triples |= tables.triple_masks[i]
        if common:
            continue

        closed = all(
            family >> i & 1
            for i, mask in enumerate(tables.triple_masks)
            if not mask & ~triples
        )
        if not closed:
            continue
        if any(not mask & ~triples for mask in tables.larger_masks):
            continue
        survivors.append(family)
    return survivors


def _hypergraph(tables: _Tables, family: int) -> Hypergraph3:
    members = [s for i, s in enumerate(tables.subsets) if family >> i & 1]
    return from_clique_family(range(tables.n), members)


def _degree_profile(hypergraph: Hypergraph3) -> Tuple[int, Tuple[int, ...]]:
    degrees: Dict[int, int] = {v: 0 for v in hypergraph.vertices}
    for triple in hypergraph.triples:
        for v in triple:
            degrees[v] += 1
    return hypergraph.size, tuple(sorted(degrees.values()))


def search_configurations(
    n: int,
    m: int,
    *,
    max_subsets: int = DEFAULT_MAX_SUBSETS,
    workers: int = DEFAULT_WORKERS,
) -> List[Realization]:
    """All hypergraphs on ``n`` vertices whose maximum cliques have size
    ``n - m`` and empty common intersection, up to isomorphism.

    Args:
        n: Order of the hypergraphs
        m: Deficiency; the clique number is ``k = n - m``
        max_subsets: Guard on ``C(n, k)``, the number of candidate members
        workers: Worker processes; families are split by their first member

    Raises:
        OutOfRange: ``k < 3``, or ``k <= m`` where two disjoint maximum
            cliques can already have empty intersection
        SearchTooLarge: ``C(n, k)`` exceeds ``max_subsets``
    """
    k = n - m
    if m < 0 or k < 3:
        raise OutOfRange(f"Need k = n - m >= 3 and m >= 0, got n={n}, m={m}")
    if k <= m:
        raise OutOfRange(
            f"Need k = n - m > m so that members pairwise meet, got n={n}, m={m}"
        )
    count = comb(n, k)
    if count > max_subsets:
        raise SearchTooLarge(
            f"C({n},{k}) = {count} candidate members exceeds the guard of "
            f"{max_subsets}",
            witness={"n": n, "m": m, "subsets": count, "guard": max_subsets},
        )

    logger.debug(f"oracle n={n} m={m}: 2^{count} families, {workers} workers")
    families: List[int] = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = {
                executor.submit(_scan, n, k, lowest): lowest for lowest in range(count)
            }
            for future in as_completed(futures):
                families.extend(future.result())
    else:
        for lowest in range(count):
            families.extend(_scan(n, k, lowest))
    families.sort()

    tables = _tables(n, k)
    representatives: Dict[Tuple[int, Tuple[int, ...]], List[Hypergraph3]] = {}
    distinct: List[Hypergraph3] = []
    for family in families:
        hypergraph = _hypergraph(tables, family)
        bucket = representatives.setdefault(_degree_profile(hypergraph), [])
        if any(is_isomorphic(hypergraph, seen) for seen in bucket):
            continue
        bucket.append(hypergraph)
        distinct.append(hypergraph)

    logger.debug(
        f"oracle n={n} m={m}: {len(families)} labelled, {len(distinct)} distinct"
    )
    return [realization_from_hypergraph(h) for h in distinct]
