"""Seeded generation of random simplicial maps.

The verification suite quantifies identities over many map pairs, so it
needs a stream of valid simplicial maps of pairs.  Valid vertex images are
found greedily: assign vertices in a random order, keeping only candidates
under which every partially-assigned simplex still lands inside a simplex
of the target.  Dead ends restart the whole attempt; faces of a simplex
are simplices, so the partial check never rejects a completable prefix for
the simplices it can see.
"""

from __future__ import annotations

import random
from typing import Dict, List, Optional

from .complexes import MapError, SimplicialMap, SimplicialPair


class GenerationError(MapError):
    """No valid map was found within the attempt budget."""


def _constraint_table(pair: SimplicialPair):
    """For each vertex, the facets (and sub-facets) it participates in."""
    by_vertex: Dict[int, List[tuple]] = {v: [] for v in range(pair.total.vertex_count)}
    for s in pair.total.facets():
        for v in s:
            by_vertex[v].append((s, False))
    for s in pair.sub.facets():
        for v in s:
            by_vertex[v].append((s, True))
    return by_vertex


def random_map(
    rng: random.Random,
    source: SimplicialPair,
    target: SimplicialPair,
    tries: int = 400,
) -> SimplicialMap:
    """A uniformly-seeded valid simplicial map of pairs source -> target."""
    n_src = source.total.vertex_count
    all_targets = list(range(target.total.vertex_count))
    sub_vertices = sorted({v for s in target.sub.facets() for v in s})
    src_sub_vertices = {v for s in source.sub.facets() for v in s}
    if src_sub_vertices and not sub_vertices:
        raise GenerationError("source has a subcomplex but the target does not")
    table = _constraint_table(source)

    for _ in range(tries):
        order = list(range(n_src))
        rng.shuffle(order)
        images: List[Optional[int]] = [None] * n_src
        ok = True
        for v in order:
            pool = list(sub_vertices if v in src_sub_vertices else all_targets)
            rng.shuffle(pool)
            chosen = None
            for cand in pool:
                if _fits(v, cand, images, table, source, target):
                    chosen = cand
                    break
            if chosen is None:
                ok = False
                break
            images[v] = chosen
        if ok:
            return SimplicialMap(source, target, [int(i) for i in images])
    raise GenerationError(
        "no simplicial map found in %d attempts (source %r, target %r)"
        % (tries, source, target)
    )


def _fits(v, cand, images, table, source, target) -> bool:
    for simplex, is_sub in table[v]:
        seen = {cand}
        for u in simplex:
            if u != v and images[u] is not None:
                seen.add(images[u])
        image = tuple(sorted(seen))
        if not target.total.contains(image):
            return False
        if is_sub and not target.sub.contains(image):
            return False
    return True
