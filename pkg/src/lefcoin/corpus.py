"""Built-in example complexes and maps.

These back the ``builtin:<name>`` references accepted by the CLI and the
service, and they are the fixed part of the corpus the verification suite
runs over.  Everything here is tiny on purpose: the point is exact,
hand-checkable values, not scale.
"""

from __future__ import annotations

import itertools
from typing import Callable, Dict, List, Optional, Tuple

from .complexes import (
    ComplexError,
    MapError,
    ProductData,
    SimplicialComplex,
    SimplicialMap,
    SimplicialPair,
    orientability_status,
    product_complex,
)


def point() -> SimplicialPair:
    return SimplicialPair.absolute(SimplicialComplex(1, [[0]]))


def circle(k: int) -> SimplicialPair:
    if k < 3:
        raise ComplexError("a simplicial circle needs at least 3 vertices")
    edges = [[i, (i + 1) % k] for i in range(k)]
    return SimplicialPair.absolute(SimplicialComplex(k, edges))


def interval() -> SimplicialPair:
    total = SimplicialComplex(3, [[0, 1], [1, 2]])
    ends = SimplicialComplex(3, [[0], [2]])
    return SimplicialPair(total, ends)


def sphere(dim: int) -> SimplicialPair:
    """The boundary of the (dim+1)-simplex."""
    nv = dim + 2
    facets = [list(t) for t in itertools.combinations(range(nv), dim + 1)]
    return SimplicialPair.absolute(SimplicialComplex(nv, facets))


_torus_cache: Optional[ProductData] = None


def torus_product() -> ProductData:
    """The staircase torus C3 x C3 with its two projections."""
    global _torus_cache
    if _torus_cache is None:
        c3 = circle(3).total
        _torus_cache = product_complex(c3, c3)
    return _torus_cache


def torus() -> SimplicialPair:
    return SimplicialPair.absolute(torus_product().complex)


def _glue_tori(identify: Dict[int, int], seam: Tuple[int, ...]) -> SimplicialComplex:
    base = torus_product().complex
    nv = base.vertex_count
    fresh = {}
    nxt = nv
    for v in range(nv):
        if v in identify:
            fresh[v] = identify[v]
        else:
            fresh[v] = nxt
            nxt += 1
    facets = []
    for f in base.facets():
        if f != seam:
            facets.append(list(f))
    for f in base.facets():
        if f != seam:
            facets.append(sorted(fresh[v] for v in f))
    return SimplicialComplex(nxt, facets)


_genus2_cache: Optional[SimplicialComplex] = None


def genus2() -> SimplicialPair:
    """A closed orientable surface of genus 2.

    Two copies of the staircase torus, each with one triangle removed,
    glued along the exposed seam.  Only some of the six ways to match the
    seam vertices give an orientable result, so we search; the outcome is
    deterministic because the candidate order is.
    """
    global _genus2_cache
    if _genus2_cache is None:
        base = torus_product().complex
        seam = min(base.facets())
        for perm in itertools.permutations(seam):
            identify = dict(zip(seam, perm))
            glued = _glue_tori(identify, seam)
            if orientability_status(glued) == "orientable":
                _genus2_cache = glued
                break
        else:
            raise ComplexError("no orientable identification of the seam found")
    return SimplicialPair.absolute(_genus2_cache)


_BUILTIN_PAIRS: Dict[str, Callable[[], SimplicialPair]] = {
    "point": point,
    "c3": lambda: circle(3),
    "c6": lambda: circle(6),
    "interval": interval,
    "s2": lambda: sphere(2),
    "s3": lambda: sphere(3),
    "torus": torus,
    "genus2": genus2,
}


def builtin_names() -> List[str]:
    return sorted(_BUILTIN_PAIRS)


def builtin_pair(name: str) -> SimplicialPair:
    try:
        make = _BUILTIN_PAIRS[name]
    except KeyError:
        raise ComplexError(
            "unknown builtin %r (available: %s)" % (name, ", ".join(builtin_names()))
        )
    return make()


# Named maps resolvable from the CLI.  Each entry checks that the supplied
# source and target actually fit, so a bad reference fails as a parse error
# rather than deep inside a computation.

def _builtin_identity(src: SimplicialPair, tgt: SimplicialPair) -> SimplicialMap:
    if src != tgt:
        raise MapError("identity needs equal source and target")
    return SimplicialMap(src, tgt, list(range(src.total.vertex_count)))


def _builtin_proj(side: str, src: SimplicialPair, tgt: SimplicialPair) -> SimplicialMap:
    pd = torus_product()
    if src.total != pd.complex or tgt.total != pd.left:
        raise MapError("projection %s runs from builtin:torus to builtin:c3" % side)
    base = pd.proj_left if side == "left" else pd.proj_right
    return SimplicialMap(src, tgt, base.images)


def _builtin_double(src: SimplicialPair, tgt: SimplicialPair) -> SimplicialMap:
    if src.total.vertex_count != 6 or tgt.total.vertex_count != 3:
        raise MapError("double wraps builtin:c6 around builtin:c3")
    return SimplicialMap(src, tgt, [0, 1, 2, 0, 1, 2])


def _builtin_reverse(src: SimplicialPair, tgt: SimplicialPair) -> SimplicialMap:
    if src != tgt or src.total.vertex_count != 3:
        raise MapError("reverse flips builtin:interval or builtin:c3 onto itself")
    return SimplicialMap(src, tgt, [2, 1, 0])


def _builtin_rot(src: SimplicialPair, tgt: SimplicialPair) -> SimplicialMap:
    if src != tgt:
        raise MapError("rot needs equal source and target")
    k = src.total.vertex_count
    return SimplicialMap(src, tgt, [(v + 1) % k for v in range(k)])


def _builtin_swap(src: SimplicialPair, tgt: SimplicialPair) -> SimplicialMap:
    pd = torus_product()
    if src.total != pd.complex or tgt.total != pd.complex:
        raise MapError("swap exchanges the two factors of builtin:torus")
    nr = pd.right.vertex_count
    images = [(v % nr) * nr + (v // nr) for v in range(pd.complex.vertex_count)]
    return SimplicialMap(src, tgt, images)


def builtin_map(name: str, src: SimplicialPair, tgt: SimplicialPair) -> SimplicialMap:
    if name.startswith("const:"):
        try:
            v = int(name.split(":", 1)[1])
        except ValueError:
            raise MapError("const:<vertex> needs an integer vertex")
        return SimplicialMap(src, tgt, [v] * src.total.vertex_count)
    table = {
        "identity": _builtin_identity,
        "proj-left": lambda s, t: _builtin_proj("left", s, t),
        "proj-right": lambda s, t: _builtin_proj("right", s, t),
        "double": _builtin_double,
        "reverse": _builtin_reverse,
        "rot": _builtin_rot,
        "swap": _builtin_swap,
    }
    try:
        make = table[name]
    except KeyError:
        raise MapError(
            "unknown builtin map %r (available: %s, const:<vertex>)"
            % (name, ", ".join(sorted(table)))
        )
    return make(src, tgt)
