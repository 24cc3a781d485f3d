"""Finite simplicial complexes, pairs, maps, orientations, and products.

Simplices are tuples of strictly increasing vertex ids.  A complex is
stored fully expanded (every face present), which is what the chain
complex layer wants anyway.  Also home to the exact coincidence oracle:
a barycentric feasibility search for a common point of two maps.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import linalg
from .fields import QQ

Simplex = Tuple[int, ...]


class ComplexError(ValueError):
    """Malformed complex, pair, or document-level validation failure."""


class MapError(ValueError):
    """A vertex assignment that is not simplicial (or not a pair map)."""


class NotPseudoManifoldError(ComplexError):
    pass


class NonOrientableError(ComplexError):
    pass


class DisconnectedError(ComplexError):
    pass


def as_simplex(vertices: Iterable[int]) -> Simplex:
    vs = tuple(sorted(vertices))
    if len(set(vs)) != len(vs):
        raise ComplexError("repeated vertex in simplex %r" % (tuple(vertices),))
    if not vs:
        raise ComplexError("empty simplex")
    return vs


def _faces(s: Simplex) -> List[Simplex]:
    return [s[:i] + s[i + 1:] for i in range(len(s))]


class SimplicialComplex:
    """A finite abstract simplicial complex on vertex ids 0..vertex_count-1."""

    def __init__(self, vertex_count: int, facets: Iterable[Iterable[int]]):
        if vertex_count < 0:
            raise ComplexError("negative vertex count")
        self.vertex_count = vertex_count
        seen: set[Simplex] = set()
        stack = [as_simplex(f) for f in facets]
        for s in stack:
            if s[-1] >= vertex_count or s[0] < 0:
                raise ComplexError("vertex id out of range in simplex %r" % (s,))
        while stack:
            s = stack.pop()
            if s in seen:
                continue
            seen.add(s)
            if len(s) > 1:
                stack.extend(_faces(s))
        by_dim: Dict[int, List[Simplex]] = {}
        for s in seen:
            by_dim.setdefault(len(s) - 1, []).append(s)
        self.simplices: Dict[int, Tuple[Simplex, ...]] = {
            k: tuple(sorted(v)) for k, v in sorted(by_dim.items())
        }
        self._index: Dict[int, Dict[Simplex, int]] = {
            k: {s: i for i, s in enumerate(v)} for k, v in self.simplices.items()
        }
        self.dim = max(self.simplices) if self.simplices else -1

    @classmethod
    def from_simplices(cls, vertex_count: int, simplices: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Build from an explicit simplex list, insisting it is face-closed."""
        listed = {as_simplex(s) for s in simplices}
        for s in sorted(listed, key=lambda t: (len(t), t)):
            for f in _faces(s):
                if f and f not in listed:
                    raise ComplexError("complex is not face-closed: %r lacks face %r" % (s, f))
        return cls(vertex_count, listed)

    @classmethod
    def empty(cls, vertex_count: int) -> "SimplicialComplex":
        return cls(vertex_count, [])

    @property
    def key(self):
        return (self.vertex_count, tuple((k, v) for k, v in self.simplices.items()))

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "SimplicialComplex(%d vertices, dim %d)" % (self.vertex_count, self.dim)

    @property
    def is_empty(self) -> bool:
        return not self.simplices

    def simplices_of(self, k: int) -> Tuple[Simplex, ...]:
        return self.simplices.get(k, ())

    def index(self, k: int) -> Dict[Simplex, int]:
        return self._index.get(k, {})

    def contains(self, s: Simplex) -> bool:
        return s in self._index.get(len(s) - 1, {})

    def vertices(self) -> Tuple[int, ...]:
        return tuple(s[0] for s in self.simplices_of(0))

    def facets(self) -> Tuple[Simplex, ...]:
        """The maximal simplices."""
        covered: set[Simplex] = set()
        for k in self.simplices:
            for s in self.simplices[k]:
                for f in _faces(s):
                    if f:
                        covered.add(f)
        out = [s for k in self.simplices for s in self.simplices[k] if s not in covered]
        return tuple(sorted(out, key=lambda t: (len(t), t)))

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * len(v) for k, v in self.simplices.items())

    def counts(self) -> Dict[int, int]:
        return {k: len(v) for k, v in self.simplices.items()}


class SimplicialPair:
    """A complex together with a subcomplex, sharing one vertex id space."""

    def __init__(self, total: SimplicialComplex, sub: Optional[SimplicialComplex] = None):
        if sub is None:
            sub = SimplicialComplex.empty(total.vertex_count)
        self.total = total
        self.sub = sub
        self.validate()

    def validate(self) -> None:
        if self.sub.vertex_count != self.total.vertex_count:
            raise ComplexError(
                "subcomplex lives on %d vertex ids, total on %d"
                % (self.sub.vertex_count, self.total.vertex_count)
            )
        for k in self.sub.simplices:
            for s in self.sub.simplices[k]:
                if not self.total.contains(s):
                    raise ComplexError("subcomplex simplex %r is not in the total complex" % (s,))

    @property
    def key(self):
        return (self.total.key, self.sub.key)

    def __eq__(self, other):
        return isinstance(other, SimplicialPair) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "SimplicialPair(total dim %d, sub dim %d)" % (self.total.dim, self.sub.dim)

    @classmethod
    def absolute(cls, total: SimplicialComplex) -> "SimplicialPair":
        return cls(total, None)


def _permutation_sign(seq: Sequence[int]) -> int:
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


class SimplicialMap:
    """A simplicial map of pairs, given by vertex images on the source."""

    def __init__(self, source: SimplicialPair, target: SimplicialPair, images: Sequence[int]):
        images = tuple(int(v) for v in images)
        if len(images) != source.total.vertex_count:
            raise MapError(
                "expected %d vertex images, got %d" % (source.total.vertex_count, len(images))
            )
        for v in images:
            if not 0 <= v < target.total.vertex_count:
                raise MapError("vertex image %d out of range" % v)
        self.source = source
        self.target = target
        self.images = images
        for s in source.total.facets():
            img = tuple(sorted({images[v] for v in s}))
            if not target.total.contains(img):
                raise MapError("image %r of simplex %r is not a simplex of the target" % (img, s))
        for s in source.sub.facets():
            img = tuple(sorted({images[v] for v in s}))
            if not target.sub.contains(img):
                raise MapError(
                    "subcomplex simplex %r maps to %r outside the target subcomplex" % (s, img)
                )

    def vertex_image(self, v: int) -> int:
        return self.images[v]

    def image_simplex(self, s: Simplex) -> Simplex:
        return tuple(sorted({self.images[v] for v in s}))

    def chain_image(self, s: Simplex) -> Optional[Tuple[int, Simplex]]:
        """Image on the chain level: (sign, simplex), or None when degenerate."""
        imgs = [self.images[v] for v in s]
        if len(set(imgs)) != len(imgs):
            return None
        return _permutation_sign(imgs), tuple(sorted(imgs))

    def compose(self, other: "SimplicialMap") -> "SimplicialMap":
        """self after other; validity is re-checked on construction."""
        if other.target.total != self.source.total:
            raise MapError("composition mismatch: inner target differs from outer source")
        images = [self.images[other.images[v]] for v in range(len(other.images))]
        return SimplicialMap(other.source, self.target, images)

    def absolute(self) -> "SimplicialMap":
        """The same vertex map, viewed between absolute pairs."""
        return SimplicialMap(
            SimplicialPair.absolute(self.source.total),
            SimplicialPair.absolute(self.target.total),
            self.images,
        )

    def inverse(self) -> "SimplicialMap":
        n = self.source.total.vertex_count
        if self.target.total.vertex_count != n or sorted(self.images) != list(range(n)):
            raise MapError("map is not a vertex bijection")
        inv = [0] * n
        for v, w in enumerate(self.images):
            inv[w] = v
        return SimplicialMap(self.target, self.source, inv)

    @property
    def key(self):
        return (self.source.key, self.target.key, self.images)

    def __eq__(self, other):
        return isinstance(other, SimplicialMap) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "SimplicialMap(%r)" % (self.images,)


def identity_map(pair: SimplicialPair) -> SimplicialMap:
    return SimplicialMap(pair, pair, list(range(pair.total.vertex_count)))


def constant_map(source: SimplicialPair, target: SimplicialPair, vertex: int) -> SimplicialMap:
    return SimplicialMap(source, target, [vertex] * source.total.vertex_count)


def _ridge_incidence(c: SimplicialComplex):
    """Map each (n-1)-simplex to the list of (top simplex, removed position)."""
    n = c.dim
    inc: Dict[Simplex, List[Tuple[Simplex, int]]] = {}
    for top in c.simplices_of(n):
        for i in range(len(top)):
            ridge = top[:i] + top[i + 1:]
            inc.setdefault(ridge, []).append((top, i))
    return inc


def _check_pseudo_manifold(c: SimplicialComplex):
    n = c.dim
    if n < 0:
        raise NotPseudoManifoldError("empty complex has no fundamental class")
    for f in c.facets():
        if len(f) - 1 != n:
            raise NotPseudoManifoldError(
                "complex is not pure: maximal simplex %r has dimension %d, not %d"
                % (f, len(f) - 1, n)
            )
    inc = _ridge_incidence(c)
    for ridge, tops in inc.items():
        if len(tops) > 2:
            raise NotPseudoManifoldError(
                "face %r lies in %d top simplices" % (ridge, len(tops))
            )
    return inc


def boundary_subcomplex(c: SimplicialComplex) -> SimplicialComplex:
    """The subcomplex of (n-1)-faces lying in exactly one top simplex."""
    if c.is_empty:
        return SimplicialComplex.empty(c.vertex_count)
    inc = _check_pseudo_manifold(c)
    rim = [ridge for ridge, tops in inc.items() if len(tops) == 1 and ridge]
    return SimplicialComplex(c.vertex_count, rim)


@dataclass
class OrientedFundamentalClass:
    """A coherent orientation of the top simplices of a manifold pair."""

    pair: SimplicialPair
    degree: int
    coefficients: Dict[Simplex, int]


def fundamental_class(pair: SimplicialPair) -> OrientedFundamentalClass:
    """Orient the top simplices coherently, or explain why that is impossible.

    The lexicographically least top simplex gets +1 with ascending vertex
    order; signs propagate across interior ridges so that the boundary of
    the total chain is carried by the subcomplex.
    """
    total = pair.total
    n = total.dim
    inc = _check_pseudo_manifold(total)
    expected = boundary_subcomplex(total)
    if pair.sub != expected:
        raise ComplexError(
            "subcomplex is not the boundary of the total complex"
        )
    tops = total.simplices_of(n)
    if not tops:
        raise NotPseudoManifoldError("no top simplices")
    if n == 0:
        if len(tops) > 1:
            raise DisconnectedError("0-dimensional complex with %d points" % len(tops))
        return OrientedFundamentalClass(pair, 0, {tops[0]: 1})
    signs: Dict[Simplex, int] = {tops[0]: 1}
    queue = [tops[0]]
    while queue:
        cur = queue.pop()
        s_cur = signs[cur]
        for i in range(len(cur)):
            ridge = cur[:i] + cur[i + 1:]
            for other, j in inc[ridge]:
                if other == cur:
                    continue
                forced = -s_cur * (-1) ** (i + j)
                if other in signs:
                    if signs[other] != forced:
                        raise NonOrientableError(
                            "orientation cannot be made coherent across face %r" % (ridge,)
                        )
                else:
                    signs[other] = forced
                    queue.append(other)
    if len(signs) != len(tops):
        raise DisconnectedError(
            "top simplices split into several components (%d of %d reached)"
            % (len(signs), len(tops))
        )
    return OrientedFundamentalClass(pair, n, signs)


def automorphisms(c: SimplicialComplex) -> List[List[int]]:
    """All vertex bijections mapping the complex onto itself.

    Straight backtracking over vertex images; partial assignments are
    pruned as soon as some partially-mapped simplex leaves the complex.
    Meant for the small corpus, where the groups have at most a few dozen
    elements.
    """
    nv = c.vertex_count
    facets_by_vertex: Dict[int, List[Simplex]] = {v: [] for v in range(nv)}
    for f in c.facets():
        for v in f:
            facets_by_vertex[v].append(f)
    facet_set = set(c.facets())
    found: List[List[int]] = []
    images: List[Optional[int]] = [None] * nv
    used = [False] * nv

    def feasible(v: int) -> bool:
        for f in facets_by_vertex[v]:
            img = sorted(images[u] for u in f if images[u] is not None)
            if len(img) == len(f):
                if tuple(img) not in facet_set:
                    return False
            elif not c.contains(tuple(img)):
                return False
        return True

    def extend(v: int) -> None:
        if v == nv:
            found.append([int(i) for i in images])
            return
        for cand in range(nv):
            if used[cand]:
                continue
            images[v] = cand
            used[cand] = True
            if feasible(v):
                extend(v + 1)
            images[v] = None
            used[cand] = False

    extend(0)
    return found


def orientability_status(c: SimplicialComplex) -> str:
    """Classify a complex for reporting: orientable / non-orientable / worse."""
    try:
        fundamental_class(SimplicialPair(c, boundary_subcomplex(c)))
    except NonOrientableError:
        return "non-orientable"
    except DisconnectedError:
        return "disconnected"
    except NotPseudoManifoldError:
        return "not a pseudo-manifold"
    except ComplexError:
        return "not a pseudo-manifold"
    return "orientable"


@dataclass(frozen=True)
class ProductData:
    """A staircase triangulation of left x right with its two projections."""

    complex: "SimplicialComplex"
    left: "SimplicialComplex"
    right: "SimplicialComplex"
    proj_left: "SimplicialMap"
    proj_right: "SimplicialMap"

    def vertex_id(self, u: int, w: int) -> int:
        return u * self.right.vertex_count + w


def product_complex(left: SimplicialComplex, right: SimplicialComplex) -> ProductData:
    """Triangulate the product: one top simplex per shuffle of facet pairs."""
    nr = right.vertex_count
    vcount = left.vertex_count * nr
    facets: set[Simplex] = set()
    for a in left.facets():
        p = len(a) - 1
        for b in right.facets():
            q = len(b) - 1
            for picks in itertools.combinations(range(p + q), p):
                pickset = set(picks)
                i = j = 0
                verts = [a[0] * nr + b[0]]
                for step in range(p + q):
                    if step in pickset:
                        i += 1
                    else:
                        j += 1
                    verts.append(a[i] * nr + b[j])
                facets.add(tuple(verts))
    prod = SimplicialComplex(vcount, facets)
    left_images = [0] * vcount
    right_images = [0] * vcount
    for u in range(left.vertex_count):
        for w in range(nr):
            left_images[u * nr + w] = u
            right_images[u * nr + w] = w
    proj_left = SimplicialMap(
        SimplicialPair.absolute(prod), SimplicialPair.absolute(left), left_images
    )
    proj_right = SimplicialMap(
        SimplicialPair.absolute(prod), SimplicialPair.absolute(right), right_images
    )
    return ProductData(prod, left, right, proj_left, proj_right)


def product_pair(left: SimplicialComplex, right_pair: SimplicialPair):
    """The pair (left x total, left x sub), plus product data and the
    right projection as a map of pairs."""
    prod = product_complex(left, right_pair.total)
    sub_simplices = []
    for k in prod.complex.simplices:
        for s in prod.complex.simplices[k]:
            img = prod.proj_right.image_simplex(s)
            if right_pair.sub.contains(img):
                sub_simplices.append(s)
    sub = SimplicialComplex.from_simplices(prod.complex.vertex_count, sub_simplices) \
        if sub_simplices else SimplicialComplex.empty(prod.complex.vertex_count)
    pair = SimplicialPair(prod.complex, sub)
    proj = SimplicialMap(pair, right_pair, prod.proj_right.images)
    return pair, prod, proj


@dataclass
class CoincidenceVerdict:
    """Outcome of the exact coincidence search for two maps.

    Either a witness (simplex plus exact barycentric coordinates of a
    common point) or a certificate that every simplex was checked and
    none admits one.
    """

    status: str  # "witness" | "disjoint-certificate"
    simplex: Optional[Simplex] = None
    barycentric: Optional[Tuple[Fraction, ...]] = None
    simplices_checked: int = 0


def coincidence_witness(f: SimplicialMap, g: SimplicialMap) -> CoincidenceVerdict:
    """Search every simplex of the common source for an exact common point.

    On the simplex spanned by v_0..v_d a point is sum t_i v_i; its two
    images agree iff the images match coordinatewise in the target, an
    exact rational feasibility problem.  Simplices are scanned by
    (dimension, lex) order, so the first witness is deterministic.
    """
    if f.source.total != g.source.total:
        raise MapError("coincidence search needs a common source complex")
    if f.target.total != g.target.total:
        raise MapError("coincidence search needs a common target complex")
    src = f.source.total
    tgt_n = f.target.total.vertex_count
    checked = 0
    for k in sorted(src.simplices):
        for s in src.simplices[k]:
            checked += 1
            d = len(s)
            rows = []
            for u in range(tgt_n):
                rows.append([
                    Fraction((1 if f.images[v] == u else 0) - (1 if g.images[v] == u else 0))
                    for v in s
                ])
            rows.append([Fraction(1)] * d)
            rhs = [Fraction(0)] * tgt_n + [Fraction(1)]
            a = linalg.matrix(QQ, rows)
            b = linalg.vector(QQ, rhs)
            x = linalg.linear_feasibility(QQ, a, b, range(d))
            if x is not None:
                bary = tuple(Fraction(v) for v in x)
                # Exactness spot check: both affine images really agree.
                fi = [Fraction(0)] * tgt_n
                gi = [Fraction(0)] * tgt_n
                for t, v in zip(bary, s):
                    fi[f.images[v]] += t
                    gi[g.images[v]] += t
                assert fi == gi and sum(bary) == 1 and all(t >= 0 for t in bary)
                return CoincidenceVerdict("witness", s, bary, checked)
    return CoincidenceVerdict("disjoint-certificate", None, None, checked)
