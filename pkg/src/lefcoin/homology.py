"""Relative simplicial chain complexes and homology with dual bases.

The chain complex of a pair (X, A) uses the simplices of X not in A as
a basis.  Homology representatives are picked deterministically from an
RREF computation, and each degree also carries a dual set of cocycles
(relative cochains) pairing with the representatives as the identity,
which is what makes coordinate extraction and cap-product bookkeeping
exact and cheap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dataclass_field
from typing import Dict, List, Tuple

import numpy as np

from . import linalg
from .complexes import ProductData, Simplex, SimplicialMap, SimplicialPair
from .fields import Field


class HomologyError(ValueError):
    pass


Chain = Dict[Simplex, object]  # simplex -> field scalar, zero entries omitted


class ChainComplex:
    """The ordered relative chain complex of a pair over a field."""

    def __init__(self, pair: SimplicialPair, field: Field):
        self.pair = pair
        self.field = field
        self.dim = pair.total.dim
        self.simplices: List[Tuple[Simplex, ...]] = []
        self.index: List[Dict[Simplex, int]] = []
        for k in range(self.dim + 1):
            rel = tuple(s for s in pair.total.simplices_of(k) if not pair.sub.contains(s))
            self.simplices.append(rel)
            self.index.append({s: i for i, s in enumerate(rel)})
        self._boundaries: List[np.ndarray] = []
        for k in range(self.dim + 1):
            rows = len(self.simplices[k - 1]) if k >= 1 else 0
            mat = linalg.zeros(field, rows, len(self.simplices[k]))
            if k >= 1:
                below = self.index[k - 1]
                for j, s in enumerate(self.simplices[k]):
                    for i in range(len(s)):
                        face = s[:i] + s[i + 1:]
                        row = below.get(face)
                        if row is not None:
                            mat[row, j] = field.of((-1) ** i)
            self._boundaries.append(mat)

    def size(self, k: int) -> int:
        if 0 <= k <= self.dim:
            return len(self.simplices[k])
        return 0

    def boundary(self, k: int) -> np.ndarray:
        """The matrix of d: C_k -> C_{k-1} (empty shapes off the range)."""
        if 1 <= k <= self.dim:
            return self._boundaries[k]
        if k == 0:
            return linalg.zeros(self.field, 0, self.size(0))
        return linalg.zeros(self.field, self.size(k - 1), 0)

    def vector_of(self, chain: Chain, k: int) -> np.ndarray:
        """Encode a chain dict as a coordinate vector in degree k.

        Entries carried by the subcomplex are dropped (that is the quotient);
        simplices foreign to the complex are an error.
        """
        vec = linalg.zero_vector(self.field, self.size(k))
        idx = self.index[k] if 0 <= k <= self.dim else {}
        for s, c in chain.items():
            if len(s) - 1 != k:
                raise HomologyError("chain entry %r does not have degree %d" % (s, k))
            pos = idx.get(s)
            if pos is None:
                if self.pair.sub.contains(s):
                    continue
                raise HomologyError("simplex %r is not in the complex" % (s,))
            vec[pos] = vec[pos] + self.field.of(c)
        return vec

    def chain_of(self, vec: np.ndarray, k: int) -> Chain:
        out: Chain = {}
        for i, s in enumerate(self.simplices[k] if 0 <= k <= self.dim else ()):
            if bool(vec[i]):
                out[s] = vec[i]
        return out


class HomologyBasis:
    """Homology of a pair with chosen cycle representatives and dual cocycles."""

    def __init__(self, pair: SimplicialPair, field: Field):
        self.pair = pair
        self.field = field
        self.chain = ChainComplex(pair, field)
        self.betti: List[int] = []
        self.cycles: List[np.ndarray] = []
        self.cocycles: List[np.ndarray] = []
        for k in range(self.chain.dim + 1):
            z = linalg.kernel_basis(field, self.chain.boundary(k))
            b = self.chain.boundary(k + 1)
            merged = np.hstack([b, z]) if z.shape[1] or b.shape[1] else linalg.zeros(field, self.chain.size(k), 0)
            _, pivots, _ = linalg.rref(field, merged)
            ncols_b = b.shape[1]
            reps_cols = [p - ncols_b for p in pivots if p >= ncols_b]
            reps = z[:, reps_cols] if reps_cols else linalg.zeros(field, self.chain.size(k), 0)
            beta = reps.shape[1]
            if beta:
                # Dual cocycles: kill boundaries, pair as identity with reps.
                system = np.vstack([b.transpose(), reps.transpose()])
                rhs = np.vstack([
                    linalg.zeros(field, b.shape[1], beta),
                    linalg.identity(field, beta),
                ])
                xi = linalg.solve_matrix(field, system, rhs)
                if xi is None:
                    raise HomologyError("no dual cocycles in degree %d" % k)
            else:
                xi = linalg.zeros(field, self.chain.size(k), 0)
            self.betti.append(beta)
            self.cycles.append(reps)
            self.cocycles.append(xi)

    @property
    def dim(self) -> int:
        return self.chain.dim

    def betti_of(self, k: int) -> int:
        if 0 <= k <= self.chain.dim:
            return self.betti[k]
        return 0

    def coords(self, chain: Chain, k: int) -> np.ndarray:
        """Coordinates of a cycle in the chosen basis (checks it is a cycle)."""
        vec = self.chain.vector_of(chain, k)
        bd = self.chain.boundary(k) @ vec if self.chain.size(k) else linalg.zero_vector(self.field, 0)
        if not linalg.is_zero(np.asarray(bd)):
            raise HomologyError("chain in degree %d is not a cycle" % k)
        if self.betti_of(k) == 0:
            return linalg.zero_vector(self.field, 0)
        return np.asarray(self.cocycles[k].transpose() @ vec)

    def class_of(self, chain: Chain, k: int) -> "HomologyClass":
        return HomologyClass(self, k, self.coords(chain, k))

    def representative(self, k: int, coords: np.ndarray) -> Chain:
        if self.betti_of(k) == 0:
            return {}
        vec = np.asarray(self.cycles[k] @ np.asarray(coords).reshape(-1, 1))[:, 0]
        return self.chain.chain_of(vec, k)

    def zero_class(self, k: int) -> "HomologyClass":
        return HomologyClass(self, k, linalg.zero_vector(self.field, self.betti_of(k)))

    def basis_class(self, k: int, j: int) -> "HomologyClass":
        coords = linalg.zero_vector(self.field, self.betti_of(k))
        coords[j] = self.field.one
        return HomologyClass(self, k, coords)

    def basis_classes(self, k: int) -> List["HomologyClass"]:
        return [self.basis_class(k, j) for j in range(self.betti_of(k))]

    def cocycle_chain(self, k: int, j: int) -> Chain:
        """The j-th dual cocycle in degree k as a cochain dict."""
        out: Chain = {}
        col = self.cocycles[k][:, j]
        for i, s in enumerate(self.chain.simplices[k]):
            if bool(col[i]):
                out[s] = col[i]
        return out


@dataclass
class HomologyClass:
    basis: HomologyBasis
    degree: int
    coords: np.ndarray

    def chain(self) -> Chain:
        return self.basis.representative(self.degree, self.coords)

    @property
    def is_zero(self) -> bool:
        return linalg.is_zero(np.asarray(self.coords))

    def coords_list(self) -> list:
        return list(self.coords)

    def scaled(self, c) -> "HomologyClass":
        c = self.basis.field.of(c)
        return HomologyClass(self.basis, self.degree, np.asarray([c * v for v in self.coords], dtype=object)
                             if len(self.coords) else self.coords)

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        if other.basis is not self.basis or other.degree != self.degree:
            raise HomologyError("cannot add classes from different groups")
        out = np.asarray([a + b for a, b in zip(self.coords, other.coords)], dtype=object) \
            if len(self.coords) else self.coords
        return HomologyClass(self.basis, self.degree, out)

    def same_as(self, other: "HomologyClass") -> bool:
        return (
            self.degree == other.degree
            and list(self.coords) == list(other.coords)
            and self.basis.pair == other.basis.pair
        )


@dataclass
class GradedMap:
    """A degree-shifting linear map between homology bases, one block per degree."""

    source: HomologyBasis
    target: HomologyBasis
    degree: int
    blocks: Dict[int, np.ndarray] = dataclass_field(default_factory=dict)

    def block(self, k: int) -> np.ndarray:
        if k in self.blocks:
            return self.blocks[k]
        return linalg.zeros(
            self.source.field, self.target.betti_of(k + self.degree), self.source.betti_of(k)
        )

    def apply(self, cls: HomologyClass) -> HomologyClass:
        k = cls.degree
        out = self.block(k) @ np.asarray(cls.coords).reshape(-1, 1) \
            if self.source.betti_of(k) else linalg.zeros(self.source.field, self.target.betti_of(k + self.degree), 1)
        return HomologyClass(self.target, k + self.degree, np.asarray(out)[:, 0])

    def eq(self, other: "GradedMap") -> bool:
        if self.degree != other.degree:
            return False
        for k in set(self.blocks) | set(other.blocks):
            if not linalg.eq(self.block(k), other.block(k)):
                return False
        return True

    @property
    def is_zero(self) -> bool:
        return all(linalg.is_zero(m) for m in self.blocks.values())

    def is_scalar(self, c) -> bool:
        """Does the map act as multiplication by c in every degree?"""
        c = self.source.field.of(c)
        if self.source.pair != self.target.pair or self.degree != 0:
            return False
        for k in range(self.source.dim + 1):
            n = self.source.betti_of(k)
            if n == 0:
                continue
            want = linalg.identity(self.source.field, n)
            for i in range(n):
                want[i, i] = c
            if not linalg.eq(self.block(k), want):
                return False
        return True


def identity_graded(basis: HomologyBasis) -> GradedMap:
    blocks = {
        k: linalg.identity(basis.field, basis.betti_of(k))
        for k in range(basis.dim + 1)
        if basis.betti_of(k)
    }
    return GradedMap(basis, basis, 0, blocks)


def compose(outer: GradedMap, inner: GradedMap) -> GradedMap:
    """outer after inner (inner's target basis must be outer's source basis)."""
    if inner.target is not outer.source and inner.target.pair != outer.source.pair:
        raise HomologyError("graded map composition mismatch")
    blocks = {}
    for k in range(inner.source.dim + 1):
        if inner.source.betti_of(k) == 0:
            continue
        mat = outer.block(k + inner.degree) @ inner.block(k)
        blocks[k] = np.asarray(mat)
    return GradedMap(inner.source, outer.target, inner.degree + outer.degree, blocks)


def induced_map(f: SimplicialMap, source_basis: HomologyBasis, target_basis: HomologyBasis) -> GradedMap:
    """The degree-0 map on homology induced by a simplicial map.

    The bases may refine the map's own pairs: all that is required is that
    the vertex map is simplicial for the basis pairs as well.
    """
    if f.source.total != source_basis.pair.total or f.target.total != target_basis.pair.total:
        raise HomologyError("map endpoints do not match the given bases")
    for s in source_basis.pair.sub.facets():
        img = f.image_simplex(s)
        if not target_basis.pair.sub.contains(img):
            raise HomologyError(
                "map does not send the source subcomplex into the target subcomplex"
            )
    field = source_basis.field
    blocks = {}
    for k in range(source_basis.dim + 1):
        if source_basis.betti_of(k) == 0:
            continue
        chain_mat = linalg.zeros(field, target_basis.chain.size(k), source_basis.chain.size(k))
        tgt_index = target_basis.chain.index[k] if k <= target_basis.dim else {}
        for j, s in enumerate(source_basis.chain.simplices[k]):
            img = f.chain_image(s)
            if img is None:
                continue
            sign, t = img
            row = tgt_index.get(t)
            if row is not None:
                chain_mat[row, j] = field.of(sign)
        on_cycles = chain_mat @ source_basis.cycles[k]
        coords = target_basis.cocycles[k].transpose() @ on_cycles \
            if k <= target_basis.dim and target_basis.betti_of(k) else \
            linalg.zeros(field, target_basis.betti_of(k), source_basis.betti_of(k))
        blocks[k] = np.asarray(coords)
    return GradedMap(source_basis, target_basis, 0, blocks)


def push_chain(f: SimplicialMap, chain: Chain) -> Chain:
    """Push a chain through a simplicial map on the chain level."""
    out: Chain = {}
    for s, c in chain.items():
        img = f.chain_image(s)
        if img is None:
            continue
        sign, t = img
        val = out.get(t)
        add = sign * c
        out[t] = val + add if val is not None else add
    return {s: v for s, v in out.items() if bool(v)}


def pull_cochain(f: SimplicialMap, xi: Chain, k: int, source_chain: ChainComplex) -> Chain:
    """Pull a cochain back: value on s is the signed value on the image."""
    out: Chain = {}
    for s in (source_chain.pair.total.simplices_of(k)):
        img = f.chain_image(s)
        if img is None:
            continue
        sign, t = img
        val = xi.get(t)
        if val is not None and bool(val):
            out[s] = sign * val
    return out


def _shuffle_sign(picks: Tuple[int, ...]) -> int:
    # Number of transpositions needed to unshuffle the staircase.
    inv = sum(p - i for i, p in enumerate(picks))
    return -1 if inv % 2 else 1


def cross_product(
    a: HomologyClass,
    b: HomologyClass,
    prod: ProductData,
    product_basis: HomologyBasis,
) -> HomologyClass:
    """The homology cross product of a (on the left factor) and b (right).

    Chains are combined with shuffle signs on the staircase triangulation
    and the result is read off in the product basis; the cycle check there
    guards the signs.
    """
    field = product_basis.field
    p, q = a.degree, b.degree
    nr = prod.right.vertex_count
    out: Chain = {}
    for s, cu in a.chain().items():
        for t, cw in b.chain().items():
            for picks in itertools.combinations(range(p + q), p):
                pickset = set(picks)
                i = j = 0
                verts = [s[0] * nr + t[0]]
                for step in range(p + q):
                    if step in pickset:
                        i += 1
                    else:
                        j += 1
                    verts.append(s[i] * nr + t[j])
                key = tuple(verts)
                add = field.of(_shuffle_sign(picks)) * cu * cw
                cur = out.get(key)
                out[key] = cur + add if cur is not None else add
    out = {s: v for s, v in out.items() if bool(v)}
    return product_basis.class_of(out, p + q)
