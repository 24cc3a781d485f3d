"""Cap products, duality, transfers, and the coincidence homomorphism.

Everything runs through a `Workspace`, which fixes the coefficient field
and memoizes homology bases and duality data per pair, since a single
report touches the same groups dozens of times.

Conventions (pinned by the calibration tests):
  * cap product on a front/back face split,
        xi cap s = (-1)^(p*q) * xi(back p-face) * (front q-face),
  * duality D sends a relative cocycle of degree n-k to its cap with the
    fundamental cycle, an absolute k-cycle,
  * transfer of f at a class z of degree n+m, applied degreewise:
        a |-> pullback(D^{-1} a) cap z,
  * trace of a degree-m endomorphism h of homology,
        L(h) = sum_k (-1)^(k(k+m)) sum_j x_j^k cap h(a_j^k),
  * the coincidence homomorphism of (f, g) at z is L(g_* . transfer_f^z),
    a class of degree |z| - n in the target manifold.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from . import linalg
from .complexes import (
    CoincidenceVerdict,
    ComplexError,
    MapError,
    ProductData,
    SimplicialMap,
    SimplicialPair,
    coincidence_witness,
    fundamental_class,
    OrientedFundamentalClass,
)
from .fields import Field
from .homology import (
    Chain,
    GradedMap,
    HomologyBasis,
    HomologyClass,
    compose,
    cross_product,
    induced_map,
    pull_cochain,
    push_chain,
)


class LefschetzError(ValueError):
    pass


class DualityError(LefschetzError):
    """The target pair does not support an invertible duality map."""


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def cap_chain(field: Field, xi: Chain, p: int, z: Chain) -> Chain:
    """Cap a degree-p cochain with a chain, both given as dicts."""
    out: Chain = {}
    for s, c in z.items():
        d = len(s) - 1
        q = d - p
        if q < 0:
            raise LefschetzError(
                "cap degree mismatch: cochain degree %d exceeds chain degree %d" % (p, d)
            )
        val = xi.get(s[q:])
        if val is None or not bool(val):
            continue
        front = s[: q + 1]
        add = field.of(_sign(p * q)) * c * val
        cur = out.get(front)
        out[front] = cur + add if cur is not None else add
    return {s: v for s, v in out.items() if bool(v)}


@dataclass
class CohomologyClass:
    """A cochain on a pair, carried as a dict, with its degree."""

    pair: SimplicialPair
    degree: int
    cochain: Chain


@dataclass
class DualityData:
    """Fundamental class plus the duality isomorphism, degree by degree."""

    mpair: SimplicialPair
    field: Field
    n: int
    fundamental: OrientedFundamentalClass
    o_chain: Chain
    absolute: HomologyBasis
    relative: HomologyBasis
    d: Dict[int, np.ndarray]
    d_inv: Dict[int, np.ndarray]
    dual_fundamental: Chain


@dataclass
class LefschetzEntry:
    degree: int
    index: int
    value: list
    nonzero: bool


@dataclass
class LefschetzReport:
    field_token: str
    n: int
    x_betti: List[int]
    m_betti: List[int]
    condition_a: bool
    entries: List[LefschetzEntry]
    any_nonzero: bool
    oracle: Optional[CoincidenceVerdict] = None


class Workspace:
    """A fixed-field computation context with memoized bases and duality."""

    def __init__(self, field: Field):
        self.field = field
        self._bases: Dict[tuple, HomologyBasis] = {}
        self._duality: Dict[tuple, DualityData] = {}
        self._induced: Dict[tuple, GradedMap] = {}
        self._pulled: Dict[tuple, Dict[Tuple[int, int], Chain]] = {}

    # ----- cached building blocks -------------------------------------

    def basis(self, pair: SimplicialPair) -> HomologyBasis:
        key = pair.key
        out = self._bases.get(key)
        if out is None:
            out = HomologyBasis(pair, self.field)
            self._bases[key] = out
        return out

    def absolute(self, pair_or_complex) -> HomologyBasis:
        total = pair_or_complex.total if isinstance(pair_or_complex, SimplicialPair) else pair_or_complex
        return self.basis(SimplicialPair.absolute(total))

    def induced_absolute(self, f: SimplicialMap) -> GradedMap:
        key = ("abs",) + f.key
        out = self._induced.get(key)
        if out is None:
            out = induced_map(f, self.absolute(f.source), self.absolute(f.target))
            self._induced[key] = out
        return out

    def induced_relative(self, f: SimplicialMap) -> GradedMap:
        key = ("rel",) + f.key
        out = self._induced.get(key)
        if out is None:
            out = induced_map(f, self.basis(f.source), self.basis(f.target))
            self._induced[key] = out
        return out

    def duality(self, mpair: SimplicialPair) -> DualityData:
        key = mpair.key
        out = self._duality.get(key)
        if out is None:
            out = self._build_duality(mpair)
            self._duality[key] = out
        return out

    def _build_duality(self, mpair: SimplicialPair) -> DualityData:
        try:
            fc = fundamental_class(mpair)
        except ComplexError as e:
            raise DualityError("target pair has no fundamental class: %s" % e) from e
        n = mpair.total.dim
        o_chain: Chain = {s: self.field.of(c) for s, c in fc.coefficients.items()}
        abs_basis = self.absolute(mpair)
        rel_basis = self.basis(mpair)
        d: Dict[int, np.ndarray] = {}
        d_inv: Dict[int, np.ndarray] = {}
        for k in range(n + 1):
            rows = abs_basis.betti_of(k)
            cols = rel_basis.betti_of(n - k)
            if rows != cols:
                raise DualityError(
                    "duality rank mismatch in degree %d: dim H_%d(M) = %d but "
                    "dim H^%d(M, boundary) = %d" % (k, k, rows, n - k, cols)
                )
            mat = linalg.zeros(self.field, rows, cols)
            for j in range(cols):
                xi = rel_basis.cocycle_chain(n - k, j)
                capped = cap_chain(self.field, xi, n - k, o_chain)
                coords = abs_basis.coords(capped, k)
                for i in range(rows):
                    mat[i, j] = coords[i]
            if rows:
                try:
                    inv = linalg.invert(self.field, mat)
                except linalg.LinAlgError:
                    raise DualityError("duality matrix is singular in degree %d" % k) from None
            else:
                inv = mat
            d[k] = mat
            d_inv[k] = inv
        o_coords = rel_basis.coords(o_chain, n)
        if len(o_coords) != 1 or not bool(o_coords[0]):
            raise DualityError("fundamental class does not generate top relative homology")
        scale = self.field.one / o_coords[0]
        dual_fundamental = {
            s: scale * v for s, v in rel_basis.cocycle_chain(n, 0).items()
        }
        return DualityData(
            mpair, self.field, n, fc, o_chain, abs_basis, rel_basis, d, d_inv, dual_fundamental
        )

    def _pulled_duals(self, f: SimplicialMap) -> Dict[Tuple[int, int], Chain]:
        """Pull every D^{-1}(basis class) cochain back through f, memoized."""
        key = f.key
        out = self._pulled.get(key)
        if out is not None:
            return out
        dd = self.duality(f.target)
        x_abs = self.absolute(f.source)
        out = {}
        for k in range(dd.n + 1):
            for j in range(dd.absolute.betti_of(k)):
                xi: Chain = {}
                col = dd.d_inv[k][:, j]
                for i in range(len(col)):
                    if not bool(col[i]):
                        continue
                    for s, v in dd.relative.cocycle_chain(dd.n - k, i).items():
                        cur = xi.get(s)
                        add = col[i] * v
                        xi[s] = cur + add if cur is not None else add
                out[(k, j)] = pull_cochain(f, xi, dd.n - k, x_abs.chain)
        self._pulled[key] = out
        return out

    # ----- the operations ---------------------------------------------

    def cap(self, xi: CohomologyClass, z: HomologyClass) -> HomologyClass:
        """Cap product of a cochain class with a homology class, landing in
        the absolute homology of the underlying total complex."""
        out_basis = self.absolute(z.basis.pair)
        capped = cap_chain(self.field, xi.cochain, xi.degree, z.chain())
        return out_basis.class_of(capped, z.degree - xi.degree)

    def dual_fundamental_cocycle(self, mpair: SimplicialPair) -> CohomologyClass:
        dd = self.duality(mpair)
        return CohomologyClass(mpair, dd.n, dict(dd.dual_fundamental))

    def transfer(self, f: SimplicialMap, z: HomologyClass) -> GradedMap:
        """The shriek map of f at z, from the target's homology to the
        source's, of degree |z| - n."""
        dd = self.duality(f.target)
        if z.basis.pair != f.source:
            raise LefschetzError("class does not live on the source pair of the map")
        x_abs = self.absolute(f.source)
        m = z.degree - dd.n
        z_chain = z.chain()
        pulled = self._pulled_duals(f)
        blocks: Dict[int, np.ndarray] = {}
        for k in range(dd.n + 1):
            bk = dd.absolute.betti_of(k)
            if bk == 0:
                continue
            if k + m < 0:
                # The cap with z is zero in negative output degrees.
                blocks[k] = linalg.zeros(self.field, 0, bk)
                continue
            mat = linalg.zeros(self.field, x_abs.betti_of(k + m), bk)
            for j in range(bk):
                capped = cap_chain(self.field, pulled[(k, j)], dd.n - k, z_chain)
                coords = x_abs.coords(capped, k + m)
                for i in range(len(coords)):
                    mat[i, j] = coords[i]
            blocks[k] = mat
        return GradedMap(dd.absolute, x_abs, m, blocks)

    def lefschetz_class(self, h: GradedMap, mpair: SimplicialPair) -> HomologyClass:
        """The trace-style class L(h) of a degree-m endomorphism of H(M)."""
        dd = self.duality(mpair)
        if h.source.pair != dd.absolute.pair or h.target.pair != dd.absolute.pair:
            raise LefschetzError("trace needs an endomorphism of the manifold's homology")
        m = h.degree
        if m < 0:
            return dd.absolute.zero_class(m)
        acc: Chain = {}
        for k in range(dd.n + 1):
            bk = dd.absolute.betti_of(k)
            if bk == 0:
                continue
            block = h.block(k)
            outer = self.field.of(_sign(k * (k + m)))
            for j in range(bk):
                col = block[:, j] if block.shape[0] else None
                if col is None or all(not bool(v) for v in col):
                    continue
                w = dd.absolute.representative(k + m, col)
                xi = dd.absolute.cocycle_chain(k, j)
                for s, v in cap_chain(self.field, xi, k, w).items():
                    add = outer * v
                    cur = acc.get(s)
                    acc[s] = cur + add if cur is not None else add
        acc = {s: v for s, v in acc.items() if bool(v)}
        return HomologyClass(dd.absolute, m, dd.absolute.coords(acc, m))

    def lefschetz_homomorphism(
        self, f: SimplicialMap, g: SimplicialMap, z: HomologyClass
    ) -> HomologyClass:
        """The coincidence homomorphism of (f, g) applied to z."""
        if g.source.total != f.source.total or g.target.total != f.target.total:
            raise LefschetzError("f and g must share source and target complexes")
        t = self.transfer(f, z)
        h = compose(self.induced_absolute(g), t)
        return self.lefschetz_class(h, f.target)

    def condition_a(self, f: SimplicialMap) -> bool:
        """Is f_* nonzero on top relative homology (degree n = dim target)?"""
        n = f.target.total.dim
        block = self.induced_relative(f).block(n)
        return not linalg.is_zero(block)

    def lefschetz_full(
        self, f: SimplicialMap, g: SimplicialMap, oracle: bool = False
    ) -> LefschetzReport:
        """Evaluate the coincidence homomorphism on a whole homology basis.

        Reports degrees n..2n of H(X, A); everything outside vanishes (that
        is one of the verified invariants, not an assumption baked in here).
        """
        dd = self.duality(f.target)
        relx = self.basis(f.source)
        n = dd.n
        entries: List[LefschetzEntry] = []
        any_nonzero = False
        for degree in range(n, 2 * n + 1):
            for j in range(relx.betti_of(degree)):
                z = relx.basis_class(degree, j)
                val = self.lefschetz_homomorphism(f, g, z)
                nonzero = not val.is_zero
                any_nonzero = any_nonzero or nonzero
                entries.append(LefschetzEntry(degree, j, list(val.coords), nonzero))
        verdict = None
        if oracle:
            if not self.field.is_rational:
                raise LefschetzError("the coincidence oracle runs over the rationals only")
            verdict = coincidence_witness(f, g)
        return LefschetzReport(
            field_token=self.field.token,
            n=n,
            x_betti=[relx.betti_of(k) for k in range(relx.dim + 1)],
            m_betti=[dd.absolute.betti_of(k) for k in range(n + 1)],
            condition_a=self.condition_a(f),
            entries=entries,
            any_nonzero=any_nonzero,
            oracle=verdict,
        )

    def wong_pairing(self, psi: SimplicialMap, z: HomologyClass):
        """Pair the dual fundamental cocycle with the pushforward of z.

        For a map into a closed H-manifold with psi = g * f^{-1} this equals
        the coincidence homomorphism of (f, g) at z (coefficient of the
        point class); see the group-target evaluation tests.

        The pairing carries the Koszul sign (-1)^n relative to a plain
        cochain evaluation.  That normalization is forced by the cap and
        trace conventions above: with either side computed on a circle or
        a product of circles, the trace route yields (-1)^n times the bare
        evaluation, so the bare form would break the equality in odd
        dimensions.
        """
        dd = self.duality(psi.target)
        if z.degree != dd.n:
            raise LefschetzError("evaluation pairing needs a class of degree %d" % dd.n)
        if z.basis.pair.total != psi.source.total:
            raise LefschetzError("class does not live on the source of the map")
        pushed = push_chain(psi, z.chain())
        total = self.field.zero
        for s, c in pushed.items():
            v = dd.dual_fundamental.get(s)
            if v is not None:
                total = total + v * c
        if dd.n % 2 == 1:
            total = -total
        return total

    def degree_2n_value(
        self, f: SimplicialMap, g: SimplicialMap, z: HomologyClass
    ) -> HomologyClass:
        """The closed-form value at top degree 2n: g_*(f^*(dual of O) cap z)."""
        dd = self.duality(f.target)
        n = dd.n
        if z.degree != 2 * n:
            raise LefschetzError("closed form applies in degree %d only" % (2 * n))
        if z.basis.pair != f.source:
            raise LefschetzError("class does not live on the source pair of the map")
        x_abs = self.absolute(f.source)
        pulled = pull_cochain(f, dd.dual_fundamental, n, x_abs.chain)
        capped = cap_chain(self.field, pulled, n, z.chain())
        pushed = push_chain(g, capped)
        return HomologyClass(dd.absolute, n, dd.absolute.coords(pushed, n))

    def parametrized_map(
        self, g: SimplicialMap, u: HomologyClass, prod: ProductData, mpair: SimplicialPair
    ) -> GradedMap:
        """The slice endomorphism of H(M): a |-> +-g_*(u x a), with the
        dimension-dependent sign."""
        dd = self.duality(mpair)
        if prod.right != mpair.total:
            raise LefschetzError("product data does not match the manifold")
        if g.source.total != prod.complex or g.target.total != mpair.total:
            raise LefschetzError("map endpoints do not match the product data")
        if u.basis.pair.total != prod.left:
            raise LefschetzError("parameter class does not live on the left factor")
        product_abs = self.absolute(prod.complex)
        mu = u.degree
        blocks: Dict[int, np.ndarray] = {}
        for k in range(dd.n + 1):
            bk = dd.absolute.betti_of(k)
            if bk == 0:
                continue
            sign = self.field.of(_sign((dd.n - k) * mu))
            mat = linalg.zeros(self.field, dd.absolute.betti_of(k + mu), bk)
            for j in range(bk):
                a = dd.absolute.basis_class(k, j)
                crossed = cross_product(u, a, prod, product_abs)
                pushed = push_chain(g, crossed.chain())
                coords = dd.absolute.coords(pushed, k + mu)
                for i in range(len(coords)):
                    mat[i, j] = sign * coords[i]
            blocks[k] = mat
        return GradedMap(dd.absolute, dd.absolute, mu, blocks)

    def parametrized_knill(
        self, g: SimplicialMap, u: HomologyClass, prod: ProductData, mpair: SimplicialPair
    ) -> HomologyClass:
        """The trace L of the slice endomorphism attached to (g, u)."""
        return self.lefschetz_class(self.parametrized_map(g, u, prod, mpair), mpair)

    # ----- identity checks (return failure descriptions, empty = pass) --

    def _all_basis_classes(self, basis: HomologyBasis):
        for degree in range(basis.dim + 1):
            for j in range(basis.betti_of(degree)):
                yield basis.basis_class(degree, j)

    def check_symmetry(self, f: SimplicialMap, g: SimplicialMap) -> List[str]:
        """Swapping the maps flips the value by (-1)^n (closed M, empty A)."""
        if not f.source.sub.is_empty or not f.target.sub.is_empty:
            raise LefschetzError("symmetry needs absolute maps into a closed manifold")
        dd = self.duality(f.target)
        sgn = self.field.of(_sign(dd.n))
        fails = []
        for z in self._all_basis_classes(self.basis(f.source)):
            lhs = self.lefschetz_homomorphism(f, g, z)
            rhs = self.lefschetz_homomorphism(g, f, z)
            if list(lhs.coords) != [sgn * v for v in rhs.coords]:
                fails.append(
                    "symmetry fails at degree %d index: %s vs %s"
                    % (z.degree, list(lhs.coords), list(rhs.coords))
                )
        return fails

    def check_naturality(
        self, f: SimplicialMap, g: SimplicialMap, h: SimplicialMap
    ) -> List[str]:
        """Precomposition with h matches applying h_* first."""
        if h.target != f.source:
            raise LefschetzError("h must land in the source pair of f")
        fh = f.compose(h)
        gh = g.absolute().compose(h.absolute())
        hstar = self.induced_relative(h)
        fails = []
        for z in self._all_basis_classes(self.basis(h.source)):
            lhs = self.lefschetz_homomorphism(fh, gh, z)
            rhs = self.lefschetz_homomorphism(f, g, hstar.apply(z))
            if not lhs.same_as(rhs):
                fails.append(
                    "naturality fails at degree %d: %s vs %s"
                    % (z.degree, list(lhs.coords), list(rhs.coords))
                )
        return fails

    def orientation_degree(self, k: SimplicialMap):
        """The scalar comparing the pushed fundamental class with the
        target's own."""
        dd_src = self.duality(k.source)
        dd_tgt = self.duality(k.target)
        pushed = push_chain(k, dd_src.o_chain)
        coords = self.basis(k.target).coords(pushed, dd_tgt.n)
        o_coords = self.basis(k.target).coords(dd_tgt.o_chain, dd_tgt.n)
        return coords[0] / o_coords[0] if len(coords) else self.field.one

    def check_naturality2(
        self,
        f: SimplicialMap,
        g: SimplicialMap,
        f_prime: SimplicialMap,
        g_prime: SimplicialMap,
        h: SimplicialMap,
        k: SimplicialMap,
    ) -> List[str]:
        """Conjugation-style naturality through a square with k an isomorphism.

        k must carry the chosen fundamental class of its source to the one
        of its target: the identity transports the point class through k,
        and an orientation flip would taint it with a factor of -1.
        """
        k.inverse()  # raises MapError unless k is an isomorphism
        if self.orientation_degree(k) != self.field.one:
            raise LefschetzError(
                "the isomorphism between the targets must preserve the orientations"
            )
        if f_prime.compose(h).images != k.compose(f).images:
            raise LefschetzError("square does not commute for the first map")
        if g_prime.absolute().compose(h.absolute()).images != k.absolute().compose(g.absolute()).images:
            raise LefschetzError("square does not commute for the second map")
        kstar = self.induced_absolute(k)
        hstar = self.induced_relative(h)
        fails = []
        for z in self._all_basis_classes(self.basis(f.source)):
            lhs = kstar.apply(self.lefschetz_homomorphism(f, g, z))
            rhs = self.lefschetz_homomorphism(f_prime, g_prime, hstar.apply(z))
            if not lhs.same_as(rhs):
                fails.append(
                    "conjugation naturality fails at degree %d: %s vs %s"
                    % (z.degree, list(lhs.coords), list(rhs.coords))
                )
        return fails

    def check_f_inverse(self, f: SimplicialMap) -> List[str]:
        """f_* after the transfer at z is multiplication by the degree of f_*z."""
        dd = self.duality(f.target)
        relx = self.basis(f.source)
        fstar_rel = self.induced_relative(f)
        o_coords = dd.relative.coords(dd.o_chain, dd.n)
        fails = []
        for j in range(relx.betti_of(dd.n)):
            z = relx.basis_class(dd.n, j)
            fz = fstar_rel.apply(z)
            k_scalar = fz.coords[0] / o_coords[0] if len(fz.coords) else self.field.zero
            t = self.transfer(f, z)
            round_trip = compose(self.induced_absolute(f.absolute()), t)
            if not round_trip.is_scalar(k_scalar):
                fails.append(
                    "transfer round-trip is not multiplication by %s (basis class %d)"
                    % (k_scalar, j)
                )
        return fails

    def check_naturality_transfer(
        self,
        f_outer: SimplicialMap,
        g_outer: SimplicialMap,
        h: SimplicialMap,
        tau: GradedMap,
        k_scalar,
    ) -> List[str]:
        """A partial transfer for h with trace k turns precomposition into
        multiplication by k."""
        k_scalar = self.field.of(k_scalar)
        if not compose(self.induced_absolute(h.absolute()), tau).is_scalar(k_scalar):
            raise LefschetzError("tau is not a partial transfer of trace %s" % (k_scalar,))
        fh = f_outer.compose(h)
        gh = g_outer.absolute().compose(h.absolute())
        fails = []
        for z in self._all_basis_classes(tau.source):
            lhs = self.lefschetz_homomorphism(fh, gh, tau.apply(z))
            rhs = self.lefschetz_homomorphism(f_outer, g_outer, z).scaled(k_scalar)
            if not lhs.same_as(rhs):
                fails.append(
                    "transfer naturality fails at degree %d: %s vs %s"
                    % (z.degree, list(lhs.coords), list(rhs.coords))
                )
        return fails

    def check_triviality(self, f: SimplicialMap, g: SimplicialMap) -> List[str]:
        """Vanishing in the forced ranges: below n, above 2n, and away from n
        when the maps coincide or g kills reduced homology."""
        dd = self.duality(f.target)
        relx = self.basis(f.source)
        n = dd.n
        same = f.images == g.images
        gs = self.induced_absolute(g)
        x_abs = self.absolute(f.source)
        g_trivial = x_abs.betti_of(0) == 1 and all(
            linalg.is_zero(gs.block(k)) for k in range(1, x_abs.dim + 1)
        )
        fails = []
        for z in self._all_basis_classes(relx):
            d = z.degree
            must_vanish = d < n or d > 2 * n or ((same or g_trivial) and d != n)
            if not must_vanish:
                continue
            val = self.lefschetz_homomorphism(f, g, z)
            if not val.is_zero:
                fails.append(
                    "expected vanishing at degree %d but got %s" % (d, list(val.coords))
                )
        if g_trivial and self.condition_a(f):
            hit = any(
                not self.lefschetz_homomorphism(f, g, z).is_zero
                for z in (relx.basis_class(n, j) for j in range(relx.betti_of(n)))
            )
            if not hit:
                fails.append(
                    "surjectivity condition holds and g is homologically trivial, "
                    "yet the homomorphism vanishes in degree %d" % n
                )
        return fails

    def check_soundness(self, f: SimplicialMap, g: SimplicialMap) -> List[str]:
        """A nonzero homomorphism must come with an actual coincidence point."""
        if not self.field.is_rational:
            raise LefschetzError("the coincidence oracle runs over the rationals only")
        report = self.lefschetz_full(f, g, oracle=True)
        if report.any_nonzero and report.oracle.status != "witness":
            return [
                "nonzero coincidence homomorphism but the exact search found no common point"
            ]
        return []

    def check_degree_2n(self, f: SimplicialMap, g: SimplicialMap) -> List[str]:
        """The top-degree values agree with the closed pullback-cap form."""
        dd = self.duality(f.target)
        relx = self.basis(f.source)
        top = 2 * dd.n
        fails = []
        if top > relx.dim:
            return fails
        for j in range(relx.betti_of(top)):
            z = relx.basis_class(top, j)
            lhs = self.lefschetz_homomorphism(f, g, z)
            rhs = self.degree_2n_value(f, g, z)
            if not lhs.same_as(rhs):
                fails.append(
                    "top-degree closed form disagrees at index %d: %s vs %s"
                    % (j, list(lhs.coords), list(rhs.coords))
                )
        return fails

    def check_knill(
        self,
        proj: SimplicialMap,
        g: SimplicialMap,
        prod: ProductData,
        mpair: SimplicialPair,
    ) -> List[str]:
        """On a product source, the homomorphism at u x O matches the trace
        of the slice endomorphism."""
        dd = self.duality(mpair)
        left_basis = self.absolute(prod.left)
        prod_basis = self.basis(proj.source)
        o_class = self.basis(mpair).class_of(dd.o_chain, dd.n)
        fails = []
        for u in self._all_basis_classes(left_basis):
            ux = cross_product(u, o_class, prod, prod_basis)
            lhs = self.lefschetz_homomorphism(proj, g, ux)
            rhs = self.parametrized_knill(g, u, prod, mpair)
            if not lhs.same_as(rhs):
                fails.append(
                    "parametrized trace disagrees at |u|=%d: %s vs %s"
                    % (u.degree, list(lhs.coords), list(rhs.coords))
                )
        return fails
