"""Deterministic invariant suite over the builtin corpus plus random maps.

Everything the library promises is an identity, so the suite just runs
identities: calibration against Euler characteristics, duality
invertibility, the symmetry / naturality / transfer / vanishing laws on
streams of seeded random simplicial maps, the two independent code paths
for top-degree and product sources, the evaluation pairing on circles,
and the coincidence oracle as the soundness referee.

The report is plain text with one line per check, built in a fixed order:
two runs with the same field, seed and trial count are byte-identical.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dataclass_field
from typing import Callable, List, Optional

from . import corpus
from .complexes import (
    SimplicialMap,
    SimplicialPair,
    automorphisms,
    product_pair,
)
from .fields import Field
from .lefschetz import DualityError, Workspace
from .randmaps import GenerationError, random_map

# Frozen facts about the corpus; the suite cross-checks the shipped
# complexes against these before trusting them as test beds.
_EXPECTED = {
    "point": (1, [1]),
    "c3": (0, [1, 1]),
    "c6": (0, [1, 1]),
    "interval": (1, [0, 1]),
    "s2": (2, [1, 0, 1]),
    "s3": (0, [1, 0, 0, 1]),
    "torus": (0, [1, 2, 1]),
    "genus2": (-2, [1, 4, 1]),
}

_CLOSED = ["point", "c3", "c6", "s2", "s3", "torus", "genus2"]


@dataclass
class VerifyReport:
    field_token: str
    seed: int
    trials: int
    lines: List[str] = dataclass_field(default_factory=list)
    failures: List[str] = dataclass_field(default_factory=list)
    checks: int = 0
    map_pairs: int = 0
    sphere_pairs: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def text(self) -> str:
        head = [
            "coincidence invariant suite",
            "field=%s seed=%d trials=%d" % (self.field_token, self.seed, self.trials),
        ]
        tail = [
            "summary checks=%d map_pairs=%d sphere_pairs=%d failures=%d"
            % (self.checks, self.map_pairs, self.sphere_pairs, len(self.failures)),
            "PASS" if self.passed else "FAIL",
        ]
        return "\n".join(head + self.lines + tail) + "\n"

    def as_dict(self) -> dict:
        return {
            "field": self.field_token,
            "seed": self.seed,
            "trials": self.trials,
            "checks": self.checks,
            "map_pairs": self.map_pairs,
            "sphere_pairs": self.sphere_pairs,
            "failures": list(self.failures),
            "passed": self.passed,
        }


class _Suite:
    def __init__(self, field: Field, seed: int, trials: int):
        self.w = Workspace(field)
        self.field = field
        self.report = VerifyReport(field.token, seed, trials)
        self.trials = trials
        master = random.Random(seed)
        self.rngs = {
            name: random.Random(master.getrandbits(64))
            for name in [
                "c3/c3", "c6/c3", "torus/c3", "torus/torus",
                "s2/s2", "s3/s2", "interval/interval", "genus2/c3", "knill",
            ]
        }

    def check(self, name: str, run: Callable[[], List[str]]) -> None:
        self.report.checks += 1
        try:
            problems = run()
        except (DualityError, GenerationError) as exc:
            problems = [str(exc)]
        if problems:
            for p in problems:
                self.report.failures.append("%s: %s" % (name, p))
                self.report.lines.append("FAIL %s: %s" % (name, p))
        else:
            self.report.lines.append("ok   %s" % name)

    # ----- fixed corpus checks ------------------------------------------

    def corpus_shape(self) -> None:
        for name in sorted(_EXPECTED):
            pair = corpus.builtin_pair(name)
            chi, betti = _EXPECTED[name]

            def run(pair=pair, chi=chi, betti=betti):
                out = []
                if pair.total.euler_characteristic() != chi:
                    out.append("euler characteristic %d, expected %d"
                               % (pair.total.euler_characteristic(), chi))
                basis = self.w.basis(pair)
                got = [basis.betti_of(k) for k in range(len(betti))]
                if got != betti:
                    out.append("betti %r, expected %r" % (got, betti))
                return out

            self.check("corpus %s shape" % name, run)

    def duality_suite(self) -> None:
        for name in sorted(_EXPECTED):
            pair = corpus.builtin_pair(name)

            def run(pair=pair):
                self.w.duality(pair)
                return []

            self.check("duality %s invertible over %s" % (name, self.field.token), run)

    def calibration(self) -> None:
        for name in _CLOSED + ["interval"]:
            pair = corpus.builtin_pair(name)
            chi = pair.total.euler_characteristic()
            if name == "interval":
                chi = 1

            def run(pair=pair, chi=chi):
                ident = corpus.builtin_map("identity", pair, pair)
                val = self.w.lefschetz_homomorphism(
                    ident, ident, self._top_class(pair)
                )
                want = [self.field.of(chi)]
                if list(val.coords) != want:
                    return ["identity trace %s, expected %s" % (list(val.coords), want)]
                return []

            self.check("calibration %s chi=%d" % (name, chi), run)

    def _top_class(self, mpair: SimplicialPair):
        dd = self.w.duality(mpair)
        return self.w.basis(mpair).class_of(dd.o_chain, dd.n)

    def wong_fixed(self) -> None:
        c3 = corpus.builtin_pair("c3")
        c6 = corpus.builtin_pair("c6")
        s2 = corpus.builtin_pair("s2")
        pt = corpus.builtin_pair("point")
        cases = [
            ("identity on c3", c3, c3, corpus.builtin_map("identity", c3, c3), 1),
            ("reverse on c3", c3, c3, SimplicialMap(c3, c3, [0, 2, 1]), 1),
            ("double c6->c3", c6, c3, corpus.builtin_map("double", c6, c3), 2),
            ("constant on c3", c3, c3, corpus.builtin_map("const:0", c3, c3), 0),
            ("identity on s2", s2, s2, corpus.builtin_map("identity", s2, s2), 1),
            ("point", c3, pt, corpus.builtin_map("const:0", c3, pt), 1),
        ]
        for label, src, tgt, psi, magnitude in cases:

            def run(src=src, tgt=tgt, psi=psi, magnitude=magnitude):
                basis = self.w.basis(src)
                dd = self.w.duality(tgt)
                out = []
                for j in range(basis.betti_of(dd.n)):
                    z = basis.basis_class(dd.n, j)
                    pairing = self.w.wong_pairing(psi, z)
                    f = corpus.builtin_map("const:0", src, tgt)
                    lam = self.w.lefschetz_homomorphism(f, psi, z)
                    coeff = lam.coords[0] if len(lam.coords) else self.field.zero
                    if pairing != coeff:
                        out.append(
                            "pairing %s but coefficient %s" % (pairing, coeff)
                        )
                    if magnitude is not None:
                        allowed = {
                            self.field.of(magnitude), -self.field.of(magnitude)
                        }
                        if pairing not in allowed:
                            out.append(
                                "pairing %s not of magnitude %d" % (pairing, magnitude)
                            )
                return out

            self.check("wong %s" % label, run)

    def fixed_identities(self) -> None:
        c3 = corpus.builtin_pair("c3")
        tor = corpus.builtin_pair("torus")
        pd = corpus.torus_product()
        pleft = corpus.builtin_map("proj-left", tor, c3)
        pright = corpus.builtin_map("proj-right", tor, c3)

        self.check(
            "lefschetz identity pair on s2 doubles the point",
            lambda: self._s2_double(),
        )
        self.check(
            "top-degree closed form, torus projections",
            lambda: self.w.check_degree_2n(pleft, pright),
        )
        self.check("condition (A) torus projection", lambda: (
            [] if self.w.condition_a(pright) else ["expected a surjective period"]
        ))
        self.check("condition (A) constant map", lambda: (
            [] if not self.w.condition_a(corpus.builtin_map("const:0", tor, c3))
            else ["constant map cannot hit the top class"]
        ))

        def transfer_naturality():
            c6 = corpus.builtin_pair("c6")
            dbl = corpus.builtin_map("double", c6, c3)
            basis = self.w.basis(c6)
            dd = self.w.duality(c3)
            z = basis.basis_class(1, 0)
            o_coords = self.w.basis(c3).coords(dd.o_chain, 1)
            k = self.w.induced_relative(dbl).apply(z).coords[0] / o_coords[0]
            tau = self.w.transfer(dbl, z)
            f = corpus.builtin_map("rot", c3, c3)
            g = SimplicialMap(c3, c3, [0, 2, 1])
            return self.w.check_naturality_transfer(f, g, dbl, tau, k)

        self.check("partial transfer naturality, double wrap", transfer_naturality)

        def knill_interval():
            iv = corpus.builtin_pair("interval")
            ppair, pdata, proj = product_pair(c3.total, iv)
            g = SimplicialMap(ppair, iv, proj.images)
            return self.w.check_knill(proj, g, pdata, iv)

        self.check("parametrized trace over an interval fiber", knill_interval)

    def _s2_double(self) -> List[str]:
        s2 = corpus.builtin_pair("s2")
        ident = corpus.builtin_map("identity", s2, s2)
        val = self.w.lefschetz_homomorphism(ident, ident, self._top_class(s2))
        want = [self.field.of(2)]
        if list(val.coords) != want:
            return ["got %s, expected %s" % (list(val.coords), want)]
        return []

    # ----- randomized scenarios -----------------------------------------

    def _iso_pool(self, name: str, pair: SimplicialPair) -> List[SimplicialMap]:
        k = pair.total.vertex_count
        if name in ("c3", "c6"):
            pool = []
            for s in range(k):
                pool.append(SimplicialMap(pair, pair, [(v + s) % k for v in range(k)]))
                pool.append(SimplicialMap(pair, pair, [(-v + s) % k for v in range(k)]))
            return pool
        if name == "torus":
            return [
                SimplicialMap(pair, pair, images)
                for images in automorphisms(pair.total)
            ]
        if name == "s2":
            import itertools as _it

            return [
                SimplicialMap(pair, pair, list(p))
                for p in _it.permutations(range(4))
            ]
        if name == "interval":
            return [
                SimplicialMap(pair, pair, [0, 1, 2]),
                SimplicialMap(pair, pair, [2, 1, 0]),
            ]
        return [SimplicialMap(pair, pair, list(range(k)))]

    def random_scenario(
        self,
        key: str,
        src_name: str,
        tgt_name: str,
        closed: bool,
        with_2n: bool,
        hop_name: Optional[str] = None,
    ) -> None:
        rng = self.rngs[key]
        src = corpus.builtin_pair(src_name)
        tgt = corpus.builtin_pair(tgt_name)
        hop_src = corpus.builtin_pair(hop_name) if hop_name else None
        src_isos = self._iso_pool(src_name, src)
        tgt_isos = self._iso_pool(tgt_name, tgt)
        for i in range(self.trials):
            f = random_map(rng, src, tgt)
            g = random_map(rng, src, tgt)
            self.report.map_pairs += 1
            tag = "%s pair %d" % (key, i)
            if closed:
                self.check("symmetry %s" % tag, lambda f=f, g=g: self.w.check_symmetry(f, g))
            self.check("vanishing ranges %s" % tag, lambda f=f, g=g: self.w.check_triviality(f, g))
            self.check("transfer round-trip %s" % tag, lambda f=f: self.w.check_f_inverse(f))
            if with_2n:
                self.check("top-degree closed form %s" % tag, lambda f=f, g=g: self.w.check_degree_2n(f, g))
            if self.field.is_rational:
                self.check("oracle soundness %s" % tag, lambda f=f, g=g: self.w.check_soundness(f, g))
            if src.sub.is_empty:
                v = rng.randrange(tgt.total.vertex_count)
            else:
                rim = sorted({u for s in tgt.sub.facets() for u in s})
                v = rim[rng.randrange(len(rim))]
            gc = SimplicialMap(src, tgt, [v] * src.total.vertex_count)
            self.check(
                "vanishing with inessential map %s" % tag,
                lambda f=f, gc=gc: self.w.check_triviality(f, gc),
            )
            if hop_src is not None:
                h = random_map(rng, hop_src, src)
                self.check(
                    "naturality %s" % tag,
                    lambda f=f, g=g, h=h: self.w.check_naturality(f, g, h),
                )
            oriented = [
                m for m in tgt_isos
                if self.w.orientation_degree(m) == self.field.one
            ]
            if len(src_isos) > 1 and oriented:
                h = src_isos[rng.randrange(len(src_isos))]
                kk = oriented[rng.randrange(len(oriented))]
                f2 = kk.compose(f).compose(h.inverse())
                g2 = kk.compose(g).compose(h.inverse())
                self.check(
                    "conjugated naturality %s" % tag,
                    lambda f=f, g=g, f2=f2, g2=g2, h=h, kk=kk:
                        self.w.check_naturality2(f, g, f2, g2, h, kk),
                )

    def sphere_scenario(self) -> None:
        rng = self.rngs["s3/s2"]
        src = corpus.builtin_pair("s3")
        tgt = corpus.builtin_pair("s2")
        count = max(self.trials, 10) if self.trials else 0
        for i in range(count):
            f = random_map(rng, src, tgt)
            g = random_map(rng, src, tgt)
            self.report.map_pairs += 1
            self.report.sphere_pairs += 1

            def run(f=f, g=g):
                rep = self.w.lefschetz_full(f, g, oracle=False)
                bad = [e for e in rep.entries if e.nonzero]
                if bad:
                    return [
                        "unequal spheres admit a nonzero value at degree %d" % bad[0].degree
                    ]
                return []

            self.check("sphere vanishing s3/s2 pair %d" % i, run)

    def knill_scenario(self) -> None:
        rng = self.rngs["knill"]
        c3 = corpus.builtin_pair("c3")
        ppair, pdata, proj = product_pair(c3.total, c3)
        for i in range(self.trials):
            g = random_map(rng, ppair, c3)
            self.report.map_pairs += 1
            self.check(
                "parametrized trace knill pair %d" % i,
                lambda g=g: self.w.check_knill(proj, g, pdata, c3),
            )

    def run(self) -> VerifyReport:
        self.corpus_shape()
        self.duality_suite()
        self.calibration()
        self.wong_fixed()
        self.fixed_identities()
        if self.trials > 0:
            self.random_scenario("c3/c3", "c3", "c3", True, False, hop_name="c6")
            self.random_scenario("c6/c3", "c6", "c3", True, False, hop_name="c6")
            self.random_scenario("torus/c3", "torus", "c3", True, True, hop_name="torus")
            self.random_scenario("torus/torus", "torus", "torus", True, False)
            self.random_scenario("s2/s2", "s2", "s2", True, False)
            self.random_scenario("interval/interval", "interval", "interval", False, False)
            self.random_scenario("genus2/c3", "genus2", "c3", True, True)
            self.sphere_scenario()
            self.knill_scenario()
        return self.report


def run_verification(field: Field, seed: int = 0, trials: int = 10) -> VerifyReport:
    return _Suite(field, seed, trials).run()
