"""Reference resolution and command handlers shared by the API and the CLI.

Each handler takes a request model, resolves complex and map references
(inline documents or ``builtin:<name>`` strings), runs the computation in
a fresh workspace, and returns a response model with exact coefficients
rendered as strings.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from .complexes import (
    CoincidenceVerdict,
    SimplicialComplex,
    SimplicialMap,
    SimplicialPair,
    coincidence_witness,
    orientability_status,
    product_pair,
)
from .corpus import builtin_map, builtin_names, builtin_pair
from .fields import QQ, Field
from .homology import cross_product
from .lefschetz import LefschetzReport, Workspace
from .schemas import (
    BuiltinsResponse,
    ComplexRef,
    HomologyRequest,
    HomologyResponse,
    KnillRequest,
    KnillResponse,
    LefschetzEntryModel,
    LefschetzRequest,
    LefschetzResponse,
    MapRef,
    TransferRequest,
    TransferResponse,
    VerifyRequest,
    VerifyResponse,
    WitnessModel,
    WitnessRequest,
    WongRequest,
    WongResponse,
)
from .verify import run_verification

BUILTIN_PREFIX = "builtin:"

BUILTIN_MAP_NAMES = [
    "identity", "proj-left", "proj-right", "double", "reverse", "rot", "swap",
    "const:<vertex>",
]


class RequestError(ValueError):
    """A request that parses but does not describe a valid computation."""


def resolve_pair(ref: ComplexRef) -> Tuple[str, SimplicialPair]:
    """Turn a complex reference into (name, pair)."""
    if isinstance(ref, str):
        if not ref.startswith(BUILTIN_PREFIX):
            raise RequestError(
                "complex reference %r is neither an inline document nor builtin:<name>" % ref
            )
        name = ref[len(BUILTIN_PREFIX):]
        return name, builtin_pair(name)
    total = SimplicialComplex(ref.vertex_count, ref.facets)
    sub: Optional[SimplicialComplex] = None
    if ref.subcomplex_facets is not None:
        sub = SimplicialComplex(ref.vertex_count, ref.subcomplex_facets)
    return ref.name, SimplicialPair(total, sub)


def resolve_map(
    ref: MapRef,
    src_name: str,
    src: SimplicialPair,
    tgt_name: str,
    tgt: SimplicialPair,
) -> SimplicialMap:
    """Turn a map reference into a SimplicialMap between the given pairs.

    Strings name a builtin map (the ``builtin:`` prefix is optional);
    inline documents must connect the two complexes by name.
    """
    if isinstance(ref, str):
        name = ref[len(BUILTIN_PREFIX):] if ref.startswith(BUILTIN_PREFIX) else ref
        return builtin_map(name, src, tgt)
    if ref.source != src_name or ref.target != tgt_name:
        raise RequestError(
            "map document runs %s -> %s but the request supplies complexes %s -> %s"
            % (ref.source, ref.target, src_name, tgt_name)
        )
    return SimplicialMap(src, tgt, ref.vertex_images)


def _witness_model(v: CoincidenceVerdict) -> WitnessModel:
    bary = None
    if v.barycentric is not None:
        bary = [QQ.format_scalar(Fraction(t)) for t in v.barycentric]
    return WitnessModel(
        status=v.status,
        simplex=list(v.simplex) if v.simplex is not None else None,
        barycentric=bary,
        simplices_checked=v.simplices_checked,
    )


def _matrix_strings(field: Field, mat: np.ndarray) -> List[List[str]]:
    return [
        [field.format_scalar(mat[i, j]) for j in range(mat.shape[1])]
        for i in range(mat.shape[0])
    ]


def builtins_report() -> BuiltinsResponse:
    return BuiltinsResponse(complexes=builtin_names(), maps=list(BUILTIN_MAP_NAMES))


def homology_report(req: HomologyRequest) -> HomologyResponse:
    field = Field.parse(req.field)
    name, pair = resolve_pair(req.complex)
    basis = Workspace(field).basis(pair)
    top = max(pair.total.dim, 0)
    return HomologyResponse(
        name=name,
        field=field.token,
        betti=[basis.betti_of(k) for k in range(top + 1)],
        euler=pair.total.euler_characteristic() - pair.sub.euler_characteristic(),
        orientability=orientability_status(pair.total),
    )


def _lefschetz_response(field: Field, rep: LefschetzReport) -> LefschetzResponse:
    entries = [
        LefschetzEntryModel(
            degree=e.degree,
            index=e.index,
            coefficients=[field.format_scalar(v) for v in e.value],
            nonzero=e.nonzero,
        )
        for e in rep.entries
    ]
    return LefschetzResponse(
        field=rep.field_token,
        n=rep.n,
        x_betti=rep.x_betti,
        m_betti=rep.m_betti,
        condition_a=rep.condition_a,
        any_nonzero=rep.any_nonzero,
        entries=entries,
        oracle=_witness_model(rep.oracle) if rep.oracle is not None else None,
    )


def lefschetz_report(req: LefschetzRequest) -> LefschetzResponse:
    field = Field.parse(req.field)
    x_name, x = resolve_pair(req.x)
    m_name, m = resolve_pair(req.m)
    f = resolve_map(req.f, x_name, x, m_name, m)
    g = resolve_map(req.g, x_name, x, m_name, m)
    ws = Workspace(field)
    return _lefschetz_response(field, ws.lefschetz_full(f, g, oracle=req.oracle))


def transfer_report(req: TransferRequest) -> TransferResponse:
    field = Field.parse(req.field)
    x_name, x = resolve_pair(req.x)
    m_name, m = resolve_pair(req.m)
    f = resolve_map(req.f, x_name, x, m_name, m)
    ws = Workspace(field)
    relx = ws.basis(x)
    if not 0 <= req.degree <= relx.dim or not 0 <= req.index < relx.betti_of(req.degree):
        raise RequestError(
            "no relative basis class at degree %d index %d" % (req.degree, req.index)
        )
    z = relx.basis_class(req.degree, req.index)
    t = ws.transfer(f, z)
    n = ws.duality(m).n
    blocks = {
        str(k): _matrix_strings(field, t.block(k))
        for k in range(n + 1)
        if t.source.betti_of(k) > 0
    }
    return TransferResponse(
        field=field.token,
        degree=req.degree,
        index=req.index,
        shift=t.degree,
        blocks=blocks,
    )


def wong_report(req: WongRequest) -> WongResponse:
    field = Field.parse(req.field)
    x_name, x = resolve_pair(req.x)
    m_name, m = resolve_pair(req.m)
    psi = resolve_map(req.psi, x_name, x, m_name, m)
    ws = Workspace(field)
    n = ws.duality(m).n
    relx = ws.basis(x)
    if not 0 <= req.index < relx.betti_of(n):
        raise RequestError("no relative basis class at degree %d index %d" % (n, req.index))
    z = relx.basis_class(n, req.index)
    value = ws.wong_pairing(psi, z)
    return WongResponse(field=field.token, n=n, index=req.index, pairing=field.format_scalar(value))


def knill_report(req: KnillRequest) -> KnillResponse:
    field = Field.parse(req.field)
    y_name, y = resolve_pair(req.y)
    m_name, m = resolve_pair(req.m)
    pair, prod, proj = product_pair(y.total, m)
    ws = Workspace(field)
    g = resolve_map(req.g, "%s*%s" % (y_name, m_name), pair, m_name, m)
    left_basis = ws.absolute(prod.left)
    if not 0 <= req.degree <= left_basis.dim or not 0 <= req.index < left_basis.betti_of(req.degree):
        raise RequestError(
            "no parameter class at degree %d index %d" % (req.degree, req.index)
        )
    u = left_basis.basis_class(req.degree, req.index)
    dd = ws.duality(m)
    o_class = ws.basis(m).class_of(dd.o_chain, dd.n)
    ux = cross_product(u, o_class, prod, ws.basis(pair))
    lhs = ws.lefschetz_homomorphism(proj, g, ux)
    rhs = ws.parametrized_knill(g, u, prod, m)
    return KnillResponse(
        field=field.token,
        parameter_degree=req.degree,
        parameter_index=req.index,
        trace=[field.format_scalar(v) for v in rhs.coords],
        homomorphism=[field.format_scalar(v) for v in lhs.coords],
        equal=lhs.same_as(rhs),
    )


def witness_report(req: WitnessRequest) -> WitnessModel:
    x_name, x = resolve_pair(req.x)
    m_name, m = resolve_pair(req.m)
    f = resolve_map(req.f, x_name, x, m_name, m)
    g = resolve_map(req.g, x_name, x, m_name, m)
    return _witness_model(coincidence_witness(f, g))


def verify_report(req: VerifyRequest) -> VerifyResponse:
    field = Field.parse(req.field)
    rep = run_verification(field, seed=req.seed, trials=req.trials)
    return VerifyResponse(
        field=rep.field_token,
        seed=rep.seed,
        trials=rep.trials,
        passed=rep.passed,
        checks=rep.checks,
        map_pairs=rep.map_pairs,
        sphere_pairs=rep.sphere_pairs,
        failures=list(rep.failures),
        report=rep.text(),
    )
