"""Request and response models for the HTTP service and the CLI reports.

Coefficients travel as strings ("3/4" over the rationals, digits over a
prime field) so exact values survive serialization.  Complexes and maps
may be sent inline or referenced as ``builtin:<name>``.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field


class ComplexDocument(BaseModel):
    name: str
    vertex_count: int
    facets: List[List[int]]
    subcomplex_facets: Optional[List[List[int]]] = None


class MapDocument(BaseModel):
    source: str
    target: str
    vertex_images: List[int]


ComplexRef = Union[str, ComplexDocument]
MapRef = Union[str, MapDocument]


class HomologyRequest(BaseModel):
    complex: ComplexRef = Field(alias="complex")
    field: str = "q"

    model_config = {"populate_by_name": True}


class HomologyResponse(BaseModel):
    name: str
    field: str
    betti: List[int]
    euler: int
    orientability: str


class LefschetzRequest(BaseModel):
    x: ComplexRef
    m: ComplexRef
    f: MapRef
    g: MapRef
    field: str = "q"
    oracle: bool = False


class WitnessModel(BaseModel):
    status: str
    simplex: Optional[List[int]] = None
    barycentric: Optional[List[str]] = None
    simplices_checked: int = 0


class LefschetzEntryModel(BaseModel):
    degree: int
    index: int
    coefficients: List[str]
    nonzero: bool


class LefschetzResponse(BaseModel):
    field: str
    n: int
    x_betti: List[int]
    m_betti: List[int]
    condition_a: bool
    any_nonzero: bool
    entries: List[LefschetzEntryModel]
    oracle: Optional[WitnessModel] = None


class TransferRequest(BaseModel):
    x: ComplexRef
    m: ComplexRef
    f: MapRef
    degree: int
    index: int = 0
    field: str = "q"


class TransferResponse(BaseModel):
    field: str
    degree: int
    index: int
    shift: int
    blocks: Dict[str, List[List[str]]]


class WongRequest(BaseModel):
    x: ComplexRef
    m: ComplexRef
    psi: MapRef
    index: int = 0
    field: str = "q"


class WongResponse(BaseModel):
    field: str
    n: int
    index: int
    pairing: str


class KnillRequest(BaseModel):
    y: ComplexRef
    m: ComplexRef
    g: MapRef
    degree: int = 0
    index: int = 0
    field: str = "q"


class KnillResponse(BaseModel):
    field: str
    parameter_degree: int
    parameter_index: int
    trace: List[str]
    homomorphism: List[str]
    equal: bool


class WitnessRequest(BaseModel):
    x: ComplexRef
    m: ComplexRef
    f: MapRef
    g: MapRef


class VerifyRequest(BaseModel):
    field: str = "q"
    seed: int = 0
    trials: int = 10


class VerifyResponse(BaseModel):
    field: str
    seed: int
    trials: int
    passed: bool
    checks: int
    map_pairs: int
    sphere_pairs: int
    failures: List[str]
    report: str


class BuiltinsResponse(BaseModel):
    complexes: List[str]
    maps: List[str]
