"""HTTP front end exposing the coincidence computations as JSON endpoints."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import service
from .complexes import ComplexError, MapError
from .fields import FieldError
from .homology import HomologyError
from .lefschetz import DualityError, LefschetzError
from .randmaps import GenerationError
from .schemas import (
    BuiltinsResponse,
    HomologyRequest,
    HomologyResponse,
    KnillRequest,
    KnillResponse,
    LefschetzRequest,
    LefschetzResponse,
    TransferRequest,
    TransferResponse,
    VerifyRequest,
    VerifyResponse,
    WitnessModel,
    WitnessRequest,
    WongRequest,
    WongResponse,
)

_PARSE_ERRORS = (
    service.RequestError,
    FieldError,
    ComplexError,
    MapError,
    HomologyError,
    GenerationError,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="coincidence homomorphism service",
        description=(
            "Exact Lefschetz coincidence homomorphisms for simplicial maps of "
            "pairs into triangulated oriented manifolds."
        ),
    )

    def run(handler, request):
        try:
            return handler(request)
        except DualityError as e:
            raise HTTPException(status_code=409, detail=str(e)) from e
        except _PARSE_ERRORS as e:
            raise HTTPException(status_code=400, detail=str(e)) from e
        except LefschetzError as e:
            raise HTTPException(status_code=400, detail=str(e)) from e

    @app.get("/builtins", response_model=BuiltinsResponse)
    def builtins() -> BuiltinsResponse:
        return service.builtins_report()

    @app.post("/homology", response_model=HomologyResponse)
    def homology(req: HomologyRequest) -> HomologyResponse:
        return run(service.homology_report, req)

    @app.post("/lefschetz", response_model=LefschetzResponse)
    def lefschetz(req: LefschetzRequest) -> LefschetzResponse:
        return run(service.lefschetz_report, req)

    @app.post("/transfer", response_model=TransferResponse)
    def transfer(req: TransferRequest) -> TransferResponse:
        return run(service.transfer_report, req)

    @app.post("/wong", response_model=WongResponse)
    def wong(req: WongRequest) -> WongResponse:
        return run(service.wong_report, req)

    @app.post("/knill", response_model=KnillResponse)
    def knill(req: KnillRequest) -> KnillResponse:
        return run(service.knill_report, req)

    @app.post("/witness", response_model=WitnessModel)
    def witness(req: WitnessRequest) -> WitnessModel:
        return run(service.witness_report, req)

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest) -> VerifyResponse:
        return run(service.verify_report, req)

    return app


app = create_app()
