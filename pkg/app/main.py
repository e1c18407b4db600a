# filename: app/main.py

import traceback
from typing import Any, Callable, Dict, List

from fastapi import FastAPI, HTTPException, Query

from .core.config import settings
from .core.errors import TableParseError
from .harness.census import run_census
from .harness.fixtures import Fixture, get_fixture, load_catalog
from .models import (
    CensusResponse,
    FixtureDetail,
    FixtureSummary,
    GroupCompletionResponse,
    HomologyRequest,
    HomologyResponse,
    InfoResponse,
    TableRequest,
    ValidateResponse,
    census_payload,
)
from .output_formatters.to_json_output import (
    format_group_completion_for_json,
    format_homology_for_json,
    format_info_for_json,
)
from .processing.semigroup_processor import process_group_completion, process_homology, process_info
from .semigroup.table import SemigroupTable, validate_table
from .semigroup.table_text import parse_table

app = FastAPI(
    title=settings.PROJECT_NAME,
    description="Integral homology of classifying spaces of finite semigroups, "
                "computed from multiplication tables.",
    version=settings.PROJECT_VERSION,
)


def _table_from_request(request: TableRequest) -> SemigroupTable:
    if request.text is not None:
        return parse_table(request.text)
    return validate_table(request.table)


def _run(operation: str, work: Callable[[], Any]) -> Any:
    """Maps parse errors to 400, other domain errors to 422 and anything else to 500."""
    try:
        return work()
    except TableParseError as pe:
        print(f"Table parse error during {operation}: {str(pe)}")
        raise HTTPException(status_code=400, detail=f"Table parse error: {str(pe)}")
    except ValueError as ve:
        print(f"ValueError during {operation}: {str(ve)}")
        raise HTTPException(status_code=422, detail=f"Processing error: {str(ve)}")
    except HTTPException:
        raise
    except Exception as e:
        print(f"Unexpected error in {operation}: {type(e).__name__} - {str(e)}")
        print(traceback.format_exc())
        raise HTTPException(status_code=500, detail=f"An unexpected error occurred during {operation}.")


def _fixture_summary(fixture: Fixture) -> Dict[str, Any]:
    return {
        "name": fixture.name,
        "description": fixture.description,
        "source": fixture.source,
        "max_dim": fixture.max_dim,
        "expected": [str(group) for group in fixture.expected],
        "gs_order": fixture.gs_order,
    }


@app.get("/status")
async def get_status():
    return {"status": "ok", "message": "Semigroup homology service is running"}


@app.post("/validate", response_model=ValidateResponse, summary="Check a multiplication table")
def validate_endpoint(request: TableRequest):
    S = _run("validation", lambda: _table_from_request(request))
    return ValidateResponse(valid=True, order=S.order, identity=S.identity)


@app.post("/info", response_model=InfoResponse, summary="Structure of a finite semigroup")
def info_endpoint(request: TableRequest):
    result = _run("info", lambda: process_info(_table_from_request(request)))
    return InfoResponse(**format_info_for_json(result))


@app.post("/group-completion", response_model=GroupCompletionResponse, summary="The group completion GS")
def group_completion_endpoint(request: TableRequest):
    result = _run("group completion", lambda: process_group_completion(_table_from_request(request)))
    return GroupCompletionResponse(**format_group_completion_for_json(result))


@app.post("/homology", response_model=HomologyResponse, summary="Integral homology H_1..H_m of BS")
def homology_endpoint(request: HomologyRequest):
    result = _run(
        "homology",
        lambda: process_homology(_table_from_request(request), request.max_dim, request.method),
    )
    return HomologyResponse(**format_homology_for_json(result))


@app.get("/census", response_model=CensusResponse, summary="Homology signatures of all semigroups of an order")
def census_endpoint(
        order: int = Query(..., ge=1, description="Order of the semigroups to enumerate."),
        extended: bool = Query(False, description=f"Allow orders up to {settings.CENSUS_EXTENDED_MAX_ORDER}."),
        max_dim: int = Query(settings.CENSUS_MAX_DIM, ge=1, le=16, description="Signature length."),
):
    report = _run("census", lambda: run_census(order, extended=extended, max_dim=max_dim, workers=1))
    return CensusResponse(**census_payload(report.to_json()))


@app.get("/fixtures", response_model=List[FixtureSummary], summary="Worked examples with known homology")
def fixtures_endpoint():
    return [FixtureSummary(**_fixture_summary(fixture)) for fixture in load_catalog()]


@app.get("/fixtures/{name}", response_model=FixtureDetail, summary="One worked example with its table")
def fixture_endpoint(name: str):
    try:
        fixture = get_fixture(name)
    except KeyError as e:
        raise HTTPException(status_code=404, detail=e.args[0])
    S = _run("fixture construction", fixture.build)
    return FixtureDetail(**_fixture_summary(fixture), table=S.to_lists(), identity=S.identity)


if __name__ == "__main__":
    import uvicorn

    uvicorn.run("app.main:app", host="127.0.0.1", port=8000, reload=True)
