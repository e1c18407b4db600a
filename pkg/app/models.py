# filename: app/models.py
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, model_validator


class TableRequest(BaseModel):
    """A table given either as nested rows or in the table text format."""
    table: Optional[List[List[int]]] = None
    text: Optional[str] = None

    @model_validator(mode="after")
    def exactly_one_source(self):
        if (self.table is None) == (self.text is None):
            raise ValueError("Provide exactly one of 'table' or 'text'")
        return self


class HomologyRequest(TableRequest):
    max_dim: int = Field(4, ge=1, le=64)
    method: Literal["resolution", "nerve", "auto"] = "resolution"


class ValidateResponse(BaseModel):
    valid: bool
    order: int
    identity: Optional[int] = None


class GroupDescriptor(BaseModel):
    rank: int
    torsion: List[List[int]]
    text: str


class MinIdealContent(BaseModel):
    k: int
    I: List[int]
    H: List[int]
    J: List[int]
    order: int
    h_variant: str
    sandwich: List[List[int]]


class InfoResponse(BaseModel):
    order: int
    identity: Optional[int] = None
    idempotents: List[int]
    commutative: bool
    regular: bool
    left_zeros: List[int]
    right_zeros: List[int]
    zero: Optional[int] = None
    min_ideal: MinIdealContent
    k_thin: bool
    group_completion_order: int
    abelianization: str
    route: str


class GroupCompletionResponse(BaseModel):
    order: int
    representatives: List[int]
    rho: List[int]
    table: List[List[int]]
    abelianization: str


class HomologyResponse(BaseModel):
    order: int
    max_dim: int
    method: str
    route: str
    homology: List[GroupDescriptor]
    oracle_checked: bool


class SignatureCount(BaseModel):
    homology: List[str]
    count: int


class CensusResponse(BaseModel):
    order: int
    max_dim: int
    class_count: int
    non_k_thin_count: int
    signatures: List[SignatureCount]


class FixtureSummary(BaseModel):
    name: str
    description: str
    source: str
    max_dim: int
    expected: List[str]
    gs_order: Optional[int] = None


class FixtureDetail(FixtureSummary):
    table: List[List[int]]
    identity: Optional[int] = None


def census_payload(report_json: Dict[str, Any]) -> Dict[str, Any]:
    """The census JSON without the per-class listing."""
    return {key: value for key, value in report_json.items() if key != "classes"}
