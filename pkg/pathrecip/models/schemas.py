from fractions import Fraction
from typing import Annotated, List, Optional

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer, computed_field

from pathrecip.core.exact import format_rational

# Exact scalar; kept as Fraction in python mode and written as "p" / "p/q" in JSON
RationalValue = Annotated[
    Fraction, PlainSerializer(format_rational, return_type=str, when_used="json")
]


class Violation(BaseModel):
    kind: str  # cycle, degree, overlap, unknown_vertex, duplicate_vertex, boundary
    detail: str


class ValidationReport(BaseModel):
    network_id: Optional[str] = None
    violations: List[Violation] = []

    @computed_field
    @property
    def valid(self) -> bool:
        return not self.violations


class EdgeDocument(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    from_: str = Field(alias="from")
    to: str
    weight: str = "1"


class NetworkDocument(BaseModel):
    """The JSON network file: vertices, weighted edges, ordered sources and sinks."""

    name: Optional[str] = None
    vertices: List[str]
    edges: List[EdgeDocument]
    sources: List[str]
    sinks: List[str]


class MatrixDocument(BaseModel):
    rows: int
    cols: int
    entries: List[List[RationalValue]]


class CountResult(BaseModel):
    network_id: Optional[str] = None
    sources: List[int]
    sinks: List[int]
    n: int
    value: RationalValue


class RecurrenceSummary(BaseModel):
    order: int
    coefficients: List[RationalValue]
    initial_values: List[RationalValue]
    numerator: List[RationalValue]
    denominator: List[RationalValue]
    generating_function: str


class ReciprocityRecord(BaseModel):
    n: int
    negative_value: RationalValue  # f(I,J;-n)
    sign: int  # (-1)^(sigma(I)+sigma(J))
    det_power: RationalValue  # det(P_G)^(-n)
    complementary_value: RationalValue  # f(J^c,I^c;n)
    passed: bool


class ReciprocityReport(BaseModel):
    network_id: Optional[str] = None
    sources: List[int]
    sinks: List[int]
    ambient: int
    n_max: int
    determinant: RationalValue
    records: List[ReciprocityRecord] = []

    @computed_field
    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)


class DyckRecord(BaseModel):
    n: int
    negative_value: RationalValue  # d(m,k;-n)
    shifted_value: RationalValue  # d(k,m;n+1)
    passed: bool


class DyckReciprocityReport(BaseModel):
    m: int
    k: int
    n_max: int
    records: List[DyckRecord] = []

    @computed_field
    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)


class SchurRecord(BaseModel):
    n: int
    negative_value: RationalValue  # s_{lambda/mu}(z^-n)
    sign: int  # (-1)^|lambda/mu|
    transpose_reversed: RationalValue  # s_{lambda^t/mu^t}(z_rev^n)
    transpose_unreversed: RationalValue  # s_{lambda^t/mu^t}(z^n)
    passed: bool


class SchurReciprocityReport(BaseModel):
    outer: List[int]
    inner: List[int]
    z: List[RationalValue]
    n_max: int
    records: List[SchurRecord] = []

    @computed_field
    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)


class NetworkQuery(BaseModel):
    """HTTP request body for the per-network endpoints."""

    network: NetworkDocument
    sources: List[int] = []
    sinks: List[int] = []
    n: int = 0
    nmax: Optional[int] = None


class DyckValue(BaseModel):
    m: int
    k: int
    n: int
    value: RationalValue


class SchurValue(BaseModel):
    outer: List[int]
    inner: List[int]
    z: List[RationalValue]
    n: int
    value: RationalValue


class ProctorValue(BaseModel):
    n: int
    m: int
    value: RationalValue
