"""Request/response models shared by the HTTP service and the CLI."""

from pydantic import BaseModel, Field, model_validator


class GraphSource(BaseModel):
    """Either an inline skeleton document or a builder spec like
    "omega:2,1,1", "lambda_n:3,2", "figure2:A"."""

    skeleton: dict | None = None
    builder: str | None = None

    @model_validator(mode="after")
    def _one_of(self):
        if (self.skeleton is None) == (self.builder is None):
            raise ValueError("provide exactly one of 'skeleton' or 'builder'")
        return self


class ValidateRequest(BaseModel):
    source: GraphSource


class ValidateResponse(BaseModel):
    valid: bool
    k: int
    num_vertices: int
    num_edges: int
    locally_convex: bool
    no_sinks: bool
    no_sources: bool
    locally_finite: bool


class TraceRequest(BaseModel):
    source: GraphSource
    full_check: int | None = Field(default=None, ge=0,
                                   description="verify up to degree (n,...,n)")


class ObstructionModel(BaseModel):
    kind: str
    vertices: list[str] = []
    loop: list[str] | None = None
    entrance: str | None = None
    color: int | None = None
    farkas: dict | None = None


class EndClassModel(BaseModel):
    cls: int = Field(alias="class")
    rep: str
    image: list[str]
    rank: int

    model_config = {"populate_by_name": True}


class TraceResponse(BaseModel):
    faithful_trace: dict[str, str] | None
    obstructions: list[ObstructionModel]
    ends: list[EndClassModel]


class EndsRequest(BaseModel):
    source: GraphSource


class EndsResponse(BaseModel):
    ends: list[EndClassModel]
    sufficient_condition: dict[str, list[int]]
    unreached: list[str]


class KTheoryRequest(BaseModel):
    source: GraphSource


class KTheoryClassModel(BaseModel):
    rep: str
    rank: int
    group_basis: list[list[int]]


class KTheoryResponse(BaseModel):
    classes: list[KTheoryClassModel]
    K0_rank: int
    K1_rank: int
    morita: str


class AlgebraCheckRequest(BaseModel):
    source: GraphSource
    degree_cap: int = Field(default=2, ge=0)
    samples: int = Field(default=100, ge=1)
    seed: int = 0


class CheckModel(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class AlgebraCheckResponse(BaseModel):
    checks: list[CheckModel]
    all_passed: bool


class DixmierRequest(BaseModel):
    k: int = Field(ge=1, le=3)
    nmax: int = Field(ge=8)
    points: int = Field(default=5, ge=2)


class DixmierResponse(BaseModel):
    C_k: float
    fitted: float
    rel_err: float
    samples: list[tuple[int, int, float]]


class PairRequest(BaseModel):
    example: str = "lambda_n"
    n: int = Field(ge=1)
    grid: int = Field(default=64, ge=16)


class PairResponse(BaseModel):
    chern: int
    index: int
    pairing: int
    core_multiplicity: int


class ErrorResponse(BaseModel):
    error: str
    kind: str
