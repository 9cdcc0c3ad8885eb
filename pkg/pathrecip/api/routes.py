from fastapi import APIRouter, HTTPException, Query
from typing import Callable, Optional, TypeVar
from datetime import datetime
import logging

from pathrecip.core.config import resolve_nmax, settings
from pathrecip.core.errors import PathRecipError
from pathrecip.core.exact import SubsetIndex
from pathrecip.models.schemas import (
    CountResult,
    DyckReciprocityReport,
    DyckValue,
    MatrixDocument,
    NetworkDocument,
    NetworkQuery,
    ProctorValue,
    ReciprocityReport,
    RecurrenceSummary,
    SchurReciprocityReport,
    SchurValue,
    ValidationReport,
)
from pathrecip.data.network import oracle_nonintersecting_sum
from pathrecip.data.network_file import matrix_to_document, network_from_document
from pathrecip.data.reciprocity import reciprocity_engine
from pathrecip.apps.dyck import check_dyck_reciprocity, d_value, proctor_count
from pathrecip.apps.partitions import Partition, SkewShape
from pathrecip.apps.schur import EvalPoint, check_schur_reciprocity, schur_eval

logger = logging.getLogger(__name__)

# Create router
router = APIRouter()

T = TypeVar("T")


def _run(what: str, compute: Callable[[], T]) -> T:
    """Domain errors become 400 with the message as detail; anything else is a 500."""
    try:
        return compute()
    except (PathRecipError, ValueError, ZeroDivisionError) as e:
        logger.warning(f"Rejected {what}: {e}")
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"Error in {what}: {str(e)}")
        raise HTTPException(status_code=500, detail="Internal server error")


def _query_subsets(query: NetworkQuery):
    net = network_from_document(query.network)
    return net, SubsetIndex.of(query.sources, net.m), SubsetIndex.of(query.sinks, net.m)


@router.get("/")
async def root():
    """Root endpoint"""
    return {
        "message": f"{settings.app_name} API",
        "version": "1.0.0",
        "timestamp": datetime.now(),
        "features": [
            "Path matrices of planar networks",
            "Non-intersecting path counts at any integer n",
            "Linear recurrences and generating functions",
            "Reciprocity checks",
            "Dyck fans and Schur functions",
        ],
    }


@router.get("/health")
async def health_check():
    """Health check endpoint"""
    return {
        "status": "healthy",
        "timestamp": datetime.now(),
        "services": {"reciprocity_engine": "running", "cached_matrices": len(reciprocity_engine.cache)},
    }


@router.post("/network/validate", response_model=ValidationReport)
async def validate_network(document: NetworkDocument):
    """Structured violations of a network document"""
    return _run("network validation", lambda: network_from_document(document, require_valid=False).validate())


@router.post("/network/path-matrix", response_model=MatrixDocument)
async def get_path_matrix(document: NetworkDocument):
    """Weighted path sums from every source to every sink"""
    return _run(
        "path matrix",
        lambda: matrix_to_document(reciprocity_engine.path_matrix(network_from_document(document))),
    )


@router.post("/network/count", response_model=CountResult)
async def count_paths(query: NetworkQuery):
    """f(I,J;n) for any integer n"""

    def compute():
        net, sources, sinks = _query_subsets(query)
        value = reciprocity_engine.f_at(net, sources, sinks, query.n)
        return CountResult(network_id=net.name, sources=query.sources, sinks=query.sinks, n=query.n, value=value)

    return _run("count", compute)


@router.post("/network/recurrence", response_model=RecurrenceSummary)
async def get_recurrence(query: NetworkQuery):
    """Recurrence and generating function of f(I,J;n)"""

    def compute():
        net, sources, sinks = _query_subsets(query)
        return reciprocity_engine.recurrence_summary(net, sources, sinks)

    return _run("recurrence", compute)


@router.post("/network/check", response_model=ReciprocityReport)
async def check_network(query: NetworkQuery):
    """Reciprocity report for n = 1..nmax"""

    def compute():
        net, sources, sinks = _query_subsets(query)
        return reciprocity_engine.check_reciprocity(net, sources, sinks, resolve_nmax(query.nmax))

    return _run("reciprocity check", compute)


@router.post("/network/oracle", response_model=CountResult)
async def oracle_count(query: NetworkQuery):
    """Brute-force weighted count of non-intersecting tuples on G^n"""

    def compute():
        net, sources, sinks = _query_subsets(query)
        value = oracle_nonintersecting_sum(net.glue_power(query.n), sources, sinks)
        return CountResult(network_id=net.name, sources=query.sources, sinks=query.sinks, n=query.n, value=value)

    return _run("oracle", compute)


@router.get("/dyck/{m}/{k}/{n}", response_model=DyckValue)
async def get_dyck_value(m: int, k: int, n: int):
    """d(m,k;n), the number of m-fans of (2k+1)-bounded Dyck paths"""
    return _run("Dyck count", lambda: DyckValue(m=m, k=k, n=n, value=d_value(m, k, n)))


@router.get("/dyck-check/{m}/{k}", response_model=DyckReciprocityReport)
async def check_dyck(m: int, k: int, nmax: Optional[int] = Query(None, ge=1, le=50)):
    """d(m,k;-n) against d(k,m;n+1)"""
    return _run("Dyck check", lambda: check_dyck_reciprocity(m, k, resolve_nmax(nmax)))


@router.get("/schur", response_model=SchurValue)
async def get_schur_value(
    lam: str = Query(..., description="Outer partition, e.g. 3,2"),
    mu: str = Query("", description="Inner partition, e.g. 1"),
    z: str = Query(..., description="Evaluation point, e.g. 1,1/2"),
    n: int = Query(1, description="Number of copies of z; negative values allowed"),
):
    """s_{lambda/mu}(z^n)"""

    def compute():
        shape = SkewShape(Partition.parse(lam), Partition.parse(mu))
        point = EvalPoint.parse(z)
        return SchurValue(
            outer=list(shape.outer.parts),
            inner=list(shape.inner.parts),
            z=list(point.values),
            n=n,
            value=schur_eval(shape, point, n),
        )

    return _run("Schur evaluation", compute)


@router.get("/schur-check", response_model=SchurReciprocityReport)
async def check_schur(
    lam: str = Query(..., description="Outer partition, e.g. 3,2"),
    mu: str = Query("", description="Inner partition, e.g. 1"),
    z: str = Query(..., description="Evaluation point, e.g. 1,1/2"),
    nmax: Optional[int] = Query(None, ge=1, le=50),
):
    """s_{lambda/mu}(z^-n) against the transposed shape at z reversed"""
    return _run(
        "Schur check",
        lambda: check_schur_reciprocity(
            SkewShape(Partition.parse(lam), Partition.parse(mu)),
            EvalPoint.parse(z),
            resolve_nmax(nmax),
        ),
    )


@router.get("/proctor/{n}/{m}", response_model=ProctorValue)
async def get_proctor(n: int, m: int):
    """Plane partitions of the staircase delta_n with entries at most m"""
    return _run("Proctor count", lambda: ProctorValue(n=n, m=m, value=proctor_count(n, m)))
