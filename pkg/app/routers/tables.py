"""
σ1 distribution tables
"""
from fastapi import APIRouter, Depends, HTTPException, Query, status
import logging

from app.core.config import settings
from app.core.counting import ensure_within
from app.core.dependencies import release_sigma_memo
from app.core.exceptions import SigmaKError
from app.models.schemas import DistributionFilter
from app.services.extremal_service import extremal_service

logger = logging.getLogger(__name__)

router = APIRouter(
    prefix="/tables",
    tags=["tables"],
    dependencies=[Depends(release_sigma_memo)]
)


@router.get(
    "/{n}",
    status_code=status.HTTP_200_OK,
    summary="σ1 over all graphs of order n",
    description="One row per isomorphism class, ordered by (σ1, canonical code)"
)
def get_table(
    n: int,
    filter: str = Query("all", description="all, connected or size:m"),
):
    try:
        ensure_within("table order", n, settings.TABLE_MAX_N, "TABLE_MAX_N")
        distribution = extremal_service.sigma1_distribution(n, DistributionFilter.parse(filter))
    except SigmaKError as e:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail=str(e)
        )
    return {
        "n": distribution.n,
        "filter": str(distribution.filter),
        "count": len(distribution.entries),
        "max": distribution.max_value(),
        "rows": [entry.model_dump() for entry in distribution.sorted_rows()],
    }
