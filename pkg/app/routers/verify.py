"""
Verification suite endpoints
"""
from typing import Optional
from fastapi import APIRouter, Depends, HTTPException, Query, status
import logging

from app.core.dependencies import release_sigma_memo
from app.core.exceptions import SigmaKError
from app.models.schemas import VerificationSuite
from app.services.verification_service import verification_service

logger = logging.getLogger(__name__)

router = APIRouter(
    prefix="/verify",
    tags=["verify"],
    dependencies=[Depends(release_sigma_memo)]
)


@router.post(
    "/{suite}",
    status_code=status.HTTP_200_OK,
    summary="Run a verification suite",
    description="Runs closed-forms, min-bound, max-bound, h-family or recursion and returns the report"
)
def run_suite(
    suite: VerificationSuite,
    max_n: Optional[int] = Query(None, ge=0, description="Upper order for range-based suites"),
    n: Optional[int] = Query(None, ge=0, description="Single order for max-bound"),
):
    """
    The response carries `passed` plus a `checks` array; each check has
    `name`, `status` and `counterexamples`.
    """
    try:
        report = verification_service.run(suite, max_n=max_n, n=n)
    except SigmaKError as e:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail=str(e)
        )
    return report.summary()
