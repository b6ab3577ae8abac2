"""
σ_k computation endpoints
"""
from fastapi import APIRouter, Depends, HTTPException, Query, status
import logging

from app.core.dependencies import release_sigma_memo
from app.core.exceptions import SigmaKError
from app.models.schemas import ComputeRequest, ComputeResult, FamilySpec
from app.services.closed_form_service import closed_form_service
from app.services.family_service import family_service
from app.services.graph6_service import graph6_service
from app.services.sigma_service import sigma_service

logger = logging.getLogger(__name__)

router = APIRouter(
    prefix="/sigma",
    tags=["sigma"],
    dependencies=[Depends(release_sigma_memo)]
)


@router.post(
    "/compute",
    response_model=ComputeResult,
    status_code=status.HTTP_200_OK,
    summary="Compute σ_k",
    description="Number of vertex subsets inducing exactly k edges, for a graph6 string or a family spec"
)
def compute_sigma(request: ComputeRequest):
    """
    Example request:
    ```json
    {"family": "path:4", "k": 1}
    ```
    Response value: 5
    """
    try:
        if request.graph6 is not None:
            source, graph = request.graph6, graph6_service.parse(request.graph6)
        else:
            source, graph = request.family, family_service.construct(FamilySpec.parse(request.family))
        return sigma_service.compute(source, graph, request.k)
    except SigmaKError as e:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail=str(e)
        )


@router.get(
    "/family/{spec}",
    status_code=status.HTTP_200_OK,
    summary="σ0 and σ1 of a named family",
    description="Closed-form values next to the recursion, e.g. /sigma/family/broom:7:3"
)
def family_sigma(
    spec: str,
    check: bool = Query(True, description="Also run the recursion on the constructed graph")
):
    try:
        family = FamilySpec.parse(spec)
        data = {
            "spec": str(family),
            "n": family.order,
            "sigma0": closed_form_service.sigma0_family(family),
            "sigma1": closed_form_service.sigma1_family(family),
        }
        if check:
            graph = family_service.construct(family)
            s0, s1 = sigma_service.sigma_pair(graph)
            data.update({
                "m": graph.size,
                "graph6": graph6_service.emit(graph),
                "recursion": {"sigma0": s0, "sigma1": s1},
                "agrees": (s0, s1) == (data["sigma0"], data["sigma1"]),
            })
        return data
    except SigmaKError as e:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail=str(e)
        )
