"""
Request-scoped dependencies shared by the routers
"""
from typing import Iterator

from app.services.sigma_service import sigma_service


def release_sigma_memo() -> Iterator[None]:
    """
    Drop the σ memo table once a request finishes

    The memo is only a cache; a concurrent request just recomputes what it loses.
    """
    try:
        yield
    finally:
        sigma_service.clear_memo()
