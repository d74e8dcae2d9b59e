"""
API routes for the modular square root service.

Same semantics as the CLI: roots from any variant, root verification and
prime-context inspection.
"""

import logging
from functools import lru_cache
from typing import Literal, Optional

from fastapi import APIRouter, HTTPException
from pydantic import BaseModel, Field
from starlette.concurrency import run_in_threadpool

from sqrtmod.algorithms import solve
from sqrtmod.algorithms.field_core import PrimeContext, build_context, canonical_root
from sqrtmod.core import MODE_SEQUENTIAL
from sqrtmod.errors import ModulusError, NotAResidue

# Setup logging
logger = logging.getLogger(__name__)

# Initialize router
router = APIRouter(prefix="/api/v1", tags=["api"])


class SqrtRequest(BaseModel):
    p: int = Field(..., description="Odd prime modulus below 2^63")
    a: int = Field(..., description="Quadratic residue, reduced modulo p")
    algorithm: Literal["v1", "v2", "v3"] = "v1"
    canonical: bool = False
    mode: Literal["sequential-simulated", "concurrent"] = MODE_SEQUENTIAL


class SqrtResponse(BaseModel):
    p: int
    a: int
    root: int
    algorithm: str
    mul_init: int
    mul_loop: int
    lookups: int
    rounds: Optional[int]
    loop_iterations: int
    m_sequence: list[int]


class CheckRequest(BaseModel):
    p: int = Field(..., ge=1)
    a: int
    x: int


class ContextResponse(BaseModel):
    p: int
    n: int
    q: int
    u: int
    z0: int


@lru_cache(maxsize=128)
def get_context(p: int) -> PrimeContext:
    """Prime contexts are immutable, so one per modulus is shared by requests."""
    return build_context(p)


@router.post("/sqrt", response_model=SqrtResponse)
async def compute_sqrt(request: SqrtRequest) -> SqrtResponse:
    """
    Compute a square root of a modulo p.

    Returns:
        Root and operation counts; 400 for an unusable modulus, 422 for a
        nonresidue
    """
    try:
        ctx = await run_in_threadpool(get_context, request.p)
        outcome = await run_in_threadpool(
            solve, request.algorithm, request.a, ctx, None, request.mode
        )
    except ModulusError as e:
        logger.warning(f"Rejected modulus in API: {e}")
        raise HTTPException(status_code=400, detail=str(e))
    except NotAResidue as e:
        logger.warning(f"Nonresidue in API: {e}")
        raise HTTPException(status_code=422, detail=str(e))
    except Exception as e:
        logger.error(f"API sqrt error: {e}")
        raise HTTPException(status_code=500, detail="Square root failed")

    root = canonical_root(outcome.root, ctx.p) if request.canonical else outcome.root
    logger.info(f"API sqrt: {request.algorithm} root of {request.a} mod {ctx.p}")
    return SqrtResponse(
        p=ctx.p,
        a=ctx.reduce(request.a),
        root=root,
        algorithm=request.algorithm,
        mul_init=outcome.counter.mul_init,
        mul_loop=outcome.counter.mul_loop,
        lookups=outcome.counter.lookups,
        rounds=outcome.rounds,
        loop_iterations=outcome.loop_iterations,
        m_sequence=list(outcome.m_sequence),
    )


@router.post("/check")
async def check_root(request: CheckRequest):
    """Verify x^2 = a (mod p)."""
    ok = (request.x * request.x - request.a) % request.p == 0
    return {"ok": ok, "result": "OK" if ok else "FAIL"}


@router.get("/context/{p}", response_model=ContextResponse)
async def context_info(p: int) -> ContextResponse:
    """Decomposition p - 1 = 2^n * q and the nonresidue used for p."""
    try:
        ctx = await run_in_threadpool(get_context, p)
    except ModulusError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return ContextResponse(p=ctx.p, n=ctx.n, q=ctx.q, u=ctx.u, z0=ctx.z0)
