"""Fan a (t, n) verification grid out over worker threads."""

from __future__ import annotations

import asyncio
import logging
from typing import Callable, Iterable, List, Optional, Tuple

from sd_moments.types import BoundsReport
from sd_moments.verifier import verify_all

from .exceptions import PhaseDesignError

logger = logging.getLogger(__name__)

VerifyFn = Callable[..., BoundsReport]


async def _verify_one(t: int, n: int, verify: VerifyFn, semaphore: asyncio.Semaphore, **tolerances) -> BoundsReport:
    async with semaphore:
        try:
            return await asyncio.to_thread(verify, t, n, **tolerances)
        except PhaseDesignError as e:
            logger.error("t=%d n=%d could not be verified: %s", t, n, e)
            return BoundsReport(t=t, n=n, error=str(e))


async def verify_grid(
    pairs: Iterable[Tuple[int, int]],
    verify: Optional[VerifyFn] = None,
    max_workers: int = 4,
    **tolerances,
) -> List[BoundsReport]:
    """One report per (t, n), in input order; errors land in ``report.error``."""
    verify = verify or verify_all
    semaphore = asyncio.Semaphore(max_workers)
    tasks = [_verify_one(t, n, verify, semaphore, **tolerances) for t, n in pairs]
    reports = await asyncio.gather(*tasks)
    failed = sum(1 for r in reports if not r.passed)
    logger.info("verified %d grid points, %d failed", len(reports), failed)
    return list(reports)
