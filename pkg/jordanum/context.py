"""
Context manager for search configuration (pruning, horizon limits).
"""

from contextlib import contextmanager
from contextvars import ContextVar

DEFAULT_HORIZON_LIMIT = 20

_prune: ContextVar[bool] = ContextVar("prune", default=False)
_horizon_limit: ContextVar[int] = ContextVar(
    "horizon_limit", default=DEFAULT_HORIZON_LIMIT
)


def is_pruning() -> bool:
    """Check if exploration mode (norm-bound pruning) is enabled."""
    return _prune.get()


def horizon_limit() -> int:
    """Largest word length the brute-force oracle agrees to enumerate."""
    return _horizon_limit.get()


@contextmanager
def search_context(*, prune: bool = False, horizon_limit: int = DEFAULT_HORIZON_LIMIT):
    """
    Context manager for oracle configuration.

    Args:
        prune: If True, exhaustive searches skip partial words whose remaining
               positions cannot close the gap to the target (exploration mode).
               The default verification mode enumerates every word.
        horizon_limit: Searches with a longer horizon raise ResourceLimitError.

    Example:
        from jordanum import J2_PLUS_ONE, enumerate_min_length, search_context

        with search_context(prune=True):
            report = enumerate_min_length(J2_PLUS_ONE, (13, 2), 8)

        with search_context(horizon_limit=24):
            report = enumerate_min_length(J2_PLUS_ONE, (40, 2), 22)
    """
    prune_token = _prune.set(prune)
    limit_token = _horizon_limit.set(horizon_limit)
    try:
        yield
    finally:
        _horizon_limit.reset(limit_token)
        _prune.reset(prune_token)
