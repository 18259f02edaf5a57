"""Poincare series of generalized divisorial filtrations on plane curve singularities.

Thin wrapper around the compiled extension; every function speaks the same
JSON documents as the divisor-series CLI.
"""

try:
    from ._divisor_series import (  # type: ignore[attr-defined]
        InvalidInputError,
        ScopeError,
        __version__,
        facets,
        order,
        poincare,
    )
except ImportError:  # build-tree layout: the extension sits next to us on sys.path
    from _divisor_series import (  # type: ignore[no-redef]
        InvalidInputError,
        ScopeError,
        __version__,
        facets,
        order,
        poincare,
    )

__all__ = [
    "InvalidInputError",
    "ScopeError",
    "__version__",
    "facets",
    "order",
    "poincare",
]
