"""Cross-verified arbitrary-precision engine for Stieltjes constants and
the surrounding special-function web.

Every quantity of interest (generalized Stieltjes constants, Hurwitz zeta
and its s-derivatives, log-gamma, Barnes G, digamma/trigamma, sine and
cosine integrals) is computable by at least two mathematically independent
routes, and a catalog of identities checks the routes against each other.
See the README for the layout.
"""

from .precision import (
    DEFAULT_CONTEXT,
    NonConvergenceError,
    PrecisionContext,
    PrecisionExhaustedError,
)

__all__ = [
    "DEFAULT_CONTEXT",
    "NonConvergenceError",
    "PrecisionContext",
    "PrecisionExhaustedError",
]

__version__ = "0.1.0"
