"""Precision policy and elementary multiprecision operations.

Everything numerical in this package runs through a PrecisionContext, which
separates three digit counts:

  * target_digits  - what the caller wants to trust,
  * guard_digits   - headroom for cancellation (binomial sums in particular
                     destroy roughly 0.3 digits per term index),
  * working_digits - what mpmath actually computes with.

Routines never touch the global mpmath precision except through the
``working`` context manager, so results are reproducible no matter what the
ambient ``mp.dps`` happens to be.
"""

from __future__ import annotations

import contextlib
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpf


class PrecisionExhaustedError(Exception):
    """A route cannot reach the requested accuracy by any admissible means.

    Raised when the mathematics (not the budget) is the obstacle: slowly
    convergent binomial sums, truncation floors of asymptotic series, and
    similar.  Callers that can fall back to another route should catch this.
    """


class NonConvergenceError(Exception):
    """An iterative scheme failed its own self-consistency check.

    Unlike PrecisionExhaustedError this signals a diagnostic failure (e.g.
    an Euler-Maclaurin evaluation whose N and 2N runs disagree), not a known
    structural limit.
    """


@dataclass(frozen=True)
class PrecisionContext:
    """Immutable bundle of digit budgets.

    Invariants, checked at construction:
      working_digits >= target_digits + guard_digits
      guard_digits   >= 10   (binomial-sum routes rely on this floor)
    """

    working_digits: int = 50
    target_digits: int = 30
    guard_digits: int = 20

    def __post_init__(self) -> None:
        if self.target_digits < 1:
            raise ValueError("target_digits must be positive")
        if self.guard_digits < 10:
            raise ValueError("guard_digits must be at least 10")
        if self.working_digits < self.target_digits + self.guard_digits:
            raise ValueError(
                "working_digits (%d) < target_digits (%d) + guard_digits (%d)"
                % (self.working_digits, self.target_digits, self.guard_digits)
            )

    @classmethod
    def for_digits(cls, digits: int, guard: int = 20) -> "PrecisionContext":
        """Context that trusts `digits` digits with the default guard."""
        guard = max(10, guard)
        return cls(working_digits=digits + guard, target_digits=digits,
                   guard_digits=guard)

    @property
    def tolerance(self) -> mpf:
        """Default verification tolerance, 10^-(target_digits - 5)."""
        with self.working():
            return mpf(10) ** (5 - self.target_digits)

    @property
    def eps(self) -> mpf:
        """Unit roundoff at working precision, 10^-working_digits."""
        with self.working():
            return mpf(10) ** (-self.working_digits)

    def working(self, extra: int = 0):
        """Context manager pinning mp.dps to working_digits (+ extra)."""
        return mp.workdps(self.working_digits + extra)

    def widened(self, extra: int) -> "PrecisionContext":
        """Same targets, `extra` more working digits (for inner stages)."""
        return PrecisionContext(self.working_digits + extra,
                                self.target_digits, self.guard_digits)


#: Module-wide default: 30 trusted digits, 20 guard, 50 working.
DEFAULT_CONTEXT = PrecisionContext()


def to_mp(x, ctx: PrecisionContext = DEFAULT_CONTEXT) -> mpf:
    """Convert int/Fraction/str/mpf to an mpf at working precision.

    Floats are accepted but converted exactly (their binary value), so pass
    strings for decimal literals that matter.
    """
    with ctx.working():
        if isinstance(x, Fraction):
            return mpf(x.numerator) / mpf(x.denominator)
        return mpf(x)


def principal_log(z, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """log z on the principal branch; real positive input gives real output."""
    with ctx.working():
        z = mp.mpmathify(z)
        if mp.im(z) == 0 and mp.re(z) > 0:
            return mp.log(mp.re(z))
        return mp.log(z)


def arctan_ratio(x, u, ctx: PrecisionContext = DEFAULT_CONTEXT) -> mpf:
    """tan^-1(x/u) for u > 0, x >= 0, always in [0, pi/2).

    Written as atan2 so that tiny u cannot flip the branch.
    """
    with ctx.working():
        x = mpf(x)
        u = mpf(u)
        if u <= 0:
            raise ValueError("arctan_ratio requires u > 0")
        if x < 0:
            raise ValueError("arctan_ratio requires x >= 0")
        return mp.atan2(x, u)


def log_power(z, n: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """(log z)^n on the principal branch; n = 0 returns 1 exactly."""
    if n < 0:
        raise ValueError("log_power needs n >= 0")
    with ctx.working():
        if n == 0:
            return mpf(1)
        return principal_log(z, ctx) ** n


def agreed_digits(a, b, ctx: PrecisionContext = DEFAULT_CONTEXT) -> int:
    """How many digits two values share: -log10 of |a-b| scaled by |a|.

    Uses absolute digits when |a| <= 1 and significant digits otherwise,
    capped at the working precision so noise cannot inflate the count.
    """
    with ctx.working():
        a = mpf(a)
        b = mpf(b)
        diff = abs(a - b)
        if diff == 0:
            return ctx.working_digits
        scale = max(abs(a), mpf(1))
        d = -mp.log10(diff / scale)
        return max(0, min(ctx.working_digits, int(mp.floor(d))))


@contextlib.contextmanager
def local_dps(dps: int):
    """Bare mp.dps pin for helpers that take no context."""
    with mp.workdps(dps):
        yield
