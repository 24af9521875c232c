"""Double-exponential quadrature cores.

Two transforms cover everything in this package:

  * tanh-sinh on (0,1):   x(t) = 1/(1 + e^(-pi sinh t)),
  * exp-sinh on (0,inf):  x(t) = e^((pi/2) sinh t),

each evaluated on a fixed fine grid in t that is cached per working
precision and shared by every integral at that precision.  A single call
walks coarse-to-fine strides over the cached grid, reusing integrand
values across levels, and reports the last level difference as its error
estimate.

The Bose-weight integrator runs two genuinely different evaluations (the
direct transformed integral, and a mode expansion of the kernel with an
Euler-Maclaurin closure over the mode index) and refuses to answer if
they disagree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from mpmath import mp, mpf

from .precision import (
    DEFAULT_CONTEXT,
    NonConvergenceError,
    PrecisionContext,
)
from .series import _bern_mpf

SINGULARITY_NOTES = ("regular_at_0", "removable_at_0", "integrable_at_0",
                     "log_growth_at_infinity")


@dataclass
class Integrand1D:
    """A real integrand on (0,1) or (0,inf).

    eval(x) must be safe at every interior double-exponential node (x can
    be as small as ~1e-90 and, on (0,1), exponentially close to 1).  When
    behaviour near x = 1 needs the complement to stay accurate, supply
    eval_with_complement(x, one_minus_x); it then takes precedence.
    oscillatory marks integrands (sin/cos factors) for which the direct
    Bose route is hopeless and only the mode expansion is used.
    """

    eval: Callable
    singularity_note: str = "regular_at_0"
    eval_with_complement: Optional[Callable] = None
    oscillatory: bool = False

    def __post_init__(self):
        if self.singularity_note not in SINGULARITY_NOTES:
            raise ValueError("unknown singularity_note %r" % self.singularity_note)


@dataclass
class Integrand2D:
    """Real integrand on the open unit square.

    eval(x, y); eval_full(x, y, xc, yc) with exact complements wins when
    present.  symmetric=True promises f(x,y) = f(y,x) and halves the work.
    """

    eval: Optional[Callable] = None
    eval_full: Optional[Callable] = None
    symmetric: bool = False

    def __post_init__(self):
        if self.eval is None and self.eval_full is None:
            raise ValueError("Integrand2D needs eval or eval_full")


@dataclass
class QuadratureResult:
    value: object
    error_estimate: object
    nodes_used: int


# ---------------------------------------------------------------------------
# cached node tables
# ---------------------------------------------------------------------------

@dataclass
class _NodeTable:
    kind: str
    dps: int
    h: mpf                      # finest step
    ts: list = field(default_factory=list)      # t values
    xs: list = field(default_factory=list)      # abscissas
    xcs: list = field(default_factory=list)     # 1-x (tanh-sinh only)
    ws: list = field(default_factory=list)      # dx/dt, no h factor
    qs: Optional[list] = None   # e^(-2 pi x), built lazily for Bose modes


_TABLES: dict = {}

_TMAX_TS = mpf("6.3")
_TMAX_ES = mpf("5.6")


def _finest_level(dps: int) -> int:
    if dps <= 45:
        return 8
    if dps <= 90:
        return 9
    return 10


def _build_table(kind: str, dps: int) -> _NodeTable:
    lvl = _finest_level(dps)
    with mp.workdps(dps + 10):
        h = mpf(1) / (1 << lvl)
        tmax = _TMAX_TS if kind == "ts01" else _TMAX_ES
        n = int(mp.floor(tmax / h))
        ts, xs, xcs, ws = [], [], [], []
        half_pi = mp.pi / 2
        for i in range(-n, n + 1):
            t = i * h
            sh = mp.sinh(t)
            ch = mp.cosh(t)
            if kind == "ts01":
                e = mp.exp(-mp.pi * sh)
                x = 1 / (1 + e)
                xc = e / (1 + e)
                w = mp.pi * ch * x * xc
                xcs.append(xc)
            else:
                x = mp.exp(half_pi * sh)
                w = half_pi * ch * x
            ts.append(t)
            xs.append(x)
            ws.append(w)
        return _NodeTable(kind=kind, dps=dps, h=h, ts=ts, xs=xs,
                          xcs=xcs, ws=ws)


def _get_table(kind: str, dps: int) -> _NodeTable:
    key = (kind, dps)
    tab = _TABLES.get(key)
    if tab is None:
        tab = _build_table(kind, dps)
        _TABLES[key] = tab
    return tab


def _bose_qs(tab: _NodeTable) -> list:
    if tab.qs is None:
        with mp.workdps(tab.dps + 10):
            tab.qs = [mp.exp(-2 * mp.pi * x) for x in tab.xs]
    return tab.qs


# ---------------------------------------------------------------------------
# core stride walker
# ---------------------------------------------------------------------------

def _level_sum(fvals: list, feval, tab: _NodeTable, stride: int, eps_term):
    """h*stride * sum f(x_i) w_i over the stride sub-grid, walking outward
    from the center and stopping a side after 3 negligible terms."""
    mid = len(tab.xs) // 2
    total = mpf(0)
    used = 0

    def node_term(i):
        nonlocal used
        v = fvals[i]
        if v is None:
            v = feval(i)
            fvals[i] = v
            used += 1
        return v * tab.ws[i]

    total += node_term(mid)
    for direction in (1, -1):
        small = 0
        i = mid + direction * stride
        while 0 <= i < len(tab.xs):
            term = node_term(i)
            total += term
            if abs(term) < eps_term:
                small += 1
                if small >= 3:
                    break
            else:
                small = 0
            i += direction * stride
    return total * tab.h * stride, used


def _integrate_on_table(feval, tab: _NodeTable, tol, dps) -> QuadratureResult:
    fvals: list = [None] * len(tab.xs)
    eps_term = tol * mpf(10) ** (-6)
    stride = 1 << (_finest_level(dps) - 2)
    prev = None
    used_total = 0
    err = None
    while stride >= 1:
        val, used = _level_sum(fvals, feval, tab, stride, eps_term)
        used_total += used
        if prev is not None:
            err = abs(val - prev)
            if err < tol * max(1, abs(val)):
                return QuadratureResult(value=+val, error_estimate=+err,
                                        nodes_used=used_total)
        prev = val
        stride //= 2
    raise NonConvergenceError(
        "quadrature stalled: level difference %s above tol %s"
        % (mp.nstr(err, 3) if err is not None else "n/a", mp.nstr(tol, 3)))


def _default_tol(ctx: PrecisionContext):
    with ctx.working():
        return mpf(10) ** (-(ctx.target_digits + ctx.guard_digits // 2))


def tanh_sinh_01(f: Integrand1D, ctx: PrecisionContext = DEFAULT_CONTEXT,
                 tol=None) -> QuadratureResult:
    """integral of f over (0,1)."""
    with ctx.working(10):
        dps = ctx.working_digits
        tol = _default_tol(ctx) if tol is None else mpf(tol)
        tab = _get_table("ts01", dps)
        if f.eval_with_complement is not None:
            feval = lambda i: f.eval_with_complement(tab.xs[i], tab.xcs[i])
        else:
            feval = lambda i: f.eval(tab.xs[i])
        return _integrate_on_table(feval, tab, tol, dps)


def exp_sinh_0inf(f: Integrand1D, ctx: PrecisionContext = DEFAULT_CONTEXT,
                  tol=None) -> QuadratureResult:
    """integral of f over (0,inf); f must decay essentially exponentially."""
    with ctx.working(10):
        dps = ctx.working_digits
        tol = _default_tol(ctx) if tol is None else mpf(tol)
        tab = _get_table("es0inf", dps)
        feval = lambda i: f.eval(tab.xs[i])
        return _integrate_on_table(feval, tab, tol, dps)


# ---------------------------------------------------------------------------
# Bose-weight integrals, two ways
# ---------------------------------------------------------------------------

def _bose_direct(g: Integrand1D, tab: _NodeTable, tol, dps):
    """Direct transformed integral; also reports the stride it settled on."""
    two_pi = 2 * mp.pi
    fvals: list = [None] * len(tab.xs)
    eps_term = tol * mpf(10) ** (-6)

    def feval(i):
        x = tab.xs[i]
        return g.eval(x) / mp.expm1(two_pi * x)

    stride = 1 << (_finest_level(dps) - 2)
    prev = None
    used_total = 0
    while stride >= 1:
        val, used = _level_sum(fvals, feval, tab, stride, eps_term)
        used_total += used
        if prev is not None:
            err = abs(val - prev)
            if err < tol * max(1, abs(val)):
                res = QuadratureResult(value=+val, error_estimate=+err,
                                       nodes_used=used_total)
                return res, stride
        prev = val
        stride //= 2
    raise NonConvergenceError("bose direct route stalled")


class _BoseKernelSums:
    """Mode-expansion state for the kernel route.

      sum_{n>=1} T(n),  T(n) = int g(x) e^(-2 pi n x) dx,

    with n < N summed term by term and the tail closed by Euler-Maclaurin
    in the mode index:

      tail = int_N^inf T + T(N)/2 + sum_j B_2j/(2j)! D_{2j-1}(N),
      D_m(N) = int g(x) (2 pi x)^m e^(-2 pi N x) dx = (-1)^m T^(m)(N).

    One g value per node, cached across strides; the mode factors are
    running products of the cached e^(-2 pi x) base values.
    """

    def __init__(self, g: Integrand1D, tab: _NodeTable, tol, n_modes: int):
        self.g = g
        self.tab = tab
        self.qs = _bose_qs(tab)
        self.n_modes = n_modes
        self.eps_term = tol * mpf(10) ** (-6)
        self.gvals: list = [None] * len(tab.xs)
        self.evals = 0

    def _gval(self, i):
        v = self.gvals[i]
        if v is None:
            v = self.g.eval(self.tab.xs[i])
            self.gvals[i] = v
            self.evals += 1
        return v

    def _window(self, stride: int) -> list:
        """Active node indices, truncated on the n = 1 mode terms.

        The 1/(2 pi x) factor of the closing integral term is folded into
        the truncation test so the small-x tail is not cut prematurely.
        """
        tab = self.tab
        mid = len(tab.xs) // 2
        two_pi = 2 * mp.pi
        idxs = [mid]
        for direction in (1, -1):
            small = 0
            i = mid + direction * stride
            while 0 <= i < len(tab.xs):
                x = tab.xs[i]
                weight = tab.ws[i] * (1 + 1 / (two_pi * x))
                term = abs(self._gval(i) * self.qs[i] * weight)
                idxs.append(i)
                if term < self.eps_term:
                    small += 1
                    if small >= 3:
                        break
                else:
                    small = 0
                i += direction * stride
        idxs.sort()
        return idxs

    def value(self, stride: int):
        tab = self.tab
        qs = self.qs
        two_pi = 2 * mp.pi
        idxs = self._window(stride)
        hs = tab.h * stride
        N = self.n_modes
        acc = mpf(0)
        pv = {i: qs[i] for i in idxs}
        TN = mpf(0)
        for n in range(1, N + 1):
            Tn = mpf(0)
            for i in idxs:
                Tn += self._gval(i) * pv[i] * tab.ws[i]
            Tn *= hs
            if n < N:
                acc += Tn
                for i in idxs:
                    pv[i] *= qs[i]
            else:
                TN = Tn
        integral = mpf(0)
        for i in idxs:
            integral += (self._gval(i) * pv[i] / (two_pi * tab.xs[i])
                         * tab.ws[i])
        integral *= hs
        acc += integral + TN / 2
        prev = None
        for j in range(1, 25):
            m = 2 * j - 1
            D = mpf(0)
            for i in idxs:
                D += (self._gval(i) * pv[i] * (two_pi * tab.xs[i]) ** m
                      * tab.ws[i])
            D *= hs
            term = _bern_mpf(2 * j) / mp.factorial(2 * j) * D
            acc += term
            t = abs(term)
            if t < self.eps_term:
                break
            if prev is not None and t > prev:
                break
            prev = t
        return acc


def integrate_bose(g: Integrand1D, ctx: PrecisionContext = DEFAULT_CONTEXT,
                   tol=None) -> QuadratureResult:
    """int_0^inf g(x)/(e^(2 pi x) - 1) dx, cross-checked two ways.

    The direct transformed integral and the kernel mode expansion must
    agree within 10x the requested tolerance or NonConvergenceError is
    raised; the direct value (usually the more accurate one) is returned.
    Oscillatory integrands skip the direct route and refine the mode
    expansion on its own.
    """
    with ctx.working(10):
        dps = ctx.working_digits
        tol = _default_tol(ctx) if tol is None else mpf(tol)
        tab = _get_table("es0inf", dps)
        n_modes = max(20, int(0.8 * ctx.working_digits))
        kern = _BoseKernelSums(g, tab, tol, n_modes)
        if g.oscillatory:
            stride = 1 << (_finest_level(dps) - 2)
            prev = None
            err = None
            while stride >= 1:
                val = kern.value(stride)
                if prev is not None:
                    err = abs(val - prev)
                    if err < tol * max(1, abs(val)):
                        return QuadratureResult(+val, +err, kern.evals)
                prev = val
                stride //= 2
            raise NonConvergenceError(
                "bose kernel route stalled: level difference %s"
                % (mp.nstr(err, 3) if err is not None else "n/a"))
        direct, stride = _bose_direct(g, tab, tol, dps)
        kval = kern.value(stride)
        diff = abs(direct.value - kval)
        if diff > 10 * tol * max(1, abs(direct.value)):
            raise NonConvergenceError(
                "bose routes disagree: |direct-kernel| = %s" % mp.nstr(diff, 3))
        return QuadratureResult(
            value=direct.value,
            error_estimate=max(direct.error_estimate, diff),
            nodes_used=direct.nodes_used + kern.evals)


def integrate_laplace(h: Integrand1D, u, ctx: PrecisionContext = DEFAULT_CONTEXT,
                      tol=None) -> QuadratureResult:
    """int_0^inf e^(-u t) h(t) dt for u > 0."""
    with ctx.working(10):
        uu = mpf(u)
        if uu <= 0:
            raise ValueError("integrate_laplace requires u > 0")
        inner = Integrand1D(
            eval=lambda t: h.eval(t) * mp.exp(-uu * t),
            singularity_note=h.singularity_note)
        return exp_sinh_0inf(inner, ctx, tol)


# ---------------------------------------------------------------------------
# 2-D unit square
# ---------------------------------------------------------------------------

#: Clip distance from the square's edges.  The excluded sliver contributes
#: O(delta log^2 delta) ~ 8e-10 worst case for the integrands here, which
#: is why the 2-D entries carry 1e-8..1e-10 tolerances, never the default.
CLIP_DELTA = mpf("1e-12")


def integrate_unit_square(f2: Integrand2D,
                          ctx: PrecisionContext = DEFAULT_CONTEXT,
                          tol=None) -> QuadratureResult:
    """Tensor tanh-sinh over (0,1)^2 with edge clipping.

    Working precision is capped near 45 digits (the 2-D entries target
    1e-8..1e-10, not 1e-25); rows share the y-nodes innermost so the
    per-row cancellations stay inside one partial sum.
    """
    dps = min(ctx.working_digits, 45)
    with mp.workdps(dps + 10):
        tol = mpf("1e-11") if tol is None else mpf(tol)
        tab = _get_table("ts01", dps)
        if f2.eval_full is not None:
            fxy = f2.eval_full
            # complement-aware integrands stay finite arbitrarily close to
            # the edges, so the stripped band only needs to sit below the
            # 2-D tolerance floor, not below working precision
            delta = mpf("1e-30")
        else:
            fxy = lambda x, y, xc, yc: f2.eval(x, y)
            delta = CLIP_DELTA

        lvl_fin = _finest_level(dps)
        mid = len(tab.xs) // 2

        def window(stride):
            idxs = []
            i = mid
            while i >= 0 and tab.xs[i] > delta:
                idxs.append(i)
                i -= stride
            idxs.reverse()
            i = mid + stride
            while i < len(tab.xs) and tab.xcs[i] > delta:
                idxs.append(i)
                i += stride
            return idxs

        def level_value(stride):
            idxs = window(stride)
            hs = tab.h * stride
            total = mpf(0)
            count = 0
            if f2.symmetric:
                for pos, i in enumerate(idxs):
                    xi, xci, wi = tab.xs[i], tab.xcs[i], tab.ws[i]
                    row = mpf(0)
                    for j in idxs[:pos]:
                        row += fxy(xi, tab.xs[j], xci, tab.xcs[j]) * tab.ws[j]
                        count += 1
                    total += 2 * row * wi
                    total += fxy(xi, xi, xci, xci) * wi * wi
                    count += 1
                return total * hs * hs, count
            for i in idxs:
                xi, xci, wi = tab.xs[i], tab.xcs[i], tab.ws[i]
                row = mpf(0)
                for j in idxs:
                    row += fxy(xi, tab.xs[j], xci, tab.xcs[j]) * tab.ws[j]
                    count += 1
                total += row * wi
            return total * hs * hs, count

        used = 0
        prev = None
        err = None
        val = None
        for lshift in (5, 6, 7):  # h = 1/32, 1/64, then 1/128 if undecided
            stride = 1 << (lvl_fin - lshift)
            val, cnt = level_value(stride)
            used += cnt
            if prev is not None:
                err = abs(val - prev)
                if err < tol * max(1, abs(val)):
                    return QuadratureResult(+val, +err, used)
            prev = val
        if err is None:
            raise NonConvergenceError("no 2-D refinement happened")
        return QuadratureResult(+val, +err, used)


# ---------------------------------------------------------------------------
# Abel-Plana
# ---------------------------------------------------------------------------

def abel_plana_sum(f_at_u, im_f, u, main_integral=None,
                   f_line: Optional[Integrand1D] = None,
                   ctx: PrecisionContext = DEFAULT_CONTEXT, tol=None):
    """sum_{k>=0} f(u+k) = f(u)/2 + int_u^inf f - 2 int_0^inf Im f(u+ix) B(x) dx

    with B the Bose kernel.  im_f is a callable (or Integrand1D) giving
    Im f(u+ix) as a real function of x.  The middle term is taken from
    main_integral when the caller has it in closed form (mandatory when
    the line integral only exists by analytic continuation, e.g. zeta at
    negative s); otherwise f_line is integrated numerically over (u, inf).
    """
    with ctx.working(10):
        if not isinstance(im_f, Integrand1D):
            im_f = Integrand1D(eval=im_f)
        if main_integral is None:
            if f_line is None:
                raise ValueError("need main_integral or f_line")
            shifted = Integrand1D(
                eval=lambda t: f_line.eval(t + mpf(u)),
                singularity_note=f_line.singularity_note)
            main = exp_sinh_0inf(shifted, ctx, tol).value
        else:
            main = mpf(main_integral)
        corr = integrate_bose(im_f, ctx, tol).value
        return mpf(f_at_u) / 2 + main - 2 * corr
