"""Numerical engine: Euler-type integrals, classical series, helpers.

Integrals are evaluated in a dehomogenized chart over product cycles,
one adaptive 1-D quadrature per axis, with the logarithmic measure and
the pure power of each variable folded into the axis parameterization.
Branch rule on a rotated ray w = e^{i theta} t, t > 0:
    w^alpha := exp(alpha (ln t + i theta)),
so theta = 0 is the principal branch and integrals vary continuously in
theta.  Unbounded axes are truncated by geometric segments grown until
the last segment contributes less than the absolute tolerance.
"""

import cmath
import math
import warnings as _warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from scipy.integrate import IntegrationWarning, quad
from scipy.special import loggamma as _scipy_loggamma

from .configs import CatalogEntry, StandardForm
from .errors import (
    DimensionMismatch,
    NotConverged,
    OutOfDomain,
    PoleInC,
    PoleInGamma,
    SingularOnCycle,
    UnsupportedParameters,
    BranchAmbiguityWarning,
)

_INT_TOL = 1e-12


# ==========================================================================
# factorial conventions and log-gamma
# ==========================================================================


def falling_factorial(alpha, k: int) -> complex:
    """alpha (alpha - 1) ... (alpha - k + 1); descending convention."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = 1 + 0j
    for j in range(k):
        out *= alpha - j
    return out


def rising_pochhammer(alpha, k: int) -> complex:
    """alpha (alpha + 1) ... (alpha + k - 1); ascending convention."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = 1 + 0j
    for j in range(k):
        out *= alpha + j
    return out


def log_gamma(z) -> complex:
    """Principal log-gamma; exp(log_gamma(z)) equals Gamma(z) exactly."""
    zc = complex(z)
    if abs(zc.imag) < _INT_TOL and zc.real <= 0.5 and _near_int(zc.real):
        raise PoleInGamma(f"gamma pole at {z!r}")
    return complex(_scipy_loggamma(zc))


def _near_int(v: float, tol: float = _INT_TOL) -> bool:
    return abs(v - round(v)) < tol


def _is_integer(q) -> bool:
    z = complex(q)
    return abs(z.imag) < _INT_TOL and _near_int(z.real)


# ==========================================================================
# cycles and quadrature plumbing
# ==========================================================================


@dataclass(frozen=True)
class AxisCycle:
    """Integration path for one dehomogenized variable."""

    kind: str  # "ray" | "real_line" | "unit_interval" | "unit_circle"
    phase: float = 0.0

    def describe(self) -> str:
        if self.kind == "ray":
            return f"ray(phase={self.phase:g})"
        return self.kind


def positive_axis(phase: float = 0.0) -> AxisCycle:
    return AxisCycle(kind="ray", phase=float(phase))


def negative_axis() -> AxisCycle:
    # phase -pi: the branch for which the half-turn rotation identity
    # carries the factor exp(-i pi beta) with no extra winding
    return AxisCycle(kind="ray", phase=-math.pi)


def real_line() -> AxisCycle:
    return AxisCycle(kind="real_line")


def unit_interval() -> AxisCycle:
    return AxisCycle(kind="unit_interval")


def unit_circle() -> AxisCycle:
    return AxisCycle(kind="unit_circle")


@dataclass(frozen=True)
class QuadratureSettings:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_subdivisions: int = 200
    truncation_growth: float = 3.0
    max_segments: int = 60

    def __post_init__(self):
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise ValueError("tolerances must be positive")


@dataclass
class EvaluationResult:
    value: complex
    error_estimate: float
    converged: bool
    warnings: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "value": [self.value.real, self.value.imag],
            "error_estimate": self.error_estimate,
            "converged": self.converged,
            "warnings": list(self.warnings),
        }


def _normalize_cycle(cycle, r: int) -> tuple[AxisCycle, ...]:
    if isinstance(cycle, AxisCycle):
        cycle = (cycle,)
    cycle = tuple(cycle)
    if len(cycle) != r:
        raise DimensionMismatch(f"cycle has arity {len(cycle)}, chart has r = {r}")
    return cycle


# ==========================================================================
# Euler-type integrals
# ==========================================================================


def euler_integral(
    sf: StandardForm,
    beta,
    x,
    cycle,
    settings: Optional[QuadratureSettings] = None,
    measure: str = "log",
) -> EvaluationResult:
    """Integral of prod_i f_i(w)^{beta'_i} prod_k w_k^{-beta'_{m+k}} dlog w.

    measure="plain" integrates against Lebesgue measure dw instead of
    dw/w on every axis (the convention of the dehomogenized shift
    identities, which would otherwise hit the w = 0 pole on line cycles).
    """
    return derivative_integral(
        sf, beta, x, (0,) * sf.base.n, cycle, settings, measure=measure
    )


def derivative_integral(
    sf: StandardForm,
    beta,
    x,
    u,
    cycle,
    settings: Optional[QuadratureSettings] = None,
    measure: str = "log",
) -> EvaluationResult:
    """Mixed partial d^u of the Euler integral, by one quadrature.

    Differentiating under the integral sign lowers the block exponent by
    the total order drawn from that block and inserts the monomial w^{Eu};
    the scalar prefactor is the product of descending factorials of the
    block parameters.
    """
    settings = settings or QuadratureSettings()
    if measure not in ("log", "plain"):
        raise OutOfDomain(f"measure must be 'log' or 'plain', got {measure!r}")
    n, r, m = sf.base.n, sf.r, sf.m
    if len(x) != n:
        raise DimensionMismatch(f"x has length {len(x)}, expected {n}")
    u = tuple(int(v) for v in u)
    if len(u) != n or any(v < 0 for v in u):
        raise DimensionMismatch("u must be a length-n nonnegative integer vector")
    cycle = _normalize_cycle(cycle, r)
    beta_t = sf.transform_parameters(beta)
    degs = [sum(u[j] for j in blk) for blk in sf.blocks]
    prefactor = 1 + 0j
    for i in range(m):
        prefactor *= falling_factorial(complex(beta_t[i]), degs[i])
    exps = sf.exponents
    eu = [sum(exps[k][j] * u[j] for j in range(n)) for k in range(r)]
    powers = [complex(eu[k]) - complex(beta_t[m + k]) for k in range(r)]
    if measure == "plain":
        # dw = w * dw/w: shift every axis exponent up by one
        powers = [p + 1 for p in powers]
    fpowers = [complex(beta_t[i]) - degs[i] for i in range(m)]
    work = _IteratedIntegral(sf, x, fpowers, powers, cycle, settings)
    if prefactor == 0:
        return EvaluationResult(value=0j, error_estimate=0.0, converged=True)
    work.prescan()
    value, err, warns, ok = work.run()
    tol = max(settings.rel_tol * abs(value), settings.abs_tol / abs(prefactor))
    if ok and err > tol and value != 0:
        # cancellation between cycle pieces leaves the first pass short
        # of the band; rerun once with budgets scaled to the observed value
        boost = min(4.0 * err / tol, 1e4)
        retry = _IteratedIntegral(
            sf, x, fpowers, powers, cycle, settings, tol_boost=boost
        )
        v2, e2, w2, ok2 = retry.run()
        if e2 < err:
            value, err, ok = v2, e2, ok2
            for msg in w2:
                if msg not in warns:
                    warns.append(msg)
    value *= prefactor
    err *= abs(prefactor)
    tol = max(settings.rel_tol * abs(value), settings.abs_tol)
    return EvaluationResult(
        value=value,
        error_estimate=err,
        converged=ok and err <= tol,
        warnings=warns,
    )


class _IteratedIntegral:
    """Per-axis adaptive quadrature, outermost axis first."""

    def __init__(self, sf, x, fpowers, powers, cycle, settings, tol_boost=1.0):
        self.sf = sf
        self.x = [complex(v) for v in x]
        self.fpowers = fpowers
        self.powers = powers
        self.cycle = cycle
        self.settings = settings
        self.tol_boost = tol_boost
        self.r = sf.r
        exps = sf.exponents
        self.cols = [
            tuple(exps[k][j] for k in range(self.r)) for j in range(sf.base.n)
        ]
        self.blocks = sf.blocks
        self.warnings: list[str] = []
        self.hard_ok = True
        # largest absolute error and value seen on each inner axis; their
        # ratio bounds the relative noise the outer quadrature integrates
        self.inner_err = [0.0] * self.r
        self.inner_scale = [0.0] * self.r
        self.outer_err = 0.0
        self.is_real = self._real_valued()

    def _real_valued(self) -> bool:
        if any(abs(v.imag) > 0 for v in self.x):
            return False
        if any(abs(p.imag) > 0 for p in self.powers + self.fpowers):
            return False
        for ax in self.cycle:
            if ax.kind == "unit_circle":
                return False
            if ax.kind == "ray" and ax.phase != 0.0:
                return False
            if ax.kind == "real_line":
                return False
        return True

    # -- integrand ---------------------------------------------------------

    def f_values(self, w) -> list[complex]:
        vals = []
        for blk in self.blocks:
            s = 0j
            for j in blk:
                term = self.x[j]
                col = self.cols[j]
                for k in range(self.r):
                    e = col[k]
                    if e:
                        term *= w[k] ** e
                s += term
            vals.append(s)
        return vals

    def leaf(self, w) -> complex:
        out = 1 + 0j
        for fv, q in zip(self.f_values(w), self.fpowers):
            if q == 0:
                continue
            out *= cmath.exp(q * cmath.log(fv))
        return out

    # -- pre-scan for zeros on the cycle ------------------------------------

    def prescan(self):
        grids = [self._scan_points(ax) for ax in self.cycle]
        reduced = [g if len(g) <= 9 else g[:: max(1, len(g) // 9)] for g in grids]
        scale = max(abs(v) for v in self.x) or 1.0
        for k in range(self.r):
            others = [reduced[i] for i in range(self.r)]
            others[k] = [None]
            for combo in _product(others):
                prev = None
                for t in grids[k]:
                    w = list(combo)
                    w[k] = t
                    for i, fv in enumerate(self.f_values(w)):
                        if abs(fv) < 1e-13 * scale:
                            raise SingularOnCycle(
                                f"f_{i + 1} vanishes near w = {w}"
                            )
                        if prev is not None:
                            pv = prev[i]
                            if (
                                abs(pv.imag) < 1e-14 * scale
                                and abs(fv.imag) < 1e-14 * scale
                                and pv.real * fv.real < 0
                            ):
                                raise SingularOnCycle(
                                    f"f_{i + 1} changes sign along axis {k + 1}"
                                )
                            if _arg_jump(pv, fv) and not _is_integer(
                                self.fpowers[i]
                            ):
                                # integer powers are single valued; a cut
                                # crossing only matters for fractional ones
                                self._warn(
                                    f"f_{i + 1} crosses the branch cut "
                                    f"along axis {k + 1}"
                                )
                    prev = self.f_values(w)

    def _scan_points(self, ax: AxisCycle) -> list[complex]:
        if ax.kind == "ray":
            rot = cmath.exp(1j * ax.phase)
            return [rot * t for t in np.geomspace(1e-4, 1e4, 33)]
        if ax.kind == "real_line":
            ts = np.geomspace(1e-4, 1e4, 17)
            return [-t for t in ts[::-1]] + list(ts)
        if ax.kind == "unit_interval":
            return list(np.linspace(1.0 / 64, 1 - 1.0 / 64, 33))
        if ax.kind == "unit_circle":
            return [cmath.exp(2j * math.pi * s / 32) for s in range(32)]
        raise ValueError(f"unknown cycle kind {ax.kind!r}")

    def _warn(self, msg: str):
        if msg not in self.warnings:
            self.warnings.append(msg)

    # -- per-axis integration ------------------------------------------------

    def run(self):
        value = self._axis(0, [None] * self.r)
        noise = sum(
            self.inner_err[k] / max(self.inner_scale[k], 1e-300)
            for k in range(1, self.r)
        )
        err = self.outer_err + abs(value) * noise
        return value, err, self.warnings, self.hard_ok

    def _axis_tols(self, k: int):
        s = self.settings
        shrink = 2 * 4**k
        rel = max(s.rel_tol / (shrink * self.tol_boost), 2e-14)
        return rel, s.abs_tol / shrink

    def _axis(self, k: int, w) -> complex:
        ax = self.cycle[k]
        if ax.kind == "ray":
            pieces = [(ax.phase, 1.0)]
        elif ax.kind == "real_line":
            # oriented left to right: the negative half enters reversed
            pieces = [(0.0, 1.0), (-math.pi, -1.0)]
        else:
            pieces = [(ax.kind, 1.0)]
        total = 0j
        err = 0.0
        for spec, sign in pieces:
            v, e = self._piece(k, w, spec)
            total += sign * v
            err += e
        if k == 0:
            self.outer_err = err
        else:
            self.inner_err[k] = max(self.inner_err[k], err)
            self.inner_scale[k] = max(self.inner_scale[k], abs(total))
        return total

    def _piece(self, k, w, spec):
        p = self.powers[k]

        if spec == "unit_interval":
            rho = complex(p).real
            if rho > 0:
                # absorb the algebraic endpoint weight exactly:
                # t = s^(1/rho) turns t^(p-1) dt into t^(p-rho) ds / rho
                inv = 1.0 / rho

                def h(s):
                    t = s**inv
                    w[k] = t
                    inner = self._inner(k, w)
                    return inner * cmath.exp((p - rho) * math.log(t)) * inv

            else:

                def h(t):
                    w[k] = t
                    inner = self._inner(k, w)
                    return inner * cmath.exp((p - 1) * math.log(t))

            return self._quad(h, 0.0, 1.0, k)[:2]

        if spec == "unit_circle":

            def h(s):
                w[k] = cmath.exp(2j * math.pi * s)
                inner = self._inner(k, w)
                return inner * 2j * math.pi * cmath.exp(2j * math.pi * p * s)

            return self._quad(h, 0.0, 1.0, k)[:2]

        # rotated ray with phase theta
        theta = spec
        rot = cmath.exp(1j * theta)
        phase_factor = cmath.exp(1j * theta * p)

        def h(t):
            w[k] = rot * t
            inner = self._inner(k, w)
            return inner * phase_factor * cmath.exp((p - 1) * math.log(t))

        return self._ray(h, k)

    def _inner(self, k, w) -> complex:
        if k + 1 == self.r:
            return self.leaf(w)
        return self._axis(k + 1, list(w))

    def _ray(self, h, k):
        # default treatment of the unbounded axis: map t = s/(1-s) onto
        # the unit interval and let the extrapolating rule work through
        # the algebraic endpoints in a single call
        def g(s):
            om = 1.0 - s
            return h(s / om) / (om * om)

        rel, at = self._axis_tols(k)
        val, err, warned = self._quad(g, 0.0, 1.0, k, record=False)
        if not warned or err <= max(at, rel * abs(val)):
            # the roundoff complaint is advisory; the returned estimate
            # is still a valid bound and may already meet the budget
            return val, err
        try:
            return self._ray_marched(h, k)
        except NotConverged:
            if not cmath.isfinite(val) or err > 0.1 * abs(val):
                raise
            self.hard_ok = False
            self._warn(f"quadrature warning on axis {k + 1}")
            return val, err

    def _ray_marched(self, h, k):
        # fallback: geometric tail marching until the last segment no
        # longer contributes
        s = self.settings
        rel, at = self._axis_tols(k)
        total, err, _ = self._quad(h, 0.0, 1.0, k)
        lo, g = 1.0, s.truncation_growth
        quiet = 0
        for _ in range(s.max_segments):
            v, e, _ = self._quad(h, lo, lo * g, k)
            total += v
            err += e
            lo *= g
            if abs(v) <= max(at, rel * abs(total)):
                quiet += 1
                if quiet >= 2:
                    err += abs(v)  # geometric-tail truncation allowance
                    return total, err
            else:
                quiet = 0
        raise NotConverged(
            f"ray tail on axis {k + 1} still contributes after "
            f"{s.max_segments} geometric segments"
        )

    def _quad(self, h, a, b, k, record=True):
        rel, at = self._axis_tols(k)
        with _warnings.catch_warnings(record=True) as caught:
            _warnings.simplefilter("always", IntegrationWarning)
            if self.is_real:
                val, err = quad(
                    lambda t: h(t).real,
                    a,
                    b,
                    epsabs=at,
                    epsrel=rel,
                    limit=self.settings.max_subdivisions,
                )
                val = complex(val)
            else:
                val, err = quad(
                    h,
                    a,
                    b,
                    epsabs=at,
                    epsrel=rel,
                    limit=self.settings.max_subdivisions,
                    complex_func=True,
                )
        warned = any(
            issubclass(item.category, IntegrationWarning) for item in caught
        )
        if warned and record:
            # QUADPACK could not hit the per-axis budget; its achieved
            # error estimate is still honest and flows into the final
            # converged test, so the complaint is advisory
            self._warn(f"quadrature warning on axis {k + 1}")
        if isinstance(err, complex):
            # complex_func=True packs the two QUADPACK error estimates
            # into real and imaginary parts
            err = abs(err.real) + abs(err.imag)
        return complex(val), float(err), warned


def _product(lists):
    if not lists:
        yield ()
        return
    for head in lists[0]:
        for rest in _product(lists[1:]):
            yield (head,) + rest


def _arg_jump(prev: complex, cur: complex) -> bool:
    if prev == 0 or cur == 0:
        return False
    dphi = cmath.phase(cur / prev)
    return abs(dphi) > 3.0


# ==========================================================================
# homogenization constant
# ==========================================================================


def homogenization_constant(m: int, beta_head, tau=None) -> complex:
    """Torus-skeleton factor, normalized by (2 pi i)^m.

    For one block the skeleton integrand is constant.  For several blocks
    with nonnegative integer head parameters the contour integral extracts
    a multinomial coefficient; other head parameters are multivalued on
    the skeleton and are not supported.
    """
    if m < 1:
        raise UnsupportedParameters("m must be >= 1")
    if m == 1:
        return 1 + 0j
    ints = []
    for v in beta_head:
        z = complex(v)
        if abs(z.imag) > _INT_TOL or not _near_int(z.real) or round(z.real) < 0:
            raise UnsupportedParameters(
                "several blocks need nonnegative integer head parameters"
            )
        ints.append(round(z.real))
    if len(ints) != m:
        raise DimensionMismatch("beta_head must have length m")
    total = sum(ints)
    out = math.factorial(total)
    for v in ints:
        out //= math.factorial(v)
    return complex(out)


# ==========================================================================
# classical series
# ==========================================================================


def _check_c(cval, name="c"):
    z = complex(cval)
    if abs(z.imag) < _INT_TOL and z.real <= 0.5 and _near_int(z.real):
        raise PoleInC(f"{name} = {cval!r} is a nonpositive integer")


def series_2f1(a, b, c, x, rel=1e-16, max_terms=200000) -> complex:
    """Plain power series; caller guarantees |x| < 1."""
    term = 1 + 0j
    total = 1 + 0j
    small = 0
    for k in range(max_terms):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * x
        total += term
        if abs(term) <= rel * abs(total):
            small += 1
            if small >= 2:
                return total
        else:
            small = 0
    raise NotConverged("2F1 series did not settle within the term budget")


def gauss_2f1(a, b, c, x) -> complex:
    """Gauss series with automatic continuation onto the smaller argument.

    Uses the plain series on |x| < 1, switching to the reflected argument
    x/(x-1) with prefactor (1-x)^(-a) whenever that argument is smaller.
    """
    _check_c(c)
    x = complex(x)
    if x == 0:
        return 1 + 0j
    w = x / (x - 1) if x != 1 else None
    use_pfaff = w is not None and abs(w) < abs(x)
    if use_pfaff and abs(w) < 1:
        pref = cmath.exp(-a * cmath.log(1 - x))
        return pref * series_2f1(a, c - b, c, w)
    if abs(x) < 1:
        return series_2f1(a, b, c, x)
    raise OutOfDomain(f"x = {x!r} is outside the series and reflection domains")


def appell_f4(a, b, c, cp, y1, y2, rel=1e-16, max_diag=3000) -> complex:
    """Double series summed along anti-diagonals with ratio stepping."""
    _check_c(c, "c")
    _check_c(cp, "c'")
    y1 = complex(y1)
    y2 = complex(y2)
    if math.sqrt(abs(y1)) + math.sqrt(abs(y2)) >= 1:
        raise OutOfDomain("sqrt|y1| + sqrt|y2| must be < 1")
    if y1 == 0 and y2 == 0:
        return 1 + 0j
    total = 1 + 0j
    lead = 1 + 0j  # term at (r, s) = (N, 0): (a)_N (b)_N y1^N / ((c)_N N!)
    lead_alt = 1 + 0j  # term at (0, N)
    small = 0
    for N in range(1, max_diag):
        lead *= (a + N - 1) * (b + N - 1) / ((c + N - 1) * N) * y1
        lead_alt *= (a + N - 1) * (b + N - 1) / ((cp + N - 1) * N) * y2
        if abs(y1) >= abs(y2):
            diag = lead
            term = lead
            r, s = N, 0
            while r > 0:
                # move one unit from r to s
                term *= y2 * (c + r - 1) * r / (y1 * (cp + s) * (s + 1))
                r -= 1
                s += 1
                diag += term
                if term == 0:
                    break
        else:
            diag = lead_alt
            term = lead_alt
            r, s = 0, N
            while s > 0:
                term *= y1 * (cp + s - 1) * s / (y2 * (c + r) * (r + 1))
                s -= 1
                r += 1
                diag += term
                if term == 0:
                    break
        total += diag
        if abs(diag) <= rel * abs(total):
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
    raise NotConverged("F4 anti-diagonal sums did not settle")


def lauricella_fc(m: int, a, b, cs, ys, rel=1e-15, max_diag=2000) -> complex:
    """m-fold series by total degree, m <= 3, in log-gamma form."""
    if m < 1 or m > 3:
        raise UnsupportedParameters("m must be 1, 2, or 3")
    if len(cs) != m or len(ys) != m:
        raise DimensionMismatch("need m lower parameters and m arguments")
    for i, cv in enumerate(cs):
        _check_c(cv, f"c{i + 1}")
    ys = [complex(y) for y in ys]
    if sum(math.sqrt(abs(y)) for y in ys) >= 1:
        raise OutOfDomain("sum of sqrt|y_i| must be < 1")

    chunk = 64
    size = chunk

    def tables(n):
        ks = np.arange(n)
        lg = {
            "a": _scipy_loggamma(a + ks + 0j),
            "b": _scipy_loggamma(b + ks + 0j),
            "fact": _scipy_loggamma(ks + 1.0 + 0j),
        }
        for i in range(m):
            lg[f"c{i}"] = _scipy_loggamma(cs[i] + ks + 0j)
        yp = []
        for y in ys:
            col = np.empty(n, dtype=complex)
            col[0] = 1
            for k in range(1, n):
                col[k] = col[k - 1] * y
            yp.append(col)
        return lg, yp

    lg, yp = tables(size)
    total = 0j
    small = 0
    for N in range(max_diag):
        if N >= size:
            size *= 2
            lg, yp = tables(size)
        base = (
            lg["a"][N]
            - lg["a"][0]
            + lg["b"][N]
            - lg["b"][0]
            + sum(lg[f"c{i}"][0] for i in range(m))
        )
        if m == 1:
            expo = base - lg["c0"][N] - lg["fact"][N]
            diag = np.exp(expo) * yp[0][N]
        elif m == 2:
            k = np.arange(N + 1)
            expo = base - lg["c0"][k] - lg["c1"][N - k] - lg["fact"][k] - lg["fact"][N - k]
            diag = (np.exp(expo) * yp[0][k] * yp[1][N - k]).sum()
        else:
            diag = 0j
            for k3 in range(N + 1):
                k = np.arange(N - k3 + 1)
                expo = (
                    base
                    - lg["c0"][k]
                    - lg["c1"][N - k3 - k]
                    - lg["c2"][k3]
                    - lg["fact"][k]
                    - lg["fact"][N - k3 - k]
                    - lg["fact"][k3]
                )
                diag += (np.exp(expo) * yp[0][k] * yp[1][N - k3 - k]).sum() * yp[2][k3]
        total += complex(diag)
        if N >= 2 and abs(diag) <= rel * max(abs(total), 1e-300):
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
    raise NotConverged("FC total-degree sums did not settle")


# ==========================================================================
# classical solutions of the catalog systems
# ==========================================================================


def classical_solution(entry: CatalogEntry, params: dict, x) -> complex:
    """Monomial prefactor times the entry's classical series at x."""
    model = entry.classical
    if model is None or model.series not in ("2f1", "f4", "fc"):
        raise UnsupportedParameters(
            f"catalog entry {entry.name!r} has no classical series form"
        )
    n = entry.config.n
    if len(x) != n:
        raise DimensionMismatch(f"x has length {len(x)}, expected {n}")
    x = [complex(v) for v in x]
    args = []
    for kind, num, den in model.arguments:
        dval = 1 + 0j
        for j in den:
            dval *= x[j]
        if dval == 0:
            raise OutOfDomain("argument denominator vanishes")
        nval = 1 + 0j
        for j in num:
            nval *= x[j]
        ratio = nval / dval
        args.append(1 - ratio if kind == "one_minus_ratio" else ratio)
    expvals = model.prefactor_exponent_values(params)
    pref = 1 + 0j
    for j, e in enumerate(expvals):
        ec = complex(e)
        if ec == 0:
            continue
        base = x[j]
        if base == 0:
            raise OutOfDomain(f"prefactor base x_{j + 1} is zero")
        if base.imag == 0 and base.real < 0:
            _warnings.warn(
                f"prefactor base x_{j + 1} lies on the negative real axis; "
                "principal branch chosen",
                BranchAmbiguityWarning,
                stacklevel=2,
            )
        pref *= cmath.exp(ec * cmath.log(base))
    p = params
    if model.series == "2f1":
        return pref * gauss_2f1(p["a"], p["b"], p["c"], args[0])
    if model.series == "f4":
        return pref * appell_f4(p["a"], p["b"], p["c"], p["cp"], args[0], args[1])
    m = len(model.arguments)
    cs = [p[f"c{i + 1}"] for i in range(m)]
    return pref * lauricella_fc(m, p["a"], p["b"], cs, args)
