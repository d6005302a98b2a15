"""Degenerate principal-series sections and intertwining integrals.

Non-archimedean places: the spherical vector of the induced model
transforms under the mirabolic parabolic through the inducing character,
so its value depends only on the minimal valuation ("content") of the
last row.  The intertwining integral over the (n-k)-dimensional
unipotent slice is evaluated exactly by shell decomposition: the
integration lattice is partitioned by the valuation vector, each shell
contributes its volume times (aX)^t, and the resulting geometric series
are summed in closed form as rational functions in X = q^{-s}.  The
result is compared with the product-formula target

    (1 - aX) / (1 - a q^{n-k} X).

Complex places: the minimal-type basis sections

    phi_beta(g) = prod_j g[n,j]^{beta_j} / (sum_j |g[n,j]|^2)^{eta_bar + s}

are integrated numerically over the same slice with the twice-Lebesgue
measure per complex coordinate (local constant c_v = 1).  Angular
integrals are trigonometric-monomial circle integrals (evaluated with an
exact-for-trig trapezoid rule), radial integrals use adaptive quadrature;
the target is c_v^{n-k} times the Gamma_C shift-ratio product

    prod_{t=1..n-k} 2*pi / (s + eta_bar - t)

for the distinguished multi-index beta0 = (0, ..., 0, eta_bar - eta),
and 0 otherwise.

The symbolic constant-term assembly lists one summand per k with its
global L-ratio token, its normalizing prefactor and the extra factor
required when the global value at 0 vanishes, and audits pole orders.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .cyclotomic import Cyc
from .laurent import LaurentRatio, XPoly
from .lfactors import VanishingToken, gamma_ratio, normalizing_factor, unramified_lratio
from .errors import (
    AuditFailed,
    ConvergenceRegionViolated,
    SingularMatrix,
)
from . import quadrature


# -- sections -------------------------------------------------------------------


@dataclass(frozen=True)
class SectionSpec:
    """Archimedean minimal-type section: exponents beta and the eta pair.

    beta has nonnegative entries summing to eta_bar - eta; s is the
    complex deformation parameter.
    """

    n: int
    beta: tuple[int, ...]
    eta_low: int   # value <= 0 at the chosen embedding
    eta_high: int  # value >= n at the conjugate embedding
    s: complex = 0j

    def __post_init__(self):
        if len(self.beta) != self.n:
            raise ValueError("beta must have length n")
        if any(b < 0 for b in self.beta):
            raise ValueError("beta entries must be nonnegative")
        if sum(self.beta) != self.eta_high - self.eta_low:
            raise ValueError("beta entries must sum to eta_high - eta_low")

    @property
    def beta0(self) -> tuple[int, ...]:
        return (0,) * (self.n - 1) + (self.eta_high - self.eta_low,)


def section_value(spec: SectionSpec, g) -> complex:
    """Evaluate phi_beta at an invertible complex matrix g."""
    n = spec.n
    det = _det(g)
    if abs(det) < 1e-12:
        raise SingularMatrix("section evaluated at a singular matrix")
    last = g[n - 1]
    numerator = complex(1)
    for j in range(n):
        if spec.beta[j]:
            numerator *= complex(last[j]) ** spec.beta[j]
    denom_base = sum(abs(complex(x)) ** 2 for x in last)
    exponent = spec.eta_high + spec.s
    return numerator * cmath.exp(-exponent * cmath.log(denom_base))


def _det(g) -> complex:
    n = len(g)
    m = [[complex(x) for x in row] for row in g]
    det = complex(1)
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(m[r][col]))
        if abs(m[piv][col]) == 0:
            return 0j
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            for c in range(col, n):
                m[r][c] -= f * m[col][c]
    return det


# -- results ----------------------------------------------------------------------


@dataclass
class IntertwineResult:
    """Computed value, closed-form target and a pass/fail verdict."""

    value: object
    target: object
    verdict: bool
    tolerance: float = 0.0
    error_estimate: float = 0.0
    notes: dict = field(default_factory=dict)


# -- non-archimedean shell sums ----------------------------------------------------


def shell_sum(n: int, k: int, a: Cyc, q: int) -> LaurentRatio:
    """Exact value of the spherical intertwining integral at the identity.

    The integrand on the shell where the most negative coordinate
    valuation is -t equals (aX)^t; the shell where all coordinates are
    integral has volume 1 and the shell at level t >= 1 has volume
    q^{mt} - q^{m(t-1)} (m = n - k integration coordinates).  Summing the
    two geometric series gives the value; the summation is an identity of
    rational functions regardless of convergence.
    """
    m = n - k
    field_order = a.n
    one = LaurentRatio.one(field_order)
    if m == 0:
        return one
    # sum_{t>=1} q^{mt} (aX)^t  and  sum_{t>=1} q^{m(t-1)} (aX)^t
    big = _geometric(a * Fraction(q) ** m, field_order)
    small = _geometric_scaled(a, q, m, field_order)
    return one + big - small


def _geometric(coeff: Cyc, field_order: int) -> LaurentRatio:
    term = XPoly.monomial(field_order, 1, coeff)
    one = XPoly.const(field_order, 1)
    return LaurentRatio(term, one - term)


def _geometric_scaled(a: Cyc, q: int, m: int, field_order: int) -> LaurentRatio:
    # sum_{t>=1} q^{m(t-1)} (aX)^t = aX / (1 - a q^m X)
    num = XPoly.monomial(field_order, 1, a)
    den = XPoly.const(field_order, 1) - XPoly.monomial(
        field_order, 1, a * Fraction(q) ** m
    )
    return LaurentRatio(num, den)


def nonarch_intertwining(
    n: int, k: int, a: Cyc, q: int, s_probe: Optional[complex] = None
) -> IntertwineResult:
    """Shell-sum evaluation against the product-formula target, exactly."""
    if not 1 <= k <= n:
        raise ValueError("k out of range")
    value = shell_sum(n, k, a, q)
    target = unramified_lratio(n, k, a, q)
    notes = {}
    if s_probe is not None:
        # |a q^{n-k} X| < 1 at X = q^{-s} is the region of absolute convergence
        radius = abs(a.to_complex()) * q ** (n - k) * abs(q ** (-s_probe))
        notes["abs_convergent_at_probe"] = bool(radius < 1)
        if radius >= 1:
            notes["divergent_series_flag"] = True
    return IntertwineResult(
        value=value,
        target=target,
        verdict=(value == target),
        tolerance=0.0,
        notes=notes,
    )


# -- archimedean numerical integrals ------------------------------------------------


@dataclass(frozen=True)
class QuadratureConfig:
    tol: float = 1e-9
    angular_points: int = 256
    local_constant: float = 1.0  # c_v; default measure is twice-Lebesgue


def _convergence_bound(n: int, k: int, eta_high: int, beta_sum_inner: int) -> float:
    """Smallest admissible Re(s): the radial integral needs
    2(eta_high + Re s) > 2(n - k) + sum of inner beta entries."""
    return (n - k) + beta_sum_inner / 2.0 - eta_high


def arch_intertwining(
    n: int,
    k: int,
    eta_pair: tuple[int, int],
    beta: tuple[int, ...],
    s: complex,
    config: QuadratureConfig = QuadratureConfig(),
) -> IntertwineResult:
    """Numerically integrate the section over the rank n-k slice.

    The slice matrix has last row (0, ..., 0, u_k, ..., u_{n-1}, 1); the
    integrand's angular dependence in each coordinate is a pure phase
    e^{i beta_j theta_j}, so the integral factors into circle integrals
    times one radial integral computed adaptively.
    """
    eta_low, eta_high = eta_pair
    if eta_low > 0 or eta_high < n:
        raise ValueError("eta pair must satisfy eta_low <= 0 and eta_high >= n")
    spec = SectionSpec(n=n, beta=tuple(beta), eta_low=eta_low, eta_high=eta_high, s=s)
    m = n - k
    is_beta0 = tuple(beta) == spec.beta0

    if m == 0:
        # no integral: evaluate the section at the identity
        ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        val = section_value(spec, ident)
        target = complex(1) if is_beta0 else complex(0)
        return IntertwineResult(
            value=val,
            target=target,
            verdict=abs(val - target) <= 1e-12,
            tolerance=1e-12,
            error_estimate=0.0,
        )

    # positions 1..k-1 of the last row are zero: a positive beta there
    # kills the integrand identically
    if any(beta[j] > 0 for j in range(k - 1)):
        target = complex(0)
        return IntertwineResult(
            value=0j, target=target, verdict=True, tolerance=0.0,
            error_estimate=0.0, notes={"identically_zero": True},
        )

    inner = [beta[j] for j in range(k - 1, n - 1)]  # exponents on u_k..u_{n-1}
    bound = _convergence_bound(n, k, eta_high, sum(inner))
    if s.real <= bound + 0.5:
        raise ConvergenceRegionViolated(
            f"Re(s) = {s.real} not above the enforced bound {bound + 0.5}"
        )

    angular = complex(1)
    for b in inner:
        angular *= quadrature.trapezoid_circle(b, config.angular_points)

    exponent = eta_high + s

    def radial_nested(level: int, radii_sq_sum: float):
        """Integral over r_level..r_{m-1} of prod r^{beta+1} 2 dr / (1+sum r^2)^E."""
        if level == m:
            return cmath.exp(-exponent * math.log(1.0 + radii_sq_sum)), 0.0

        errs = [0.0]

        def integrand(r):
            val, err = radial_nested(level + 1, radii_sq_sum + r * r)
            errs[0] = max(errs[0], err)
            return val * (r ** (inner[level] + 1)) * 2.0

        val, err = quadrature.halfline_with_fallback(integrand, config.tol)
        return val, err + errs[0]

    radial, radial_err = radial_nested(0, 0.0)
    value = (config.local_constant ** m) * angular * radial

    if is_beta0:
        target = (config.local_constant ** m) * gamma_ratio(eta_high, m, s)
        tol = 1e-6 * abs(target)
    else:
        target = complex(0)
        reference = abs((config.local_constant ** m) * gamma_ratio(eta_high, m, s))
        tol = 1e-8 * reference
    verdict = abs(value - target) <= tol
    return IntertwineResult(
        value=value,
        target=target,
        verdict=verdict,
        tolerance=tol,
        error_estimate=(config.local_constant ** m) * abs(angular) * radial_err,
        notes={"convergence_bound": bound},
    )


# -- constant-term assembly -----------------------------------------------------------


@dataclass(frozen=True)
class ConstantTermEntry:
    k: int
    lratio_token: str
    shift: int                      # numerator argument offset k - n
    prefactor_symbol: str
    prefactor: complex
    delta_symbol: str
    pole_order: int                 # residual pole order at s = 0 after all factors


@dataclass
class ConstantTermReport:
    n: int
    order_zero: int
    delta_branch: str
    entries: list[ConstantTermEntry]
    holomorphic: bool

    def summary(self) -> dict:
        return {
            "n": self.n,
            "order_zero": self.order_zero,
            "delta_branch": self.delta_branch,
            "holomorphic": self.holomorphic,
            "terms": len(self.entries),
        }


def assemble_constant_term(
    n: int,
    token: VanishingToken,
    delta_constant: complex,
    degree_over_q: int,
    delta_branch: Optional[str] = None,
) -> ConstantTermReport:
    """Symbolic constant-term expansion with a per-term holomorphy audit.

    Token semantics: the global L-function of the character is entire
    (two-sided case) and vanishes at 0 to the declared order.  Each
    summand k < n carries the ratio L(s - n + k)/L(s), whose pole order
    at s = 0 equals the declared vanishing order of the denominator; the
    k = n summand is 1.  The compensating factor from the vanishing
    branch contributes a zero of the same order.  The audit fails if any
    term retains a pole or if the chosen branch contradicts the token.
    """
    factor = normalizing_factor(token, degree_over_q, delta_constant)
    branch = delta_branch if delta_branch is not None else factor.branch
    expected_branch = "one" if token.order_zero == 0 else "compensated"
    branch_zero_order = 0 if branch == "one" else token.order_zero

    entries = []
    all_holomorphic = True
    for k in range(1, n + 1):
        shift = k - n
        tok = f"L(s{shift:+d},eta)/L(s,eta)" if shift else "1"
        denominator_zero = token.order_zero if k < n else 0
        residual_pole = max(denominator_zero - branch_zero_order, 0)
        prefactor = ((1j) ** (degree_over_q // 2) * complex(delta_constant)) ** (k - n)
        entries.append(
            ConstantTermEntry(
                k=k,
                lratio_token=tok,
                shift=shift,
                prefactor_symbol=f"(i^{degree_over_q // 2} * Delta)^{k - n}",
                prefactor=prefactor,
                delta_symbol=factor.symbol if branch == "compensated" else "1",
                pole_order=residual_pole,
            )
        )
        if residual_pole > 0:
            all_holomorphic = False

    if branch != expected_branch:
        raise AuditFailed(
            f"normalizing branch {branch!r} contradicts vanishing order "
            f"{token.order_zero}"
        )
    if not all_holomorphic:
        raise AuditFailed("a constant-term summand retains a pole at s = 0")
    return ConstantTermReport(
        n=n,
        order_zero=token.order_zero,
        delta_branch=branch,
        entries=entries,
        holomorphic=all_holomorphic,
    )
