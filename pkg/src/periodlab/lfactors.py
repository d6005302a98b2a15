"""Exact local L-factor arithmetic and finite-field Gauss sums.

Non-archimedean unramified factors live in X = q^{-s}: the standard
factor is 1/(1 - aX) with a the Hecke character's value on a uniformizer,
so the ratio attached to the k-th constant-term summand is

    (1 - aX) / (1 - a q^{n-k} X),

an exact rational function over a cyclotomic coefficient field.

Archimedean factors are only ever consumed through ratios of shifted
Gamma_C values, which satisfy value(s)/value(s+1)-type recursions with
steps 2*pi/(s + m - t); these are evaluated in floating point.

Gauss sums are the conductor-exponent-one specialization: a finite sum
over the units of a residue field, exact in Q(zeta_{lcm(q-1, p)}).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .cyclotomic import Cyc
from .laurent import LaurentRatio, XPoly
from .errors import NotEntire, PoleHit


# -- unramified ratios ---------------------------------------------------------


@dataclass(frozen=True)
class UnitSpec:
    """Root of unity zeta_order^index times an integer power of q.

    Half-integer powers of q occur in unitary decompositions; they are
    recorded separately (``half_q_power``) for bookkeeping and floating
    evaluation but do not enter the exact coefficient field.
    """

    order: int = 1
    index: int = 0
    q_power: int = 0
    half_q_power: int = 0

    def cyc(self, n: Optional[int] = None, q: int = 1) -> Cyc:
        if self.half_q_power:
            raise ValueError("exact arithmetic requires an integer q-power")
        n = n or self.order
        if n % self.order:
            raise ValueError("ambient cyclotomic order must be divisible")
        return Cyc.zeta(n, self.index * (n // self.order)) * Fraction(q) ** self.q_power

    def to_complex(self, q: int) -> complex:
        z = cmath.exp(2j * cmath.pi * self.index / self.order)
        return z * q ** (self.q_power + self.half_q_power / 2.0)


def single_step_ratio(n: int, i: int, a: Cyc, q: int) -> LaurentRatio:
    """L(s - n + i) / L(s - n + i + 1) = (1 - a q^{n-i-1} X)/(1 - a q^{n-i} X)."""
    field = a.n
    one = XPoly.const(field, 1)
    num = one - XPoly.monomial(field, 1, a * Fraction(q) ** (n - i - 1))
    den = one - XPoly.monomial(field, 1, a * Fraction(q) ** (n - i))
    return LaurentRatio(num, den)


def unramified_lratio(n: int, k: int, a: Cyc, q: int) -> LaurentRatio:
    """L(s - n + k)/L(s) for the unramified character with value a at a
    uniformizer of residue size q: (1 - aX)/(1 - a q^{n-k} X), reduced."""
    if not 1 <= k <= n:
        raise ValueError("k out of range")
    field = a.n
    one = XPoly.const(field, 1)
    num = one - XPoly.monomial(field, 1, a)
    den = one - XPoly.monomial(field, 1, a * Fraction(q) ** (n - k))
    return LaurentRatio(num, den)


def sigma_twist_lratio(r: LaurentRatio, j: int) -> LaurentRatio:
    """Coefficientwise Galois action zeta -> zeta^j; X is fixed."""
    return r.galois(j)


# -- archimedean shift ratios ----------------------------------------------------


@dataclass(frozen=True)
class GammaShift:
    """Marker for a complex-place factor proportional to Gamma_C(s + m).

    Only ratios are exposed: Gamma_C(s) = 2 (2 pi)^{-s} Gamma(s) gives
    value(s + m - 1)/value(s + m) steps equal to (s + m - 1)/(2 pi), i.e.
    going down j steps multiplies by prod_t 2 pi / (s + m - t).
    """

    m: int


def gamma_ratio(m: int, j: int, s: complex) -> complex:
    """prod_{t=1..j} 2*pi/(s + m - t); floating point, poles rejected."""
    if j < 0:
        raise ValueError("negative step count")
    out = complex(1)
    for t in range(1, j + 1):
        denom = s + m - t
        if abs(denom) < 1e-12:
            raise PoleHit(f"shift ratio hits a pole at step t = {t}")
        out *= 2 * math.pi / denom
    return out


# -- vanishing-order tokens ------------------------------------------------------


@dataclass(frozen=True)
class VanishingToken:
    """Declared order of vanishing of the global character L-value at 0.

    ``order_zero`` is 0 (nonvanishing) or 1 (vanishing to order >= 1);
    ``entire`` records that the global function has no pole (true in the
    two-sided case).  Actual L-values are never computed here.
    """

    order_zero: int
    entire: bool = True

    def __post_init__(self):
        if self.order_zero not in (0, 1):
            raise ValueError("order flag must be 0 (nonzero) or 1 (vanishing)")


@dataclass(frozen=True)
class NormalizingFactor:
    """The extra factor multiplying the truncated series at s = 0."""

    branch: str  # "one" or "compensated"
    symbol: str
    scalar: complex  # prefactor i^{deg/2} * Delta when compensated, else 1
    zero_order_at_zero: int  # order of zero the factor contributes at s = 0


def normalizing_factor(token: VanishingToken, deg: int, delta_constant: complex) -> NormalizingFactor:
    """Choose the holomorphy-restoring factor from the vanishing token.

    Nonvanishing: the factor is 1.  Vanishing: the factor is
    i^{deg/2} * Delta * L(s)/L(s-1), carried symbolically; its scalar
    prefactor is recorded numerically.
    """
    if not token.entire:
        raise NotEntire("normalization defined only for entire tokens")
    if token.order_zero == 0:
        return NormalizingFactor(branch="one", symbol="1", scalar=1.0 + 0j, zero_order_at_zero=0)
    if deg % 2:
        raise ValueError("field degree must be even")
    scalar = (1j) ** (deg // 2) * complex(delta_constant)
    return NormalizingFactor(
        branch="compensated",
        symbol=f"i^{deg // 2} * Delta * L(s)/L(s-1)",
        scalar=scalar,
        zero_order_at_zero=token.order_zero,
    )


# -- finite fields and Gauss sums -------------------------------------------------


def _factor_prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            m = q
            while m % p == 0:
                m //= p
                e += 1
            if m != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, e
    raise ValueError(f"{q} is not a prime power")


class FiniteField:
    """GF(p^e) as F_p[x]/(f) for the first irreducible monic f in lex order.

    Elements are coefficient tuples.  Deterministic: the modulus and the
    chosen multiplicative generator depend only on q.
    """

    def __init__(self, q: int) -> None:
        self.q = q
        self.p, self.e = _factor_prime_power(q)
        self.modulus = self._find_modulus()
        self.zero = (0,) * self.e
        self.one = (1,) + (0,) * (self.e - 1)
        self.generator = self._find_generator()

    def _find_modulus(self) -> tuple[int, ...]:
        p, e = self.p, self.e
        if e == 1:
            return (0, 1)
        # degree 2 or 3: irreducible over F_p iff no roots
        for tail in self._tuples(e):
            coeffs = tail + (1,)
            if all(self._poly_eval(coeffs, x) % p != 0 for x in range(p)):
                return coeffs
        raise AssertionError("no irreducible polynomial found")

    def _tuples(self, length: int):
        if length == 0:
            yield ()
            return
        for rest in self._tuples(length - 1):
            for c in range(self.p):
                yield rest + (c,)

    @staticmethod
    def _poly_eval(coeffs, x):
        acc = 0
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    def elements(self):
        for t in self._tuples(self.e):
            yield t

    def mul(self, a, b):
        p, e = self.p, self.e
        prod = [0] * (2 * e - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
        # reduce modulo the monic modulus
        for i in range(len(prod) - 1, e - 1, -1):
            c = prod[i]
            if c == 0:
                continue
            prod[i] = 0
            for j in range(e):
                prod[i - e + j] = (prod[i - e + j] - c * self.modulus[j]) % p
        return tuple(prod[:e])

    def pow(self, a, k: int):
        out = self.one
        base = a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def order(self, a) -> int:
        if a == self.zero:
            raise ValueError("zero has no multiplicative order")
        x, k = a, 1
        while x != self.one:
            x = self.mul(x, a)
            k += 1
        return k

    def _find_generator(self):
        for a in self.elements():
            if a == self.zero:
                continue
            if self.order(a) == self.q - 1:
                return a
        raise AssertionError("no generator found")

    def trace(self, a) -> int:
        """Trace to the prime field, as an integer mod p."""
        acc = self.zero
        x = a
        for _ in range(self.e):
            acc = tuple((u + v) % self.p for u, v in zip(acc, x))
            x = self.pow(x, self.p)
        assert all(c == 0 for c in acc[1:]), "trace not in the prime field"
        return acc[0]


@dataclass(frozen=True)
class GaussSumSpec:
    """Multiplicative character by its value on the fixed generator of
    GF(q)^x, additive character x -> zeta_p^{trace(x)}."""

    q: int
    chi_order: int
    chi_index: int = 1

    def __post_init__(self):
        p, e = _factor_prime_power(self.q)
        # chi(gen)^(q-1) must be 1
        if (self.chi_index * (self.q - 1)) % self.chi_order != 0:
            raise ValueError("character value is not well-defined on GF(q)^x")

    def is_trivial(self) -> bool:
        return (self.chi_index % self.chi_order) == 0 or self.chi_order == 1


def gauss_sum(spec: GaussSumSpec) -> tuple[Cyc, complex]:
    """sum over x in GF(q)^x of chi(x)^{-1} psi(x); exact and float.

    This is the conductor-exponent-one shell of the local integral with an
    unramified additive alignment; the exact value lives in
    Q(zeta_{lcm(q-1, p)}).
    """
    field = FiniteField(spec.q)
    p, q = field.p, field.q
    ncyc = (q - 1) * p // math.gcd(q - 1, p)
    total = Cyc.rational(0, ncyc)
    # chi(gen) is a (q-1)-th root of unity: rewrite it as zeta_{q-1}^j
    j = (spec.chi_index * (q - 1)) // spec.chi_order
    step = (j * (ncyc // (q - 1))) % ncyc
    x = field.one
    for t in range(q - 1):
        tr = field.trace(x)
        exponent = (-step * t) % ncyc
        psi_exp = (tr * (ncyc // p)) % ncyc
        total = total + Cyc.zeta(ncyc, (exponent + psi_exp) % ncyc)
        x = field.mul(x, field.generator)
    return total, total.to_complex()


def gauss_sum_norm_check(spec: GaussSumSpec) -> bool:
    """Exact check |G|^2 = q for nontrivial characters."""
    g, _ = gauss_sum(spec)
    return g.norm_squared() == Cyc.rational(spec.q, g.n)
