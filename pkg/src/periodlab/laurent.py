"""Exact polynomials and rational functions in X over Q(zeta_N).

``X`` plays the role of q^{-s} in unramified local L-factor ratios, so a
ratio of two polynomials in X with cyclotomic coefficients stores an
L-factor quotient exactly.  Equality of ratios is decided by cross
multiplication; ``reduce`` performs a genuine gcd reduction over the
field of coefficients and renders the denominator monic.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import Cyc


class XPoly:
    """Polynomial in X with ``Cyc`` coefficients, stored sparsely."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: dict[int, Cyc] | None = None) -> None:
        self.n = n
        cs = {}
        for d, c in (coeffs or {}).items():
            if isinstance(c, (int, Fraction)):
                c = Cyc.rational(c, n)
            if not c.is_zero():
                if d < 0:
                    raise ValueError("negative degree")
                cs[d] = c
        self.coeffs = cs

    @staticmethod
    def const(n: int, c) -> "XPoly":
        return XPoly(n, {0: c if isinstance(c, Cyc) else Cyc.rational(c, n)})

    @staticmethod
    def monomial(n: int, deg: int, c) -> "XPoly":
        return XPoly(n, {deg: c if isinstance(c, Cyc) else Cyc.rational(c, n)})

    def degree(self) -> int:
        return max(self.coeffs) if self.coeffs else -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "XPoly") -> "XPoly":
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out[d] + c if d in out else c
        return XPoly(self.n, out)

    def __neg__(self) -> "XPoly":
        return XPoly(self.n, {d: -c for d, c in self.coeffs.items()})

    def __sub__(self, other: "XPoly") -> "XPoly":
        return self + (-other)

    def __mul__(self, other) -> "XPoly":
        if isinstance(other, (int, Fraction, Cyc)):
            return XPoly(self.n, {d: c * other for d, c in self.coeffs.items()})
        out: dict[int, Cyc] = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                d = d1 + d2
                p = c1 * c2
                out[d] = out[d] + p if d in out else p
        return XPoly(self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.coeffs.items(), key=lambda kv: kv[0]))))

    def leading(self) -> Cyc:
        if self.is_zero():
            raise ValueError("zero polynomial")
        return self.coeffs[self.degree()]

    def divmod(self, den: "XPoly") -> tuple["XPoly", "XPoly"]:
        if den.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        inv_lead = den.leading().inverse()
        dd = den.degree()
        rem = dict(self.coeffs)
        quot: dict[int, Cyc] = {}
        while rem:
            d = max(rem)
            if d < dd:
                break
            c = rem[d] * inv_lead
            quot[d - dd] = c
            for dj, cj in den.coeffs.items():
                key = d - dd + dj
                val = rem.get(key, Cyc.rational(0, self.n)) - c * cj
                if val.is_zero():
                    rem.pop(key, None)
                else:
                    rem[key] = val
        return XPoly(self.n, quot), XPoly(self.n, rem)

    def gcd(self, other: "XPoly") -> "XPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        if a.is_zero():
            return a
        return a * a.leading().inverse()  # monic

    def galois(self, j: int) -> "XPoly":
        return XPoly(self.n, {d: c.galois(j) for d, c in self.coeffs.items()})

    def evaluate(self, x: complex) -> complex:
        return sum(c.to_complex() * x**d for d, c in self.coeffs.items())

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for d in sorted(self.coeffs):
            c = self.coeffs[d]
            cs = repr(c)
            if d == 0:
                parts.append(f"({cs})")
            elif d == 1:
                parts.append(f"({cs})*X")
            else:
                parts.append(f"({cs})*X^{d}")
        return " + ".join(parts)


class LaurentRatio:
    """A quotient of two ``XPoly`` values; the denominator is nonzero.

    Ratios created through the public constructors are gcd-reduced with a
    monic denominator, making the representation canonical.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: XPoly, den: XPoly, reduce: bool = True) -> None:
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.n != den.n:
            raise ValueError("mixed coefficient fields")
        self.num = num
        self.den = den
        if reduce:
            self._reduce()

    @staticmethod
    def one(n: int = 1) -> "LaurentRatio":
        return LaurentRatio(XPoly.const(n, 1), XPoly.const(n, 1))

    @staticmethod
    def from_poly(p: XPoly) -> "LaurentRatio":
        return LaurentRatio(p, XPoly.const(p.n, 1))

    def _reduce(self) -> None:
        if self.num.is_zero():
            self.den = XPoly.const(self.den.n, 1)
            return
        g = self.num.gcd(self.den)
        if g.degree() > 0:
            self.num = self.num.divmod(g)[0]
            self.den = self.den.divmod(g)[0]
        # canonical scaling: den(0) = 1 when possible, else monic
        const = self.den.coeffs.get(0)
        inv = const.inverse() if const is not None else self.den.leading().inverse()
        self.num = self.num * inv
        self.den = self.den * inv

    def __mul__(self, other: "LaurentRatio") -> "LaurentRatio":
        return LaurentRatio(self.num * other.num, self.den * other.den)

    def __add__(self, other: "LaurentRatio") -> "LaurentRatio":
        return LaurentRatio(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other: "LaurentRatio") -> "LaurentRatio":
        return self + LaurentRatio(-other.num, other.den, reduce=False)

    def inverse(self) -> "LaurentRatio":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero ratio")
        return LaurentRatio(self.den, self.num)

    def __eq__(self, other):
        if not isinstance(other, LaurentRatio):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def galois(self, j: int) -> "LaurentRatio":
        """Coefficientwise Galois twist; X is fixed."""
        return LaurentRatio(self.num.galois(j), self.den.galois(j))

    def evaluate(self, x: complex) -> complex:
        return self.num.evaluate(x) / self.den.evaluate(x)

    def evaluate_at_s(self, q: int, s: complex) -> complex:
        """Substitute X = q^{-s}."""
        return self.evaluate(complex(q) ** (-s))

    def is_one(self) -> bool:
        return self.num == self.den

    def __repr__(self):
        return f"[{self.num!r}] / [{self.den!r}]"


def geometric_series_sum(ratio_coeff: Cyc, ratio_deg: int, n: int) -> LaurentRatio:
    """Closed form of sum_{t>=1} (c X^d)^t = cX^d / (1 - cX^d), exactly.

    The summation is valid as an identity of rational functions; whether
    the underlying series converges at a numeric point must be checked by
    the caller.
    """
    term = XPoly.monomial(n, ratio_deg, ratio_coeff)
    one = XPoly.const(n, 1)
    return LaurentRatio(term, one - term)
