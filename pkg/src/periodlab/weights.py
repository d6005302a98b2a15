"""Integer calculus on dominant weights and character infinity types.

A weight system assigns to every embedding of k two dominant integer
n-tuples (mu, nu) and one integer (chi, the differential of a Hecke
character at that embedding).  The derived quantity

    eta_i = sum(mu^i) + sum(nu^i) + n * chi_i

drives everything else: regular-algebraicity (eta outside the open
interval (0, n)), the two-sided condition (per conjugate pair, one value
<= 0 and the other >= n), the balanced predicate (the trivial
representation occurs in the four-fold tensor product), membership in
the positive half B+ (balanced and eta_i + eta_ibar >= n), and the
archimedean fourth-root-of-unity constant.

The balanced test here is the fast path: because the auxiliary highest
weight attached to eta is a one-row shape up to a determinant twist, the
tensor condition collapses to a single horizontal-strip (interlacing)
check per embedding.  An independent, slower character-peeling oracle
lives in ``charpeel``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cmfield import EmbeddingSet, GaloisPermutation
from .errors import AmbiguousSign, InconsistentSum, NonDominant, NotRegularAlgebraic


def _check_dominant(t: tuple[int, ...], label: str) -> None:
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise NonDominant(f"{label} = {t} is not weakly decreasing")


@dataclass(frozen=True)
class WeightSystem:
    """Dominant weights mu, nu and character type chi over an embedding set."""

    n: int
    mu: dict[int, tuple[int, ...]]
    nu: dict[int, tuple[int, ...]]
    chi: dict[int, int]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("rank must be at least 2")
        for label, m in (("mu", self.mu), ("nu", self.nu)):
            for i, t in m.items():
                if len(t) != self.n:
                    raise ValueError(f"{label}[{i}] has length {len(t)} != n")
                _check_dominant(t, f"{label}[{i}]")
        if set(self.mu) != set(self.nu) or set(self.mu) != set(self.chi):
            raise ValueError("mu, nu, chi must be keyed by the same embeddings")

    def embeddings(self) -> list[int]:
        return sorted(self.mu)

    def eta(self) -> dict[int, int]:
        """Recomputed on every call; never stored."""
        return {
            i: sum(self.mu[i]) + sum(self.nu[i]) + self.n * self.chi[i]
            for i in self.mu
        }


def weight_system_from_eta(n: int, eta: dict[int, int]) -> WeightSystem:
    """A weight system with nu = 0, chi = 0 and mu placed to realize eta."""
    mu = {}
    for i, e in eta.items():
        if e <= 0:
            mu[i] = (0,) * (n - 1) + (e,)
        else:
            mu[i] = (e,) + (0,) * (n - 1)
    zero = {i: (0,) * n for i in eta}
    return WeightSystem(n=n, mu=mu, nu=zero, chi={i: 0 for i in eta})


def compute_eta(w: WeightSystem) -> dict[int, int]:
    return w.eta()


def is_regular_algebraic(eta: dict[int, int], n: int) -> bool:
    return all(e * (e - n) >= 0 for e in eta.values())


def is_case_pm(eta: dict[int, int], n: int, emb: EmbeddingSet) -> bool:
    """Per conjugate pair: min(eta_i, eta_ibar) <= 0 and max >= n."""
    for i, j in emb.pairs():
        lo, hi = min(eta[i], eta[j]), max(eta[i], eta[j])
        if lo > 0 or hi < n:
            return False
    return True


def highest_weight_from_eta(eta_value: int, n: int) -> tuple[int, ...]:
    """Highest weight of the auxiliary representation attached to eta.

    Defined only for eta <= 0 (one-row shape (-eta, 0, ..., 0)) and
    eta >= n (the determinant-twisted dual (-1, ..., -1, n-1-eta)).
    """
    if eta_value <= 0:
        return (-eta_value,) + (0,) * (n - 1)
    if eta_value >= n:
        return (-1,) * (n - 1) + (n - 1 - eta_value,)
    raise NotRegularAlgebraic(
        f"eta = {eta_value} lies strictly between 0 and {n}"
    )


def _is_horizontal_strip(lam: tuple[int, ...], base: tuple[int, ...]) -> bool:
    n = len(lam)
    if any(lam[i] < base[i] for i in range(n)):
        return False
    return all(base[i] >= lam[i + 1] for i in range(n - 1))


def balanced_at(
    mu: tuple[int, ...], nu: tuple[int, ...], chi: int, eta_value: int, n: int
) -> bool:
    """Does the trivial rep occur in F_mu (x) F_nu (x) F_eta (x) det^chi?

    With the one-row structure of the eta weight this is a Pieri
    interlacing condition; the strip size comes out automatically equal
    to |eta| shifted, so only the interlacing needs checking.
    """
    dual = lambda t: tuple(-x for x in reversed(t))
    if eta_value <= 0:
        lam = tuple(x - chi for x in dual(nu))
        base = mu
        size = -eta_value
    elif eta_value >= n:
        lam = tuple(x - (1 - chi) for x in nu)
        base = dual(mu)
        size = eta_value - n
    else:
        raise NotRegularAlgebraic(f"eta = {eta_value} strictly between 0 and {n}")
    if sum(lam) - sum(base) != size:
        return False
    return _is_horizontal_strip(lam, base)


def is_balanced(w: WeightSystem, emb: EmbeddingSet, strict: bool = False) -> bool:
    """True iff the balanced condition holds at every embedding.

    Requires regular-algebraicity and the two-sided condition; with
    ``strict`` these raise NotRegularAlgebraic instead of returning False.
    """
    eta = w.eta()
    ok = is_regular_algebraic(eta, w.n) and is_case_pm(eta, w.n, emb)
    if not ok:
        if strict:
            raise NotRegularAlgebraic(
                "balanced test requires a regular two-sided eta"
            )
        return False
    return all(
        balanced_at(w.mu[i], w.nu[i], w.chi[i], eta[i], w.n)
        for i in w.embeddings()
    )


def in_b_plus(w: WeightSystem, emb: EmbeddingSet) -> bool:
    """Balanced and eta_i + eta_ibar >= n; the sum must not vary by pair."""
    eta = w.eta()
    sums = {eta[i] + eta[j] for i, j in emb.pairs()}
    if len(sums) > 1:
        raise InconsistentSum(f"eta pair sums differ across places: {sorted(sums)}")
    total = sums.pop()
    return is_balanced(w, emb) and total >= w.n


@dataclass(frozen=True)
class ArchConstant:
    """Per-place signs and exponents with the accumulated unit value.

    value = prod over places of (sign * i)^exponent, a fourth root of
    unity stored exactly as a Gaussian integer (re, im).
    """

    signs: dict[int, int]        # keyed by the chosen embedding of the place
    exponents: dict[int, int]
    value: tuple[int, int]

    def complex_value(self) -> complex:
        return complex(self.value[0], self.value[1])


def arch_exponent(w: WeightSystem, place_pair: tuple[int, int]) -> int:
    """sum over both embeddings of the place of
    sum_{a + b <= n} (mu_a + nu_b + chi)."""
    n = w.n
    expo = 0
    for i in place_pair:
        for a in range(1, n):
            for b in range(1, n - a + 1):
                expo += w.mu[i][a - 1] + w.nu[i][b - 1] + w.chi[i]
    return expo


def arch_unit_value(sign: int, exponent: int) -> tuple[int, int]:
    """(sign * i)^exponent as an exact Gaussian unit (re, im)."""
    k = exponent % 4
    if k == 0:
        return (1, 0)
    if k == 1:
        return (0, sign)
    if k == 2:
        return (-1, 0)
    return (0, -sign)


def archimedean_constant(w: WeightSystem, emb: EmbeddingSet) -> ArchConstant:
    """The product over places of (sign * i)^e, with e = arch_exponent and
    sign +1 when eta <= 0 at the chosen embedding, -1 when >= n."""
    eta = w.eta()
    n = w.n
    signs: dict[int, int] = {}
    exponents: dict[int, int] = {}
    re, im = 1, 0
    for iv, iv_bar in emb.pairs():
        e_iv = eta[iv]
        if e_iv <= 0:
            sign = 1
        elif e_iv >= n:
            sign = -1
        else:
            raise AmbiguousSign(
                f"eta = {e_iv} at the chosen embedding is strictly between 0 and {n}"
            )
        expo = arch_exponent(w, (iv, iv_bar))
        signs[iv] = sign
        exponents[iv] = expo
        sr, si = arch_unit_value(sign, expo)
        re, im = re * sr - im * si, re * si + im * sr
    return ArchConstant(signs=signs, exponents=exponents, value=(re, im))


def sigma_twist(w: WeightSystem, g: GaloisPermutation) -> WeightSystem:
    """Precompose all three weight maps with the inverse permutation."""
    ginv = g.inverse()
    return WeightSystem(
        n=w.n,
        mu={i: w.mu[ginv(i)] for i in w.mu},
        nu={i: w.nu[ginv(i)] for i in w.nu},
        chi={i: w.chi[ginv(i)] for i in w.chi},
    )
