"""Weyl-group machinery over an embedding set.

Contents:

* parabolic coset representatives for the (n-1,1) parabolic, found by
  brute force and matched against the cycle closed form;
* enumeration of nilpotent-cohomology lines: one line per element of the
  absolute Weyl group (a product of symmetric groups indexed by the
  embeddings), carrying its torus weight and wedge monomial;
* the distinguished bottom-degree element w(k), built from the cycle
  closed form per embedding and certified unique by an exhaustive scan
  against the induced-character torus weight;
* formal wedge monomials of nilpotent covectors with the sign calculus
  for Galois relabeling, including the transfer sign of the generator
  monomials;
* the order-preserving/fiber-trivial factorization g = s2 o s1 of an
  admissible embedding permutation, with the signature of s2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cmfield import EmbeddingSet, GaloisPermutation
from .errors import NonDominant, UniquenessFailed
from .weights import WeightSystem, highest_weight_from_eta, sigma_twist

OneLine = tuple[int, ...]  # w(1), ..., w(n) with values in 1..n


def inversions(w: OneLine) -> int:
    return sum(
        1
        for i in range(len(w))
        for j in range(i + 1, len(w))
        if w[i] > w[j]
    )


def inverted_pairs(w: OneLine) -> list[tuple[int, int]]:
    """Positions (i, j), 1-based, with i < j and w(i) > w(j)."""
    n = len(w)
    return [
        (i + 1, j + 1)
        for i in range(n)
        for j in range(i + 1, n)
        if w[i] > w[j]
    ]


def cycle_oneline(a: int, b: int, n: int) -> OneLine:
    """The cycle (a a+1 ... b) as a one-line permutation of 1..n."""
    out = list(range(1, n + 1))
    for j in range(a, b):
        out[j - 1] = j + 1
    out[b - 1] = a
    return tuple(out)


def invert_oneline(w: OneLine) -> OneLine:
    out = [0] * len(w)
    for j, i in enumerate(w, start=1):
        out[i - 1] = j
    return tuple(out)


def cycles_str(w: OneLine) -> str:
    """Cycle notation, fixed points omitted; identity prints as 'e'."""
    seen = [False] * len(w)
    parts = []
    for start in range(1, len(w) + 1):
        if seen[start - 1]:
            continue
        cyc = [start]
        seen[start - 1] = True
        j = w[start - 1]
        while j != start:
            cyc.append(j)
            seen[j - 1] = True
            j = w[j - 1]
        if len(cyc) > 1:
            parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) if parts else "e"


@dataclass(frozen=True)
class WeylElement:
    """An element of the absolute Weyl group: one permutation per embedding."""

    components: tuple[OneLine, ...]  # indexed by embedding position

    def length(self) -> int:
        return sum(inversions(c) for c in self.components)

    def component(self, i: int) -> OneLine:
        return self.components[i]

    def describe(self) -> str:
        return " | ".join(cycles_str(c) for c in self.components)


def coset_reps(n: int) -> list[OneLine]:
    """Minimal-length representatives w with w(simple roots except the last)
    positive, found by filtering all n! permutations, then matched against
    the cycle formula (k k+1 ... n), k = 1..n."""
    if n < 2:
        raise ValueError("need n >= 2")
    found = []
    for p in itertools.permutations(range(1, n + 1)):
        # alpha_i = e_i - e_{i+1} stays positive iff w(i) < w(i+1), i <= n-2
        if all(p[i] < p[i + 1] for i in range(n - 2)):
            found.append(p)
    expected = [cycle_oneline(k, n, n) for k in range(1, n + 1)]
    if sorted(found) != sorted(expected):
        raise AssertionError("brute-force cosets disagree with the cycle formula")
    return expected


# -- Kostant lines -------------------------------------------------------------


@dataclass(frozen=True)
class WedgeMonomial:
    """A signed, sorted wedge of covector labels (i, j, embedding).

    The fixed total order is embedding-position major, then (i, j)
    lexicographic.  Re-sorting an out-of-order label list multiplies the
    sign by the signature of the sorting permutation.
    """

    sign: int
    labels: tuple[tuple[int, int, int], ...]

    @staticmethod
    def from_labels(labels, sign: int = 1) -> "WedgeMonomial":
        labels = [(i, j, e) for (i, j, e) in labels]
        for (i, j, _e) in labels:
            if not i < j:
                raise ValueError(f"label ({i},{j}) needs i < j")
        if len(set(labels)) != len(labels):
            raise ValueError("repeated covector label; wedge vanishes")
        keyed = [(e, i, j) for (i, j, e) in labels]
        sgn = sign * _sort_parity(keyed)
        ordered = tuple((i, j, e) for (e, i, j) in sorted(keyed))
        return WedgeMonomial(sign=sgn, labels=ordered)


def _sort_parity(seq) -> int:
    inv = 0
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                inv += 1
    return -1 if inv % 2 else 1


@dataclass(frozen=True)
class KostantLine:
    """One line of nilpotent cohomology: Weyl element, degree, torus weight
    (per embedding) and the canonical wedge monomial of its covectors."""

    element: WeylElement
    degree: int
    torus_weight: tuple[tuple[int, ...], ...]
    wedge: WedgeMonomial


def _line_weight_component(oneline: OneLine, eta_value: int, n: int) -> tuple[int, ...]:
    """Torus weight of the line attached to w at one embedding.

    The line is spanned by the dual wedge of the covectors at w's
    inversions, tensored with w applied to the highest weight vector of
    the dual representation (highest weight (-mu_n, ..., -mu_1)).  The
    permutation acts on weights by (w . L)_i = L_{w(i)}, which makes the
    result the dot-action weight w(L + rho) - rho, as a cross-check with
    the nilpotent-cohomology theorem confirms.
    """
    mu = highest_weight_from_eta(eta_value, n)
    base = tuple(-x for x in reversed(mu))
    weight = [base[oneline[i] - 1] for i in range(n)]
    for (i, j) in inverted_pairs(oneline):
        weight[i - 1] -= 1
        weight[j - 1] += 1
    return tuple(weight)


def make_line(element: WeylElement, w: WeightSystem, emb: EmbeddingSet) -> KostantLine:
    eta = w.eta()
    n = w.n
    weights = []
    labels = []
    for pos in range(emb.degree):
        comp = element.component(pos)
        weights.append(_line_weight_component(comp, eta[pos], n))
        labels.extend((i, j, pos) for (i, j) in inverted_pairs(comp))
    return KostantLine(
        element=element,
        degree=element.length(),
        torus_weight=tuple(weights),
        wedge=WedgeMonomial.from_labels(labels),
    )


def _elements_of_length(n: int, count: int, total: int):
    """All tuples of ``count`` permutations with inversion total ``total``."""
    by_len: dict[int, list[OneLine]] = {}
    for p in itertools.permutations(range(1, n + 1)):
        by_len.setdefault(inversions(p), []).append(p)
    max_len = n * (n - 1) // 2

    def rec(remaining_slots, budget):
        if remaining_slots == 0:
            if budget == 0:
                yield ()
            return
        if budget > max_len * remaining_slots or budget < 0:
            return
        for ln, perms in by_len.items():
            if ln > budget:
                continue
            for tail in rec(remaining_slots - 1, budget - ln):
                for p in perms:
                    yield (p,) + tail

    yield from rec(count, total)


def kostant_lines(w: WeightSystem, emb: EmbeddingSet, p: int) -> list[KostantLine]:
    """All cohomology lines in degree p: one per absolute Weyl element of
    length p."""
    out = []
    for combo in _elements_of_length(w.n, emb.degree, p):
        out.append(make_line(WeylElement(components=combo), w, emb))
    return out


def total_line_count(n: int, emb_count: int) -> int:
    import math

    return math.factorial(n) ** emb_count


def length_generating_function(n: int, emb_count: int) -> list[int]:
    """Coefficients of the inversion generating function of the absolute
    Weyl group: the q-factorial prod_i (1 + q + ... + q^i) raised to the
    number of embeddings."""
    poly = [1]
    for i in range(1, n):
        step = [1] * (i + 1)
        poly = _poly_mul_int(poly, step)
    out = [1]
    for _ in range(emb_count):
        out = _poly_mul_int(out, poly)
    return out


def _poly_mul_int(a: list[int], b: list[int]) -> list[int]:
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            res[i + j] += x * y
    return res


def bottom_degree(n: int, emb: EmbeddingSet) -> int:
    """(n-1) * [k:Q] / 2."""
    return (n - 1) * (emb.degree // 2)


def _restricted_target(w: WeightSystem, emb: EmbeddingSet, k: int):
    """Expected (iota, iota-bar)-bigraded weight per place and variable.

    Variable t_k carries (eta - (n-k)) at each embedding of the place,
    variables past k carry (1, 1), earlier ones (0, 0); this is minus the
    algebraic part of the induced torus character at s = 0.
    """
    eta = w.eta()
    n = w.n
    target = {}
    for iv, ivb in emb.pairs():
        rows = []
        for j in range(1, n + 1):
            if j < k:
                rows.append((0, 0))
            elif j == k:
                rows.append((eta[iv] - (n - k), eta[ivb] - (n - k)))
            else:
                rows.append((1, 1))
        target[(iv, ivb)] = tuple(rows)
    return target


def _line_matches_target(line: KostantLine, target, emb: EmbeddingSet, n: int) -> bool:
    for (iv, ivb), rows in target.items():
        wt_iv = line.torus_weight[iv]
        wt_ivb = line.torus_weight[ivb]
        for j in range(n):
            if (wt_iv[j], wt_ivb[j]) != rows[j]:
                return False
    return True


def distinguished_weyl(
    w: WeightSystem, emb: EmbeddingSet, k: int, full_scan: bool = False
) -> tuple[WeylElement, dict]:
    """The closed-form element w(k) plus a uniqueness certificate.

    Per embedding the element is the inverse cycle (k ... n) where eta <= 0
    and the cycle (1 ... k) where eta >= n.  The certificate scans all
    absolute Weyl elements of bottom degree (or the full group when
    ``full_scan``) and checks that exactly one line's torus weight,
    restricted per conjugate pair, matches the induced character target.
    """
    n = w.n
    if not 1 <= k <= n:
        raise ValueError("k out of range")
    eta = w.eta()
    comps = []
    for pos in range(emb.degree):
        if eta[pos] <= 0:
            comps.append(invert_oneline(cycle_oneline(k, n, n)))
        elif eta[pos] >= n:
            comps.append(cycle_oneline(1, k, n))
        else:
            raise NonDominant(f"eta = {eta[pos]} admits no closed form")
    element = WeylElement(components=tuple(comps))

    target = _restricted_target(w, emb, k)
    c_n = bottom_degree(n, emb)
    matches = []
    scanned = 0
    if full_scan:
        candidates = (
            WeylElement(components=c)
            for c in itertools.product(
                itertools.permutations(range(1, n + 1)), repeat=emb.degree
            )
        )
    else:
        candidates = (
            WeylElement(components=c) for c in _elements_of_length(n, emb.degree, c_n)
        )
    for cand in candidates:
        scanned += 1
        line = make_line(cand, w, emb)
        if _line_matches_target(line, target, emb, n):
            matches.append(cand)
    if len(matches) != 1:
        raise UniquenessFailed(
            f"scan found {len(matches)} matching elements (scanned {scanned})"
        )
    if matches[0] != element:
        raise UniquenessFailed("closed form disagrees with the scan match")
    certificate = {
        "scanned": scanned,
        "matches": 1,
        "length": element.length(),
        "bottom_degree": c_n,
        "full_scan": full_scan,
    }
    return element, certificate


# -- generator monomials and Galois signs --------------------------------------


def omega_monomial(w: WeightSystem, emb: EmbeddingSet, k: int) -> WedgeMonomial:
    """The generator wedge monomial of the degree-k induced model.

    For each embedding with eta <= 0 (taken in embedding order) the block
    is the k-th-column covectors at the conjugate embedding followed by
    the k-th-row covectors at the embedding itself.  The monomial is
    stored canonically sorted; the sign records the parity of sorting
    this defining arrangement.
    """
    n = w.n
    eta = w.eta()
    labels = []
    for pos in range(emb.degree):
        if eta[pos] <= 0:
            bar = emb.conj(pos)
            if eta[bar] < n:
                raise NonDominant("two-sided condition fails at a pair")
            labels.extend((t, k, bar) for t in range(1, k))
            labels.extend((k, t, pos) for t in range(k + 1, n + 1))
    return WedgeMonomial.from_labels(labels)


def wedge_sigma_sign(m: WedgeMonomial, g: GaloisPermutation, emb: EmbeddingSet) -> int:
    """Parity of re-sorting the monomial after relabeling embeddings by g.

    The monomial must be in canonical (sorted) label order; the returned
    sign is the signature of the permutation that restores sorted order
    after each label (i, j, e) is moved to (i, j, g(e)).
    """
    g.validate(emb)
    if list(m.labels) != sorted(m.labels, key=lambda l: (l[2], l[0], l[1])):
        raise ValueError("monomial labels are not sorted")
    relabeled = [(g(e), i, j) for (i, j, e) in m.labels]
    if len(set(relabeled)) != len(relabeled):
        raise ValueError("relabeling collapsed labels")
    return _sort_parity(relabeled)


def sigma_on_monomial(m: WedgeMonomial, g: GaloisPermutation, emb: EmbeddingSet) -> WedgeMonomial:
    """The relabeled monomial in canonical form, sign tracked."""
    g.validate(emb)
    return WedgeMonomial.from_labels(
        [(i, j, g(e)) for (i, j, e) in m.labels], sign=m.sign
    )


def omega_transfer_sign(
    w: WeightSystem, emb: EmbeddingSet, k: int, g: GaloisPermutation
) -> int:
    """Coefficient (+-1) taking the relabeled generator monomial to the
    generator monomial of the twisted weight data.

    This is the sign through which an embedding permutation acts on the
    bottom-degree generator line, with the defining arrangements of both
    source and target taken into account.  It is independent of k (tested
    property), which is the content of the normalized-operator
    equivariance square.
    """
    src = omega_monomial(w, emb, k)
    dst = omega_monomial(sigma_twist(w, g), emb, k)
    moved = sigma_on_monomial(src, g, emb)
    if moved.labels != dst.labels:
        raise AssertionError("relabeled generator has unexpected support")
    return moved.sign * dst.sign


# -- order/fiber factorization --------------------------------------------------


def sigma_decompose(
    g: GaloisPermutation, emb: EmbeddingSet
) -> tuple[GaloisPermutation, GaloisPermutation, int]:
    """Factor g = s2 o s1 with s1 order-preserving between fibers and s2
    fiber-trivial; returns (s1, s2, signature of s2 on the embeddings)."""
    g.validate(emb)
    descended = g.descended_k1(emb)
    fibers = emb.fibers()
    s1 = [0] * emb.degree
    for t, members in fibers.items():
        targets = fibers[descended[t]]
        if len(targets) != len(members):
            raise AssertionError("fiber sizes disagree")
        for a, b in zip(members, targets):
            s1[a] = b
    s1p = GaloisPermutation(tuple(s1))
    s2p = g.compose(s1p.inverse())
    for i in range(emb.degree):
        if emb.restriction_k1[s2p(i)] != emb.restriction_k1[i]:
            raise AssertionError("fiber-trivial factor moves a fiber")
    return s1p, s2p, s2p.sign()


# -- misc -----------------------------------------------------------------------


def weyl_dimension(weight: tuple[int, ...], n: int) -> int:
    """Dimension of the irreducible with the given dominant weight."""
    if any(weight[i] < weight[i + 1] for i in range(n - 1)):
        raise NonDominant(f"{weight} is not weakly decreasing")
    dim = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            dim *= Fraction(weight[i] - weight[j] + j - i, j - i)
    assert dim.denominator == 1
    return int(dim)


@dataclass(frozen=True)
class TorusCharacter:
    """Descriptor of the induced torus character at level k of rank n.

    The character multiplies the k-th torus coordinate by the inverse
    Hecke character and |.|^{n-k-s}, and each later coordinate by |.|^{-1}.
    ``eta_exponents`` records the +-1 pattern of the Hecke factor,
    ``abs_constant`` the |.|-exponents at s = 0 and ``s_slope`` the linear
    dependence on s.
    """

    n: int
    k: int

    @property
    def eta_exponents(self) -> tuple[int, ...]:
        return tuple(-1 if j == self.k else 0 for j in range(1, self.n + 1))

    @property
    def abs_constant(self) -> tuple[int, ...]:
        out = []
        for j in range(1, self.n + 1):
            if j == self.k:
                out.append(self.n - self.k)
            elif j > self.k:
                out.append(-1)
            else:
                out.append(0)
        return tuple(out)

    @property
    def s_slope(self) -> tuple[int, ...]:
        return tuple(-1 if j == self.k else 0 for j in range(1, self.n + 1))


def half_sum_exponents(n: int) -> tuple[Fraction, ...]:
    """|.|-exponents (n+1)/2 - i of the fixed normalizing character."""
    return tuple(Fraction(n + 1, 2) - i for i in range(1, n + 1))


def coroot_argument_shift(n: int, i: int) -> int:
    """Argument shift of the local factor attached to the root e_i - e_n:
    the composed character is the Hecke character times |.|^{s + shift}."""
    if not 1 <= i < n:
        raise ValueError("root index out of range")
    return i - n
