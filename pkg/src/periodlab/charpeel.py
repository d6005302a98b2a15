"""Character-peeling oracle for tensor-product multiplicities.

Deliberately slower and independent of the Pieri fast path in
``weights``: characters of irreducible GL(n, C) representations are
expanded as honest Laurent polynomials (Schur polynomials computed by
enumerating semistandard tableaux, shifted by determinant powers for
weights with negative entries), the product character is formed, and
irreducible characters are peeled off the lexicographically highest
surviving weight until the multiplicity of the trivial representation
can be read off.
"""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=None)
def schur_polynomial(shape: tuple[int, ...], n: int) -> dict[tuple[int, ...], int]:
    """Monomial expansion of the Schur polynomial s_shape(x_1..x_n).

    Enumerates semistandard tableaux row by row; each row of a tableau
    with entries in 1..n contributes its content vector.
    """
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)) or shape[-1] < 0:
        raise ValueError(f"{shape} is not a partition")
    rows = [r for r in shape if r > 0]
    result: dict[tuple[int, ...], int] = {}

    def fill_row(length, min_entries, row_idx, content, acc_rows):
        """Extend tableau by one weakly increasing row dominating min_entries."""
        # min_entries[j]: strict lower bound from the cell above (or 0)
        row = [0] * length

        def rec(pos, prev):
            if pos == length:
                next_min = row.copy()
                descend(row_idx + 1, content, acc_rows + [next_min])
                return
            lo = max(prev, min_entries[pos] + 1)
            for v in range(lo, n + 1):
                row[pos] = v
                content[v - 1] += 1
                rec(pos + 1, v)
                content[v - 1] -= 1

        rec(0, 1)

    def descend(row_idx, content, acc_rows):
        if row_idx == len(rows):
            key = tuple(content)
            result[key] = result.get(key, 0) + 1
            return
        length = rows[row_idx]
        if row_idx == 0:
            min_entries = [0] * length
        else:
            above = acc_rows[-1]
            min_entries = [above[j] for j in range(length)]
        fill_row(length, min_entries, row_idx, content, acc_rows)

    if not rows:
        return {(0,) * n: 1}
    descend(0, [0] * n, [])
    return result


def character(weight: tuple[int, ...], n: int) -> dict[tuple[int, ...], int]:
    """Laurent character of the irreducible of dominant integer weight."""
    shift = min(weight[-1], 0)
    shape = tuple(w - shift for w in weight)
    monos = schur_polynomial(shape, n)
    if shift == 0:
        return dict(monos)
    return {tuple(e + shift for e in k): v for k, v in monos.items()}


def product_character(factors) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] | None = None
    for f in factors:
        if out is None:
            out = dict(f)
            continue
        nxt: dict[tuple[int, ...], int] = {}
        for e1, c1 in out.items():
            for e2, c2 in f.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                nxt[key] = nxt.get(key, 0) + c1 * c2
        out = nxt
    return out or {}


def trivial_multiplicity(factors, n: int) -> int:
    """Multiplicity of the trivial rep in a tensor product of irreducibles.

    ``factors`` is an iterable of dominant integer weights.  Peels the
    lexicographically highest weight repeatedly; stops once the leader
    falls lexicographically below zero (the trivial weight can no longer
    appear as a leader).
    """
    poly = product_character(character(w, n) for w in factors)
    zero = (0,) * n
    mult = 0
    while poly:
        leader = max(poly)
        coeff = poly[leader]
        if coeff == 0:
            del poly[leader]
            continue
        if leader < zero:
            break
        if any(leader[i] < leader[i + 1] for i in range(n - 1)):
            raise AssertionError(f"non-dominant leader {leader} while peeling")
        if leader == zero:
            mult = coeff
        ch = character(leader, n)
        for e, c in ch.items():
            v = poly.get(e, 0) - coeff * c
            if v:
                poly[e] = v
            else:
                poly.pop(e, None)
    return mult


def balanced_at_oracle(
    mu: tuple[int, ...], nu: tuple[int, ...], chi: int, eta_value: int, n: int
) -> bool:
    """Brute-force balanced test at one embedding via character peeling."""
    from .weights import highest_weight_from_eta

    feta = highest_weight_from_eta(eta_value, n)
    det_twist = (chi,) * n
    return trivial_multiplicity([mu, nu, feta, det_twist], n) >= 1
