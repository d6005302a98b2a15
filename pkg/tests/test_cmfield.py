import random
from fractions import Fraction

import pytest
from mpmath import mp

from periodlab.cmfield import (
    FieldTower,
    GaloisPermutation,
    apply_galois,
    build_field,
    check_discriminant_identity,
    conjugation_permutation,
    disc_constant_lower,
    disc_constant_upper,
    identity_permutation,
    power_basis,
    product_basis,
    relative_discriminant,
)
from periodlab.errors import InvalidGaloisPermutation, ReduciblePolynomial


QI = FieldTower(base_disc=1, extension_poly=(0, 1))
QS3 = FieldTower(base_disc=3, extension_poly=(0, 1))
QZ8 = FieldTower(base_disc=1, extension_poly=(-2, 0, 1))       # Q(i)(sqrt 2)
QIC = FieldTower(base_disc=1, extension_poly=(-2, 0, 0, 1))    # Q(i)(cbrt 2)

TOWERS = [QI, QS3, QZ8, QIC]


@pytest.fixture(scope="module")
def built():
    return {t: build_field(t, 60) for t in TOWERS}


def test_embedding_counts(built):
    assert built[QI].degree == 2
    assert len(built[QI].pairs()) == 1
    assert built[QZ8].degree == 4
    assert built[QIC].degree == 6
    assert len(built[QIC].pairs()) == 3


def test_cubic_fibers(built):
    emb = built[QIC]
    fibers = emb.fibers()
    assert len(fibers) == 2
    assert all(len(v) == 3 for v in fibers.values())


def test_conjugation_is_fixed_point_free_involution(built):
    for emb in built.values():
        for i in range(emb.degree):
            assert emb.conj(i) != i
            assert emb.conj(emb.conj(i)) == i


def test_conjugation_order_preserving_between_fibers(built):
    for emb in built.values():
        for t, members in emb.fibers().items():
            images = [emb.conj(i) for i in members]
            assert images == sorted(images)


def test_restriction_commutes_with_conjugation(built):
    for emb in built.values():
        for i in range(emb.degree):
            t = emb.restriction_k1[i]
            tbar = emb.restriction_k1[emb.conj(i)]
            w, s = emb.k1_labels[t]
            wb, sb = emb.k1_labels[tbar]
            assert w == wb and s == -sb


def test_reducible_polynomial_rejected():
    with pytest.raises(ReduciblePolynomial):
        build_field(FieldTower(base_disc=1, extension_poly=(1, 2, 1)), 40)  # (x+1)^2


def test_relative_discriminant_examples(built):
    d, _ = relative_discriminant(built[QI], product_basis(built[QI]), over="Q")
    assert d == Fraction(-4)
    d3, _ = relative_discriminant(built[QS3], product_basis(built[QS3]), over="Q")
    assert d3 == Fraction(-12)


def _int_det(m):
    import copy

    m = [[Fraction(x) for x in row] for row in copy.deepcopy(m)]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for col in range(c, n):
                m[r][col] -= f * m[c][col]
    return det


def test_discriminant_square_class_invariance(built):
    """A rational change of basis scales the discriminant by det^2."""
    emb = built[QZ8]
    rng = random.Random(7)
    base = product_basis(emb)
    d0, _ = relative_discriminant(emb, base, over="Q")
    trials = 0
    while trials < 3:
        m = [[rng.randint(-2, 2) for _ in range(4)] for _ in range(4)]
        det = _int_det(m)
        if det == 0:
            continue
        trials += 1
        newbase = []
        for row in m:
            elem = [
                (
                    sum(Fraction(row[b]) * base[b][p][0] for b in range(4)),
                    sum(Fraction(row[b]) * base[b][p][1] for b in range(4)),
                )
                for p in range(len(base[0]))
            ]
            newbase.append(tuple(elem))
        d1, _ = relative_discriminant(emb, newbase, over="Q", max_denominator=10**6)
        assert d1 == d0 * det**2


def test_scaling_square_class(built):
    emb = built[QI]
    base = product_basis(emb)
    scaled = [tuple((3 * a, 3 * b) for a, b in x) for x in base]
    d0, _ = relative_discriminant(emb, base, over="Q")
    d1, _ = relative_discriminant(emb, scaled, over="Q")
    assert d1 == d0 * Fraction(3) ** (2 * emb.degree)


def test_delta_constants(built):
    v, _ = disc_constant_lower(QI)
    assert abs(complex(v) - 2j) < 1e-12
    v, _ = disc_constant_lower(QIC)
    assert abs(complex(v) - (-8j)) < 1e-12
    v, _ = disc_constant_lower(QS3)
    assert abs(complex(v) - complex(0, 2 * 3 ** 0.5)) < 1e-12


def test_delta_depends_only_on_d_and_extension_degree():
    """Same d and same [k:k1] give the same constant across towers."""
    a, _ = disc_constant_lower(FieldTower(base_disc=1, extension_poly=(-2, 0, 1)))
    b, _ = disc_constant_lower(FieldTower(base_disc=1, extension_poly=(-3, 0, 1)))
    assert abs(complex(a) - complex(b)) < 1e-12


def test_nabla_constants(built):
    v, _ = disc_constant_upper(built[QI])
    assert abs(float(v) - 1.0) < 1e-12
    v, _ = disc_constant_upper(built[QIC])
    assert abs(float(v) - 108.0) < 1e-10
    v, _ = disc_constant_upper(built[QZ8])
    assert abs(float(v) - 8.0) < 1e-10


def test_nabla_trivial_for_degree_one_extension(built):
    for t in (QI, QS3):
        v, data = disc_constant_upper(built[t])
        assert float(v) == 1.0
        assert data["norm_to_q"] == 1


def test_discriminant_identity(built):
    expected = {QI: -1, QS3: -1, QZ8: 1, QIC: -1}
    for t, c_want in expected.items():
        c, cert = check_discriminant_identity(built[t])
        assert c == Fraction(c_want)
        assert cert["k1_maximality_asserted"] is True


def test_identity_constant_under_scaled_basis(built):
    """User bases change disc by squares; c stays rational."""
    emb = built[QZ8]
    base = [tuple((2 * a, 2 * b) for a, b in x) for x in power_basis(emb)]
    v, data = disc_constant_upper(emb, basis=base)
    # scaling theta-basis by 2 multiplies the relative disc by 2^(2*2)=16
    assert data["disc_k_over_k1"] == (Fraction(8 * 16), Fraction(0))


def test_apply_galois(built):
    emb = built[QS3]
    conj = conjugation_permutation(emb)
    ident = identity_permutation(emb)
    x = (Fraction(3), Fraction(2))
    assert apply_galois(x, conj, emb) == (Fraction(3), Fraction(-2))
    assert apply_galois(x, ident, emb) == x
    assert apply_galois(Fraction(5), conj, emb) == Fraction(5)
    assert apply_galois((Fraction(0), Fraction(1)), ident, emb) == (Fraction(0), Fraction(1))


def test_admissible_permutations(built):
    emb4 = built[QZ8]
    perms = emb4.admissible_permutations()
    assert len(perms) == 4
    assert identity_permutation(emb4) in perms
    assert conjugation_permutation(emb4) in perms
    emb6 = built[QIC]
    assert len(emb6.admissible_permutations()) == 12


def test_invalid_permutation_rejected(built):
    emb = built[QZ8]
    # swapping one embedding with its conjugate only: breaks descent
    g = GaloisPermutation((2, 1, 0, 3))
    with pytest.raises(InvalidGaloisPermutation):
        g.validate(emb)


def test_declared_k0_tower():
    """Q(zeta12) presented over k0 = Q(sqrt 3): constants still computable."""
    t = FieldTower(base_disc=1, extension_poly=(0, 1), declared_k0_poly=(-3, 0, 1))
    emb = build_field(t, 50)
    assert emb.degree == 4
    assert len(emb.pairs()) == 2
    c, cert = check_discriminant_identity(emb)
    assert c != 0
