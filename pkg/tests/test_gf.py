import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lcdhull.errors import (
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    NoTableEntry,
    NotMonic,
    NotPrime,
    NotSquareField,
    ReducibleModulus,
)
from lcdhull.gf import (
    _MODULUS_TABLE,
    FieldElement,
    conjugate,
    field_arith,
    field_make,
    field_of_order,
    is_irreducible,
    subfield_embedding,
)

SMALL_FIELDS = [2, 3, 4, 5, 8, 9, 16, 25]


def _has_root(poly, p):
    return any(sum(c * x**i for i, c in enumerate(poly)) % p == 0 for x in range(p))


def test_field_make_examples():
    F2 = field_make(2, 1)
    assert F2.q == 2 and F2.modulus is None
    F4 = field_make(2, 2, [1, 1, 1])
    assert F4.q == 4 and F4.modulus == (1, 1, 1)
    assert not _has_root([1, 1, 1], 2)
    with pytest.raises(ReducibleModulus):
        field_make(2, 2, [1, 0, 1])


def test_field_make_errors():
    with pytest.raises(NotPrime):
        field_make(6, 1)
    with pytest.raises(DegreeMismatch):
        field_make(2, 3, [1, 1, 1])
    with pytest.raises(NoTableEntry):
        field_make(2, 11)
    with pytest.raises(NoTableEntry):
        field_make(37, 2)
    # user-supplied modulus beyond the table is accepted
    F = field_make(37, 2, [2, 0, 1])  # -2 is a non-square mod 37
    assert F.q == 37**2


def test_table_defaults_match_known_moduli():
    assert field_make(2, 2).modulus == (1, 1, 1)
    assert field_make(3, 2).modulus == (1, 0, 1)


def test_is_irreducible_examples():
    assert is_irreducible([1, 1, 1], 2)
    assert is_irreducible([1, 0, 1], 3)
    assert not is_irreducible([1, 0, 1], 2)
    with pytest.raises(NotMonic):
        is_irreducible([1, 1, 0], 2)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_is_irreducible_matches_root_test_for_low_degree(p):
    # degree 2 and 3 polynomials are irreducible iff they have no root
    for deg in (2, 3):
        for low in range(p**deg):
            poly = [(low // p**i) % p for i in range(deg)] + [1]
            assert is_irreducible(poly, p) == (not _has_root(poly, p))


def test_is_irreducible_against_sympy_for_table():
    sympy = pytest.importorskip("sympy")
    x = sympy.symbols("x")
    for (p, m), f in _MODULUS_TABLE.items():
        assert sympy.Poly(list(reversed(f)), x, modulus=p).is_irreducible
        # a reducible polynomial of the same degree: f times x, truncated is not
        # monic-degree-m, so use (x + 1) * (x^(m-1) + 1) instead
        red = [0] * (m + 1)
        for i, a in enumerate([1, 1]):
            for j, b in enumerate([1] + [0] * (m - 2) + [1]):
                red[i + j] = (red[i + j] + a * b) % p
        assert not is_irreducible(red, p)


def test_arith_examples():
    F2 = field_make(2)
    assert F2.add(1, 1) == 0
    F4 = field_make(2, 2)
    assert F4.mul(2, 2) == 3
    F5 = field_make(5)
    assert F5.div(2, 3) == 4
    a, b = FieldElement(F5, 2), FieldElement(F5, 3)
    assert field_arith("div", a, b) == FieldElement(F5, 4)
    assert field_arith("sub", a, b).value == 4
    with pytest.raises(DivisionByZero):
        field_arith("div", a, FieldElement(F5, 0))
    with pytest.raises(FieldMismatch):
        field_arith("add", a, FieldElement(field_make(7), 1))


def test_conjugate_examples():
    F4 = field_make(2, 2)
    assert F4.conj(0) == 0 and F4.conj(1) == 1
    assert F4.conj(2) == 3  # alpha^2 = alpha + 1
    F9 = field_make(3, 2)
    alpha = FieldElement(F9, 3)
    assert conjugate(alpha) == alpha * alpha * alpha
    with pytest.raises(NotSquareField):
        field_make(2, 3).conj(2)


@pytest.mark.parametrize("q", SMALL_FIELDS)
def test_field_axioms_exhaustive(q):
    F = field_of_order(q)
    e = np.arange(q)
    a, b, c = e[:, None, None], e[None, :, None], e[None, None, :]
    assert np.array_equal(F.add(F.add(a, b), c), F.add(a, F.add(b, c)))
    assert np.array_equal(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)))
    assert np.array_equal(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)))
    A, B = e[:, None], e[None, :]
    assert np.array_equal(F.add(A, B), F.add(B, A))
    assert np.array_equal(F.mul(A, B), F.mul(B, A))
    assert np.array_equal(F.add(e, 0), e) and np.array_equal(F.mul(e, 1), e)
    assert np.all(F.add(e, F.neg(e)) == 0)
    assert np.all(F.mul(e[1:], F.inv(e[1:])) == 1)
    # the encoding is a bijection: each row of the tables is a permutation
    assert all(sorted(F.add(x, e)) == list(range(q)) for x in range(q))
    assert all(sorted(F.mul(x, e[1:])) == list(range(1, q)) for x in range(1, q))


@pytest.mark.parametrize("q", SMALL_FIELDS + [27, 49, 64, 81, 121, 243, 1024])
def test_frobenius_fixed_point(q):
    F = field_of_order(q)
    e = np.arange(q)
    assert np.array_equal(F.pow(e, q), e)


@pytest.mark.parametrize("q", [4, 9, 16, 25, 49, 64, 81])
def test_table_multiplication_matches_direct_reduction(q):
    F = field_of_order(q)
    rng = np.random.default_rng(q)
    for a, b in rng.integers(0, q, size=(300, 2)):
        assert int(F.mul(int(a), int(b))) == F.mul_direct(int(a), int(b))


@pytest.mark.parametrize("q", [4, 9, 16, 25])
def test_conjugation_is_involutive_automorphism(q):
    F = field_of_order(q)
    e = np.arange(q)
    A, B = e[:, None], e[None, :]
    assert np.array_equal(F.conj(F.conj(e)), e)
    assert np.array_equal(F.conj(F.add(A, B)), F.add(F.conj(A), F.conj(B)))
    assert np.array_equal(F.conj(F.mul(A, B)), F.mul(F.conj(A), F.conj(B)))
    fixed = [x for x in range(q) if F.conj(x) == x]
    assert len(fixed) == F.sqrt_q
    # the fixed set is closed under + and *, i.e. the subfield of size sqrt(q)
    assert all(F.conj(F.add(x, y)) == F.add(x, y) for x in fixed for y in fixed)


def test_large_field_without_tables():
    F = field_make(2, 16, [1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1])
    rng = np.random.default_rng(7)
    for a, b in rng.integers(1, F.q, size=(50, 2)):
        assert int(F.mul(int(a), int(b))) == F.mul_direct(int(a), int(b))
        assert int(F.mul(int(a), F.inv(int(a)))) == 1


def test_large_odd_field_addition():
    F = field_make(251, 2, [3, 0, 1])  # -3 is a non-square mod 251
    rng = np.random.default_rng(3)
    for a, b in rng.integers(0, F.q, size=(50, 2)):
        s = int(F.add(int(a), int(b)))
        assert F.digits(s) == [(x + y) % 251 for x, y in zip(F.digits(int(a)), F.digits(int(b)))]


@pytest.mark.parametrize("small,big", [(2, 4), (2, 16), (4, 16), (3, 9), (4, 64), (9, 81)])
def test_subfield_embedding_is_a_ring_homomorphism(small, big):
    S, L = field_of_order(small), field_of_order(big)
    phi = subfield_embedding(S, L)
    assert len(set(phi.tolist())) == small
    for a in range(small):
        for b in range(small):
            assert phi[S.add(a, b)] == L.add(phi[a], phi[b])
            assert phi[S.mul(a, b)] == L.mul(phi[a], phi[b])


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SMALL_FIELDS), st.data())
def test_fieldelement_operators(q, data):
    F = field_of_order(q)
    a = FieldElement(F, data.draw(st.integers(0, q - 1)))
    b = FieldElement(F, data.draw(st.integers(1, q - 1)))
    assert (a / b) * b == a
    assert (a - b) + b == a
    assert a ** (q - 1) == (1 if a.value else 0)
