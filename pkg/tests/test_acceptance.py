"""Acceptance suite: one test per criterion, each with its own time limit.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import time

import numpy as np
import pytest

from conftest import random_codes
from lcdhull import golden
from lcdhull.code import (
    apply_monomial,
    code_make,
    hull,
    is_hermitian_lcd,
    is_lcd,
    min_distance,
    parity_check,
    random_invertible,
    random_monomial,
    weight_distribution,
)
from lcdhull.enumerators import (
    XY,
    binary_hull_invariant,
    ext_weight_enumerator,
    ext_weight_enumerator_oracle,
    reduced_ext_enumerator,
    specialize_T,
    ternary_hull_invariant,
    weight_enumerator,
)
from lcdhull.errors import NoWitnessFound
from lcdhull.gf import field_make, field_of_order
from lcdhull.lcdize import hlcdize, lcdize
from lcdhull.matfq import det, mat_mul, rank
from lcdhull.poly import EisensteinInt, MultiPoly


class Timer:
    def __init__(self, limit):
        self.limit = limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.limit, f"took {self.elapsed:.1f} s, limit {self.limit} s"


def intersection_dim(C, hermitian=False):
    """dim(C ∩ C^⊥) = n - rank([G; H]), independent of any Gram matrix."""
    H = parity_check(C)
    if hermitian:
        H = H.conj()
    if H.rows == 0:
        return 0
    return C.n - rank(C.G.vstack(H))


def gram_rank(G, hermitian=False):
    return rank(mat_mul(G, (G.conj() if hermitian else G).T))


def enumerator_by_greene_or_direct(C):
    if C.field.q ** C.k <= 1 << 16:
        return weight_enumerator(C)
    return specialize_T(ext_weight_enumerator(C), C.field.q)


def test_criterion_1_example_one():
    with Timer(1.0):
        C1, C2 = golden.c1(), golden.c2()
        assert hull(C1).h == 3
        assert hull(C2).h == 1
        assert hull(C2).hull_basis.tolist() == [[1] * 6]
        W = MultiPoly.parse(golden.WEIGHT_ENUMERATOR, XY)
        assert weight_enumerator(C1) == W
        assert weight_enumerator(C2) == W


def test_criterion_2_example_two():
    with Timer(1.0):
        C1, C2 = golden.c1(), golden.c2()
        E1, E2 = ext_weight_enumerator(C1), ext_weight_enumerator(C2)
        assert reduced_ext_enumerator(E1) == golden.reduced_c1()
        assert reduced_ext_enumerator(E2) == golden.reduced_c2()
        v1 = binary_hull_invariant(C1, E1).value
        v2 = binary_hull_invariant(C2, E2).value
        assert v1 in (64, -64) and abs(v1) == 2**6
        assert abs(v2) == 16


def test_criterion_3_gram_rank_theorem():
    rng = np.random.default_rng(3)
    with Timer(60.0):
        for q in (2, 3, 4, 5, 8, 9):
            F = field_of_order(q)
            for C in random_codes(q, 500, rng, n_max=12):
                h = intersection_dim(C)
                assert hull(C).h == h
                assert C.k - gram_rank(C.G) == h
                for _ in range(3):
                    G = mat_mul(random_invertible(F, C.k, rng), C.G)
                    assert code_make(F, G) == C
                    assert C.k - gram_rank(G) == h


def test_criterion_4_hull_invariants():
    rng = np.random.default_rng(4)
    with Timer(120.0):
        for C in random_codes(2, 300, rng, n_max=14):
            inv = binary_hull_invariant(C)
            assert inv.h == intersection_dim(C)
            assert abs(inv.value) == 2 ** (C.k + inv.h)
        for C in random_codes(3, 300, rng, n_max=10):
            inv = ternary_hull_invariant(C)
            h = intersection_dim(C)
            assert inv.h == h
            # evaluate W(1, j) from the spectrum, independently of the library path
            value = EisensteinInt(0, 0)
            for w, a in enumerate(weight_distribution(C)):
                value = value + a * EisensteinInt.j() ** w
            assert value == inv.value
            assert value.norm() == 3 ** (C.k + h)


def test_criterion_5_greene_matches_oracle():
    rng = np.random.default_rng(5)
    X, Y = (MultiPoly.var(v, XY) for v in XY)
    with Timer(120.0):
        codes = random_codes(2, 60, rng, n_max=8, k_max=4) + random_codes(3, 60, rng, n_max=8, k_max=4)
        for C in codes:
            E = ext_weight_enumerator(C)
            assert E == ext_weight_enumerator_oracle(C)
            assert specialize_T(E, C.field.q) == weight_enumerator(C)
            assert specialize_T(E, 1) == X**C.n


def _check_lcdize_suite(q, rng, hermitian, count=100, n_max=10):
    changed = 0
    for C in random_codes(q, count, rng, n_max=n_max):
        res = (hlcdize if hermitian else lcdize)(C, strategy="grid")
        D = res.result
        G = D.G
        # path 1: Gram determinant; path 2: intersection with the dual
        assert det(mat_mul(G, (G.conj() if hermitian else G).T)) != 0
        assert intersection_dim(D, hermitian) == 0
        assert (is_hermitian_lcd if hermitian else is_lcd)(D)
        assert (D.n, D.k) == (C.n, C.k)
        assert enumerator_by_greene_or_direct(D) == enumerator_by_greene_or_direct(C)
        if q ** C.k <= 1 << 16:
            assert min_distance(D) == min_distance(C)
        changed += res.strategy != "identity"
    return changed


def test_criterion_6_lcdize():
    rng = np.random.default_rng(6)
    with Timer(120.0):
        for q in (4, 5, 7, 8, 9):
            _check_lcdize_suite(q, rng, hermitian=False)


def test_criterion_7_hermitian_lcdize():
    rng = np.random.default_rng(7)
    with Timer(120.0):
        for q in (9, 16, 25):
            _check_lcdize_suite(q, rng, hermitian=True)
        C = code_make(field_make(2, 2), [[1, 1]])
        with pytest.raises(NoWitnessFound, match="all 3 grid points"):
            hlcdize(C)


def test_criterion_8_monomial_invariance():
    rng = np.random.default_rng(8)
    with Timer(60.0):
        for q in (2, 3):
            F = field_of_order(q)
            for C in random_codes(q, 50, rng, n_max=8):
                h, E = hull(C).h, ext_weight_enumerator(C)
                for _ in range(50):
                    D = apply_monomial(random_monomial(F, C.n, rng), C)
                    assert hull(D).h == h
                    assert ext_weight_enumerator(D) == E
        witnesses = []
        for q in (4, 5, 7, 8, 9):
            for C in random_codes(q, 50, rng, n_max=8):
                if not is_lcd(C):
                    res = lcdize(C, strategy="grid")
                    if hull(res.result).h != hull(C).h:
                        witnesses.append((C, res.transform))
                    break
        assert len(witnesses) == 5
