"""Weight enumerators, Tutte polynomials and the hull invariants for q = 2, 3.

Two independent routes to the extended weight enumerator W_C(X, Y, T) live
here.  The first computes the Tutte polynomial from ranks of column subsets
and substitutes it into Greene's identity

    W_C(X, Y, T) = (X - Y)^k Y^(n-k) t_C((X + (T-1)Y) / (X - Y), X / Y).

The second never looks at a rank: it counts codewords of the extension codes
over GF(q^m), m = 1 .. k+1, and interpolates each A_w(T) as a polynomial.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from lcdhull.code import (
    DEFAULT_CODEWORD_BUDGET,
    LinearCode,
    code_make,
    codeword_chunks,
    weight_distribution,
)
from lcdhull.errors import (
    BudgetExceeded,
    NonIntegralInterpolation,
    NonPolynomialResult,
    NotBinary,
    NotDivisible,
    NotPowerOfThree,
    NotPowerOfTwo,
    NotTernary,
)
from lcdhull.gf import FieldSpec, field_make, subfield_embedding
from lcdhull.matfq import MatrixFq
from lcdhull.poly import EisensteinInt, MultiPoly

DEFAULT_SUBSET_BUDGET = 1 << 22

XY = ("X", "Y")
XYT = ("X", "Y", "T")


def weight_enumerator(C: LinearCode, budget: int = DEFAULT_CODEWORD_BUDGET) -> MultiPoly:
    """W_C(X, Y) = sum_w A_w X^(n-w) Y^w by enumerating every codeword."""
    A = weight_distribution(C, budget)
    return MultiPoly(XY, {(C.n - w, w): a for w, a in enumerate(A)})


def spectrum(W: MultiPoly) -> list[int]:
    """Recover A_0 .. A_n from a bivariate weight enumerator."""
    n = max(sum(e) for e, _ in W.terms())
    A = [0] * (n + 1)
    for (x, y), c in W.terms():
        A[y] = c
    return A


# -- Tutte polynomial from column-subset ranks --------------------------------

@functools.lru_cache(maxsize=32)
def _scalar_tables(field: FieldSpec):
    if field.q > 1024:
        return None
    return (
        field._mul.tolist(),
        field._add.tolist(),
        field._neg.tolist(),
        field._inv.tolist(),
    )


def _rank_size_counts_binary(G: np.ndarray) -> list[list[int]]:
    k, n = G.shape
    cols = [sum(int(G[i, j]) << i for i in range(k)) for j in range(n)]
    counts = [[0] * (k + 1) for _ in range(n + 1)]
    # stack of (next index, subset size, basis list)
    stack: list[tuple[int, int, tuple[int, ...]]] = [(0, 0, ())]
    while stack:
        start, size, basis = stack.pop()
        counts[size][len(basis)] += 1
        for j in range(start, n):
            v = cols[j]
            for b in basis:
                if v & (1 << (b.bit_length() - 1)):
                    v ^= b
            stack.append((j + 1, size + 1, basis + (v,) if v else basis))
    return counts


def _rank_size_counts_general(field: FieldSpec, G: np.ndarray) -> list[list[int]]:
    k, n = G.shape
    tables = _scalar_tables(field)
    if tables is None:
        mul = lambda a, b: int(field.mul(a, b))  # noqa: E731
        add = lambda a, b: int(field.add(a, b))  # noqa: E731
        neg = lambda a: int(field.neg(a))  # noqa: E731
        inv = lambda a: int(field.inv(a))  # noqa: E731
    else:
        mt, at, nt, it = tables
        mul = lambda a, b: mt[a][b]  # noqa: E731
        add = lambda a, b: at[a][b]  # noqa: E731
        neg = nt.__getitem__
        inv = it.__getitem__
    cols = [[int(G[i, j]) for i in range(k)] for j in range(n)]
    counts = [[0] * (k + 1) for _ in range(n + 1)]

    def reduce(v: list[int], basis) -> tuple[int, list[int]] | None:
        v = list(v)
        for p, b in basis:
            c = v[p]
            if c:
                nc = neg(c)
                v = [add(x, mul(nc, y)) for x, y in zip(v, b)]
        for p, x in enumerate(v):
            if x:
                s = inv(x)
                return p, [mul(s, y) for y in v]
        return None

    stack = [(0, 0, ())]
    while stack:
        start, size, basis = stack.pop()
        counts[size][len(basis)] += 1
        for j in range(start, n):
            red = reduce(cols[j], basis)
            stack.append((j + 1, size + 1, basis + (red,) if red else basis))
    return counts


def rank_size_counts(C: LinearCode, budget: int = DEFAULT_SUBSET_BUDGET) -> list[list[int]]:
    """counts[s][r] = number of column subsets of size s and rank r."""
    if 2**C.n > budget:
        raise BudgetExceeded(f"2^{C.n} column subsets exceed the budget of {budget}")
    G = C.G.data
    if C.k == 0:
        G = np.zeros((0, C.n), dtype=np.int64)
    if C.field.q == 2:
        return _rank_size_counts_binary(G)
    return _rank_size_counts_general(C.field, G)


def tutte(C: LinearCode, budget: int = DEFAULT_SUBSET_BUDGET) -> MultiPoly:
    """Tutte polynomial of the column matroid by the Whitney rank sum

        t(X, Y) = sum_A (X - 1)^(k - r(A)) (Y - 1)^(|A| - r(A)).
    """
    counts = rank_size_counts(C, budget)
    X1 = MultiPoly.var("X", XY) - 1
    Y1 = MultiPoly.var("Y", XY) - 1
    t = MultiPoly(XY)
    for s, row in enumerate(counts):
        for r, c in enumerate(row):
            if c:
                t = t + c * X1 ** (C.k - r) * Y1 ** (s - r)
    return t


def ext_from_tutte(t: MultiPoly, n: int, k: int) -> MultiPoly:
    """Greene substitution with the denominators cleared term by term."""
    X = MultiPoly.var("X", XYT)
    Y = MultiPoly.var("Y", XYT)
    T = MultiPoly.var("T", XYT)
    first = X + (T - 1) * Y
    XmY = X - Y
    W = MultiPoly(XYT)
    for (a, b), c in t.terms():
        if a > k or b > n - k:
            raise NonPolynomialResult(f"Tutte term X^{a}*Y^{b} exceeds [n, k] = [{n}, {k}]")
        W = W + c * first**a * XmY ** (k - a) * X**b * Y ** (n - k - b)
    return W


def ext_weight_enumerator(C: LinearCode, budget: int = DEFAULT_SUBSET_BUDGET) -> MultiPoly:
    return ext_from_tutte(tutte(C, budget), C.n, C.k)


# -- oracle: extension-code enumeration -----------------------------------------

def support_counts(C: LinearCode, budget: int = DEFAULT_CODEWORD_BUDGET) -> np.ndarray:
    """Number of codewords with each exact support, indexed by bitmask."""
    weights = 1 << np.arange(C.n, dtype=np.int64)
    out = np.zeros(1 << C.n, dtype=np.int64)
    for cw in codeword_chunks(C, budget):
        masks = ((cw != 0) * weights).sum(axis=1)
        out += np.bincount(masks, minlength=1 << C.n)
    return out


def _zeta(f: np.ndarray, n: int) -> np.ndarray:
    # f(S) -> sum over subsets T of S
    f = f.copy()
    for i in range(n):
        v = f.reshape(-1, 2, 1 << i)
        v[:, 1, :] += v[:, 0, :]
    return f


def _moebius(f: np.ndarray, n: int) -> np.ndarray:
    f = f.copy()
    for i in range(n):
        v = f.reshape(-1, 2, 1 << i)
        v[:, 1, :] -= v[:, 0, :]
    return f


def extension_weight_distributions(
    C: LinearCode,
    degrees,
    codeword_budget: int = DEFAULT_CODEWORD_BUDGET,
    subset_budget: int = DEFAULT_SUBSET_BUDGET,
) -> dict[int, list[int]]:
    """A_w of the extension code over GF(q^m) for each m in ``degrees``.

    Fixing a GF(q)-basis of GF(q^m) identifies a message in GF(q^m)^k with
    an m-tuple of messages in GF(q)^k; the extension codeword is zero at
    position i iff all m base codewords are.  So its weight is the size of
    the union of m supports, and the number of m-tuples whose union lies
    inside S is N(S)^m with N(S) the number of base codewords supported in S.
    """
    n = C.n
    if 2**n > subset_budget:
        raise BudgetExceeded(f"2^{n} supports exceed the budget of {subset_budget}")
    exact = support_counts(C, codeword_budget)
    within = _zeta(exact, n).astype(object)
    popcount = np.array([bin(s).count("1") for s in range(1 << n)])
    out = {}
    for m in degrees:
        per_support = _moebius(within**m, n)
        A = [0] * (n + 1)
        for s, c in zip(popcount.tolist(), per_support.tolist()):
            A[s] += c
        out[m] = A
    return out


def _interpolate(points: list[tuple[int, int]]) -> list[int]:
    """Coefficients (low first) of the polynomial through integer points."""
    deg = len(points) - 1
    coeffs = [Fraction(0)] * (deg + 1)
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for d in range(len(basis) - 1):
                basis[d] -= xj * basis[d + 1]
            denom *= xi - xj
        for d, b in enumerate(basis):
            coeffs[d] += yi * b / denom
    if any(c.denominator != 1 for c in coeffs):
        raise NonIntegralInterpolation(f"non-integral interpolation coefficients {coeffs}")
    return [int(c) for c in coeffs]


def ext_weight_enumerator_oracle(
    C: LinearCode,
    codeword_budget: int = DEFAULT_CODEWORD_BUDGET,
    subset_budget: int = DEFAULT_SUBSET_BUDGET,
) -> MultiPoly:
    """W_C(X, Y, T) from the extension codes over GF(q^m), m = 1 .. k+1."""
    q, n, k = C.field.q, C.n, C.k
    degrees = list(range(1, k + 2))
    dists = extension_weight_distributions(C, degrees, codeword_budget, subset_budget)
    terms = {}
    for w in range(n + 1):
        coeffs = _interpolate([(q**m, dists[m][w]) for m in degrees])
        for d, c in enumerate(coeffs):
            if c:
                terms[(n - w, w, d)] = c
    return MultiPoly(XYT, terms)


def lifted_code(C: LinearCode, m: int) -> LinearCode:
    """The same generator read over GF(q^m) through the subfield embedding."""
    F = C.field
    big = field_make(F.p, F.m * m)
    emb = subfield_embedding(F, big)
    return code_make(big, MatrixFq._raw(big, emb[C.G.data]))


def lifted_weight_enumerator(C: LinearCode, m: int, budget: int = DEFAULT_CODEWORD_BUDGET) -> MultiPoly:
    """Weight enumerator of the extension code by literal enumeration."""
    return weight_enumerator(lifted_code(C, m), budget)


# -- derived forms --------------------------------------------------------------

def _length(W: MultiPoly) -> int:
    ix, iy = W.variables.index("X"), W.variables.index("Y")
    degs = {e[ix] + e[iy] for e, _ in W.terms()}
    if len(degs) != 1:
        raise ValueError("not homogeneous in X, Y")
    return degs.pop()


def reduced_ext_enumerator(W: MultiPoly) -> MultiPoly:
    """(W_C(X, Y, T) - X^n) / (T - 1), exactly."""
    n = _length(W)
    Xn = MultiPoly(XYT, {(n, 0, 0): 1})
    return (W - Xn).div_linear("T", 1)


def specialize_T(W: MultiPoly, t: int) -> MultiPoly:
    return W.evaluate(T=t)


def tutte_from_ext(W: MultiPoly, n: int, k: int) -> MultiPoly:
    """t_C(X, Y) = Y^n (Y - 1)^(-k) W_C(1, 1/Y, (X - 1)(Y - 1)).

    With W = sum c X^a Y^b T^d and a + b = n, the term becomes
    c Y^a ((X-1)(Y-1))^d, and the sum is divided by (Y - 1) k times.
    """
    X1 = MultiPoly.var("X", XY) - 1
    Y = MultiPoly.var("Y", XY)
    Y1 = Y - 1
    num = MultiPoly(XY)
    for (a, b, d), c in W.terms():
        if a + b != n:
            raise NonPolynomialResult(f"term X^{a}*Y^{b} is not of degree {n}")
        num = num + c * Y**a * (X1 * Y1) ** d
    try:
        for _ in range(k):
            num = num.div_linear("Y", 1)
    except NotDivisible as exc:
        raise NonPolynomialResult("substitution is not a polynomial") from exc
    return num


# -- hull invariants for q = 2 and q = 3 ----------------------------------------

class BinaryInvariant(NamedTuple):
    h: int
    value: int  # W_C(1, -1, 4), sign included


class TernaryInvariant(NamedTuple):
    h: int
    value: EisensteinInt  # W_C(1, j)
    norm: int


def binary_hull_invariant(C: LinearCode, W: MultiPoly | None = None) -> BinaryInvariant:
    """Hull dimension of a binary code from |W_C(1, -1, 4)| = 2^(k + h)."""
    if C.field.q != 2:
        raise NotBinary(f"code is over GF({C.field.q})")
    if W is None:
        W = ext_weight_enumerator(C)
    value = W.evaluate(X=1, Y=-1, T=4)
    mag = abs(value)
    e = mag.bit_length() - 1
    if mag == 0 or mag != 1 << e or e < C.k:
        raise NotPowerOfTwo(f"|W(1,-1,4)| = {mag} is not 2^e with e >= k = {C.k}")
    return BinaryInvariant(e - C.k, value)


def spectrum_mod3(W: MultiPoly) -> tuple[int, int, int]:
    """Totals of A_w over w = 0, 1, 2 (mod 3)."""
    a = [0, 0, 0]
    for w, c in enumerate(spectrum(W)):
        a[w % 3] += c
    return a[0], a[1], a[2]


def eisenstein_value(W: MultiPoly) -> EisensteinInt:
    """W_C(1, j) = a0 + a1 j + a2 j^2 = (a0 - a2) + (a1 - a2) j."""
    a0, a1, a2 = spectrum_mod3(W)
    return EisensteinInt(a0 - a2, a1 - a2)


def ternary_hull_invariant(C: LinearCode, W: MultiPoly | None = None) -> TernaryInvariant:
    """Hull dimension of a ternary code from N(W_C(1, j)) = 3^(k + h)."""
    if C.field.q != 3:
        raise NotTernary(f"code is over GF({C.field.q})")
    if W is None:
        W = weight_enumerator(C)
    z = eisenstein_value(W)
    N = z.norm()
    e = 0
    rest = N
    while rest > 1 and rest % 3 == 0:
        rest //= 3
        e += 1
    if rest != 1 or e < C.k:
        raise NotPowerOfThree(f"N(W(1,j)) = {N} is not 3^e with e >= k = {C.k}")
    return TernaryInvariant(e - C.k, z, N)
