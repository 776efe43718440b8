"""Linear codes over GF(q): duals, hulls, LCD tests and equivalence maps."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from lcdhull.errors import (
    BudgetExceeded,
    DimensionMismatch,
    FieldMismatch,
    InternalInconsistency,
    NotSquareField,
    ZeroCode,
    ZeroEntry,
)
from lcdhull.gf import FieldSpec
from lcdhull.matfq import MatrixFq, det, mat_mul, nullspace, rank, rref

DEFAULT_CODEWORD_BUDGET = 1 << 26


class DependentRowsWarning(UserWarning):
    pass


class LinearCode:
    """A k-dimensional subspace of GF(q)^n, stored by its RREF generator.

    Two codes compare equal iff they have the same field and the same RREF
    generator matrix.  ``dropped_rows`` records how many dependent rows were
    removed from the matrix the code was built from.
    """

    __slots__ = ("field", "G", "n", "k", "dropped_rows", "pivots")

    def __init__(self, field: FieldSpec, G: MatrixFq, pivots: tuple[int, ...], dropped_rows: int = 0):
        self.field = field
        self.G = G
        self.n = G.cols
        self.k = G.rows
        self.pivots = pivots
        self.dropped_rows = dropped_rows

    @property
    def is_zero(self) -> bool:
        return self.k == 0

    @property
    def is_full(self) -> bool:
        return self.k == self.n

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearCode) and self.field == other.field and self.G == other.G

    def __hash__(self) -> int:
        return hash(self.G)

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}] over {self.field!r})"

    def contains(self, v: Sequence[int]) -> bool:
        if self.k == 0:
            return not any(v)
        return rank(self.G.vstack(MatrixFq(self.field, [list(v)]))) == self.k


def _canonical(field: FieldSpec, G: MatrixFq) -> tuple[MatrixFq, tuple[int, ...], int]:
    R = rref(G)
    return MatrixFq._raw(field, R.R.data[: R.rank].copy()), R.pivots, G.rows - R.rank


def code_make(field: FieldSpec, G: MatrixFq | Sequence[Sequence[int]]) -> LinearCode:
    """Build the code spanned by the rows of G."""
    if not isinstance(G, MatrixFq):
        G = MatrixFq.from_rows(field, G)
    if G.field != field:
        raise FieldMismatch(f"generator over {G.field}, expected {field}")
    R, pivots, dropped = _canonical(field, G)
    if R.rows == 0:
        raise ZeroCode("generator matrix has rank 0")
    if dropped:
        warnings.warn(f"dropped {dropped} dependent row(s) from generator", DependentRowsWarning, stacklevel=2)
    return LinearCode(field, R, pivots, dropped)


def zero_code(field: FieldSpec, n: int) -> LinearCode:
    """The distinguished k = 0 code (dual of the full space)."""
    return LinearCode(field, MatrixFq.zeros(field, 0, n), ())


def _from_basis(field: FieldSpec, basis: MatrixFq, n: int) -> LinearCode:
    if basis.rows == 0:
        return zero_code(field, n)
    R, pivots, _ = _canonical(field, basis)
    return LinearCode(field, R, pivots)


def parity_check(C: LinearCode) -> MatrixFq:
    """(n - k) x n parity-check matrix: the canonical nullspace of G."""
    if C.k == 0:
        return MatrixFq.identity(C.field, C.n)
    return nullspace(C.G)


def dual(C: LinearCode) -> LinearCode:
    return _from_basis(C.field, parity_check(C), C.n)


def _require_square(field: FieldSpec) -> None:
    if not field.is_square:
        raise NotSquareField(f"Hermitian duality needs square q, got {field.q}")


def hermitian_dual(C: LinearCode) -> LinearCode:
    _require_square(C.field)
    if C.k == 0:
        return _from_basis(C.field, MatrixFq.identity(C.field, C.n), C.n)
    return _from_basis(C.field, nullspace(C.G.conj()), C.n)


def gram(C: LinearCode, hermitian: bool = False) -> MatrixFq:
    """G G^T, or G conj(G)^T when ``hermitian``."""
    if hermitian:
        _require_square(C.field)
        return mat_mul(C.G, C.G.conj().T)
    return mat_mul(C.G, C.G.T)


@dataclass(frozen=True)
class HullReport:
    h: int
    hull_basis: MatrixFq
    gram_rank: int
    is_lcd: bool


def hull(C: LinearCode, flavor: str = "euclidean") -> HullReport:
    """Hull dimension by two independent routes, cross-checked.

    The basis comes from intersecting C with its (Hermitian) dual; the Gram
    rank comes from rank(G G^T).  Their sum must be k.
    """
    if flavor not in ("euclidean", "hermitian"):
        raise ValueError(f"unknown hull flavor {flavor!r}")
    herm = flavor == "hermitian"
    if herm:
        _require_square(C.field)
    if C.k == 0:
        return HullReport(0, MatrixFq.zeros(C.field, 0, C.n), 0, True)
    H = parity_check(C)
    Gside = C.G.conj() if herm else C.G
    basis = nullspace(H.vstack(Gside))
    h = basis.rows
    gram_rank = rank(gram(C, herm))
    if h + gram_rank != C.k:
        raise InternalInconsistency(
            f"hull dimension {h} + Gram rank {gram_rank} != k = {C.k}"
        )
    return HullReport(h, basis, gram_rank, h == 0)


def is_lcd(C: LinearCode) -> bool:
    return det(gram(C)) != 0


def is_hermitian_lcd(C: LinearCode) -> bool:
    return det(gram(C, hermitian=True)) != 0


def structured_generator(C: LinearCode) -> tuple[MatrixFq, int]:
    """Generator G0 whose first h rows span the hull.

    The remaining rows are the RREF rows of C whose pivot columns are not
    leading positions of the hull, so G0 G0^T is zero outside an invertible
    lower-right r x r block.
    """
    rep = hull(C)
    if rep.h == 0:
        return C.G, 0
    lead = set(rref(rep.hull_basis).pivots)
    extra = [i for i, p in enumerate(C.pivots) if p not in lead]
    G0 = rep.hull_basis.vstack(MatrixFq._raw(C.field, C.G.data[extra]))
    return G0, rep.h


def _message_chunks(field: FieldSpec, k: int, chunk_bits: int = 16) -> Iterator[np.ndarray]:
    q = field.q
    total = q**k
    step = max(1, min(total, 1 << chunk_bits))
    powers = np.array([q**i for i in range(k)], dtype=np.int64)
    for start in range(0, total, step):
        idx = np.arange(start, min(total, start + step), dtype=np.int64)
        yield (idx[:, None] // powers[None, :]) % q


def codeword_chunks(C: LinearCode, budget: int = DEFAULT_CODEWORD_BUDGET) -> Iterator[np.ndarray]:
    """Yield all q^k codewords as blocks of rows, messages in base-q order."""
    F = C.field
    total = F.q**C.k
    if total > budget:
        raise BudgetExceeded(f"{total} codewords exceed the budget of {budget}")
    G = C.G.data
    for msgs in _message_chunks(F, C.k):
        cw = np.zeros((msgs.shape[0], C.n), dtype=np.int64)
        for i in range(C.k):
            cw = F.add(cw, F.mul(msgs[:, i, None], G[None, i, :]))
        yield cw


def weight_distribution(C: LinearCode, budget: int = DEFAULT_CODEWORD_BUDGET) -> list[int]:
    """A_0 .. A_n by full enumeration."""
    counts = np.zeros(C.n + 1, dtype=np.int64)
    for cw in codeword_chunks(C, budget):
        counts += np.bincount((cw != 0).sum(axis=1), minlength=C.n + 1)
    return [int(c) for c in counts]


def min_distance(C: LinearCode, budget: int = DEFAULT_CODEWORD_BUDGET) -> int:
    if C.k == 0:
        raise ZeroCode("the zero code has no minimum distance")
    best = C.n
    for cw in codeword_chunks(C, budget):
        w = (cw != 0).sum(axis=1)
        w = w[w > 0]
        if w.size:
            best = min(best, int(w.min()))
    return best


def star_scale(x: Sequence[int], C: LinearCode) -> LinearCode:
    """The code x * C = {(x_1 c_1, ..., x_n c_n)}."""
    x = np.asarray(x, dtype=np.int64)
    if x.shape != (C.n,):
        raise DimensionMismatch(f"scaling vector of length {x.size} for n = {C.n}")
    if np.any(x == 0):
        raise ZeroEntry("scaling vector has a zero entry")
    scaled = MatrixFq._raw(C.field, C.field.mul(C.G.data, x[None, :]))
    return _from_basis(C.field, scaled, C.n)


@dataclass(frozen=True)
class MonomialTransform:
    """A monomial map acting by (T v)_i = diag[i] * v[perm[i]].

    ``perm`` is 0-based.  Composition ``a.compose(b)`` applies b first.
    """

    perm: tuple[int, ...]
    diag: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"{self.perm} is not a permutation")
        if len(self.diag) != len(self.perm):
            raise DimensionMismatch("perm and diag lengths differ")
        if any(d == 0 for d in self.diag):
            raise ZeroEntry("monomial diagonal has a zero entry")

    @classmethod
    def identity(cls, n: int) -> MonomialTransform:
        return cls(tuple(range(n)), (1,) * n)

    @property
    def n(self) -> int:
        return len(self.perm)

    def is_identity(self) -> bool:
        return self == MonomialTransform.identity(self.n)

    def apply_vectors(self, field: FieldSpec, V: np.ndarray) -> np.ndarray:
        V = np.asarray(V, dtype=np.int64)
        return field.mul(V[..., list(self.perm)], np.array(self.diag, dtype=np.int64))

    def compose(self, first: MonomialTransform, field: FieldSpec) -> MonomialTransform:
        """Return self after first."""
        perm = tuple(first.perm[j] for j in self.perm)
        diag = tuple(int(field.mul(d, first.diag[j])) for d, j in zip(self.diag, self.perm))
        return MonomialTransform(perm, diag)

    def inverse(self, field: FieldSpec) -> MonomialTransform:
        n = self.n
        perm = [0] * n
        diag = [0] * n
        for i, j in enumerate(self.perm):
            perm[j] = i
            diag[j] = int(field.inv(self.diag[i]))
        return MonomialTransform(tuple(perm), tuple(diag))


def apply_monomial(T: MonomialTransform, C: LinearCode) -> LinearCode:
    if T.n != C.n:
        raise DimensionMismatch(f"transform on {T.n} coordinates, code length {C.n}")
    moved = MatrixFq._raw(C.field, T.apply_vectors(C.field, C.G.data))
    return _from_basis(C.field, moved, C.n)


def systematic_form(C: LinearCode) -> tuple[MatrixFq, tuple[int, ...]]:
    """Column permutation putting the RREF pivots first, and the matrix B.

    After reordering columns as ``perm`` (pivot columns, then the rest, both
    in increasing order) the code has generator (I_k | B).
    """
    pivots = list(C.pivots)
    rest = [c for c in range(C.n) if c not in set(pivots)]
    perm = tuple(pivots + rest)
    B = MatrixFq._raw(C.field, C.G.data[:, rest].copy())
    return B, perm


def random_generator(field: FieldSpec, n: int, k: int, rng: np.random.Generator) -> MatrixFq:
    """Uniformly random k x n matrix of rank k (rejection sampling)."""
    while True:
        M = MatrixFq._raw(field, rng.integers(0, field.q, size=(k, n)))
        if rank(M) == k:
            return M


def random_invertible(field: FieldSpec, k: int, rng: np.random.Generator) -> MatrixFq:
    return random_generator(field, k, k, rng)


def random_monomial(field: FieldSpec, n: int, rng: np.random.Generator) -> MonomialTransform:
    perm = tuple(int(i) for i in rng.permutation(n))
    diag = tuple(int(d) for d in rng.integers(1, field.q, size=n))
    return MonomialTransform(perm, diag)

