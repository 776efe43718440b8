"""Dense matrices over a finite field and exact elimination routines."""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

import numpy as np

from lcdhull.errors import DimensionMismatch, FieldMismatch, NotSquare
from lcdhull.gf import FieldSpec


class MatrixFq:
    """Immutable rows x cols matrix with entries encoded as field integers."""

    __slots__ = ("field", "data")

    def __init__(self, field: FieldSpec, data):
        arr = np.array(data, dtype=np.int64)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2:
            raise DimensionMismatch(f"expected a 2-d array, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise FieldMismatch(f"entries outside [0, {field.q - 1}]")
        arr.setflags(write=False)
        self.field = field
        self.data = arr

    @classmethod
    def _raw(cls, field: FieldSpec, arr: np.ndarray) -> MatrixFq:
        # trusted internal constructor: no range check, no copy
        out = cls.__new__(cls)
        arr = np.asarray(arr, dtype=np.int64)
        arr.setflags(write=False)
        out.field = field
        out.data = arr
        return out

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[int]], cols: int | None = None) -> MatrixFq:
        if len(rows) == 0:
            return cls._raw(field, np.zeros((0, cols or 0), dtype=np.int64))
        return cls(field, [list(map(int, r)) for r in rows])

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> MatrixFq:
        return cls._raw(field, np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> MatrixFq:
        return cls._raw(field, np.zeros((rows, cols), dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def T(self) -> MatrixFq:
        return transpose(self)

    def conj(self) -> MatrixFq:
        return MatrixFq._raw(self.field, self.field.conj(self.data))

    def __matmul__(self, other: MatrixFq) -> MatrixFq:
        return mat_mul(self, other)

    def __add__(self, other: MatrixFq) -> MatrixFq:
        _same_field(self, other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return MatrixFq._raw(self.field, self.field.add(self.data, other.data))

    def __getitem__(self, idx):
        return self.data[idx]

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(int(v) for v in self.data[i])

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()

    def hstack(self, other: MatrixFq) -> MatrixFq:
        _same_field(self, other)
        return MatrixFq._raw(self.field, np.hstack([self.data, other.data]))

    def vstack(self, other: MatrixFq) -> MatrixFq:
        _same_field(self, other)
        if self.cols != other.cols:
            raise DimensionMismatch(f"cannot stack {self.shape} over {other.shape}")
        return MatrixFq._raw(self.field, np.vstack([self.data, other.data]))

    def columns(self, idx: Iterable[int]) -> MatrixFq:
        return MatrixFq._raw(self.field, self.data[:, list(idx)])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatrixFq)
            and self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self.data, other.data))
        )

    def __hash__(self) -> int:
        return hash((self.field, self.shape, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"MatrixFq({self.field!r}, {self.tolist()})"


def _same_field(a: MatrixFq, b: MatrixFq) -> None:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")


def transpose(a: MatrixFq) -> MatrixFq:
    return MatrixFq._raw(a.field, a.data.T.copy())


def mat_mul(a: MatrixFq, b: MatrixFq) -> MatrixFq:
    _same_field(a, b)
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    F = a.field
    acc = np.zeros((a.rows, b.cols), dtype=np.int64)
    for l in range(a.cols):
        acc = F.add(acc, F.mul(a.data[:, l, None], b.data[None, l, :]))
    return MatrixFq._raw(F, acc)


class RrefResult(NamedTuple):
    R: MatrixFq
    rank: int
    pivots: tuple[int, ...]
    U: MatrixFq


def _eliminate(F: FieldSpec, work: np.ndarray, ncols: int) -> tuple[int, list[int]]:
    """Reduce ``work`` in place to RREF on its first ``ncols`` columns."""
    rows = work.shape[0]
    r = 0
    pivots: list[int] = []
    for c in range(ncols):
        if r == rows:
            break
        nz = np.flatnonzero(work[r:, c])
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            work[[r, pr]] = work[[pr, r]]
        piv = int(work[r, c])
        if piv != 1:
            work[r] = F.mul(work[r], int(F.inv(piv)))
        col = work[:, c].copy()
        col[r] = 0
        others = np.flatnonzero(col)
        if others.size:
            work[others] = F.sub(work[others], F.mul(col[others, None], work[r][None, :]))
        pivots.append(c)
        r += 1
    return r, pivots


def rref(m: MatrixFq) -> RrefResult:
    """Reduced row echelon form R = U*M with deterministic pivoting.

    Pivot columns are scanned left to right; within a column the first
    nonzero row at or below the current pivot row is used.
    """
    F = m.field
    work = np.hstack([m.data, np.eye(m.rows, dtype=np.int64)])
    rank, pivots = _eliminate(F, work, m.cols)
    return RrefResult(
        MatrixFq._raw(F, work[:, : m.cols].copy()),
        rank,
        tuple(pivots),
        MatrixFq._raw(F, work[:, m.cols :].copy()),
    )


def rank(m: MatrixFq) -> int:
    work = m.data.copy()
    r, _ = _eliminate(m.field, work, m.cols)
    return r


def det(m: MatrixFq) -> int:
    """Determinant by Gaussian elimination, returned as a field encoding."""
    if m.rows != m.cols:
        raise NotSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    F = m.field
    n = m.rows
    work = m.data.copy()
    result = 1
    for c in range(n):
        nz = np.flatnonzero(work[c:, c])
        if nz.size == 0:
            return 0
        pr = c + int(nz[0])
        if pr != c:
            work[[c, pr]] = work[[pr, c]]
            result = int(F.neg(result))
        piv = int(work[c, c])
        result = int(F.mul(result, piv))
        below = work[c + 1 :, c]
        idx = np.flatnonzero(below)
        if idx.size:
            factors = F.mul(below[idx], int(F.inv(piv)))
            rows = c + 1 + idx
            work[rows] = F.sub(work[rows], F.mul(factors[:, None], work[c][None, :]))
    return result


def nullspace(m: MatrixFq) -> MatrixFq:
    """Basis of {x : M x^T = 0}, one row per free column of rref(M).

    The basis vector for free column f has a 1 in position f, zeros in the
    other free positions, and -R[i, f] in the i-th pivot position.
    """
    F = m.field
    work = m.data.copy()
    r, pivots = _eliminate(F, work, m.cols)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = np.zeros((len(free), m.cols), dtype=np.int64)
    for b, f in enumerate(free):
        basis[b, f] = 1
        if r:
            basis[b, pivots] = F.neg(work[:r, f])
    return MatrixFq._raw(F, basis)
