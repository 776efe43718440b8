import itertools

import numpy as np
import pytest

from lcdhull.errors import DimensionMismatch, NotSquare
from lcdhull.gf import field_make, field_of_order
from lcdhull.matfq import MatrixFq, det, mat_mul, nullspace, rank, rref, transpose

QS = [2, 3, 4, 5, 7, 8, 9, 16, 25]


def cofactor_det(F, rows):
    n = len(rows)
    if n == 0:
        return 1
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = int(F.mul(rows[0][j], cofactor_det(F, minor)))
        total = int(F.add(total, term if j % 2 == 0 else F.neg(term)))
    return total


def random_matrix(F, r, c, rng):
    return MatrixFq(F, rng.integers(0, F.q, size=(r, c)))


def test_rref_examples():
    F2 = field_make(2)
    I3 = MatrixFq.identity(F2, 3)
    res = rref(I3)
    assert res.R == I3 and res.rank == 3 and res.pivots == (0, 1, 2) and res.U == I3
    res = rref(MatrixFq(F2, [[1, 1], [1, 1]]))
    assert res.rank == 1 and res.R.tolist() == [[1, 1], [0, 0]]
    IJ = MatrixFq(F2, [[1, 0, 0, 1, 1, 1], [0, 1, 0, 1, 1, 1], [0, 0, 1, 1, 1, 1]])
    assert rref(IJ).rank == 3


def test_det_examples():
    F2 = field_make(2)
    assert det(MatrixFq.identity(F2, 4)) == 1
    assert det(MatrixFq(F2, [[0, 1], [1, 0]])) == 1
    IpJ = MatrixFq(F2, [[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    assert det(IpJ) == 0 == cofactor_det(F2, IpJ.tolist())
    with pytest.raises(NotSquare):
        det(MatrixFq(F2, [[1, 0]]))


def test_nullspace_examples():
    F2 = field_make(2)
    assert nullspace(MatrixFq.identity(F2, 4)).rows == 0
    assert nullspace(MatrixFq(F2, [[1, 1]])).tolist() == [[1, 1]]
    G1 = MatrixFq(F2, [[1, 0, 0, 1, 0, 0], [0, 1, 0, 0, 1, 0], [0, 0, 1, 0, 0, 1]])
    K = nullspace(G1)
    assert K.rows == 3
    assert rref(K).R == rref(G1).R


def test_mul_transpose_examples():
    F2 = field_make(2)
    G2 = MatrixFq(F2, [[1, 0, 0, 1, 1, 1], [0, 1, 0, 1, 1, 1], [0, 0, 1, 1, 1, 1]])
    assert mat_mul(G2, G2.T).tolist() == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
    A = MatrixFq(F2, [[1, 0, 1], [1, 1, 0]])
    assert mat_mul(A, MatrixFq.identity(F2, 3)) == A
    assert transpose(transpose(A)) == A
    with pytest.raises(DimensionMismatch):
        mat_mul(A, A)


def test_matrix_is_immutable():
    M = MatrixFq(field_make(3), [[1, 2]])
    with pytest.raises(ValueError):
        M.data[0, 0] = 0


@pytest.mark.parametrize("q", QS)
def test_rref_properties(q, rng):
    F = field_of_order(q)
    for _ in range(60):
        r, c = rng.integers(0, 9, size=2)
        M = random_matrix(F, int(r), int(c), rng)
        res = rref(M)
        assert mat_mul(res.U, M) == res.R
        assert rank(res.U) == M.rows
        assert rref(res.R).R == res.R
        assert res.rank == rank(transpose(M))
        # pivots: leading ones, zero elsewhere in the column
        for i, p in enumerate(res.pivots):
            assert res.R[i, p] == 1 and np.count_nonzero(res.R[:, p]) == 1
            assert not res.R[i, :p].any()
        assert not res.R.data[res.rank :].any()


@pytest.mark.parametrize("q", QS)
def test_rank_symmetry_many(q, rng):
    F = field_of_order(q)
    for _ in range(500 // len(QS) + 1):
        r, c = rng.integers(1, 9, size=2)
        M = random_matrix(F, int(r), int(c), rng)
        assert rank(M) == rank(M.T)


@pytest.mark.parametrize("q", QS)
def test_nullspace_properties(q, rng):
    F = field_of_order(q)
    for _ in range(40):
        r, c = rng.integers(1, 8, size=2)
        M = random_matrix(F, int(r), int(c), rng)
        K = nullspace(M)
        assert K.rows + rank(M) == M.cols
        if K.rows:
            assert not mat_mul(M, K.T).data.any()
            assert rank(K) == K.rows


def test_nullspace_matches_brute_force_kernel():
    F = field_of_order(3)
    rng = np.random.default_rng(0)
    for _ in range(30):
        M = random_matrix(F, 2, 4, rng)
        kernel = {
            v for v in itertools.product(range(3), repeat=4)
            if not mat_mul(M, MatrixFq(F, [list(v)]).T).data.any()
        }
        assert len(kernel) == 3 ** nullspace(M).rows


@pytest.mark.parametrize("q", QS)
def test_det_against_cofactor_and_multiplicativity(q, rng):
    F = field_of_order(q)
    for _ in range(40):
        n = int(rng.integers(1, 6))
        A, B = random_matrix(F, n, n, rng), random_matrix(F, n, n, rng)
        assert det(A) == cofactor_det(F, A.tolist())
        assert det(mat_mul(A, B)) == F.mul(det(A), det(B))
        assert (det(A) == 0) == (rank(A) < n)
