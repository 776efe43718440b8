"""Monomial transforms that turn a code into an LCD or Hermitian LCD code.

Bring C to systematic form (I_k | B) and rescale the information columns
by x in (F_q^*)^k.  The scaled code is LCD iff

    f(x) = det(D(x_1^2, ..., x_k^2) + B B^T) != 0,

and Hermitian LCD iff g(x) = det(D(x_1^(s+1), ..., x_k^(s+1)) + B conj(B)^T)
!= 0 with s = sqrt(q).  f and g are nonzero polynomials of degree 2 (resp.
s + 1) in each variable, so a nonvanishing point exists on any grid S^k with
|S| = 3 (resp. s + 2) nonzero elements once 2 <= q - 2 (resp. s + 1 <= q - 2).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from lcdhull.code import (
    LinearCode,
    MonomialTransform,
    apply_monomial,
    hull,
    is_hermitian_lcd,
    is_lcd,
    systematic_form,
)
from lcdhull.errors import (
    FieldTooSmall,
    GridExhausted,
    InternalInconsistency,
    NotSquareField,
    NoWitnessFound,
    ZeroEntry,
)
from lcdhull.gf import FieldSpec
from lcdhull.matfq import MatrixFq, det, mat_mul

DEFAULT_SEED = 20170607
DEFAULT_RETRIES = 4096


@dataclass(frozen=True)
class LcdizeResult:
    witness_x: tuple[int, ...]
    transform: MonomialTransform
    result: LinearCode
    strategy: str
    evaluations: int


def _check_x(x: Sequence[int], k: int) -> np.ndarray:
    x = np.asarray(x, dtype=np.int64)
    if x.shape != (k,):
        raise ValueError(f"expected {k} scalars, got {x.size}")
    if np.any(x == 0):
        raise ZeroEntry("witness candidate has a zero entry")
    return x


def _diag_plus(F: FieldSpec, d: np.ndarray, M: MatrixFq) -> MatrixFq:
    data = M.data.copy()
    idx = np.arange(len(d))
    data[idx, idx] = F.add(data[idx, idx], d)
    return MatrixFq._raw(F, data)


def gram_det_poly_eval(B: MatrixFq, x: Sequence[int], BBt: MatrixFq | None = None) -> int:
    """f(x) = det(D(x^2) + B B^T)."""
    F = B.field
    x = _check_x(x, B.rows)
    if BBt is None:
        BBt = mat_mul(B, B.T)
    return det(_diag_plus(F, F.mul(x, x), BBt))


def hermitian_gram_det_poly_eval(B: MatrixFq, x: Sequence[int], BBt: MatrixFq | None = None) -> int:
    """g(x) = det(D(x^(sqrt(q)+1)) + B conj(B)^T)."""
    F = B.field
    if not F.is_square:
        raise NotSquareField(f"GF({F.q}) does not have square order")
    x = _check_x(x, B.rows)
    if BBt is None:
        BBt = mat_mul(B, B.conj().T)
    return det(_diag_plus(F, F.pow(x, F.sqrt_q + 1), BBt))


def _search(
    evaluate: Callable[[tuple[int, ...]], int],
    k: int,
    F: FieldSpec,
    grid: list[int],
    strategy: str,
    seed: int,
    retries: int,
) -> tuple[tuple[int, ...] | None, str, int]:
    evals = 0
    if strategy == "random":
        rng = random.Random(seed)
        for _ in range(retries):
            x = tuple(rng.randrange(1, F.q) for _ in range(k))
            evals += 1
            if evaluate(x):
                return x, "random", evals
    elif strategy != "grid":
        raise ValueError(f"unknown strategy {strategy!r}")
    for x in itertools.product(grid, repeat=k):
        evals += 1
        if evaluate(x):
            return x, "grid", evals
    return None, "grid", evals


def _transform(C: LinearCode, perm: tuple[int, ...], x: tuple[int, ...]) -> MonomialTransform:
    # position i of the output reads column perm[i]; the first k are scaled by x
    diag = tuple(x) + (1,) * (C.n - C.k)
    return MonomialTransform(perm, diag)


def _identity(C: LinearCode) -> LcdizeResult:
    return LcdizeResult((1,) * C.k, MonomialTransform.identity(C.n), C, "identity", 0)


def lcdize(
    C: LinearCode,
    strategy: str = "random",
    seed: int = DEFAULT_SEED,
    retries: int = DEFAULT_RETRIES,
) -> LcdizeResult:
    """Find a monomial transform T with T(C) an LCD code (q >= 4).

    ``strategy="random"`` samples x uniformly from (F_q^*)^k with a seeded
    generator and falls back to the grid after ``retries`` misses;
    ``strategy="grid"`` scans S^k in lexicographic order, S being the three
    smallest nonzero encodings.
    """
    F = C.field
    if F.q < 4:
        raise FieldTooSmall(f"LCD transforms need q >= 4, got {F.q}")
    if is_lcd(C):
        return _identity(C)
    B, perm = systematic_form(C)
    BBt = mat_mul(B, B.T)
    x, used, evals = _search(
        lambda x: gram_det_poly_eval(B, x, BBt), C.k, F, [1, 2, 3], strategy, seed, retries
    )
    if x is None:
        raise GridExhausted(f"no nonvanishing point of f on the grid over GF({F.q})")
    T = _transform(C, perm, x)
    out = apply_monomial(T, C)
    if not is_lcd(out) or hull(out).h != 0:
        raise InternalInconsistency("transformed code failed LCD verification")
    return LcdizeResult(x, T, out, used, evals)


def hlcdize(
    C: LinearCode,
    strategy: str = "random",
    seed: int = DEFAULT_SEED,
    retries: int = DEFAULT_RETRIES,
) -> LcdizeResult:
    """Find a monomial transform T with T(C) Hermitian LCD (square q > 4).

    For q = 4 every nonzero x has x^3 = 1, so scaling cannot change the
    Hermitian Gram matrix; the grid then covers all of (F_4^*)^k and a miss
    raises NoWitnessFound.
    """
    F = C.field
    if not F.is_square:
        raise NotSquareField(f"Hermitian LCD needs square q, got {F.q}")
    if is_hermitian_lcd(C):
        return _identity(C)
    B, perm = systematic_form(C)
    BBt = mat_mul(B, B.conj().T)
    grid = list(range(1, min(F.q, F.sqrt_q + 3)))
    if F.q == 4:
        # the grid is all of (F_4^*)^k; sampling adds nothing
        strategy = "grid"
    x, used, evals = _search(
        lambda x: hermitian_gram_det_poly_eval(B, x, BBt), C.k, F, grid, strategy, seed, retries
    )
    if x is None:
        if F.q == 4:
            raise NoWitnessFound(f"no Hermitian LCD scaling among all {evals} grid points over GF(4)")
        raise GridExhausted(f"no nonvanishing point of g on the grid over GF({F.q})")
    T = _transform(C, perm, x)
    out = apply_monomial(T, C)
    if not is_hermitian_lcd(out) or hull(out, "hermitian").h != 0:
        raise InternalInconsistency("transformed code failed Hermitian LCD verification")
    return LcdizeResult(x, T, out, used, evals)
