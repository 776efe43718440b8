"""The two binary [6,3] codes (I3|I3) and (I3|J3) and their known invariants.

They share a weight enumerator but have hulls of dimension 3 and 1, so the
plain weight enumerator cannot see the hull while the extended one can.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from lcdhull.code import LinearCode, code_make, hull
from lcdhull.enumerators import (
    XYT,
    binary_hull_invariant,
    ext_weight_enumerator,
    reduced_ext_enumerator,
    weight_enumerator,
)
from lcdhull.gf import field_make
from lcdhull.poly import MultiPoly

G1 = [
    [1, 0, 0, 1, 0, 0],
    [0, 1, 0, 0, 1, 0],
    [0, 0, 1, 0, 0, 1],
]
G2 = [
    [1, 0, 0, 1, 1, 1],
    [0, 1, 0, 1, 1, 1],
    [0, 0, 1, 1, 1, 1],
]

WEIGHT_ENUMERATOR = "X^6 + 3*X^4*Y^2 + 3*X^2*Y^4 + Y^6"


def c1() -> LinearCode:
    return code_make(field_make(2), G1)


def c2() -> LinearCode:
    return code_make(field_make(2), G2)


def reduced_c1() -> MultiPoly:
    X, Y, T = (MultiPoly.var(v, XYT) for v in XYT)
    return 3 * X**4 * Y**2 + 3 * (T - 1) * X**2 * Y**4 + (T - 1) ** 2 * Y**6


def reduced_c2() -> MultiPoly:
    X, Y, T = (MultiPoly.var(v, XYT) for v in XYT)
    return (
        3 * X**4 * Y**2
        + (T - 2) * X**3 * Y**3
        + 3 * X**2 * Y**4
        + 3 * (T - 2) * X * Y**5
        + (T**2 - 3 * T + 3) * Y**6
    )


@dataclass
class Check:
    name: str
    expected: str
    observed: str
    passed: bool


def _check(name: str, expected, compute: Callable[[], object]) -> Check:
    try:
        got = compute()
    except Exception as exc:  # reported as a failed row
        return Check(name, str(expected), f"error: {exc!r}", False)
    return Check(name, str(expected), str(got), got == expected)


def golden_checks() -> list[Check]:
    C1, C2 = c1(), c2()
    W = MultiPoly.parse(WEIGHT_ENUMERATOR, ("X", "Y"))
    return [
        _check("dim H(C1)", 3, lambda: hull(C1).h),
        _check("H(C2) = <111111>", [[1] * 6], lambda: hull(C2).hull_basis.tolist()),
        _check("W_C1 = W_C2", W, lambda: weight_enumerator(C1) if weight_enumerator(C1) == weight_enumerator(C2) else "differ"),
        _check("reduced W_C1(X,Y,T)", reduced_c1(), lambda: reduced_ext_enumerator(ext_weight_enumerator(C1))),
        _check("reduced W_C2(X,Y,T)", reduced_c2(), lambda: reduced_ext_enumerator(ext_weight_enumerator(C2))),
        _check("|W_C1(1,-1,4)|, |W_C2(1,-1,4)|", (64, 16),
               lambda: (abs(binary_hull_invariant(C1).value), abs(binary_hull_invariant(C2).value))),
    ]
