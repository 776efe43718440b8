"""Finite field arithmetic over GF(p^m).

Elements are encoded as integers in [0, q-1]: the element
c_0 + c_1*a + ... + c_{m-1}*a^{m-1}, with a a root of the modulus, is stored
as c_0 + c_1*p + ... + c_{m-1}*p^{m-1}.  Under this encoding 0 and 1 are the
additive and multiplicative identities and the prime subfield GF(p) is the
range [0, p-1].

Moduli are coefficient lists, low degree first: x^2 + x + 1 <-> [1, 1, 1].

All FieldSpec arithmetic methods accept Python ints or numpy integer arrays
and broadcast like numpy ufuncs.
"""

from __future__ import annotations

import functools
import math
from typing import Sequence

import numpy as np

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

# Smallest monic irreducible of each degree m >= 2 with p^m <= 1024, where
# "smallest" orders by the encoding of the non-leading coefficients.
_MODULUS_TABLE: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 1, 0, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 1, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 10): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 1, 0, 0, 0, 0, 1),
    (5, 2): (2, 0, 1),
    (5, 3): (1, 1, 0, 1),
    (5, 4): (2, 0, 0, 0, 1),
    (7, 2): (1, 0, 1),
    (7, 3): (2, 0, 0, 1),
    (11, 2): (1, 0, 1),
    (13, 2): (2, 0, 1),
    (17, 2): (3, 0, 1),
    (19, 2): (1, 0, 1),
    (23, 2): (1, 0, 1),
    (29, 2): (2, 0, 1),
    (31, 2): (1, 0, 1),
}

TABLE_LIMIT = 1024
MAX_FIELD_SIZE = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, m) with q = p^m, or None if q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, math.isqrt(q) + 1):
        if q % p == 0:
            m = 0
            while q % p == 0:
                q //= p
                m += 1
            return (p, m) if q == 1 and is_prime(p) else None
    return q, 1


# -- polynomials over GF(p) as low-first coefficient lists ---------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], f: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df:
        c = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        _trim(a)
    return a


def _poly_mulmod(a: list[int], b: list[int], f: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _poly_mod(out, f, p)


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Test a monic polynomial over GF(p) for irreducibility.

    A reducible polynomial of degree m has a factor of degree d <= m/2, and
    every irreducible of degree d divides x^(p^d) - x.  So it is enough to
    check gcd(x^(p^i) - x, poly) == 1 for i = 1 .. m//2.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    f = [int(c) % p for c in poly]
    if len(f) < 2 or f[-1] != 1:
        raise NotMonic(f"polynomial {list(poly)} is not monic of degree >= 1")
    m = len(f) - 1
    x = [0, 1]
    xp = _poly_mod(list(x), f, p)
    for _ in range(1, m // 2 + 1):
        # xp <- xp^p mod f by square-and-multiply
        base, e, acc = xp, p, [1]
        while e:
            if e & 1:
                acc = _poly_mulmod(acc, base, f, p)
            base = _poly_mulmod(base, base, f, p)
            e >>= 1
        xp = acc
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        if len(_poly_gcd(f, _trim(diff), p)) > 1:
            return False
    return True


class FieldSpec:
    """The finite field GF(p^m) with an explicit irreducible modulus.

    Instances are immutable; obtain them through :func:`field_make`, which
    caches one instance per (p, m, modulus).
    """

    __slots__ = (
        "p", "m", "modulus", "q", "_pows", "_digits", "_exp", "_log",
        "_add", "_mul", "_neg", "_inv", "_primitive", "__weakref__",
    )

    def __init__(self, p: int, m: int, modulus: tuple[int, ...] | None):
        self.p = p
        self.m = m
        self.modulus = modulus
        self.q = p**m
        self._pows = np.array([p**i for i in range(m)], dtype=np.int64)
        elems = np.arange(self.q, dtype=np.int64)
        self._digits = (elems[:, None] // self._pows[None, :]) % p
        self._neg = self._from_digits((-self._digits) % p)
        self._build_log_tables()
        if self.q <= TABLE_LIMIT:
            self._add = self._table_add()
            self._mul = self.mul_log(elems[:, None], elems[None, :])
        else:
            self._add = None
            self._mul = None
        inv = np.zeros(self.q, dtype=np.int64)
        inv[1:] = self._exp[(-self._log[1:]) % (self.q - 1)]
        self._inv = inv

    # -- construction helpers ------------------------------------------------
    def _from_digits(self, d: np.ndarray) -> np.ndarray:
        return (d * self._pows).sum(axis=-1)

    def mul_direct(self, a: int, b: int) -> int:
        """Multiply two elements by polynomial product and reduction."""
        if self.m == 1:
            return (a * b) % self.p
        da = [int(c) for c in self._digits[a]]
        db = [int(c) for c in self._digits[b]]
        r = _poly_mulmod(_trim(da), _trim(db), self.modulus, self.p)
        return sum(c * self.p**i for i, c in enumerate(r))

    def _build_log_tables(self) -> None:
        q = self.q
        order = q - 1
        prime_factors = [d for d in range(2, order + 1) if order % d == 0 and is_prime(d)]
        for g in range(2 if q > 2 else 1, q):
            if all(self._pow_direct(g, order // r) != 1 for r in prime_factors):
                break
        else:  # pragma: no cover - every finite field has a primitive element
            raise ReducibleModulus("no primitive element found")
        exp = np.zeros(2 * order, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = self.mul_direct(x, g)
        exp[order:] = exp[:order]
        self._exp, self._log, self._primitive = exp, log, g

    def _pow_direct(self, a: int, e: int) -> int:
        acc = 1
        while e:
            if e & 1:
                acc = self.mul_direct(acc, a)
            a = self.mul_direct(a, a)
            e >>= 1
        return acc

    def _table_add(self) -> np.ndarray:
        q = self.q
        elems = np.arange(q, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor.outer(elems, elems)
        if self.m == 1:
            return np.add.outer(elems, elems) % self.p
        out = np.zeros((q, q), dtype=np.int64)
        for i in range(self.m):
            d = self._digits[:, i]
            out += ((d[:, None] + d[None, :]) % self.p) * self._pows[i]
        return out

    # -- element arithmetic (scalars or arrays) ------------------------------
    @property
    def primitive(self) -> int:
        return self._primitive

    @property
    def is_square(self) -> bool:
        return self.m % 2 == 0

    @property
    def sqrt_q(self) -> int:
        if not self.is_square:
            raise NotSquareField(f"GF({self.q}) does not have square order")
        return self.p ** (self.m // 2)

    def add(self, a, b):
        if self._add is not None:
            return self._add[a, b]
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.m == 1:
            return (np.asarray(a) + b) % self.p
        return self._from_digits((self._digits[a] + self._digits[b]) % self.p)

    def neg(self, a):
        return self._neg[a]

    def sub(self, a, b):
        return self.add(a, self._neg[b])

    def mul_log(self, a, b):
        a, b = np.asarray(a), np.asarray(b)
        prod = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, prod)

    def mul(self, a, b):
        if self._mul is not None:
            return self._mul[a, b]
        return self.mul_log(a, b)

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise DivisionByZero(f"zero has no inverse in GF({self.q})")
        return self._inv[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        a = np.asarray(a)
        if e == 0:
            return np.ones_like(a)
        e_red = e % (self.q - 1)
        if e < 0 and np.any(a == 0):
            raise DivisionByZero(f"zero has no inverse in GF({self.q})")
        res = self._exp[(self._log[a] * e_red) % (self.q - 1)]
        return np.where(a == 0, 0, res)

    def conj(self, a):
        """Hermitian conjugation a -> a^sqrt(q)."""
        return self.pow(a, self.sqrt_q)

    def nonzero_elements(self) -> list[int]:
        return list(range(1, self.q))

    def element(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    def digits(self, a: int) -> list[int]:
        return [int(c) for c in self._digits[a]]

    # -- identity ------------------------------------------------------------
    def _key(self):
        return (self.p, self.m, self.modulus)

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.q})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"


def field_make(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Build and validate GF(p^m).

    When ``modulus`` is omitted for m >= 2 the built-in table is used; it
    covers every prime power up to 1024.
    """
    key = None if modulus is None else tuple(int(c) for c in modulus)
    return _field_make(int(p), int(m), key)


@functools.lru_cache(maxsize=None)
def _field_make(p: int, m: int, modulus: tuple[int, ...] | None) -> FieldSpec:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise DegreeMismatch(f"extension degree must be >= 1, got {m}")
    if p**m > MAX_FIELD_SIZE:
        raise NoTableEntry(f"GF({p}^{m}) exceeds the supported size {MAX_FIELD_SIZE}")
    if m == 1:
        if modulus is not None and len(modulus) != 2:
            raise DegreeMismatch("a prime field modulus must have degree 1")
        return FieldSpec(p, 1, None)
    if modulus is None:
        if (p, m) not in _MODULUS_TABLE:
            raise NoTableEntry(f"no built-in modulus for GF({p}^{m}); supply one")
        modulus = _MODULUS_TABLE[(p, m)]
    if any(not 0 <= c < p for c in modulus):
        raise ReducibleModulus(f"modulus coefficients must lie in [0, {p - 1}]")
    if len(modulus) - 1 != m:
        raise DegreeMismatch(f"modulus {list(modulus)} does not have degree {m}")
    if not is_irreducible(modulus, p):
        raise ReducibleModulus(f"{list(modulus)} is reducible over GF({p})")
    return FieldSpec(p, m, modulus)


def field_of_order(q: int, modulus: Sequence[int] | None = None) -> FieldSpec:
    pm = prime_power(q)
    if pm is None:
        raise NotPrime(f"{q} is not a prime power")
    return field_make(pm[0], pm[1], modulus)


def _validate_table() -> None:
    for (p, m), f in _MODULUS_TABLE.items():
        if len(f) != m + 1 or not is_irreducible(f, p):
            raise ReducibleModulus(f"built-in modulus for GF({p}^{m}) is invalid")


_validate_table()


def subfield_embedding(small: FieldSpec, big: FieldSpec) -> np.ndarray:
    """Return the encodings in ``big`` of every element of ``small``.

    Requires big.p == small.p and small.m | big.m.  The generator of
    ``small`` is sent to the root of its modulus in ``big`` with the smallest
    encoding, which makes the map deterministic.
    """
    if small.p != big.p or big.m % small.m:
        raise FieldMismatch(f"{small} does not embed in {big}")
    if small.m == 1:
        return np.arange(small.q, dtype=np.int64)
    coeffs = small.modulus
    for beta in range(big.q):
        acc = 0
        for c in reversed(coeffs):
            acc = int(big.add(big.mul(acc, beta), c))
        if acc == 0:
            break
    else:  # pragma: no cover
        raise FieldMismatch(f"modulus of {small} has no root in {big}")
    powers = [1]
    for _ in range(small.m - 1):
        powers.append(int(big.mul(powers[-1], beta)))
    table = np.zeros(small.q, dtype=np.int64)
    for v in range(small.q):
        acc = 0
        for c, bp in zip(small.digits(v), powers):
            acc = int(big.add(acc, big.mul(c, bp)))
        table[v] = acc
    return table


class FieldElement:
    """An element of a FieldSpec with the usual operators."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        value = int(value)
        if not 0 <= value < field.q:
            raise ValueError(f"{value} is not an element of {field}")
        self.field = field
        self.value = value

    def _check(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, int):
            return FieldElement(self.field, other % self.field.q).value
        return NotImplemented

    def _wrap(self, v) -> FieldElement:
        return FieldElement(self.field, int(v))

    def __add__(self, other):
        b = self._check(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.add(self.value, b))

    def __sub__(self, other):
        b = self._check(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(self.value, b))

    def __mul__(self, other):
        b = self._check(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.mul(self.value, b))

    def __truediv__(self, other):
        b = self._check(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(self.value, b))

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, e))

    def inverse(self) -> FieldElement:
        return self._wrap(self.field.inv(self.value))

    def conjugate(self) -> FieldElement:
        return self._wrap(self.field.conj(self.value))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.field!r}({self.value})"


def field_arith(op: str, a: FieldElement, b: FieldElement) -> FieldElement:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    ops = {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}
    if op not in ops:
        raise ValueError(f"unknown field operation {op!r}")
    return ops[op](b)


def conjugate(a: FieldElement) -> FieldElement:
    return a.conjugate()
