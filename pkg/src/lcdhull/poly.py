"""Exact multivariate integer polynomials and Eisenstein integers."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from lcdhull.errors import NotDivisible

VARIABLES = ("X", "Y", "T")


def _glex_key(exps: tuple[int, ...]):
    return (sum(exps), exps)


class MultiPoly:
    """Polynomial with integer coefficients in named variables.

    Terms map exponent tuples (aligned with ``variables``) to nonzero ints.
    Printing and ``terms()`` use graded lexicographic order, highest first.
    """

    __slots__ = ("variables", "_terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple[int, ...], int] | None = None):
        self.variables = tuple(variables)
        clean: dict[tuple[int, ...], int] = {}
        for e, c in (terms or {}).items():
            if len(e) != len(self.variables):
                raise ValueError(f"exponent {e} does not match variables {self.variables}")
            if c:
                clean[tuple(e)] = clean.get(tuple(e), 0) + int(c)
        self._terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def var(cls, name: str, variables: Iterable[str]) -> MultiPoly:
        variables = tuple(variables)
        e = tuple(int(v == name) for v in variables)
        return cls(variables, {e: 1})

    @classmethod
    def const(cls, c: int, variables: Iterable[str]) -> MultiPoly:
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    # -- views ---------------------------------------------------------------
    def terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self._terms.items(), key=lambda t: _glex_key(t[0]), reverse=True)

    def coeff(self, exps: tuple[int, ...]) -> int:
        return self._terms.get(tuple(exps), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self, name: str) -> int:
        i = self.variables.index(name)
        return max((e[i] for e in self._terms), default=0)

    def is_homogeneous(self, names: Iterable[str], degree: int) -> bool:
        idx = [self.variables.index(v) for v in names]
        return all(sum(e[i] for i in idx) == degree for e in self._terms)

    # -- arithmetic ----------------------------------------------------------
    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise ValueError(f"variable mismatch {self.variables} vs {other.variables}")
            return other
        if isinstance(other, int):
            return MultiPoly.const(other, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly.const(other, self.variables)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self._terms.items())))

    # -- evaluation and substitution -----------------------------------------
    def evaluate(self, **values):
        """Evaluate at the given values (ints, Fractions, EisensteinInts...).

        Variables not given stay symbolic; the result is then a MultiPoly in
        the remaining variables.
        """
        keep = [v for v in self.variables if v not in values]
        if keep:
            out: dict[tuple[int, ...], object] = {}
            for e, c in self._terms.items():
                val = c
                for v, x in zip(self.variables, e):
                    if v in values:
                        val = val * values[v] ** x
                sub = tuple(x for v, x in zip(self.variables, e) if v not in values)
                out[sub] = out.get(sub, 0) + val
            for sub, val in out.items():
                if isinstance(val, Fraction):
                    if val.denominator != 1:
                        raise ValueError("specialization left a non-integer coefficient")
                    out[sub] = int(val)
            return MultiPoly(keep, out)
        total = 0
        for e, c in self._terms.items():
            term = c
            for v, x in zip(self.variables, e):
                if x:
                    term = term * values[v] ** x
            total = total + term
        return total

    def div_linear(self, name: str, root: int = 1) -> MultiPoly:
        """Exact quotient by (name - root); raises NotDivisible otherwise."""
        i = self.variables.index(name)
        groups: dict[tuple[int, ...], dict[int, int]] = {}
        for e, c in self._terms.items():
            rest = e[:i] + e[i + 1 :]
            groups.setdefault(rest, {})[e[i]] = c
        out: dict[tuple[int, ...], int] = {}
        for rest, uni in groups.items():
            deg = max(uni)
            carry = 0
            quot = {}
            for d in range(deg, -1, -1):
                carry = uni.get(d, 0) + carry * root
                if d > 0:
                    quot[d - 1] = carry
            if carry != 0:
                raise NotDivisible(f"polynomial is not divisible by ({name} - {root})")
            for d, c in quot.items():
                out[rest[:i] + (d,) + rest[i:]] = c
        return MultiPoly(self.variables, out)

    # -- text ----------------------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.terms():
            mono = "*".join(
                v if x == 1 else f"{v}^{x}" for v, x in zip(self.variables, e) if x
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({self.variables}, '{self}')"

    @classmethod
    def parse(cls, text: str, variables: Iterable[str]) -> MultiPoly:
        """Parse the canonical text form, e.g. ``X^6 + 3*X^4*Y^2 - T``."""
        variables = tuple(variables)
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls(variables)
        out: dict[tuple[int, ...], int] = {}
        for raw in re.findall(r"[+-]?[^+-]+", s):
            sign = -1 if raw.startswith("-") else 1
            raw = raw.lstrip("+-")
            coeff = 1
            exps = [0] * len(variables)
            for factor in raw.split("*"):
                if factor.isdigit():
                    coeff *= int(factor)
                    continue
                name, _, power = factor.partition("^")
                if name not in variables:
                    raise ValueError(f"unknown variable {name!r} in {text!r}")
                exps[variables.index(name)] += int(power) if power else 1
            e = tuple(exps)
            out[e] = out.get(e, 0) + sign * coeff
        return cls(variables, out)


class EisensteinInt:
    """a + b*j in Z[j], with j a primitive cube root of unity (j^2 = -1 - j)."""

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0):
        self.a = int(a)
        self.b = int(b)

    @classmethod
    def j(cls) -> EisensteinInt:
        return cls(0, 1)

    def _coerce(self, other):
        if isinstance(other, EisensteinInt):
            return other
        if isinstance(other, int):
            return EisensteinInt(other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return EisensteinInt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return EisensteinInt(-self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return EisensteinInt(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a1, b1, a2, b2 = self.a, self.b, o.a, o.b
        return EisensteinInt(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1 - b1 * b2)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported in Z[j]")
        result, base = EisensteinInt(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> EisensteinInt:
        # conj(j) = j^2 = -1 - j
        return EisensteinInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        """|z|^2 = a^2 - ab + b^2."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def __complex__(self) -> complex:
        return complex(self.a - self.b / 2, self.b * 3**0.5 / 2)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __repr__(self) -> str:
        return f"EisensteinInt({self.a}, {self.b})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        bj = "j" if abs(self.b) == 1 else f"{abs(self.b)}*j"
        if self.a == 0:
            return ("-" if self.b < 0 else "") + bj
        return f"{self.a} {'-' if self.b < 0 else '+'} {bj}"
