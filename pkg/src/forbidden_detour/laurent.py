"""Sparse Laurent polynomials in ``t`` with integer coefficients."""
from __future__ import annotations

import re
from typing import Iterator, Mapping


class LaurentPoly:
    """Immutable map exponent -> nonzero integer coefficient."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._coeffs = {int(e): int(c) for e, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, value: int) -> "LaurentPoly":
        return cls({0: value})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs, highest exponent first."""
        return sorted(self._coeffs.items(), reverse=True)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.terms())

    def __getitem__(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self) -> int | None:
        return max(self._coeffs) if self._coeffs else None

    def valuation(self) -> int | None:
        return min(self._coeffs) if self._coeffs else None

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPoly":
        return LaurentPoly.constant(other) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, exponent: int) -> "LaurentPoly":
        """Multiply by ``t**exponent``."""
        return LaurentPoly({e + exponent: c for e, c in self._coeffs.items()})

    def evaluate_at_one(self) -> int:
        return sum(self._coeffs.values())

    def __call__(self, t):
        return sum(c * t**e for e, c in self._coeffs.items())

    def l1_norm(self) -> int:
        return sum(abs(c) for c in self._coeffs.values())

    def divide_by_t_minus_1(self) -> "LaurentPoly":
        """Exact quotient ``q`` with ``(t - 1) * q == self``.

        Synthetic division from the top exponent down. Raises ValueError
        when the polynomial does not vanish at ``t = 1``.
        """
        if not self._coeffs:
            return LaurentPoly()
        if self.evaluate_at_one() != 0:
            raise ValueError(f"{self} does not vanish at t = 1")
        top, bottom = max(self._coeffs), min(self._coeffs)
        q: dict[int, int] = {}
        carry = 0
        # coefficient of t^k in (t - 1) q is q[k-1] - q[k]
        for k in range(top, bottom, -1):
            carry += self._coeffs.get(k, 0)
            q[k - 1] = carry
        assert carry + self._coeffs.get(bottom, 0) == 0, "nonzero remainder"
        return LaurentPoly(q)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r})"


T = LaurentPoly.monomial(1)
T_MINUS_1 = LaurentPoly({1: 1, 0: -1})


def divide_by_t_minus_1(p: LaurentPoly) -> LaurentPoly:
    return p.divide_by_t_minus_1()


def format_poly(p: LaurentPoly) -> str:
    """Text form with descending exponents, e.g. ``t^1 + t^-1 - 2``."""
    terms = p.terms()
    if not terms:
        return "0"
    parts = []
    for i, (e, c) in enumerate(terms):
        mag = abs(c)
        body = str(mag) if e == 0 else (f"t^{e}" if mag == 1 else f"{mag}t^{e}")
        if i == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts)


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(?:(t)(?:\^(-?\d+))?)?")


def parse_poly(text: str) -> LaurentPoly:
    """Inverse of :func:`format_poly`; also accepts ``t`` for ``t^1``."""
    s = text.strip()
    if s == "0":
        return LaurentPoly()
    out: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        while pos < len(s) and s[pos].isspace():
            pos += 1
        m = _TERM.match(s, pos)
        sign, digits, var, exp = m.groups()
        if m.end() == pos or (not digits and not var) or (not first and not sign):
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        coeff = int(digits) if digits else 1
        if sign == "-":
            coeff = -coeff
        e = (int(exp) if exp is not None else 1) if var else 0
        out[e] = out.get(e, 0) + coeff
        pos = m.end()
        first = False
    return LaurentPoly(out)
