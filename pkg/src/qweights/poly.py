"""Exact sparse Laurent polynomials in one variable q over the integers.

A polynomial is stored as a mapping {exponent: coefficient} with no zero
coefficients; the zero polynomial is the empty mapping.  Exponents may be
negative, coefficients are arbitrary-precision Python ints.  Values are
immutable after construction and safe to share.
"""

from __future__ import annotations

import re
from fractions import Fraction


class InexactDivisionError(ArithmeticError):
    """Polynomial division left a nonzero remainder where exactness was required."""


_TERM_RE = re.compile(r"^(-?\d+)\*q\^(-?\d+)$")


def _coerce(value):
    if isinstance(value, QPoly):
        return value
    if isinstance(value, int):
        return QPoly({0: value})
    return NotImplemented


class QPoly:
    """Sparse integer Laurent polynomial in q."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for e, c in items:
                if c:
                    c0 = data.get(e, 0) + c
                    if c0:
                        data[e] = c0
                    elif e in data:
                        del data[e]
        self._terms = data

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "QPoly":
        return cls()

    @classmethod
    def one(cls) -> "QPoly":
        return cls({0: 1})

    @classmethod
    def q(cls, exponent: int = 1, coefficient: int = 1) -> "QPoly":
        """The monomial coefficient * q^exponent."""
        return cls({exponent: coefficient})

    @classmethod
    def q_int(cls, h: int) -> "QPoly":
        """The q-integer [h] = 1 + q + ... + q^(h-1)."""
        return cls({e: 1 for e in range(h)})

    # -- inspection ---------------------------------------------------

    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self):
        """Top exponent, or None for the zero polynomial."""
        return max(self._terms) if self._terms else None

    def min_exponent(self):
        return min(self._terms) if self._terms else None

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_monic(self) -> bool:
        return bool(self._terms) and self._terms[max(self._terms)] == 1

    def coefficients_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    def exponent_multiset(self) -> list:
        """Ascending list of exponents, each repeated by its coefficient.

        Requires all coefficients nonnegative.
        """
        if not self.coefficients_nonnegative():
            raise ValueError(f"negative coefficient in {self}")
        out = []
        for e in sorted(self._terms):
            out.extend([e] * self._terms[e])
        return out

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            c0 = terms.get(e, 0) + c
            if c0:
                terms[e] = c0
            elif e in terms:
                del terms[e]
        out = QPoly.__new__(QPoly)
        out._terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = QPoly.__new__(QPoly)
        out._terms = {e: -c for e, c in self._terms.items()}
        return out

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, QPoly):
            return NotImplemented
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                terms[e] = terms.get(e, 0) + c1 * c2
        return QPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = QPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "QPoly":
        """Multiply by q^k (k may be negative: Laurent shift)."""
        out = QPoly.__new__(QPoly)
        out._terms = {e + k: c for e, c in self._terms.items()}
        return out

    def exact_div(self, divisor: "QPoly") -> "QPoly":
        """Exact quotient self / divisor; InexactDivisionError if it does not divide."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return QPoly.zero()
        # Normalise both to honest polynomials, divide, and shift back.
        sa, sb = self.min_exponent(), divisor.min_exponent()
        rem = self.shift(-sa).terms()
        den = divisor.shift(-sb)._terms
        dd = max(den)
        lead = den[dd]
        quot = {}
        while rem:
            dr = max(rem)
            if dr < dd:
                raise InexactDivisionError(f"{self} is not divisible by {divisor}")
            c, r = divmod(rem[dr], lead)
            if r:
                raise InexactDivisionError(f"{self} is not divisible by {divisor}")
            quot[dr - dd] = c
            for e, ce in den.items():
                e2 = dr - dd + e
                c2 = rem.get(e2, 0) - c * ce
                if c2:
                    rem[e2] = c2
                elif e2 in rem:
                    del rem[e2]
        return QPoly(quot).shift(sa - sb)

    # -- specialisations ----------------------------------------------

    def evaluate(self, n):
        """Exact value at q = n (int or Fraction result)."""
        if n == 0:
            if any(e < 0 for e in self._terms):
                raise ValueError("evaluation at 0 with negative exponents")
            return self._terms.get(0, 0)
        total = Fraction(0)
        for e, c in self._terms.items():
            total += c * Fraction(n) ** e
        return int(total) if total.denominator == 1 else total

    def substitute_q_plus_1(self) -> "QPoly":
        """The polynomial p(q+1), expanded.  Requires no negative exponents."""
        if any(e < 0 for e in self._terms):
            raise ValueError("q+1 substitution undefined for Laurent terms")
        out = QPoly.zero()
        if not self._terms:
            return out
        # (q+1)^e computed incrementally up to the top degree.
        step = QPoly({0: 1, 1: 1})
        power = QPoly.one()
        pows = {0: power}
        for e in range(1, max(self._terms) + 1):
            power = power * step
            pows[e] = power
        for e, c in self._terms.items():
            out = out + pows[e] * c
        return out

    # -- comparison / hashing -----------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly({0: other})
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    # -- serialisation ------------------------------------------------

    def __str__(self):
        """Canonical text: ascending exponents, e.g. '-1*q^1 + 1*q^3'."""
        if not self._terms:
            return "0"
        return " + ".join(f"{self._terms[e]}*q^{e}" for e in sorted(self._terms))

    def __repr__(self):
        return f"QPoly('{self}')"

    @classmethod
    def from_string(cls, text: str) -> "QPoly":
        text = text.strip()
        if text == "0":
            return cls.zero()
        terms = {}
        for part in text.split(" + "):
            m = _TERM_RE.match(part.strip())
            if not m:
                raise ValueError(f"cannot parse polynomial term {part!r}")
            c, e = int(m.group(1)), int(m.group(2))
            terms[e] = terms.get(e, 0) + c
        return cls(terms)

    def json_pairs(self) -> list:
        """JSON form: [[exponent, coefficient-as-string], ...], ascending."""
        return [[e, str(self._terms[e])] for e in sorted(self._terms)]

    @classmethod
    def from_json(cls, pairs) -> "QPoly":
        return cls({int(e): int(c) for e, c in pairs})
