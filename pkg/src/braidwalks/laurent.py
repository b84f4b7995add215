"""Exact Laurent polynomial arithmetic over the integers, in one variable q."""

from __future__ import annotations

from typing import Mapping


class LaurentPolynomial:
    """An element of Z[q, q^-1], stored as a map from exponent to coefficient.

    Instances are immutable and hashable; zero coefficients are never stored.
    All arithmetic is exact integer arithmetic.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms = {int(e): int(c) for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    @classmethod
    def term(cls, exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        """The monomial coefficient * q^exponent."""
        return cls({exponent: coefficient})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def valuation(self) -> int:
        """Lowest exponent with a nonzero coefficient."""
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self._terms)

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPolynomial):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        if isinstance(other, int):
            other = LaurentPolynomial.term(0, other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            n = out.get(e, 0) + c
            if n:
                out[e] = n
            else:
                out.pop(e, None)
        result = LaurentPolynomial.__new__(LaurentPolynomial)
        result._terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        result = LaurentPolynomial.__new__(LaurentPolynomial)
        result._terms = {e: -c for e, c in self._terms.items()}
        return result

    def __sub__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        if isinstance(other, int):
            other = LaurentPolynomial.term(0, other)
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPolynomial":
        return LaurentPolynomial.term(0, other) - self

    def __mul__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        if isinstance(other, int):
            if other == 0:
                return LaurentPolynomial()
            result = LaurentPolynomial.__new__(LaurentPolynomial)
            result._terms = {e: c * other for e, c in self._terms.items()}
            return result
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                n = out.get(e, 0) + c1 * c2
                if n:
                    out[e] = n
                else:
                    out.pop(e, None)
        result = LaurentPolynomial.__new__(LaurentPolynomial)
        result._terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if n < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = LaurentPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        """Multiply by coefficient * q^exponent."""
        result = LaurentPolynomial.__new__(LaurentPolynomial)
        result._terms = {
            e + exponent: c * coefficient for e, c in self._terms.items() if c * coefficient
        }
        return result

    def exact_div(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        """Divide by `other`, raising ValueError unless the division is exact."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentPolynomial()
        bound = self.degree() - other.degree()
        b_val = other.valuation()
        b_low = other._terms[b_val]
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        while rem:
            e = min(rem)
            c = rem[e]
            f = e - b_val
            if c % b_low != 0 or f > bound:
                raise ValueError("division is not exact")
            k = c // b_low
            quot[f] = k
            for be, bc in other._terms.items():
                ne = be + f
                n = rem.get(ne, 0) - k * bc
                if n:
                    rem[ne] = n
                else:
                    rem.pop(ne, None)
        return LaurentPolynomial(quot)

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in sorted(self._terms.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "LaurentPolynomial":
        return cls({int(e): int(c) for e, c in data.items()})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for e in sorted(self._terms):
            c = self._terms[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                qp = "q" if e == 1 else f"q^{e}"
                body = qp if mag == 1 else f"{mag}{qp}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self._terms!r})"


ZERO = LaurentPolynomial.zero()
ONE = LaurentPolynomial.one()
Q = LaurentPolynomial.term(1)
