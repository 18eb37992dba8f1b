"""Exact sparse univariate polynomials over the integers."""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping


class PolynomialShapeError(ValueError):
    """A polynomial violated an expected exponent structure."""


class SparsePolynomial:
    """Integer-coefficient polynomial stored as exponent -> coefficient.

    Zero coefficients are never stored, equality is exact term-wise
    equality, and coefficients are Python ints (arbitrary precision).
    Instances are immutable: every operation returns a new value.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for exp, coef in items:
            exp = int(exp)
            coef = int(coef)
            if exp < 0:
                raise ValueError(f"negative exponent {exp}")
            if coef:
                total = acc.get(exp, 0) + coef
                if total:
                    acc[exp] = total
                else:
                    acc.pop(exp, None)
        self._terms = acc

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "SparsePolynomial":
        return cls()

    @classmethod
    def one(cls) -> "SparsePolynomial":
        return cls({0: 1})

    @classmethod
    def x_power(cls, exp: int) -> "SparsePolynomial":
        return cls({exp: 1})

    @classmethod
    def monomial(cls, exp: int, coef: int) -> "SparsePolynomial":
        return cls({exp: coef})

    # -- inspection ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Largest exponent with nonzero coefficient; -1 for the zero polynomial."""
        return max(self._terms) if self._terms else -1

    def min_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no terms")
        return min(self._terms)

    def coefficient(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def leading_coefficient(self) -> int:
        return self._terms[max(self._terms)] if self._terms else 0

    def terms(self) -> Iterator[tuple[int, int]]:
        """Yield (exponent, coefficient) pairs in descending exponent order."""
        for exp in sorted(self._terms, reverse=True):
            yield exp, self._terms[exp]

    def __len__(self) -> int:
        return len(self._terms)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        acc = dict(self._terms)
        for exp, coef in other._terms.items():
            total = acc.get(exp, 0) + coef
            if total:
                acc[exp] = total
            else:
                acc.pop(exp, None)
        out = SparsePolynomial.__new__(SparsePolynomial)
        out._terms = acc
        return out

    def __neg__(self) -> "SparsePolynomial":
        out = SparsePolynomial.__new__(SparsePolynomial)
        out._terms = {e: -c for e, c in self._terms.items()}
        return out

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                total = acc.get(e, 0) + c1 * c2
                if total:
                    acc[e] = total
                else:
                    acc.pop(e, None)
        out = SparsePolynomial.__new__(SparsePolynomial)
        out._terms = acc
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SparsePolynomial":
        if k < 0:
            raise ValueError("negative power")
        out = SparsePolynomial.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c: int) -> "SparsePolynomial":
        if not c:
            return SparsePolynomial.zero()
        out = SparsePolynomial.__new__(SparsePolynomial)
        out._terms = {e: c * v for e, v in self._terms.items()}
        return out

    def shift(self, k: int) -> "SparsePolynomial":
        """Multiply by x**k."""
        if k < 0:
            raise ValueError("negative shift")
        out = SparsePolynomial.__new__(SparsePolynomial)
        out._terms = {e + k: c for e, c in self._terms.items()}
        return out

    def derivative(self) -> "SparsePolynomial":
        return SparsePolynomial({e - 1: e * c for e, c in self._terms.items() if e})

    def evaluate(self, x):
        """Evaluate at x (int, float, complex, Fraction...)."""
        return sum(c * x**e for e, c in self._terms.items())

    # -- comparisons ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- serialization -------------------------------------------------

    def to_dense(self) -> list[int]:
        """Coefficients in descending exponent order, degree() + 1 entries."""
        d = self.degree()
        if d < 0:
            return [0]
        return [self._terms.get(e, 0) for e in range(d, -1, -1)]

    def to_json_dict(self, var: str = "x") -> dict:
        return {
            "var": var,
            "terms": [{"exp": e, "coef": str(c)} for e, c in self.terms()],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SparsePolynomial":
        terms = [(int(t["exp"]), int(t["coef"])) for t in data["terms"]]
        return cls(terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp, coef in self.terms():
            mag = abs(coef)
            if exp == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else str(mag)
                body = f"{head}x" if exp == 1 else f"{head}x^{exp}"
            if not parts:
                parts.append(body if coef > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coef > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"SparsePolynomial({self})"
