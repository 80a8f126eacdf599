"""Monomials and homogeneous polynomials with exact rational coefficients."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]


@lru_cache(maxsize=None)
def monomials_of_degree(nvars: int, d: int) -> tuple[Monomial, ...]:
    """All exponent tuples of total degree ``d`` in graded lexicographic order.

    Within one degree the order is lexicographically decreasing, so for six
    variables the list starts ``x0^d, x0^(d-1) x1, ...`` and ends with ``x5^d``.
    """
    if nvars < 1 or d < 0:
        raise ValueError("need nvars >= 1 and d >= 0")

    def rec(n: int, d: int) -> Iterable[Monomial]:
        if n == 1:
            yield (d,)
            return
        for e in range(d, -1, -1):
            for rest in rec(n - 1, d - e):
                yield (e,) + rest

    out = tuple(rec(nvars, d))
    assert len(out) == comb(d + nvars - 1, nvars - 1)
    return out


@lru_cache(maxsize=None)
def monomial_index(nvars: int, d: int) -> dict[Monomial, int]:
    return {m: i for i, m in enumerate(monomials_of_degree(nvars, d))}


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


@dataclass(frozen=True)
class Polynomial:
    """Homogeneous polynomial: ``terms`` maps exponent tuples to nonzero Fractions.

    The zero polynomial keeps whatever degree it was built with.
    """

    nvars: int
    degree: int
    terms: Mapping[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for m, c in self.terms.items():
            m = tuple(int(e) for e in m)
            if len(m) != self.nvars:
                raise ValueError(f"monomial {m} has wrong arity for {self.nvars} variables")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            if sum(m) != self.degree:
                raise ValueError(f"monomial {m} is not of degree {self.degree}")
            c = Fraction(c)
            if c:
                clean[m] = clean.get(m, 0) + c
        object.__setattr__(self, "terms", {m: c for m, c in clean.items() if c})

    # construction helpers
    @classmethod
    def from_terms(cls, terms: Mapping[Sequence[int], object] | Iterable[tuple[Sequence[int], object]],
                   nvars: int | None = None, degree: int | None = None) -> "Polynomial":
        items = list(terms.items()) if isinstance(terms, Mapping) else list(terms)
        acc: dict[Monomial, Fraction] = {}
        for m, c in items:
            m = tuple(m)
            acc[m] = acc.get(m, Fraction(0)) + Fraction(c)
        if nvars is None:
            if not acc:
                raise ValueError("cannot infer nvars of an empty polynomial")
            nvars = len(next(iter(acc)))
        if degree is None:
            degrees = {sum(m) for m in acc}
            if len(degrees) > 1:
                raise ValueError("polynomial is not homogeneous")
            degree = degrees.pop() if degrees else 0
        return cls(nvars, degree, acc)

    @classmethod
    def variable(cls, i: int, nvars: int) -> "Polynomial":
        return cls(nvars, 1, {tuple(int(j == i) for j in range(nvars)): Fraction(1)})

    @classmethod
    def constant(cls, c, nvars: int) -> "Polynomial":
        return cls(nvars, 0, {(0,) * nvars: Fraction(c)})

    @classmethod
    def from_vector(cls, coeffs: Sequence, nvars: int, degree: int,
                    basis: Sequence[Monomial] | None = None) -> "Polynomial":
        basis = monomials_of_degree(nvars, degree) if basis is None else basis
        return cls(nvars, degree, {m: Fraction(c) for m, c in zip(basis, coeffs) if c})

    # arithmetic
    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return Polynomial.constant(other, self.nvars)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if other.degree != self.degree:
            raise ValueError("sum of polynomials of different degrees is not homogeneous")
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, 0) + c
        return Polynomial(self.nvars, self.degree, acc)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, self.degree, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            return Polynomial(self.nvars, self.degree, {m: c * v for m, v in self.terms.items()})
        other = self._coerce(other)
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return Polynomial(self.nvars, self.degree + other.degree, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        out = Polynomial.constant(1, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and dict(self.terms) == dict(other.terms) and (
            self.degree == other.degree or not self.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def diff(self, i: int) -> "Polynomial":
        acc = {}
        for m, c in self.terms.items():
            if m[i]:
                m2 = list(m)
                m2[i] -= 1
                acc[tuple(m2)] = c * m[i]
        return Polynomial(self.nvars, max(self.degree - 1, 0), acc)

    def gradient(self) -> list["Polynomial"]:
        return [self.diff(i) for i in range(self.nvars)]

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Compose with ``x_i -> images[i]``; all images must share one degree."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        nv = images[0].nvars
        powers: dict[tuple[int, int], Polynomial] = {}

        def pw(i: int, e: int) -> Polynomial:
            key = (i, e)
            if key not in powers:
                powers[key] = images[i] ** e
            return powers[key]

        deg = images[0].degree * self.degree
        out = Polynomial(nv, deg, {})
        for m, c in self.terms.items():
            t = Polynomial.constant(c, nv)
            for i, e in enumerate(m):
                if e:
                    t = t * pw(i, e)
            out = out + t
        return out

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            t = c
            for x, e in zip(point, m):
                if e:
                    t *= Fraction(x) ** e
            total += t
        return total

    def coefficient_vector(self, basis: Sequence[Monomial] | None = None) -> list[Fraction]:
        basis = monomials_of_degree(self.nvars, self.degree) if basis is None else basis
        index = {m: i for i, m in enumerate(basis)}
        vec = [Fraction(0)] * len(basis)
        for m, c in self.terms.items():
            if m not in index:
                raise ValueError(f"monomial {m} outside the given basis")
            vec[index[m]] = c
        return vec

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            mono = "*".join(f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e)
            coef = "" if (c == 1 and mono) else ("-" if (c == -1 and mono) else str(c))
            if coef and coef != "-" and mono:
                coef += "*"
            parts.append(f"{coef}{mono}")
        return " + ".join(parts).replace("+ -", "- ")
