"""Diagonal cyclic symmetry types and the cubic forms they preserve.

A type is a generator ``rho = diag(omega^m_0, ..., omega^m_5)`` with ``omega`` a
primitive ``order``-th root of unity, together with a character exponent ``w``.
A monomial ``x^a`` lies in the eigenspace exactly when ``<m, a> = -w (mod order)``,
which is the convention ``g(F) = F o g^-1`` with ``g(F) = omega^w F``.

The center of SL(V) acts on cubics by a forced scalar, so the group is handled
projectively through ``rho`` alone.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd
from typing import Optional

from .poly import Monomial, monomials_of_degree

NVARS = 6
DEGREE = 3


@dataclass(frozen=True, order=True)
class SymmetryType:
    order: int
    weights: tuple[int, ...]
    lambda_exp: Optional[int] = 0

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        w = tuple(int(m) % self.order for m in self.weights)
        if len(w) != NVARS:
            raise ValueError(f"expected {NVARS} weights, got {len(w)}")
        object.__setattr__(self, "weights", w)
        if self.lambda_exp is not None:
            object.__setattr__(self, "lambda_exp", int(self.lambda_exp) % self.order)

    def to_json(self) -> dict:
        return {"order": self.order, "weights": list(self.weights), "lambda_exp": self.lambda_exp}

    @classmethod
    def from_json(cls, data: dict) -> "SymmetryType":
        try:
            return cls(int(data["order"]), tuple(int(m) for m in data["weights"]),
                       None if data.get("lambda_exp") is None else int(data["lambda_exp"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed symmetry descriptor: {data!r}") from exc

    def __str__(self) -> str:
        ws = ",".join(map(str, self.weights))
        return f"(N={self.order}; m=({ws}); w={self.lambda_exp})"

    def monomial_weight(self, mono: Monomial) -> int:
        return sum(m * e for m, e in zip(self.weights, mono)) % self.order

    @property
    def weight_sum(self) -> int:
        return sum(self.weights) % self.order


@dataclass(frozen=True)
class EigenspaceBasis:
    sym: SymmetryType
    degree: int
    monomials: tuple[Monomial, ...]

    def __len__(self) -> int:
        return len(self.monomials)


def eigenspace_basis(sym: SymmetryType, d: int = DEGREE) -> EigenspaceBasis:
    if sym.lambda_exp is None:
        raise ValueError("eigenspace needs a character exponent")
    target = (-sym.lambda_exp) % sym.order
    monos = tuple(m for m in monomials_of_degree(NVARS, d) if sym.monomial_weight(m) == target)
    return EigenspaceBasis(sym, d, monos)


def _reduce_order(sym: SymmetryType, d: int) -> SymmetryType:
    """Drop to the order of the projective action when the weight differences are not coprime."""
    N = sym.order
    base = sym.weights[0]
    g = N
    for m in sym.weights:
        g = gcd(g, (m - base) % N)
    if g == 1:
        return sym
    w = sym.lambda_exp
    if w is not None and (d * base + w) % g:
        return sym  # empty eigenspace; leave untouched
    new_w = None if w is None else ((d * base + w) // g) % (N // g)
    return SymmetryType(N // g, tuple(((m - base) % N) // g for m in sym.weights), new_w)


def canonicalize(sym: SymmetryType, d: int = DEGREE) -> SymmetryType:
    """Lexicographically least equivalent type.

    Moves: global shift ``m -> m + c`` (with ``w -> w - d*c``), then the power
    ``rho -> rho^k`` for k a unit (``w -> k*w``), then sorting the weights.
    Weight vectors whose differences share a factor with the order are first
    reduced to the faithful order.
    """
    sym = _reduce_order(sym, d)
    N = sym.order
    units = [k for k in range(1, N + 1) if gcd(k, N) == 1] if N > 1 else [1]
    best = None
    for c in range(N):
        shifted = [(m + c) % N for m in sym.weights]
        w0 = None if sym.lambda_exp is None else (sym.lambda_exp - d * c) % N
        for k in units:
            cand = (tuple(sorted(k * m % N for m in shifted)), None if w0 is None else k * w0 % N)
            key = (cand[0], -1 if cand[1] is None else cand[1])
            if best is None or key < best[0]:
                best = (key, cand)
    weights, w = best[1]
    return SymmetryType(N, weights, w)


def equivalent(a: SymmetryType, b: SymmetryType, d: int = DEGREE) -> bool:
    return canonicalize(a, d) == canonicalize(b, d)


def weight_blocks(sym: SymmetryType) -> list[int]:
    """Multiplicities of the distinct weight values, largest first."""
    return sorted(Counter(sym.weights).values(), reverse=True)


def centralizer_dimension(sym: SymmetryType) -> int:
    """Dimension of the centralizer of ``rho`` in SL(V): block-diagonal trace-zero matrices."""
    return sum(b * b for b in weight_blocks(sym)) - 1


def quasismooth_screen(sym: SymmetryType, d: int = DEGREE) -> bool:
    """Necessary condition for a smooth member: each x_i appears to degree >= d-1 somewhere."""
    basis = eigenspace_basis(sym, d).monomials
    for i in range(NVARS):
        if not any(m[i] >= d - 1 for m in basis):
            return False
    return True


def is_faithful(sym: SymmetryType) -> bool:
    """True when the weights generate the full group Z/order projectively."""
    base = sym.weights[0]
    g = sym.order
    for m in sym.weights:
        g = gcd(g, (m - base) % sym.order)
    return g == 1


def candidate_types(order: int, d: int = DEGREE) -> list[SymmetryType]:
    """Every canonical faithful type of the given order, each listed once."""
    from itertools import combinations_with_replacement

    weight_classes = set()
    for ws in combinations_with_replacement(range(order), NVARS):
        if ws[0] != 0:
            continue  # shifts make weight 0 always available
        sym = SymmetryType(order, ws, None)
        if is_faithful(sym):
            weight_classes.add(canonicalize(sym, d).weights)
    seen = set()
    for ws in weight_classes:
        for w in range(order):
            seen.add(canonicalize(SymmetryType(order, ws, w), d))
    return sorted(seen)
