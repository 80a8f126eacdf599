"""Integral lattices, finite-order isometries and boundary subspaces of arrangements.

Vectors are coordinate tuples; an isometry ``g`` acts on column vectors and
preserves the Gram matrix ``G`` when ``g^T G g = G``.  Hyperplanes of an
arrangement are given by normal vectors ``r`` and mean ``{x : phi(x, r) = 0}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Optional, Sequence

import numpy as np

from .exact import Subspace, integer_kernel, symmetric_signature


@dataclass(frozen=True)
class IntegralLattice:
    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        n = len(g)
        if any(len(row) != n for row in g):
            raise ValueError("Gram matrix must be square")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(i)):
            raise ValueError("Gram matrix must be symmetric")
        object.__setattr__(self, "gram", g)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def pair(self, x: Sequence, y: Sequence):
        return sum(x[i] * self.gram[i][j] * y[j] for i in range(self.rank) for j in range(self.rank) if x[i] and y[j])

    def restrict(self, basis: Sequence[Sequence]) -> list[list]:
        return [[self.pair(a, b) for b in basis] for a in basis]

    def signature(self) -> tuple[int, int, int]:
        return symmetric_signature(self.gram)

    @staticmethod
    def direct_sum(*lattices: "IntegralLattice") -> "IntegralLattice":
        n = sum(L.rank for L in lattices)
        G = [[0] * n for _ in range(n)]
        k = 0
        for L in lattices:
            for i in range(L.rank):
                for j in range(L.rank):
                    G[k + i][k + j] = L.gram[i][j]
            k += L.rank
        return IntegralLattice(tuple(map(tuple, G)))


HYPERBOLIC_PLANE = IntegralLattice(((0, 1), (1, 0)))
A2 = IntegralLattice(((2, -1), (-1, 2)))


def _matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


def _identity(n: int):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _transpose(A):
    return [list(r) for r in zip(*A)]


def verify_isometry(L: IntegralLattice, g: Sequence[Sequence[int]], cap: int = 1000) -> tuple[bool, int]:
    """Check ``g^T G g = G`` and return the multiplicative order of ``g``."""
    g = [[int(x) for x in row] for row in g]
    n = L.rank
    if len(g) != n or any(len(row) != n for row in g):
        raise ValueError("isometry size does not match the lattice rank")
    ok = _matmul(_matmul(_transpose(g), [list(r) for r in L.gram]), g) == [list(r) for r in L.gram]
    I = _identity(n)
    P = g
    for k in range(1, cap + 1):
        if P == I:
            return ok, k
        P = _matmul(P, g)
    raise ValueError(f"order of the matrix exceeds the cap {cap}")


@dataclass(frozen=True)
class Eigenlattice:
    basis: tuple[tuple[int, ...], ...]
    gram: tuple[tuple[int, ...], ...]
    signature: tuple[int, int, int]

    @property
    def rank(self) -> int:
        return len(self.basis)


def _sublattice(L: IntegralLattice, basis) -> Eigenlattice:
    basis = tuple(tuple(v) for v in basis)
    gram = tuple(tuple(r) for r in L.restrict(basis))
    return Eigenlattice(basis, gram, symmetric_signature(gram) if basis else (0, 0, 0))


def eigenlattice(L: IntegralLattice, g, sign: int) -> Eigenlattice:
    """Primitive sublattice on which ``g`` acts as ``sign`` (the integral kernel of ``g - sign``)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    n = L.rank
    A = [[int(g[i][j]) - sign * int(i == j) for j in range(n)] for i in range(n)]
    return _sublattice(L, integer_kernel(A, n))


def cyclotomic_polynomial_at(g, p: int):
    """``1 + g + ... + g^(p-1)``, the p-th cyclotomic polynomial at ``g`` for p prime."""
    n = len(g)
    total = _identity(n)
    P = _identity(n)
    for _ in range(p - 1):
        P = _matmul(P, g)
        total = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(total, P)]
    return total


@dataclass(frozen=True)
class CyclotomicEigenlattice(Eigenlattice):
    isotropic: bool = True


def _cyclic_conv(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    p = len(a)
    out = np.zeros(p, dtype=object)
    for i in range(p):
        if a[i]:
            out += a[i] * np.roll(b, i)
    return out


def eigenspaces_isotropic(L: IntegralLattice, g, p: int, basis) -> bool:
    """Check ``phi(x, y) = 0`` for x, y in one primitive p-th-root eigenspace of ``g``.

    Eigenvectors ``sum_i zeta^(-ij) g^i v`` are written in ``Z[t]/(t^p - 1)``; an
    element vanishes in ``Q(zeta)`` exactly when all of its coefficients agree.
    """
    n = L.rank
    G = np.array(L.gram, dtype=object)
    powers = [np.array(_identity(n), dtype=object)]
    gm = np.array(g, dtype=object)
    for _ in range(p - 1):
        powers.append(powers[-1].dot(gm))
    for j in range(1, p):
        vecs = []
        for v in basis:
            X = np.zeros((n, p), dtype=object)
            vv = np.array(v, dtype=object)
            for i in range(p):
                X[:, (-i * j) % p] += powers[i].dot(vv)
            vecs.append(X)
        for a in vecs:
            for b in vecs:
                Y = G.dot(b)
                val = np.zeros(p, dtype=object)
                for k in range(n):
                    val += _cyclic_conv(a[k], Y[k])
                if len(set(val.tolist())) != 1:
                    return False
    return True


def cyclotomic_eigenlattice(L: IntegralLattice, g, p: int) -> CyclotomicEigenlattice:
    """Integral kernel of ``Phi_p(g)`` plus the isotropy check of its complex eigenspaces."""
    if p < 3 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise ValueError("p must be an odd prime")
    _, order = verify_isometry(L, g)
    if order % p:
        raise ValueError(f"{p} does not divide the order {order} of the isometry")
    basis = integer_kernel(cyclotomic_polynomial_at(g, p), L.rank)
    sub = _sublattice(L, basis)
    iso = eigenspaces_isotropic(L, g, p, basis) if basis else True
    return CyclotomicEigenlattice(sub.basis, sub.gram, sub.signature, iso)


def _normalize_sign(v: tuple[int, ...]) -> tuple[int, ...]:
    for x in v:
        if x:
            return v if x > 0 else tuple(-y for y in v)
    return v


def isotropic_vectors(L: IntegralLattice, height: int) -> list[tuple[int, ...]]:
    """Primitive isotropic vectors with coordinates in [-H, H], one per sign pair.

    These are representatives in a box, not orbits under any arithmetic group.
    """
    if height < 1:
        raise ValueError("height must be at least 1")
    n = L.rank
    rng = np.arange(-height, height + 1, dtype=np.int64)
    grid = np.stack(np.meshgrid(*([rng] * n), indexing="ij"), axis=-1).reshape(-1, n)
    G = np.array(L.gram, dtype=np.int64)
    q = np.einsum("ij,jk,ik->i", grid, G, grid)
    cand = grid[q == 0]
    out = set()
    for v in cand:
        t = tuple(int(x) for x in v)
        if not any(t):
            continue
        g = 0
        for x in t:
            g = gcd(g, x)
        if g == 1:
            out.add(_normalize_sign(t))
    return sorted(out)


def _as_subspace(vectors, dim: int) -> Subspace:
    if isinstance(vectors, Subspace):
        return vectors
    vs = [list(vectors)] if vectors and not isinstance(vectors[0], (list, tuple)) else [list(v) for v in vectors]
    return Subspace.span(vs, dim)


def _hyperplane(L: IntegralLattice, r) -> Subspace:
    return Subspace.span([list(r)], L.rank).perp(L.gram)


def _contains_all(L: IntegralLattice, r, S: Subspace) -> bool:
    return all(L.pair(list(r), list(b)) == 0 for b in S.basis)


def _is_totally_isotropic(L: IntegralLattice, S: Subspace) -> bool:
    return all(L.pair(list(a), list(b)) == 0 for a in S.basis for b in S.basis)


def _boundary(L: IntegralLattice, S: Subspace, arrangement) -> Subspace:
    out = S.perp(L.gram)
    for r in arrangement:
        if _contains_all(L, r, S):
            out = out & _hyperplane(L, r)
    return out


def boundary_subspace_j(I, arrangement: Sequence[Sequence[int]], L: IntegralLattice) -> Subspace:
    """Intersection of the hyperplanes through the isotropic line ``I`` with ``I^perp``."""
    S = _as_subspace(I, L.rank)
    if S.rank != 1:
        raise ValueError("I must be a line")
    if not _is_totally_isotropic(L, S):
        raise ValueError("I is not isotropic")
    return _boundary(L, S, arrangement)


def boundary_subspace_vsigma(J, arrangement: Sequence[Sequence[int]], L: IntegralLattice) -> Subspace:
    """Intersection of the hyperplanes through the isotropic plane ``J`` with ``J^perp``."""
    S = _as_subspace(J, L.rank)
    if S.rank != 2:
        raise ValueError("J must be a plane")
    if not _is_totally_isotropic(L, S):
        raise ValueError("J is not isotropic")
    return _boundary(L, S, arrangement)


def cm_line_to_plane(e: Sequence[int], f: Sequence[int], D: int, L: IntegralLattice) -> Optional[Subspace]:
    """The plane ``<e, f>`` when ``e + sqrt(-D) f`` is isotropic and orthogonal to its conjugate.

    Writing both conditions in rational parts gives ``phi(e,e) = D phi(f,f)``,
    ``phi(e,f) = 0`` and ``phi(e,e) + D phi(f,f) = 0``.
    """
    if D <= 0:
        raise ValueError("D must be a positive integer")
    S = Subspace.span([list(e), list(f)], L.rank)
    if S.rank != 2:
        raise ValueError("e and f are linearly dependent")
    ee, ff, ef = L.pair(e, e), L.pair(f, f), L.pair(e, f)
    self_isotropic = ee - D * ff == 0 and ef == 0
    conj_orthogonal = ee + D * ff == 0
    return S if (self_isotropic and conj_orthogonal) else None
