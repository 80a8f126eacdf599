"""Exact linear algebra over the rationals, small prime fields and the integers.

Matrices are plain row sequences (lists of lists, tuples, or 2-d numpy arrays).
Rational entries are :class:`fractions.Fraction`; integer entries may be any
``int``-like value.  Every function is pure and returns fresh objects.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

DEFAULT_MODULUS = 2147483629  # largest prime below 2**31 - 1
SECOND_MODULUS = 2147483587

Row = Sequence
Matrix = Sequence[Row]


def parse_fraction(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a Fraction; floats and decimals are refused."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or "." in text or "e" in text.lower():
        raise ValueError(f"expected an exact fraction string, got {text!r}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError as exc:
        raise ValueError(f"zero denominator in {text!r}") from exc


def format_fraction(q: Fraction | int) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _to_mod_p(x, p: int) -> int:
    if isinstance(x, Fraction):
        if x.denominator % p == 0:
            raise ZeroDivisionError(f"denominator {x.denominator} vanishes mod {p}")
        return x.numerator * pow(x.denominator, -1, p) % p
    return int(x) % p


def as_mod_p_array(M: Matrix, p: int) -> np.ndarray:
    rows = [[_to_mod_p(x, p) for x in row] for row in M]
    if not rows:
        return np.zeros((0, 0), dtype=np.int64)
    return np.array(rows, dtype=np.int64)


def rank_mod_p(M, p: int = DEFAULT_MODULUS) -> int:
    """Rank over F_p by dense elimination.  Requires p < 2**31 so products fit in int64."""
    if p >= 2**31:
        raise ValueError("modulus must be below 2**31")
    if isinstance(M, np.ndarray) and M.dtype != object:
        A = np.mod(M.astype(np.int64), p)
    else:
        A = as_mod_p_array(M, p)
    if A.size == 0:
        return 0
    m, n = A.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r, c:] = A[r, c:] * inv % p
        below = r + 1 + np.flatnonzero(A[r + 1:, c])
        if below.size:
            A[below, c:] = (A[below, c:] - np.outer(A[below, c], A[r, c:])) % p
        r += 1
    return r


def _sparse_rows(M: Matrix) -> list[dict[int, Fraction]]:
    out = []
    for row in M:
        if isinstance(row, dict):
            d = {int(j): Fraction(v) for j, v in row.items() if v != 0}
        else:
            d = {j: Fraction(v) for j, v in enumerate(row) if v != 0}
        out.append(d)
    return out


def _echelon(rows: Iterable[dict[int, Fraction]]) -> dict[int, dict[int, Fraction]]:
    """Incremental row echelon form; returns pivot column -> row with leading 1."""
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                lead = row[c]
                pivots[c] = {j: v / lead for j, v in row.items()}
                break
            f = row[c]
            for j, v in prow.items():
                nv = row.get(j, 0) - f * v
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
    return pivots


def rank_exact(M: Matrix) -> int:
    """Exact rank over Q (sparse elimination with Fractions)."""
    return len(_echelon(_sparse_rows(M)))


def matrix_rank(M: Matrix, modulus: int | None = DEFAULT_MODULUS) -> int:
    """Rank of ``M``: over F_modulus when a modulus is given, else over Q.

    The modular rank never exceeds the rational rank of the same integer matrix.
    """
    if modulus is None:
        return rank_exact(M)
    return rank_mod_p(M, modulus)


def rref(M: Matrix, ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon basis of the row space and its pivot columns."""
    rows = _sparse_rows(M)
    if ncols is None:
        ncols = len(M[0]) if len(M) and not isinstance(M[0], dict) else 0
        for r in rows:
            if r:
                ncols = max(ncols, max(r) + 1)
    piv = _echelon(rows)
    cols = sorted(piv)
    # back substitution, last pivot first
    for c in reversed(cols):
        prow = piv[c]
        for c2 in cols:
            if c2 >= c:
                break
            other = piv[c2]
            f = other.get(c)
            if f:
                for j, v in prow.items():
                    nv = other.get(j, 0) - f * v
                    if nv:
                        other[j] = nv
                    else:
                        other.pop(j, None)
    dense = [[piv[c].get(j, Fraction(0)) for j in range(ncols)] for c in cols]
    return dense, cols


def kernel(M: Matrix, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {x : M x = 0}, returned in reduced echelon form."""
    if ncols is None:
        if not len(M):
            raise ValueError("ncols required for an empty matrix")
        ncols = len(M[0])
    R, pivots = rref(M, ncols) if len(M) else ([], [])
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(R, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return canonical_basis(basis, ncols)


def canonical_basis(vectors: Matrix, dim: int) -> list[list[Fraction]]:
    if not len(vectors):
        return []
    return rref(vectors, dim)[0]


def intersect(A: Matrix, B: Matrix, dim: int) -> list[list[Fraction]]:
    """Intersection of the row spans of ``A`` and ``B`` inside Q^dim."""
    A = canonical_basis(A, dim)
    B = canonical_basis(B, dim)
    if not A or not B:
        return []
    # (a, b) with a.A = b.B  <=>  [A; B]^T (a, -b) = 0
    stacked = [list(r) for r in A] + [list(r) for r in B]
    cols = [[stacked[i][j] for i in range(len(stacked))] for j in range(dim)]
    ker = kernel(cols, len(stacked))
    vecs = []
    for coeffs in ker:
        v = [Fraction(0)] * dim
        for a, row in zip(coeffs[: len(A)], A):
            if a:
                for j in range(dim):
                    v[j] += a * row[j]
        vecs.append(v)
    return canonical_basis(vecs, dim)


def orthogonal_complement(S: Matrix, gram: Matrix | None = None, dim: int | None = None) -> list[list[Fraction]]:
    """{x : s^T G x = 0 for all s in S}; the standard dot product when ``gram`` is None."""
    if dim is None:
        dim = len(gram) if gram is not None else len(S[0])
    if not len(S):
        return [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    if gram is None:
        SG = [[Fraction(x) for x in s] for s in S]
    else:
        SG = [[sum(Fraction(s[i]) * gram[i][j] for i in range(dim)) for j in range(dim)] for s in S]
    return kernel(SG, dim)


def symmetric_signature(G: Matrix) -> tuple[int, int, int]:
    """Inertia (pos, neg, zero) of a symmetric rational matrix by congruence diagonalization."""
    n = len(G)
    A = [[Fraction(x) for x in row] for row in G]
    if any(len(row) != n for row in A):
        raise ValueError("matrix is not square")
    for i in range(n):
        for j in range(i):
            if A[i][j] != A[j][i]:
                raise ValueError("matrix is not symmetric")
    pos = neg = 0
    for i in range(n):
        if A[i][i] == 0:
            j = next((j for j in range(i + 1, n) if A[j][j] != 0), None)
            if j is not None:
                A[i], A[j] = A[j], A[i]
                for row in A:
                    row[i], row[j] = row[j], row[i]
            else:
                j = next((j for j in range(i + 1, n) if A[i][j] != 0), None)
                if j is None:
                    continue
                # e_i <- e_i + e_j makes the diagonal entry 2*A[i][j]
                for k in range(n):
                    A[i][k] += A[j][k]
                for k in range(n):
                    A[k][i] += A[k][j]
        d = A[i][i]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for j in range(i + 1, n):
            f = A[j][i] / d
            if f:
                for k in range(i, n):
                    A[j][k] -= f * A[i][k]
                for k in range(i, n):
                    A[k][j] -= f * A[k][i]
    return pos, neg, n - pos - neg


# --- integer lattices -------------------------------------------------------

def _egcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def hnf_rows(B: Matrix) -> list[list[int]]:
    """Row Hermite normal form of an integer matrix (zero rows dropped)."""
    A = [[int(x) for x in row] for row in B]
    if not A:
        return []
    m, n = len(A), len(A[0])
    r = 0
    for c in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            if A[i][c] == 0:
                continue
            a, b = A[r][c], A[i][c]
            g, x, y = _egcd(a, b)
            ra, rb = A[r], A[i]
            A[r] = [x * u + y * v for u, v in zip(ra, rb)]
            A[i] = [(-b // g) * u + (a // g) * v for u, v in zip(ra, rb)]
        if A[r][c] == 0:
            continue
        if A[r][c] < 0:
            A[r] = [-u for u in A[r]]
        p = A[r][c]
        for i in range(r):
            q = A[i][c] // p
            if q:
                A[i] = [u - q * v for u, v in zip(A[i], A[r])]
        r += 1
    return [row for row in A[:r] if any(row)]


def integer_kernel(A: Matrix, ncols: int | None = None) -> list[list[int]]:
    """Z-basis (in Hermite normal form) of {x in Z^n : A x = 0}; always saturated."""
    M = [[int(x) for x in row] for row in A]
    n = ncols if ncols is not None else (len(M[0]) if M else 0)
    U = [[int(i == j) for j in range(n)] for i in range(n)]  # columns transform
    k = 0

    def colop(i: int, j: int, a: int, b: int, c: int, d: int) -> None:
        # (col_i, col_j) <- (a col_i + b col_j, c col_i + d col_j)
        for mat in (M, U):
            for row in mat:
                u, v = row[i], row[j]
                row[i], row[j] = a * u + b * v, c * u + d * v

    for r in range(len(M)):
        if k == n:
            break
        for j in range(k + 1, n):
            b = M[r][j]
            if b == 0:
                continue
            a = M[r][k]
            g, x, y = _egcd(a, b)
            colop(k, j, x, y, -b // g, a // g)
        if M[r][k] != 0:
            k += 1
    basis = [[U[i][j] for i in range(n)] for j in range(k, n)]
    return hnf_rows(basis)


@dataclass(frozen=True)
class Subspace:
    """A rational subspace of Q^dim held by its reduced echelon basis."""

    basis: tuple[tuple[Fraction, ...], ...]
    dim: int

    @classmethod
    def span(cls, vectors: Matrix, dim: int) -> "Subspace":
        return cls(tuple(tuple(r) for r in canonical_basis(vectors, dim)), dim)

    @classmethod
    def whole(cls, dim: int) -> "Subspace":
        return cls.span([[int(i == j) for j in range(dim)] for i in range(dim)], dim)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, other: "Subspace | Sequence") -> bool:
        vecs = other.basis if isinstance(other, Subspace) else [other]
        if not vecs:
            return True
        return rank_exact(list(self.basis) + list(vecs)) == self.rank

    def __and__(self, other: "Subspace") -> "Subspace":
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        return Subspace(tuple(tuple(r) for r in intersect(self.basis, other.basis, self.dim)), self.dim)

    def perp(self, gram: Matrix | None = None) -> "Subspace":
        if gram is not None and len(gram) != self.dim:
            raise ValueError("dimension mismatch")
        return Subspace(tuple(tuple(r) for r in orthogonal_complement(self.basis, gram, self.dim)), self.dim)
