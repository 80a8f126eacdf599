"""Baily-Borel criterion: does the symmetry factor through a stabilizer of the chi family?

The family ``g_{a,b}`` consists of a 3x3 symmetric determinant plus ``b x5^3``.
Its ``b = 0`` member is stabilized by ``Sym^2 GL(V3)`` acting on ``V = Sym^2 V3``
(character from the determinant), the ``b != 0`` members by pairs ``(g, u)``
acting on ``Sym^4 V2 + C`` with ``det(g)^2 / u`` a cube root of unity.

Both searches are projective: ``rho`` must equal a scalar times the image of a
diagonal element, and the pulled-back form must lie in the ``w``-eigenspace.
Normalizing the first eigenvalue of that element to 1 forces every remaining
exponent into ``Z/order``, so an exhaustive search over ``Z/order`` is complete.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Optional

from .poly import Polynomial
from .symmetry import NVARS, SymmetryType, canonicalize


@dataclass(frozen=True)
class FactorizationWitness:
    target: str  # "G1" | "G2"
    exponents: tuple[int, ...]  # G1: (t1, t2, t3); G2: (s1, s2, u)
    power: int  # rho is matched directly, so this is always 1
    shift: int
    modulus: int

    def image_weights(self) -> tuple[int, ...]:
        M = self.modulus
        if self.target == "G1":
            t = self.exponents
            raw = [t[i] + t[j] for i, j in combinations_with_replacement(range(3), 2)]
        else:
            s1, s2, u = self.exponents
            raw = [(4 - k) * s1 + k * s2 for k in range(5)] + [u]
        return tuple(sorted((x + self.shift) % M for x in raw))

    def form_weight(self) -> int:
        """Weight of the invariant chi-form under the shifted image element."""
        M = self.modulus
        if self.target == "G1":
            return (2 * sum(self.exponents) + 3 * self.shift) % M
        return (3 * self.exponents[2] + 3 * self.shift) % M

    def replays(self, sym: SymmetryType) -> bool:
        if self.modulus != sym.order:
            return False
        if self.image_weights() != tuple(sorted(sym.weights)):
            return False
        if self.target == "G2":
            s1, s2, u = self.exponents
            # det(g)^2 / u must be a cube root of unity
            if (3 * (2 * (s1 + s2) - u)) % self.modulus:
                return False
        return self.form_weight() == (-sym.lambda_exp) % self.modulus

    def to_json(self) -> dict:
        return {"target": self.target, "exponents": list(self.exponents), "power": self.power,
                "shift": self.shift, "modulus": self.modulus}


@dataclass(frozen=True)
class BBVerdict:
    is_bb: bool
    witnesses: tuple[FactorizationWitness, ...] = field(default_factory=tuple)

    def to_json(self) -> dict:
        return {"is_bb": self.is_bb, "witnesses": [w.to_json() for w in self.witnesses]}


def _search(sym: SymmetryType, target: str) -> Optional[FactorizationWitness]:
    if sym.lambda_exp is None:
        raise ValueError("factorization search needs a character exponent")
    N = sym.order
    for a, b in product(range(N), repeat=2):
        for c in range(N):
            if target == "G1":
                wit = FactorizationWitness("G1", (0, a, b), 1, c, N)
            else:
                wit = FactorizationWitness("G2", (0, a, b), 1, c, N)
            if wit.replays(sym):
                return wit
    return None


def g1_factorization(sym: SymmetryType) -> Optional[FactorizationWitness]:
    """Lexicographically first diagonal ``t`` with ``rho ~ Sym^2 diag(t)`` and matching character."""
    return _search(canonicalize(sym), "G1")


def g2_factorization(sym: SymmetryType) -> Optional[FactorizationWitness]:
    """Lexicographically first ``(s, u)`` with ``rho ~ Sym^4 diag(s) + u`` and matching character."""
    return _search(canonicalize(sym), "G2")


def bb_verdict(sym: SymmetryType) -> BBVerdict:
    found = [w for w in (g1_factorization(sym), g2_factorization(sym)) if w is not None]
    return BBVerdict(not found, tuple(found))


# --- the chi family ---------------------------------------------------------

def _x(i: int) -> Polynomial:
    return Polynomial.variable(i, NVARS)


def chi_matrix(a) -> list[list[Polynomial]]:
    a = Fraction(a)
    x = [_x(i) for i in range(NVARS)]
    corner = x[2] + x[5] * (2 * a)
    return [[x[0], x[1], corner],
            [x[1], x[2] - x[5] * a, x[3]],
            [corner, x[3], x[4]]]


def det3(M) -> Polynomial:
    return (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
            - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
            + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))


def chi_form(a, b) -> Polynomial:
    """The cubic ``g_{a,b}``: determinant of the chi matrix plus ``b x5^3``."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 and b == 0:
        raise ValueError("(a, b) = (0, 0) is not a point of the weighted projective line")
    return det3(chi_matrix(a)) + _x(5) ** 3 * b


def veronese_parametrization() -> list[Polynomial]:
    """Images of x0..x5 making the chi matrix at a=1 equal to (u,v,w)^T (u,v,w)."""
    u, v, w = (Polynomial.variable(i, 3) for i in range(3))
    third = Fraction(1, 3)
    return [u * u, u * v, (u * w + v * v * 2) * third, v * w, w * w, (u * w - v * v) * third]


def vanishes_on_veronese(F: Polynomial) -> bool:
    """True iff ``F`` and all its partials vanish identically on the parametrized surface."""
    images = veronese_parametrization()
    return all(P.substitute(images).is_zero() for P in [F] + F.gradient())


def verify_veronese_singularity() -> bool:
    return vanishes_on_veronese(chi_form(1, 0))
