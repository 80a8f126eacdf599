from itertools import product
from math import gcd, isqrt

import pytest

from conftest import LATTICE_FIXTURES, MINUS2, U
from symcubic.exact import Subspace
from symcubic.lattice import (A2, IntegralLattice, boundary_subspace_j, boundary_subspace_vsigma,
                              cm_line_to_plane, cyclotomic_eigenlattice, eigenlattice, isotropic_vectors,
                              verify_isometry)


def brute_isotropic(L, H):
    """Solve q(x) = 0 for the last coordinate given the others."""
    n = L.rank
    G = L.gram
    out = set()
    for head in product(range(-H, H + 1), repeat=n - 1):
        a = G[n - 1][n - 1]
        b = 2 * sum(G[i][n - 1] * head[i] for i in range(n - 1))
        c = sum(head[i] * G[i][j] * head[j] for i in range(n - 1) for j in range(n - 1))
        if a == 0:
            roots = range(-H, H + 1) if b == 0 and c == 0 else ([-c // b] if b and c % b == 0 else [])
        else:
            disc = b * b - 4 * a * c
            if disc < 0 or isqrt(disc) ** 2 != disc:
                continue
            r = isqrt(disc)
            roots = [(-b + s * r) // (2 * a) for s in (1, -1) if (-b + s * r) % (2 * a) == 0]
        for t in roots:
            v = head + (t,)
            if abs(t) > H or not any(v):
                continue
            g = 0
            for e in v:
                g = gcd(g, e)
            if g != 1:
                continue
            first = next(e for e in v if e)
            out.add(v if first > 0 else tuple(-e for e in v))
    return sorted(out)


def test_fixture_isometries(lattice_fixture):
    _, L, g, order = lattice_fixture
    assert verify_isometry(L, g) == (True, order)


def test_verify_rejects_non_isometry():
    ok, order = verify_isometry(U, [[-1, 0], [0, 1]])
    assert not ok and order == 2
    with pytest.raises(ValueError):
        verify_isometry(U, [[1, 1], [0, 1]], cap=50)


ORDER_TWO = sorted(n for n, f in LATTICE_FIXTURES.items() if f[2] == 2)
ORDER_THREE = sorted(n for n, f in LATTICE_FIXTURES.items() if f[2] == 3)


@pytest.mark.parametrize("name", ORDER_TWO)
def test_order_two_eigenlattices(name):
    L, g, _ = LATTICE_FIXTURES[name]
    plus, minus = eigenlattice(L, g, 1), eigenlattice(L, g, -1)
    assert plus.rank + minus.rank == L.rank
    assert all(L.pair(a, b) == 0 for a in plus.basis for b in minus.basis)
    sp, sm, sl = plus.signature, minus.signature, L.signature()
    assert tuple(p + m for p, m in zip(sp, sm)) == sl


def test_known_eigenlattices():
    assert eigenlattice(U, [[0, 1], [1, 0]], 1).gram == ((2,),)
    assert eigenlattice(U, [[0, 1], [1, 0]], -1).gram == ((-2,),)
    L, g, _ = LATTICE_FIXTURES["UxU_blockswap"]
    assert eigenlattice(L, g, 1).gram == ((0, 2), (2, 0))


@pytest.mark.parametrize("name", ORDER_THREE)
def test_order_three_eigenspaces_are_isotropic(name):
    L, g, _ = LATTICE_FIXTURES[name]
    E = cyclotomic_eigenlattice(L, g, 3)
    assert E.isotropic
    assert E.rank % 2 == 0
    assert E.rank == (2 if name != "A2+A2_rotation" else 4)


def test_cyclotomic_argument_checks():
    with pytest.raises(ValueError):
        cyclotomic_eigenlattice(A2, [[0, -1], [1, -1]], 5)
    with pytest.raises(ValueError):
        cyclotomic_eigenlattice(A2, [[0, -1], [1, -1]], 4)


@pytest.mark.parametrize("name", [n for n, (L, _, _) in sorted(LATTICE_FIXTURES.items()) if L.rank <= 4])
def test_isotropic_vectors_match_brute_force(name):
    L = LATTICE_FIXTURES[name][0]
    assert isotropic_vectors(L, 10) == brute_isotropic(L, 10)


def test_isotropic_vectors_small_cases():
    assert isotropic_vectors(U, 2) == [(0, 1), (1, 0)]
    assert isotropic_vectors(A2, 5) == []


UU2 = IntegralLattice.direct_sum(U, U, MINUS2)
UU22 = IntegralLattice.direct_sum(U, U, MINUS2, MINUS2)


def test_j_contains_line_and_sits_in_perp():
    I = [1, 0, 0, 0, 0]
    arrangement = [[0, 0, 0, 0, 1], [0, 1, 0, 0, 0]]  # the second hyperplane misses I
    j = boundary_subspace_j(I, arrangement, UU2)
    Iperp = Subspace.span([I], 5).perp(UU2.gram)
    assert j.contains(I) and Iperp.contains(j)
    assert j.rank == 3
    assert j == Subspace.span([[1, 0, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0]], 5)


def test_j_without_arrangement_is_perp():
    I = [1, 0, 0, 0, 0]
    assert boundary_subspace_j(I, [], UU2) == Subspace.span([I], 5).perp(UU2.gram)


def test_vsigma_containments():
    J = [[1, 0, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]]
    arrangement = [[0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]]
    V = boundary_subspace_vsigma(J, arrangement, UU22)
    Jsp = Subspace.span(J, 6)
    assert V.contains(Jsp) and Jsp.perp(UU22.gram).contains(V)
    assert Jsp.perp(UU22.gram).rank - V.rank == 2
    # for a line inside J, j(I) contains V_sigma
    assert boundary_subspace_j(J[0], arrangement, UU22).contains(V)


def test_boundary_rejects_non_isotropic():
    with pytest.raises(ValueError):
        boundary_subspace_j([1, 1, 0, 0, 0], [], UU2)
    with pytest.raises(ValueError):
        boundary_subspace_vsigma([[1, 0, 0, 0, 0]], [], UU2)


def test_cm_plane():
    L = IntegralLattice.direct_sum(U, U)
    S = cm_line_to_plane([1, 0, 0, 0], [0, 0, 1, 0], 3, L)
    assert S is not None and S.rank == 2
    assert cm_line_to_plane([1, 1, 0, 0], [0, 0, 1, 0], 3, L) is None
    with pytest.raises(ValueError):
        cm_line_to_plane([1, 0, 0, 0], [2, 0, 0, 0], 3, L)
