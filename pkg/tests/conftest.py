import pytest

from symcubic.lattice import A2, HYPERBOLIC_PLANE, IntegralLattice

ACCEPTANCE_LINES: list[str] = []


def record(line: str) -> None:
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


U = HYPERBOLIC_PLANE
MINUS2 = IntegralLattice(((-2,),))


def _swap_u():
    return [[0, 1], [1, 0]]


def _rotation_a2():
    # order 3 on the A2 root lattice: e1 -> e2, e2 -> -e1 - e2
    return [[0, -1], [1, -1]]


def _block(*mats):
    n = sum(len(m) for m in mats)
    out = [[0] * n for _ in range(n)]
    k = 0
    for m in mats:
        for i, row in enumerate(m):
            for j, x in enumerate(row):
                out[k + i][k + j] = x
        k += len(m)
    return out


LATTICE_FIXTURES = {
    "U_swap": (U, _swap_u(), 2),
    "UxU_blockswap": (IntegralLattice.direct_sum(U, U),
                      [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]], 2),
    "U+(-2)_negate": (IntegralLattice.direct_sum(U, MINUS2), _block([[1, 0], [0, 1]], [[-1]]), 2),
    "A2_rotation": (A2, _rotation_a2(), 3),
    "U+A2_rotation": (IntegralLattice.direct_sum(U, A2), _block([[1, 0], [0, 1]], _rotation_a2()), 3),
    "A2+A2_rotation": (IntegralLattice.direct_sum(A2, A2), _block(_rotation_a2(), _rotation_a2()), 3),
}


@pytest.fixture(params=sorted(LATTICE_FIXTURES))
def lattice_fixture(request):
    L, g, order = LATTICE_FIXTURES[request.param]
    return request.param, L, g, order
