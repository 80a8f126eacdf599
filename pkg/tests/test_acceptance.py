"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line that is printed in the pytest terminal
summary; ``python tests/test_acceptance.py`` prints the same lines directly.
"""
import io
import json
import time
from contextlib import redirect_stdout
from itertools import product

import pytest

from conftest import LATTICE_FIXTURES, record
from symcubic.boundary import chi_form, verify_veronese_singularity
from symcubic.cli import main
from symcubic.exact import Subspace
from symcubic.jacobian import (SMOOTH_HILBERT, gorenstein_duality_holds, hilbert_function, hodge_eigen,
                               sample_smooth_member, smoothness_certificate)
from symcubic.lattice import (IntegralLattice, boundary_subspace_j, boundary_subspace_vsigma,
                              cyclotomic_eigenlattice, eigenlattice, isotropic_vectors)
from symcubic.moduli import analyze, annotate, load_golden
from symcubic.poly import Polynomial
from symcubic.symmetry import SymmetryType

EXPECTED_N = {2: [14, 12, 10], 3: [10, 4, 8, 2, 7, 8, 6], 5: [4], 7: [2], 11: [0]}
ZETA_ONE = {"T_2^2", "T_3^3", "T_3^4", "T_3^6", "T_5^1", "T_7^1", "T_11^1"}
ZETA_MINUS = {"T_2^1", "T_2^3"}
ZETA_CUBE = {"T_3^1", "T_3^2", "T_3^5", "T_3^7"}
BALL = {"T_3^1": 10, "T_3^2": 4, "T_3^5": 7, "T_3^7": 6}
TYPE_IV = {"T_2^1": 14, "T_2^2": 12, "T_2^3": 10, "T_3^3": 8, "T_3^4": 2, "T_3^6": 8, "T_7^1": 2}
BB_TRUE = {"T_2^1", "T_2^3", "T_3^2", "T_3^3", "T_3^4", "T_3^7", "T_11^1"}
BB_FALSE = {"T_2^2", "T_3^5", "T_3^6", "T_5^1", "T_7^1"}
SEEDS = (0, 1, 2)


def check(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else "")
    record(line)
    assert ok, line


@pytest.fixture(scope="module")
def classification():
    buf = io.StringIO()
    start = time.perf_counter()
    with redirect_stdout(buf):
        code = main(["classify", "--primes", "2,3,5,7,11", "--check-golden", "--json"])
    elapsed = time.perf_counter() - start
    rows = json.loads(buf.getvalue())["result"]["rows"]
    return code, rows, elapsed


@pytest.fixture(scope="module")
def three_seed_reports():
    return {row["label"]: annotate(analyze(SymmetryType.from_json(row["sym"]), seed=SEEDS[0], n_seeds=len(SEEDS)))
            for row in load_golden()}


def _by_label(rows):
    return {r["label"]: r for r in rows}


def test_criterion_1_classification_table(classification):
    code, rows, elapsed = classification
    got = {p: sorted(r["n"] for r in rows if r["sym"]["order"] == p) for p in EXPECTED_N}
    ok = (code == 0 and len(rows) == 13 and all(got[p] == sorted(v) for p, v in EXPECTED_N.items())
          and elapsed < 300)
    check(1, "13 canonical types with the expected moduli dimensions", ok, f"{len(rows)} rows, {elapsed:.1f}s")


def test_criterion_2_zeta(classification):
    rows = _by_label(classification[1])
    one = {k for k, r in rows.items() if r["zeta"] == "1"}
    minus = {k for k, r in rows.items() if r["zeta"] == "-1"}
    cube = {k for k, r in rows.items() if r["zeta"] in ("e(1/3)", "e(2/3)")}
    check(2, "zeta classes", (one, minus, cube) == (ZETA_ONE, ZETA_MINUS, ZETA_CUBE))


def test_criterion_3_n_equals_nprime(three_seed_reports):
    bad = []
    for label, rep in three_seed_reports.items():
        if rep.n != rep.nprime or len(rep.seeds_used) < 3:
            bad.append(label)
        totals = [sum(v[i] for v in rep.hodge.values()) for i in range(3)]
        if totals != [1, 20, 1]:
            bad.append(f"{label} totals {totals}")
    check(3, "n = n' with h31 = h13 = 1 and sum h22 = 20 on 3 seeds", not bad, ", ".join(bad))


def test_criterion_4_domains(classification):
    rows = _by_label(classification[1])
    expected = {k: f"Ball({v})" for k, v in BALL.items()}
    expected.update({k: f"TypeIV({v})" for k, v in TYPE_IV.items()})
    expected["T_11^1"] = "Point"
    wrong = [k for k, v in expected.items() if rows[k]["domain"] != v]
    check(4, "period domain types and dimensions", not wrong, ", ".join(wrong))


def test_criterion_5_baily_borel(classification):
    rows = _by_label(classification[1])
    true = {k for k in BB_TRUE | BB_FALSE if rows[k]["bb"]}
    t31 = rows["T_3^1"]
    ok = true == BB_TRUE and t31["bb_flag"] is not None and t31["bb"] is False
    check(5, "Baily-Borel verdicts, T_3^1 flagged", ok, f"T_3^1 computed {t31['bb']}")


def test_criterion_6_jacobian_suite(three_seed_reports):
    x = [Polynomial.variable(i, 6) for i in range(6)]
    fermat = sum((v ** 3 for v in x[1:]), x[0] ** 3)
    cone = sum((v ** 3 for v in x[1:5]), x[0] ** 3)
    ok = smoothness_certificate(fermat, exact_check=True).smooth
    ok &= hilbert_function(fermat, modulus=None).hilbert == SMOOTH_HILBERT
    ok &= smoothness_certificate(cone, exact_check=True).verdict == "singular"
    failing = []
    for row in load_golden():
        sym = SymmetryType.from_json(row["sym"])
        smp = sample_smooth_member(sym, seed=11)
        prof = hilbert_function(smp.form, sym)
        if prof.hilbert != SMOOTH_HILBERT or prof.hilbert[:7] != prof.hilbert[6::-1]:
            failing.append(row["label"])
        elif not gorenstein_duality_holds(prof, sym):
            failing.append(row["label"] + " duality")
    check(6, "smoothness, h-vector and Gorenstein duality", ok and not failing, ", ".join(failing))


def test_criterion_7_chi_family():
    x = [Polynomial.variable(i, 6) for i in range(6)]
    oracle = (x[0] * x[2] * x[4] - x[0] * x[3] ** 2 - x[1] ** 2 * x[4] + x[1] * x[2] * x[3] * 2
              - x[2] ** 3 + x[5] ** 3)
    check(7, "Veronese singularity and determinant oracle",
          verify_veronese_singularity() and chi_form(0, 1) == oracle)


def _isotropic_oracle(L, H):
    from math import gcd
    out = set()
    for v in product(range(-H, H + 1), repeat=L.rank):
        if any(v) and L.pair(v, v) == 0:
            g = 0
            for e in v:
                g = gcd(g, e)
            first = next(e for e in v if e)
            if g == 1 and first > 0:
                out.add(v)
    return sorted(out)


def test_criterion_8_lattices():
    start = time.perf_counter()
    problems = []
    for name, (L, g, order) in sorted(LATTICE_FIXTURES.items()):
        if order == 2:
            P, M = eigenlattice(L, g, 1), eigenlattice(L, g, -1)
            if any(L.pair(a, b) for a in P.basis for b in M.basis):
                problems.append(f"{name} not orthogonal")
            if tuple(p + m for p, m in zip(P.signature, M.signature)) != L.signature():
                problems.append(f"{name} signature")
        else:
            if not cyclotomic_eigenlattice(L, g, 3).isotropic:
                problems.append(f"{name} isotropy")
        if L.rank <= 4:
            if isotropic_vectors(L, 10) != _isotropic_oracle(L, 10):
                problems.append(f"{name} isotropic vectors")
    U = IntegralLattice(((0, 1), (1, 0)))
    m2 = IntegralLattice(((-2,),))
    L = IntegralLattice.direct_sum(U, U, m2, m2)
    arr = [[0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1], [0, 1, 0, 0, 0, 0]]
    I, J = [1, 0, 0, 0, 0, 0], [[1, 0, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]]
    j, V = boundary_subspace_j(I, arr, L), boundary_subspace_vsigma(J, arr, L)
    Isp, Jsp = Subspace.span([I], 6), Subspace.span(J, 6)
    if not (j.contains(Isp) and Isp.perp(L.gram).contains(j) and V.contains(Jsp)
            and Jsp.perp(L.gram).contains(V) and j.contains(V)):
        problems.append("j/V_sigma containments")
    elapsed = time.perf_counter() - start
    check(8, "lattice properties on constructed fixtures", not problems and elapsed < 60,
          ", ".join(problems) or f"{len(LATTICE_FIXTURES)} fixtures, {elapsed:.1f}s")


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))
