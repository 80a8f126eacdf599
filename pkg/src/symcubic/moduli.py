"""Moduli dimension, period-domain type and the full analysis pipeline for a symmetry type."""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Iterable, Optional

from . import exact
from .boundary import BBVerdict, bb_verdict
from .exact import DEFAULT_MODULUS
from .jacobian import (SMOOTH_HILBERT, HodgeEigenData, NoSmoothMember, SingularFormError,
                       SmoothSample, hilbert_function, hodge_eigen, nprime, sample_smooth_member,
                       zeta_description)
from .poly import Polynomial
from .symmetry import (NVARS, SymmetryType, _reduce_order, candidate_types, canonicalize,
                       centralizer_dimension, eigenspace_basis, quasismooth_screen)

log = logging.getLogger(__name__)


class VerificationError(RuntimeError):
    """The two independent dimension counts disagree."""


@dataclass(frozen=True)
class DomainDescriptor:
    kind: str  # "Ball" | "TypeIV" | "Point"
    dim: int

    def __str__(self) -> str:
        return "Point" if self.kind == "Point" else f"{self.kind}({self.dim})"


def classify_domain(hodge: HodgeEigenData) -> DomainDescriptor:
    n, _ = nprime(hodge)
    if n == 0:
        return DomainDescriptor("Point", 0)
    return DomainDescriptor("TypeIV" if hodge.zeta_is_real else "Ball", n)


def lie_algebra_basis(sym: SymmetryType) -> list[list[tuple[int, int, int]]]:
    """Block-diagonal trace-zero matrices commuting with ``rho`` as sparse (i, j, coef) lists."""
    basis = []
    for i in range(NVARS):
        for j in range(NVARS):
            if i != j and sym.weights[i] == sym.weights[j]:
                basis.append([(i, j, 1)])
    for i in range(1, NVARS):
        basis.append([(0, 0, 1), (i, i, -1)])
    return basis


def infinitesimal_action(F: Polynomial, Y: Iterable[tuple[int, int, int]]) -> Polynomial:
    """``(Y.F)(x) = -grad F(x) . (Y x)``."""
    out = Polynomial(F.nvars, F.degree, {})
    for i, j, c in Y:
        out = out - Polynomial.variable(j, F.nvars) * F.diff(i) * c
    return out


def orbit_rank(F: Polynomial, sym: SymmetryType) -> int:
    """Rank of the tangent map of the centralizer orbit, scaling direction included."""
    monos = eigenspace_basis(sym).monomials
    rows = [infinitesimal_action(F, Y).coefficient_vector(monos) for Y in lie_algebra_basis(sym)]
    rows.append(F.coefficient_vector(monos))
    return exact.rank_exact(rows)


def moduli_dimension(sym: SymmetryType, seed: int = 0, n_seeds: int = 2, **sample_kw) -> int:
    """``dim V - orbit rank`` at random smooth members; all seeds must agree."""
    dim_v = len(eigenspace_basis(sym))
    ranks = []
    for s in range(seed, seed + n_seeds):
        smp = sample_smooth_member(sym, s, **sample_kw)
        ranks.append(orbit_rank(smp.form, sym))
    if len(set(ranks)) != 1:
        raise VerificationError(f"orbit ranks disagree across seeds: {ranks}")
    return dim_v - ranks[0]


@dataclass(frozen=True)
class ModuliReport:
    sym: SymmetryType  # canonical
    dim_V: int
    orbit_rank: int
    n: int
    zeta_exp: int  # relative to the canonical generator
    nprime: int
    signature: tuple[int, int]
    domain: DomainDescriptor
    bb: BBVerdict
    seeds_used: tuple[int, ...]
    hodge: dict = field(default_factory=dict, compare=False)
    label: Optional[str] = None
    bb_flag: Optional[str] = None

    @property
    def zeta(self) -> str:
        return zeta_description(self.sym.order, self.zeta_exp)

    def to_json(self) -> dict:
        return {
            "sym": self.sym.to_json(), "label": self.label, "dim_V": self.dim_V,
            "orbit_rank": self.orbit_rank, "n": self.n, "zeta_exp": self.zeta_exp, "zeta": self.zeta,
            "nprime": self.nprime, "signature": list(self.signature), "domain": str(self.domain),
            "bb": self.bb.is_bb, "bb_witnesses": [w.to_json() for w in self.bb.witnesses],
            "bb_flag": self.bb_flag, "seeds_used": list(self.seeds_used), "hodge": self.hodge,
        }


def _generator_power(sym: SymmetryType) -> Optional[int]:
    """Unit k with canonical(sym) reached from sym by shift then ``rho -> rho^k``."""
    target = canonicalize(sym)
    if _reduce_order(sym, 3) != sym:
        return None
    N = sym.order
    for c in range(N):
        for k in range(1, N + 1):
            if N > 1 and k % N == 0:
                continue
            w = (k * (sym.lambda_exp - 3 * c)) % N
            ws = tuple(sorted(k * (m + c) % N for m in sym.weights))
            if (ws, w) == (target.weights, target.lambda_exp):
                return k % N if N > 1 else 1
    return None


def analyze(sym: SymmetryType, seed: int = 0, n_seeds: int = 2, modulus: int = DEFAULT_MODULUS,
            exact_check: bool = False, bound: int = 20, retries: int = 8,
            first: Optional[SmoothSample] = None) -> ModuliReport:
    """Eigenspace, smooth member, Hodge data, moduli dimension, domain and BB verdict.

    Raises :class:`VerificationError` when ``n`` and ``n'`` differ.
    """
    if sym.lambda_exp is None:
        raise ValueError("analysis needs a character exponent")
    canon = canonicalize(sym)
    k = _generator_power(sym)
    work = sym if k is not None else canon
    k = k if k is not None else 1
    kw = dict(bound=bound, retries=retries, modulus=modulus, exact_check=exact_check)
    dim_v = len(eigenspace_basis(work))
    seeds = tuple(range(seed, seed + n_seeds))
    ranks, hodges = [], []
    for s in seeds:
        smp = first if (first is not None and s == seed) else sample_smooth_member(work, s, **kw)
        prof = hilbert_function(smp.form, work, None if exact_check else modulus)
        if prof.hilbert != SMOOTH_HILBERT:
            raise SingularFormError(f"sampled member has Hilbert function {prof.hilbert}")
        hodges.append(hodge_eigen(smp.form, work, profile=prof))
        ranks.append(orbit_rank(smp.form, work))
    if len(set(ranks)) != 1:
        raise VerificationError(f"orbit ranks disagree across seeds {seeds}: {ranks}")
    if any(h != hodges[0] for h in hodges):
        raise VerificationError(f"Hodge data disagree across seeds {seeds}")
    hodge = hodges[0]
    n = dim_v - ranks[0]
    npr, sig = nprime(hodge)
    if n != npr:
        raise VerificationError(f"{canon}: moduli dimension n={n} but Hodge count n'={npr}")
    zeta_exp = (k * hodge.zeta_exp) % canon.order
    numbers = {str((k * t) % canon.order): list(v) for t, v in hodge.numbers.items()}
    return ModuliReport(canon, dim_v, ranks[0], n, zeta_exp, npr, sig, classify_domain(hodge),
                        bb_verdict(canon), seeds, dict(sorted(numbers.items())))


# --- reference table --------------------------------------------------------

def load_golden() -> list[dict]:
    text = resources.files("symcubic").joinpath("data/prime_order_table.json").read_text()
    return json.loads(text)["rows"]


def reference_labels() -> dict[SymmetryType, dict]:
    """Canonical type -> reference row for the thirteen prime-order types."""
    return {canonicalize(SymmetryType.from_json(r["sym"])): r for r in load_golden()}


def annotate(report: ModuliReport) -> ModuliReport:
    ref = reference_labels().get(report.sym)
    if ref is None:
        return report
    flag = None
    if ref.get("bb") is None:
        flag = "no reference verdict; computed verdict reported"
    elif ref["bb"] != report.bb.is_bb:
        flag = "computed verdict differs from reference"
    return _replace(report, label=ref["label"], bb_flag=flag)


def _replace(report: ModuliReport, **kw) -> ModuliReport:
    from dataclasses import replace
    return replace(report, **kw)


@dataclass(frozen=True)
class ClassificationRow:
    sym: SymmetryType
    n: int
    zeta: str
    domain: DomainDescriptor
    bb: bool
    label: Optional[str] = None
    bb_flag: Optional[str] = None
    report: Optional[ModuliReport] = field(default=None, compare=False)

    def to_json(self) -> dict:
        return {"label": self.label, "sym": self.sym.to_json(), "n": self.n, "zeta": self.zeta,
                "domain": str(self.domain), "bb": self.bb, "bb_flag": self.bb_flag}


def classify_all(orders: Iterable[int], seed: int = 0, modulus: int = DEFAULT_MODULUS,
                 retries: int = 8, bound: int = 20, exact_check: bool = False) -> list[ClassificationRow]:
    """One row per canonical type of the given orders that has a smooth member."""
    rows = []
    for p in sorted(set(orders)):
        for sym in candidate_types(p):
            if not quasismooth_screen(sym):
                continue
            try:
                first = sample_smooth_member(sym, seed, bound=bound, retries=retries, modulus=modulus,
                                             exact_check=exact_check)
            except NoSmoothMember:
                log.debug("dropping %s: no smooth member", sym)
                continue
            rep = annotate(analyze(sym, seed, modulus=modulus, bound=bound, retries=retries,
                                   exact_check=exact_check, first=first))
            rows.append(ClassificationRow(rep.sym, rep.n, rep.zeta, rep.domain, rep.bb.is_bb,
                                          rep.label, rep.bb_flag, rep))
    rows.sort(key=lambda r: (r.sym.order, r.sym.weights, r.sym.lambda_exp))
    return rows
