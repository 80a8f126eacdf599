"""Command line interface.

Exit codes: 0 success, 1 verification failure (n != n', golden mismatch),
2 invalid input.
"""
from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional

from . import __version__
from .boundary import bb_verdict, chi_form, verify_veronese_singularity
from .exact import DEFAULT_MODULUS, format_fraction, parse_fraction
from .io import REPORT_SCHEMA, dumps_report, lattice_from_json, polynomial_from_json, polynomial_to_json, read_json
from .jacobian import (NoSmoothMember, SingularFormError, hilbert_function, hodge_eigen, nprime,
                       smoothness_certificate, zeta_description)
from .lattice import (boundary_subspace_j, boundary_subspace_vsigma, cm_line_to_plane,
                      cyclotomic_eigenlattice, eigenlattice, isotropic_vectors, verify_isometry)
from .moduli import VerificationError, analyze, annotate, classify_all, classify_domain, load_golden
from .symmetry import SymmetryType, canonicalize

EXIT_OK, EXIT_VERIFY, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    modulus: int = DEFAULT_MODULUS
    exact: bool = False
    format: str = "table"
    out: Optional[str] = None


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError as exc:
        raise InputError(f"expected comma-separated integers, got {text!r}") from exc


def _vectors(text: str) -> list[list[int]]:
    return [_int_list(part) for part in text.split(";") if part.strip()]


def _sym_from_args(args, need_lambda: bool = True) -> SymmetryType:
    if args.order is None or args.weights is None:
        raise InputError("--order and --weights are required")
    weights = _int_list(args.weights)
    if len(weights) != 6:
        raise InputError(f"expected 6 weights, got {len(weights)}")
    if args.order < 1:
        raise InputError("--order must be positive")
    lam = getattr(args, "lam", None)
    if lam is None and need_lambda:
        raise InputError("--lambda is required")
    return SymmetryType(args.order, tuple(weights), lam)


def _optional_sym(args) -> Optional[SymmetryType]:
    if getattr(args, "order", None) is None and getattr(args, "weights", None) is None:
        return None
    return _sym_from_args(args)


# --- subcommands ------------------------------------------------------------

def cmd_analyze(args, cfg: RunConfig):
    sym = _sym_from_args(args, need_lambda=False)
    lams = [sym.lambda_exp] if sym.lambda_exp is not None else list(range(sym.order))
    reports, seen = [], set()
    for w in lams:
        s = SymmetryType(sym.order, sym.weights, w)
        if canonicalize(s) in seen:
            continue
        seen.add(canonicalize(s))
        try:
            reports.append(annotate(analyze(s, cfg.seed, modulus=cfg.modulus, exact_check=cfg.exact)).to_json())
        except NoSmoothMember as exc:
            if sym.lambda_exp is not None:
                raise InputError(str(exc)) from exc
    if sym.lambda_exp is not None:
        return reports[0]
    return {"reports": reports}


def cmd_classify(args, cfg: RunConfig):
    primes = _int_list(args.primes)
    if not primes or any(p < 2 for p in primes):
        raise InputError("--primes needs integers >= 2")
    rows = classify_all(primes, cfg.seed, modulus=cfg.modulus, exact_check=cfg.exact)
    payload = {"rows": [r.to_json() for r in rows], "count": len(rows)}
    if args.check_golden:
        payload["golden"] = check_golden(rows, primes)
        if not payload["golden"]["ok"]:
            raise VerificationError(payload)
    return payload


def check_golden(rows, primes) -> dict:
    golden = [g for g in load_golden() if g["sym"]["order"] in set(primes)]
    by_label = {r.label: r for r in rows}
    problems = []
    if len(rows) != len(golden):
        problems.append(f"row count {len(rows)} != {len(golden)}")
    for g in golden:
        r = by_label.get(g["label"])
        if r is None:
            problems.append(f"{g['label']} missing")
            continue
        if r.n != g["n"]:
            problems.append(f"{g['label']}: n={r.n} expected {g['n']}")
        if str(r.domain) != g["domain"]:
            problems.append(f"{g['label']}: domain {r.domain} expected {g['domain']}")
        if g["bb"] is not None and r.bb != g["bb"]:
            problems.append(f"{g['label']}: bb={r.bb} expected {g['bb']}")
    return {"ok": not problems, "problems": problems, "expected_rows": len(golden)}


def cmd_smooth(args, cfg: RunConfig):
    F = polynomial_from_json(read_json(args.poly))
    cert = smoothness_certificate(F, _optional_sym(args), cfg.modulus, cfg.exact)
    return cert.to_json()


def cmd_hodge(args, cfg: RunConfig):
    F = polynomial_from_json(read_json(args.poly))
    sym = _optional_sym(args) or SymmetryType(1, (0,) * 6, 0)
    prof = hilbert_function(F, sym, None if cfg.exact else cfg.modulus)
    h = hodge_eigen(F, sym, profile=prof)
    n, sig = nprime(h)
    out = h.to_json()
    out.update({"hilbert": list(prof.hilbert), "nprime": n, "signature": list(sig),
                "zeta": zeta_description(h.order, h.zeta_exp), "domain": str(classify_domain(h))})
    return out


def cmd_bb(args, cfg: RunConfig):
    sym = _sym_from_args(args)
    out = bb_verdict(sym).to_json()
    out["sym"] = canonicalize(sym).to_json()
    return out


def cmd_chi(args, cfg: RunConfig):
    if args.verify_veronese:
        return {"ok": verify_veronese_singularity()}
    a = parse_fraction(args.a) if args.a is not None else 0
    b = parse_fraction(args.b) if args.b is not None else 0
    try:
        F = chi_form(a, b)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    out = polynomial_to_json(F)
    out["text"] = str(F)
    return out


def _subspace_json(S):
    return {"rank": S.rank, "basis": [[format_fraction(x) for x in row] for row in S.basis]}


def cmd_lattice(args, cfg: RunConfig):
    L, g, arrangement = lattice_from_json(read_json(args.lattice))
    op = args.lattice_op
    if op in ("verify", "eigen", "cyclotomic") and g is None:
        raise InputError("lattice file has no isometry")
    if op == "verify":
        ok, order = verify_isometry(L, g)
        return {"ok": ok, "order": order, "signature": list(L.signature())}
    if op == "eigen":
        E = eigenlattice(L, g, args.sign)
        return {"basis": [list(v) for v in E.basis], "gram": [list(r) for r in E.gram],
                "signature": list(E.signature), "rank": E.rank}
    if op == "cyclotomic":
        E = cyclotomic_eigenlattice(L, g, args.p)
        return {"basis": [list(v) for v in E.basis], "gram": [list(r) for r in E.gram],
                "signature": list(E.signature), "rank": E.rank, "isotropic": E.isotropic}
    if op == "isotropic":
        vs = isotropic_vectors(L, args.height)
        return {"height": args.height, "count": len(vs), "vectors": [list(v) for v in vs]}
    if op == "j":
        return _subspace_json(boundary_subspace_j(_vectors(args.line), arrangement, L))
    if op == "vsigma":
        return _subspace_json(boundary_subspace_vsigma(_vectors(args.plane), arrangement, L))
    if op == "cm":
        S = cm_line_to_plane(_int_list(args.e), _int_list(args.f), args.D, L)
        return {"plane": None if S is None else _subspace_json(S)}
    raise InputError(f"unknown lattice operation {op}")


# --- rendering ---------------------------------------------------------------

def _render_table(command: str, result) -> str:
    if command == "classify":
        lines = [f"{'label':8} {'order':>5} {'weights':18} {'w':>2} {'n':>3} {'zeta':8} {'domain':11} bb"]
        for r in result["rows"]:
            s = r["sym"]
            lines.append(f"{r['label'] or '-':8} {s['order']:>5} {','.join(map(str, s['weights'])):18} "
                         f"{s['lambda_exp']:>2} {r['n']:>3} {r['zeta']:8} {r['domain']:11} "
                         f"{str(r['bb']).lower()}{'  *' if r['bb_flag'] else ''}")
        lines.append(f"{result['count']} rows")
        if "golden" in result:
            lines.append("golden check: " + ("ok" if result["golden"]["ok"] else "FAILED"))
        return "\n".join(lines) + "\n"
    if isinstance(result, dict):
        return "".join(f"{k}: {v}\n" for k, v in result.items())
    return f"{result}\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--modulus", type=int, default=DEFAULT_MODULUS, help="prime for modular ranks")
    common.add_argument("--exact", action="store_true", help="confirm modular deficiencies over Q")
    common.add_argument("--json", action="store_true", help="emit the JSON report")
    common.add_argument("--out", help="write the report to this path")
    common.add_argument("-v", "--verbose", action="store_true")

    symargs = argparse.ArgumentParser(add_help=False)
    symargs.add_argument("--order", type=int)
    symargs.add_argument("--weights", help="six comma-separated weights")
    symargs.add_argument("--lambda", dest="lam", type=int, help="character exponent")

    p = argparse.ArgumentParser(prog="symcubic", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common, symargs], help="full report for one symmetry type")
    c = sub.add_parser("classify", parents=[common], help="classification table for prime orders")
    c.add_argument("--primes", default="2,3,5,7,11")
    c.add_argument("--check-golden", action="store_true", help="compare with the bundled reference table")
    s = sub.add_parser("smooth", parents=[common, symargs], help="smoothness certificate of a cubic")
    s.add_argument("--poly", required=True)
    h = sub.add_parser("hodge", parents=[common, symargs], help="character-split Hodge numbers")
    h.add_argument("--poly", required=True)
    sub.add_parser("bb", parents=[common, symargs], help="Baily-Borel criterion")
    x = sub.add_parser("chi", parents=[common], help="the chi family of cubics")
    x.add_argument("--a")
    x.add_argument("--b")
    x.add_argument("--verify-veronese", action="store_true")

    lat = sub.add_parser("lattice", help="lattice operations")
    lsub = lat.add_subparsers(dest="lattice_op", required=True)
    for name in ("verify", "eigen", "cyclotomic", "isotropic", "j", "vsigma", "cm"):
        q = lsub.add_parser(name, parents=[common])
        q.add_argument("--lattice", required=True)
        if name == "eigen":
            q.add_argument("--sign", type=int, choices=[1, -1], required=True)
        elif name == "cyclotomic":
            q.add_argument("--p", type=int, required=True)
        elif name == "isotropic":
            q.add_argument("--height", type=int, default=3)
        elif name == "j":
            q.add_argument("--line", required=True)
        elif name == "vsigma":
            q.add_argument("--plane", required=True, help="two vectors separated by ';'")
        elif name == "cm":
            q.add_argument("--e", required=True)
            q.add_argument("--f", required=True)
            q.add_argument("--D", type=int, required=True)
    return p


COMMANDS = {"analyze": cmd_analyze, "classify": cmd_classify, "smooth": cmd_smooth, "hodge": cmd_hodge,
            "bb": cmd_bb, "chi": cmd_chi, "lattice": cmd_lattice}


def _command_echo(args) -> dict:
    skip = {"seed", "modulus", "exact", "json", "out", "verbose"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    cfg = RunConfig(args.seed, args.modulus, args.exact, "json" if args.json else "table", args.out)
    code = EXIT_OK
    try:
        result = COMMANDS[args.command](args, cfg)
    except VerificationError as exc:
        code = EXIT_VERIFY
        result = exc.args[0] if exc.args and isinstance(exc.args[0], dict) else {"error": str(exc)}
    except (InputError, ValueError, SingularFormError, NoSmoothMember) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report = {"schema": REPORT_SCHEMA, "version": __version__, "command": _command_echo(args),
              "config": {k: v for k, v in asdict(cfg).items() if k != "out"}, "result": result}
    text = dumps_report(report) if cfg.format == "json" else _render_table(args.command, result)
    if cfg.out:
        Path(cfg.out).write_text(dumps_report(report))
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
