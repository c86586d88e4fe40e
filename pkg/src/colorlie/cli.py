"""Command-line front end: ``colorlie <command> ALGEBRA.json [options]``."""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass, field
from typing import List, Optional

from . import __version__
from .errors import ColorLieError, ParseError, UnsupportedError
from .gmod import adjoint_module, top_exterior_rep, trivial_module, twist_module, verify_module
from .grading import (Cocycle, gamma_from_cocycle, split_bicharacter)
from .homology import (ce_complex, color_ce_complex, ext_dims, ext_twist_compare, frobenius_check,
                       grade_of_trivial, hilbert_closed_form, hilbert_series, minimal_resolution)
from .io import (AlgebraFile, algebra_to_json, canonical_dumps, cocycle_from_file_data, load_algebra,
                 module_from_json)
from .liealg import ColorLieAlgebra, even_part, twist_lie, verify_color_axioms
from .parsing import parse_expression
from .uea import AlgebraPresentation, UEAElement, normalize, pbw_consistency_check

PASS, FAIL, INCONCLUSIVE, SKIP = "pass", "fail", "inconclusive", "skipped"


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""

    def to_json(self):
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class Report:
    command: List[str]
    checks: List[Check] = field(default_factory=list)
    payload: dict = field(default_factory=dict)
    text: List[str] = field(default_factory=list)
    show_checks: bool = True

    def add(self, name, ok, detail="", inconclusive=False):
        status = INCONCLUSIVE if inconclusive else (PASS if ok else FAIL)
        self.checks.append(Check(name, status, detail))

    @property
    def exit_code(self) -> int:
        return 1 if any(c.status == FAIL for c in self.checks) else 0

    def to_json(self):
        return {"version": __version__, "command": self.command,
                "checks": [c.to_json() for c in self.checks], "result": self.payload,
                "exit_code": self.exit_code}

    def render(self) -> str:
        lines = list(self.text)
        if self.checks and self.show_checks:
            width = max(len(c.name) for c in self.checks)
            for c in self.checks:
                lines.append(f"[{c.status:^12}] {c.name:<{width}}  {c.detail}".rstrip())
        return "\n".join(lines) + ("\n" if lines else "")


def _seed() -> int:
    raw = os.environ.get("COLORLIE_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise ColorLieError(f"COLORLIE_SEED must be an integer, got {raw!r}") from None


def _presentation(L: ColorLieAlgebra, use_gr: bool) -> AlgebraPresentation:
    P = AlgebraPresentation(L)
    return P.associated_graded() if use_gr else P


def _coeff_module(af: AlgebraFile, L: ColorLieAlgebra, spec: str):
    if spec == "trivial":
        return trivial_module(L)
    if spec == "top":
        return top_exterior_rep(L)
    if spec == "adjoint":
        return adjoint_module(L)
    if spec in af.modules:
        return af.modules[spec]
    if os.path.exists(spec):
        with open(spec, encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as e:
                raise ParseError(f"invalid JSON in module file: {e.msg}", e.lineno, e.colno) from None
        return module_from_json(L, data, os.path.basename(spec))
    raise ColorLieError(f"unknown coefficient module {spec!r} (trivial, top, adjoint, a module "
                        f"named in the algebra file, or a module JSON file)")


def _sigma(af: AlgebraFile, args) -> Cocycle:
    sigma = af.sigma
    if getattr(args, "sigma", None):
        with open(args.sigma, encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as e:
                raise ParseError(f"invalid JSON in sigma file: {e.msg}", e.lineno, e.colno) from None
        sigma = cocycle_from_file_data(af.lie.group, data)
    if sigma is None:
        raise ColorLieError("no cocycle given: add a 'sigma' entry to the algebra file or pass --sigma")
    return sigma


# -- commands -----------------------------------------------------------------

def cmd_validate(af: AlgebraFile, args, rep: Report):
    L = af.lie
    axioms = verify_color_axioms(L)
    rep.add("color Lie axioms (bicharacter, gradedness, skew symmetry, Jacobi)", axioms.ok,
            axioms.first or f"{L.dim} generators")
    pbw = pbw_consistency_check(AlgebraPresentation(L))
    rep.add("PBW overlaps resolve", pbw.ok, pbw.first or f"{pbw.checked} overlaps")
    for name, M in af.modules.items():
        mr = verify_module(M)
        rep.add(f"module {name}", mr.ok, mr.first or f"dim {M.dim}")
    rep.payload = {"name": L.name, "dim": L.dim, "even_dim": L.even_dim, "odd_dim": L.odd_dim,
                   "violations": axioms.violations + pbw.violations}


def cmd_normalize(af: AlgebraFile, args, rep: Report):
    P = AlgebraPresentation(af.lie)
    total: UEAElement = P.zero()
    for coeff, word in parse_expression(args.expr, P):
        total = total + normalize(P, word, coeff)
    rep.payload = {"expression": args.expr, "normal_form": str(total),
                   "terms": [{"monomial": P.monomial_str(m), "coeff": str(c)} for m, c in total.sorted_terms()]}
    rep.text.append(str(total))


def cmd_twist(af: AlgebraFile, args, rep: Report):
    sigma = _sigma(af, args)
    use = sigma.inverse() if args.inverse else sigma
    Ls = twist_lie(af.lie, use)
    modules = {name: twist_module(use, M, Ls) for name, M in af.modules.items()}
    rep.payload = algebra_to_json(Ls, sigma, modules)
    rep.show_checks = False
    rep.text.append(canonical_dumps(rep.payload).rstrip("\n"))


def cmd_split(af: AlgebraFile, args, rep: Report):
    L = af.lie
    gamma0, sigma = split_bicharacter(L.gamma)
    ok = gamma_from_cocycle(gamma0, sigma) == L.gamma
    rep.add("gamma = gamma0 * sigma / sigma^T", ok)
    # L = L0^sigma with L0 over gamma0
    L0 = twist_lie(L, sigma.inverse())
    modules = {name: twist_module(sigma.inverse(), M, L0) for name, M in af.modules.items()}
    rep.payload = algebra_to_json(L0, sigma, modules)
    rep.show_checks = False
    rep.text.append(canonical_dumps(rep.payload).rstrip("\n"))


def cmd_ext(af: AlgebraFile, args, rep: Report):
    L = af.lie
    M = _coeff_module(af, L, args.coeffs)
    if args.twist_compare:
        sigma = _sigma(af, args)
        plain, twisted, equal = ext_twist_compare(L, sigma, M)
        rep.add("Ext dimensions agree for L and its twist", equal, f"{plain.dims} vs {twisted.dims}")
        rep.payload = {"coeffs": args.coeffs, "plain": plain.to_json(), "twisted": twisted.to_json(),
                       "equal": equal}
        rep.text.append(f"Ext over U(L):       {plain.dims}")
        rep.text.append(f"Ext over U(L^sigma): {twisted.dims}")
        return
    C = ce_complex(L, M) if L.is_honest() else color_ce_complex(L, M)
    cv = C.verify()
    rep.add("d^2 = 0 and differentials graded", cv.ok, cv.first or "")
    res = ext_dims(C)
    rep.payload = {"coeffs": args.coeffs, "cochain_dims": C.dims(), **res.to_json()}
    rep.text.append(f"Ext^i(k, {args.coeffs}): {res.dims}")


def cmd_resolve(af: AlgebraFile, args, rep: Report):
    P = _presentation(af.lie, args.gr)
    tr = minimal_resolution(P, args.steps, args.max_weight)
    rep.add("resolution differentials compose to zero, minimal", tr.verified)
    rep.payload = tr.to_json()
    rep.text.append(f"Betti numbers: {tr.betti()}")
    pd = tr.projective_dimension()
    rep.text.append(f"pd(k) = {pd}" if pd is not None else f"pd(k) > {args.steps - 1} within the window")


def cmd_grade(af: AlgebraFile, args, rep: Report):
    P = _presentation(af.lie, args.gr)
    res = grade_of_trivial(P, args.max_weight)
    rep.payload = res.to_json()
    rep.text.append(f"Ext^i(k, A): {res.dims}" + ("" if res.conclusive else "  (window too small to be conclusive)"))


def cmd_hilbert(af: AlgebraFile, args, rep: Report):
    L = af.lie
    series = hilbert_series(AlgebraPresentation(L).associated_graded(), args.max_weight)
    closed = hilbert_closed_form(L.even_dim, L.odd_dim, args.max_weight)
    rep.add("Hilbert series of gr U(L) equals (1+t)^dim L- / (1-t)^dim L+", series == closed,
            f"{series}")
    rep.payload = {"series": series, "closed_form": closed}
    rep.text.append(" ".join(str(v) for v in series))


def cmd_frobenius(af: AlgebraFile, args, rep: Report):
    gram, ok, basis = frobenius_check(AlgebraPresentation(af.lie))
    P = AlgebraPresentation(af.lie)
    rep.add("Frobenius pairing is nondegenerate (Gram determinant a unit)", ok)
    rep.payload = {"basis": [P.monomial_str(m) for m in basis],
                   "gram": [[str(v) for v in row] for row in gram], "nondegenerate": ok}
    for row in gram:
        rep.text.append("  ".join(f"{str(v):>8}" for v in row))


def _resolution_checks(L: ColorLieAlgebra, rep: Report, max_weight: int):
    Lp = even_part(L)
    Pp = AlgebraPresentation(Lp)
    label = "U(L+)" if Pp.is_weight_graded() else "gr U(L+)"
    Pp = Pp if Pp.is_weight_graded() else Pp.associated_graded()
    n = Lp.dim
    steps = n + 1
    tr = minimal_resolution(Pp, steps, max(max_weight, steps))
    pd = tr.projective_dimension()
    rep.add(f"gldim {label} = dim L+ (pd of k)", tr.verified and pd == n,
            f"Betti {tr.betti()}, dim L+ = {n}")
    rep.payload["betti_even_part"] = tr.betti()
    P = AlgebraPresentation(L)
    if L.odd_dim and P.is_weight_graded():
        s = 5
        trf = minimal_resolution(P, s, max(max_weight, s))
        nonzero = all(b > 0 for b in trf.betti())
        rep.add("pd(k) over U(L) unbounded in the window (odd generators)", nonzero and trf.verified,
                f"Betti nonzero through step {s}: {trf.betti()}")
        rep.payload["betti"] = trf.betti()


def _grade_check(L: ColorLieAlgebra, rep: Report, max_weight: int):
    P = AlgebraPresentation(L)
    label = "U(L)" if P.is_weight_graded() else "gr U(L)"
    A = P if P.is_weight_graded() else P.associated_graded()
    res = grade_of_trivial(A, max_weight)
    first = next((i for i, d in enumerate(res.dims) if d), None)
    ok = first == L.even_dim
    rep.add(f"grade of k against {label} = dim L+", ok, f"Ext^i(k, A) dims {res.dims}",
            inconclusive=not res.conclusive and not ok)
    rep.payload["grade"] = res.to_json()


def cmd_report(af: AlgebraFile, args, rep: Report):
    L = af.lie
    rng = random.Random(_seed())
    rep.payload = {"name": L.name, "dim": L.dim, "even_dim": L.even_dim, "odd_dim": L.odd_dim}
    cmd_validate(af, args, rep)
    rep.payload = {"name": L.name, "dim": L.dim, "even_dim": L.even_dim, "odd_dim": L.odd_dim}
    rep.text.append(f"{L.name or 'algebra'}: dim {L.dim} (even {L.even_dim}, odd {L.odd_dim})")
    if rep.exit_code:
        rep.add("remaining checks", True, "not run: the algebra or a module is invalid", inconclusive=True)
        return
    series = hilbert_series(AlgebraPresentation(L).associated_graded(), 10)
    rep.add("Hilbert series of gr U(L) matches PBW closed form (weight <= 10)",
            series == hilbert_closed_form(L.even_dim, L.odd_dim, 10), " ".join(map(str, series)))
    if L.group.torsion_orders:
        rep.add("split gamma = gamma0 * sigma / sigma^T", True, "torsion present, split not attempted",
                inconclusive=True)
    else:
        gamma0, sigma = split_bicharacter(L.gamma)
        pairs = [(L.group.random_element(rng), L.group.random_element(rng)) for _ in range(100)]
        back = gamma_from_cocycle(gamma0, sigma)
        ok = all(back(g, h) == L.gamma(g, h) for g, h in pairs)
        rep.add("split gamma = gamma0 * sigma / sigma^T (100 random pairs)", ok)
    _resolution_checks(L, rep, args.max_weight)
    _grade_check(L, rep, args.max_weight)
    if L.odd_dim and not L.even_dim and L.is_abelian():
        _, ok, _ = frobenius_check(AlgebraPresentation(L))
        rep.add("exterior algebra is Frobenius (Gram determinant a unit)", ok)
    if not L.odd_dim:
        honest = L.is_honest()
        base = L if honest else None
        sigma = None
        if not honest and not L.group.torsion_orders:
            gamma0, sigma = split_bicharacter(L.gamma)
            cand = twist_lie(L, sigma.inverse())
            if cand.is_honest():
                base = cand
        if base is None:
            rep.add("cochain checks", True, "gamma is not a twist of the trivial bicharacter", inconclusive=True)
        else:
            C = ce_complex(base, trivial_module(base))
            cv = C.verify()
            rep.add("Chevalley-Eilenberg complex: d^2 = 0, graded differentials", cv.ok, cv.first or "")
            kk = ext_dims(C)
            rep.payload["ext_trivial"] = kk.dims
            top = top_exterior_rep(base)
            top_dims = ext_dims(ce_complex(base, top)).dims
            rep.add("Ext^n(k, top exterior power) = k", top_dims[-1] == 1, f"dims {top_dims}")
            rep.payload["ext_top"] = top_dims
            if sigma is None and af.sigma is not None:
                sigma = af.sigma
            if sigma is not None:
                plain, twisted, equal = ext_twist_compare(base, sigma, trivial_module(base))
                rep.add("Ext(k, k) unchanged by the cocycle twist", equal, f"{plain.dims} vs {twisted.dims}")


COMMANDS = {
    "validate": cmd_validate, "normalize": cmd_normalize, "twist": cmd_twist, "split": cmd_split,
    "ext": cmd_ext, "resolve": cmd_resolve, "grade": cmd_grade, "hilbert": cmd_hilbert,
    "frobenius": cmd_frobenius, "report": cmd_report,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ColorLieError(f"usage error: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="colorlie", description="Color Lie superalgebras: PBW normal forms, twists and homology.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("algebra", help="algebra definition file (JSON)")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        return sp

    add("validate", "check the axioms and PBW overlaps")
    sp = add("normalize", "PBW normal form of an expression")
    sp.add_argument("-e", "--expr", required=True)
    for name, help_ in (("twist", "emit the sigma-twisted algebra"),):
        sp = add(name, help_)
        sp.add_argument("--sigma", help="cocycle JSON file (defaults to the file's sigma)")
        sp.add_argument("--inverse", action="store_true", help="twist by the inverse cocycle")
    add("split", "split gamma as gamma0 * sigma / sigma^T and emit the untwisted algebra")
    sp = add("ext", "Ext^i(k, M) from the cochain complex")
    sp.add_argument("--coeffs", default="trivial")
    sp.add_argument("--twist-compare", action="store_true")
    sp.add_argument("--sigma")
    for name, help_ in (("resolve", "minimal graded free resolution of k"),
                        ("grade", "Ext^i(k, A) in a weight window")):
        sp = add(name, help_)
        if name == "resolve":
            sp.add_argument("--steps", type=int, default=4)
        sp.add_argument("--max-weight", type=int, default=6)
        sp.add_argument("--gr", action="store_true", help="use the associated graded algebra")
    sp = add("hilbert", "Hilbert series of gr U(L)")
    sp.add_argument("--max-weight", type=int, default=10)
    add("frobenius", "Frobenius pairing of an exterior algebra")
    sp = add("report", "run every applicable check")
    sp.add_argument("--max-weight", type=int, default=6)
    return p


def _limits(args):
    for attr, hi in (("steps", 12), ("max_weight", 40)):
        v = getattr(args, attr, None)
        if v is not None and not 0 <= v <= hi:
            raise ColorLieError(f"--{attr.replace('_', '-')} must be between 0 and {hi}")


def _error_json(e: Exception) -> dict:
    err = {"type": type(e).__name__, "message": getattr(e, "message", None) or str(e)}
    if isinstance(e, ParseError):
        err["line"], err["column"] = e.line, e.column
    return {"version": __version__, "error": err}


def run(argv: List[str]):
    """Run one command; returns (exit_code, stdout_text)."""
    want_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
        _limits(args)
        af = load_algebra(args.algebra)
        rep = Report(list(argv))
        COMMANDS[args.command](af, args, rep)
    except (ValueError, TypeError, KeyError, OSError, ArithmeticError, RecursionError) as e:
        # ColorLieError is a ValueError; the others are mapped to structured errors too
        if isinstance(e, UnsupportedError):
            code = 3
        else:
            code = 2
        if want_json:
            return code, canonical_dumps(_error_json(e))
        return code, f"error: {e}\n"
    if args.json:
        return rep.exit_code, canonical_dumps(rep.to_json())
    return rep.exit_code, rep.render()


def main(argv: Optional[List[str]] = None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if code in (0, 1) else sys.stderr
    stream.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
