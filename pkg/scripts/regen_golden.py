"""Regenerate tests/golden/*.json from tests/golden/manifest.json.

Run from anywhere; commands execute with the repository root as working directory.
"""
import json
import os
from pathlib import Path

from colorlie.cli import run

ROOT = Path(__file__).resolve().parents[1]
GOLDEN = ROOT / "tests" / "golden"

INVOCATIONS = {
    "validate_heisenberg": ["validate", "algebras/heisenberg.json", "--json"],
    "validate_jacobi_broken": ["validate", "algebras/jacobi_broken.json", "--json"],
    "normalize_quantum_plane": ["normalize", "algebras/quantum_plane.json", "-e", "y*x", "--json"],
    "normalize_exterior_square": ["normalize", "algebras/exterior2.json", "-e", "(x + y)^2", "--json"],
    "normalize_heisenberg": ["normalize", "algebras/heisenberg.json", "-e", "y^2*x^2", "--json"],
    "normalize_sl2": ["normalize", "algebras/sl2.json", "--expr=-1/2*q^-1*h*e*f", "--json"],
    "twist_heisenberg": ["twist", "algebras/heisenberg.json", "--json"],
    "split_heisenberg_q": ["split", "algebras/heisenberg_q.json", "--json"],
    "split_quantum_plane": ["split", "algebras/quantum_plane.json", "--json"],
    "ext_sl2_trivial": ["ext", "algebras/sl2.json", "--coeffs", "trivial", "--json"],
    "ext_heisenberg_adjoint": ["ext", "algebras/heisenberg.json", "--coeffs", "adjoint", "--json"],
    "ext_aff1_top": ["ext", "algebras/aff1.json", "--coeffs", "top", "--json"],
    "ext_heisenberg_twist": ["ext", "algebras/heisenberg.json", "--twist-compare", "--json"],
    "ext_abelian2_twist": ["ext", "algebras/abelian2.json", "--twist-compare", "--json"],
    "resolve_quantum_plane": ["resolve", "algebras/quantum_plane.json", "--steps", "3", "--max-weight", "6", "--json"],
    "resolve_exterior2": ["resolve", "algebras/exterior2.json", "--steps", "5", "--max-weight", "6", "--json"],
    "grade_quantum_plane": ["grade", "algebras/quantum_plane.json", "--max-weight", "6", "--json"],
    "hilbert_heisenberg": ["hilbert", "algebras/heisenberg.json", "--max-weight", "10", "--json"],
    "frobenius_exterior2": ["frobenius", "algebras/exterior2.json", "--json"],
    "report_quantum_plane": ["report", "algebras/quantum_plane.json", "--json"],
    "report_exterior2": ["report", "algebras/exterior2.json", "--json"],
    "report_sl2": ["report", "algebras/sl2.json", "--json"],
    "error_resolve_heisenberg": ["resolve", "algebras/heisenberg.json", "--json"],
    "error_parse": ["normalize", "algebras/sl2.json", "-e", "(e + f", "--json"],
}


def main():
    GOLDEN.mkdir(parents=True, exist_ok=True)
    os.chdir(ROOT)
    manifest = {}
    for name, argv in INVOCATIONS.items():
        code, out = run(argv)
        (GOLDEN / f"{name}.json").write_text(out)
        manifest[name] = {"argv": argv, "exit_code": code}
    (GOLDEN / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    print(f"wrote {len(manifest)} golden outputs")


if __name__ == "__main__":
    main()
