"""Write the example algebra files under algebras/."""
import sys
from pathlib import Path

from colorlie.gmod import adjoint_module
from colorlie.grading import Cocycle, UnitMonomial
from colorlie.io import algebra_to_json, canonical_dumps
from colorlie.liealg import builtin_algebra, twist_lie

OUT = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parents[1] / "algebras")


def q_cocycle(spec):
    return Cocycle.from_function(spec, lambda i, j: UnitMonomial(1, 1) if (i, j) == (0, 1) else UnitMonomial(1, 0))


def broken():
    data = algebra_to_json(builtin_algebra("sl2"))
    data["name"] = "jacobi_broken"
    data["basis"] = [{"name": n, "degree": []} for n in ("x", "y", "z")]
    data["brackets"] = [
        {"i": 0, "j": 1, "result": [{"k": 1, "coeff": "1"}]},
        {"i": 0, "j": 2, "result": [{"k": 2, "coeff": "1"}]},
        {"i": 1, "j": 2, "result": [{"k": 0, "coeff": "1"}]},
    ]
    return data


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    files = {}
    qp = builtin_algebra("abelian_plus", 2)
    files["quantum_plane"] = algebra_to_json(qp)
    files["exterior2"] = algebra_to_json(builtin_algebra("abelian_minus", 2))
    files["exterior3"] = algebra_to_json(builtin_algebra("abelian_minus", 3))
    files["mixed2"] = algebra_to_json(builtin_algebra("abelian_mixed", 2))
    files["sl2"] = algebra_to_json(builtin_algebra("sl2"))
    files["aff1"] = algebra_to_json(builtin_algebra("aff1"))
    files["abelian3"] = algebra_to_json(builtin_algebra("abelian", 3))
    ab2 = builtin_algebra("abelian", 2)
    files["abelian2"] = algebra_to_json(ab2, q_cocycle(ab2.group))
    H = builtin_algebra("heisenberg")
    sigma = q_cocycle(H.group)
    files["heisenberg"] = algebra_to_json(H, sigma, {"adjoint": adjoint_module(H)})
    files["heisenberg_q"] = algebra_to_json(twist_lie(H, sigma))
    files["jacobi_broken"] = broken()
    for name, data in files.items():
        data["name"] = name
        (OUT / f"{name}.json").write_text(canonical_dumps(data))
    print(f"wrote {len(files)} files to {OUT}")


if __name__ == "__main__":
    main()
