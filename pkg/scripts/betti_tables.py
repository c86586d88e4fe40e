"""Print Betti tables of the trivial module over color polynomial/exterior algebras."""
import argparse

from colorlie.homology import minimal_resolution
from colorlie.liealg import builtin_algebra
from colorlie.uea import AlgebraPresentation


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--steps", type=int, default=5)
    ap.add_argument("--max-weight", type=int, default=6)
    args = ap.parse_args()
    cases = [("abelian_plus", 1), ("abelian_plus", 2), ("abelian_plus", 3),
             ("abelian_minus", 1), ("abelian_minus", 2), ("abelian_minus", 3), ("abelian_mixed", 2)]
    for name, n in cases:
        L = builtin_algebra(name, n)
        tr = minimal_resolution(AlgebraPresentation(L), args.steps, args.max_weight)
        pd = tr.projective_dimension()
        print(f"{L.name:<16} even={L.even_dim} odd={L.odd_dim}  Betti {tr.betti()}  "
              f"pd(k) = {pd if pd is not None else '> ' + str(args.steps - 1)}")
        for i, row in enumerate(tr.betti_table()):
            print(f"    step {i}: " + " ".join(f"{v:>2}" for v in row))


if __name__ == "__main__":
    main()
