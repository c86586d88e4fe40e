"""Color Lie superalgebras given by a homogeneous basis and structure constants."""
from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .errors import ColorLieError
from .grading import (Bicharacter, Cocycle, GroupElement, GroupSpec, gamma_from_cocycle,
                      quantum_plane_gamma, verify_bicharacter)
from .scalars import ONE, Scalar, UnitMonomial, as_scalar
from .validation import ValidationReport

Structure = Dict[Tuple[int, int], Dict[int, Scalar]]


def _clean(vec: Mapping[int, Scalar]) -> Dict[int, Scalar]:
    return {k: as_scalar(c) for k, c in sorted(vec.items()) if not as_scalar(c).is_zero()}


class ColorLieAlgebra:
    """A (G, gamma)-color Lie superalgebra ``<x_i, x_j> = sum_k c_ij^k x_k``.

    ``structure`` maps ordered index pairs to sparse result vectors; missing
    pairs bracket to zero.  Instances are treated as immutable.
    """

    def __init__(self, gamma: Bicharacter, basis: Sequence[Tuple[str, GroupElement]],
                 structure: Mapping[Tuple[int, int], Mapping[int, Scalar]] | None = None, name: str = ""):
        self.gamma = gamma
        self.names: Tuple[str, ...] = tuple(b[0] for b in basis)
        self.degrees: Tuple[GroupElement, ...] = tuple(b[1] for b in basis)
        if len(set(self.names)) != len(self.names):
            raise ColorLieError("basis names must be distinct")
        for d in self.degrees:
            if d.spec != gamma.spec:
                raise ColorLieError("basis degree does not belong to the grading group")
        n = len(self.names)
        self.structure: Structure = {}
        for (i, j), vec in (structure or {}).items():
            if not (0 <= i < n and 0 <= j < n) or any(not 0 <= k < n for k in vec):
                raise ColorLieError(f"structure constant index out of range at ({i},{j})")
            v = _clean(vec)
            if v:
                self.structure[(i, j)] = v
        self.name = name
        self._gam = [[gamma(self.degrees[i], self.degrees[j]) for j in range(n)] for i in range(n)]

    @property
    def group(self) -> GroupSpec:
        return self.gamma.spec

    @property
    def dim(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ColorLieError(f"unknown basis element {name!r}") from None

    def gamma_basis(self, i: int, j: int) -> UnitMonomial:
        return self._gam[i][j]

    def bracket_basis(self, i: int, j: int) -> Dict[int, Scalar]:
        return self.structure.get((i, j), {})

    def parity_of(self, i: int) -> int:
        v = self._gam[i][i]
        if v.exponent:
            raise ColorLieError(f"gamma({self.names[i]},{self.names[i]}) = {v} is not +1 or -1")
        return v.sign

    @property
    def odd(self) -> Tuple[bool, ...]:
        return tuple(self.parity_of(i) < 0 for i in range(self.dim))

    @property
    def even_dim(self) -> int:
        return sum(1 for o in self.odd if not o)

    @property
    def odd_dim(self) -> int:
        return sum(1 for o in self.odd if o)

    def is_abelian(self) -> bool:
        return not self.structure

    def is_honest(self) -> bool:
        """True when gamma is 1 on every pair of basis degrees (an ordinary Lie algebra)."""
        return all(u.is_one() for row in self._gam for u in row)

    def element(self, coeffs: Mapping) -> "LieElement":
        out = {}
        for k, c in coeffs.items():
            idx = self.index(k) if isinstance(k, str) else int(k)
            out[idx] = as_scalar(c)
        return LieElement(self, out)

    def basis_element(self, i) -> "LieElement":
        if isinstance(i, str):
            i = self.index(i)
        return LieElement(self, {i: ONE})

    def abelianized(self) -> "ColorLieAlgebra":
        """Same graded space and gamma with all brackets zero."""
        return ColorLieAlgebra(self.gamma, list(zip(self.names, self.degrees)), {}, self.name + "_gr" if self.name else "")

    def with_structure(self, structure, name=None) -> "ColorLieAlgebra":
        return ColorLieAlgebra(self.gamma, list(zip(self.names, self.degrees)), structure,
                               self.name if name is None else name)

    def __eq__(self, other):
        if not isinstance(other, ColorLieAlgebra):
            return NotImplemented
        return (self.gamma == other.gamma and self.names == other.names
                and self.degrees == other.degrees and self.structure == other.structure)

    def __hash__(self):
        return hash((self.names, self.degrees))

    def __repr__(self):
        return f"ColorLieAlgebra({self.name or 'unnamed'}, dim={self.dim})"


class LieElement:
    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: ColorLieAlgebra, coeffs: Mapping[int, Scalar]):
        self.algebra = algebra
        self.coeffs = {k: c for k, c in coeffs.items() if not c.is_zero()}

    def _same(self, other):
        if not isinstance(other, LieElement) or other.algebra is not self.algebra and other.algebra != self.algebra:
            raise ColorLieError("elements belong to different algebras")

    def __add__(self, other):
        self._same(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return LieElement(self.algebra, out)

    def __neg__(self):
        return LieElement(self.algebra, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        c = as_scalar(c)
        return LieElement(self.algebra, {k: v * c for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.algebra == other.algebra and self.coeffs == other.coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> GroupElement | None:
        degs = {self.algebra.degrees[k] for k in self.coeffs}
        return degs.pop() if len(degs) == 1 else None

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in sorted(self.coeffs.items()):
            name = self.algebra.names[k]
            if c.is_one():
                parts.append(name)
            elif c == -1:
                parts.append("-" + name)
            else:
                cs = str(c)
                parts.append(f"({cs})*{name}" if " " in cs else f"{cs}*{name}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    __repr__ = __str__


def bracket(a: LieElement, b: LieElement) -> LieElement:
    a._same(b)
    L = a.algebra
    out: Dict[int, Scalar] = {}
    for i, ci in a.coeffs.items():
        for j, cj in b.coeffs.items():
            vec = L.structure.get((i, j))
            if not vec:
                continue
            cij = ci * cj
            for k, c in vec.items():
                out[k] = out[k] + cij * c if k in out else cij * c
    return LieElement(L, out)


def _basis_bracket(L: ColorLieAlgebra, i: int, j: int) -> LieElement:
    return LieElement(L, L.bracket_basis(i, j))


def verify_color_axioms(L: ColorLieAlgebra) -> ValidationReport:
    report = ValidationReport(f"color Lie axioms ({L.name or 'algebra'})")
    report.merge(verify_bicharacter(L.gamma))
    if not report.ok:
        return report
    n = L.dim
    names = L.names
    for (i, j), vec in L.structure.items():
        target = L.degrees[i] + L.degrees[j]
        for k in vec:
            if L.degrees[k] != target:
                report.fail(f"gradedness fails: <{names[i]},{names[j]}> has a {names[k]} component "
                            f"of degree {L.degrees[k]}, expected {target}")
    for i in range(n):
        for j in range(i, n):
            lhs = _basis_bracket(L, i, j)
            rhs = _basis_bracket(L, j, i) * (-L.gamma_basis(i, j).to_scalar())
            report.checked += 1
            if lhs != rhs:
                report.fail(f"gamma-skew-symmetry fails on ({names[i]}, {names[j]}): "
                            f"<{names[i]},{names[j]}> = {lhs}, -gamma*<{names[j]},{names[i]}> = {rhs}")
    if not report.ok:
        return report
    basis = [L.basis_element(i) for i in range(n)]
    for x in range(n):
        for y in range(n):
            for z in range(n):
                report.checked += 1
                X, Y, Z = basis[x], basis[y], basis[z]
                total = (bracket(X, bracket(Y, Z)) * L.gamma_basis(z, x).to_scalar()
                         + bracket(Z, bracket(X, Y)) * L.gamma_basis(y, z).to_scalar()
                         + bracket(Y, bracket(Z, X)) * L.gamma_basis(x, y).to_scalar())
                if not total.is_zero():
                    report.fail(f"gamma-Jacobi fails on ({names[x]}, {names[y]}, {names[z]}): sum = {total}")
                    return report
    return report


def twist_lie(L: ColorLieAlgebra, sigma: Cocycle) -> ColorLieAlgebra:
    """``[x, y]^sigma = sigma(dx, dy) [x, y]`` over the bicharacter gamma * sigma / sigma^T."""
    if sigma.spec != L.group:
        raise ColorLieError("cocycle is defined on a different grading group")
    bad = sigma.torsion_violations()
    if bad:
        raise ColorLieError("invalid cocycle: " + "; ".join(bad))
    gamma = gamma_from_cocycle(L.gamma, sigma)
    structure = {}
    for (i, j), vec in L.structure.items():
        s = sigma(L.degrees[i], L.degrees[j]).to_scalar()
        structure[(i, j)] = {k: c * s for k, c in vec.items()}
    return ColorLieAlgebra(gamma, list(zip(L.names, L.degrees)), structure, L.name)


def from_brackets(gamma: Bicharacter, basis: Sequence[Tuple[str, GroupElement]],
                  brackets: Iterable[Tuple[int, int, Mapping[int, Scalar]]], name: str = "") -> ColorLieAlgebra:
    """Build from a partial bracket table; the partner of each given pair is
    filled by gamma-skew-symmetry unless it is given explicitly."""
    given: Structure = {}
    for i, j, vec in brackets:
        if (i, j) in given:
            raise ColorLieError(f"bracket ({i},{j}) given twice")
        given[(i, j)] = {k: as_scalar(c) for k, c in vec.items()}
    degs = [b[1] for b in basis]
    structure = dict(given)
    for (i, j), vec in given.items():
        if (j, i) not in given:
            g = gamma(degs[j], degs[i]).to_scalar()
            structure[(j, i)] = {k: -g * c for k, c in vec.items()}
    return ColorLieAlgebra(gamma, basis, structure, name)


def _free_basis(spec: GroupSpec, names):
    return [(nm, spec.generator(i)) for i, nm in enumerate(names)]


def _default_names(n):
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i + 1}" for i in range(n)]


CATALOG = ("abelian", "abelian_plus", "abelian_minus", "abelian_mixed", "heisenberg", "sl2", "aff1")


def builtin_algebra(name: str, n: int | None = None, gamma: Bicharacter | None = None,
                    degrees: Sequence[GroupElement] | None = None, odd: int = 1) -> ColorLieAlgebra:
    """Catalog of example algebras.

    ``abelian_plus(n)``: positively graded abelian, U(L) a color polynomial ring
    (the quantum plane for n = 2); ``abelian_minus(n)``: negatively graded
    abelian, U(L) a color exterior algebra; ``abelian_mixed(n, odd)``: the
    last ``odd`` generators odd; ``abelian(n)``: ordinary abelian Lie algebra
    graded by Z^n.  ``heisenberg``, ``sl2`` and ``aff1`` are ordinary Lie
    algebras.
    """
    if name in ("abelian", "abelian_plus", "abelian_minus", "abelian_mixed"):
        n = 2 if n is None else n
        if n < 0:
            raise ColorLieError("dimension must be nonnegative")
        if gamma is None:
            if name == "abelian":
                gamma = Bicharacter.trivial(GroupSpec(n))
            elif name == "abelian_plus":
                gamma = quantum_plane_gamma(n)
            elif name == "abelian_minus":
                gamma = quantum_plane_gamma(n, [True] * n)
            else:
                gamma = quantum_plane_gamma(n, [i >= n - odd for i in range(n)])
        spec = gamma.spec
        if degrees is None:
            if spec.ngens != n:
                raise ColorLieError("give explicit degrees when the group rank differs from n")
            basis = _free_basis(spec, _default_names(n))
        else:
            basis = list(zip(_default_names(n), degrees))
        label = name if n == 2 and name != "abelian_mixed" else f"{name}{n}"
        return ColorLieAlgebra(gamma, basis, {}, label)
    if name == "heisenberg":
        spec = GroupSpec(2)
        basis = [("x", spec.element(1, 0)), ("y", spec.element(0, 1)), ("z", spec.element(1, 1))]
        return from_brackets(Bicharacter.trivial(spec), basis, [(0, 1, {2: ONE})], "heisenberg")
    if name == "sl2":
        spec = GroupSpec(0)
        e = spec.identity()
        basis = [("e", e), ("f", e), ("h", e)]
        return from_brackets(Bicharacter.trivial(spec), basis,
                             [(0, 1, {2: ONE}), (2, 0, {0: Scalar(2)}), (2, 1, {1: Scalar(-2)})], "sl2")
    if name == "aff1":
        spec = GroupSpec(0)
        e = spec.identity()
        return from_brackets(Bicharacter.trivial(spec), [("x", e), ("y", e)], [(0, 1, {1: ONE})], "aff1")
    raise ColorLieError(f"unknown catalog algebra {name!r}; choose from {', '.join(CATALOG)}")


def classical_jacobi_violations(L: ColorLieAlgebra) -> List[Tuple[int, int, int]]:
    """Plain Jacobi check from dense structure tensors, ignoring gamma entirely."""
    n = L.dim
    c = [[[L.bracket_basis(i, j).get(k, Scalar(0)) for k in range(n)] for j in range(n)] for i in range(n)]
    bad = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for m in range(n):
                    s = Scalar(0)
                    for t in range(n):
                        s = s + c[j][k][t] * c[i][t][m] + c[k][i][t] * c[j][t][m] + c[i][j][t] * c[k][t][m]
                    if not s.is_zero():
                        bad.append((i, j, k))
                        break
    return bad


def even_part(L: ColorLieAlgebra) -> ColorLieAlgebra:
    """The subalgebra L+ spanned by the even basis vectors."""
    keep = [i for i in range(L.dim) if not L.odd[i]]
    pos = {i: t for t, i in enumerate(keep)}
    structure = {}
    for (i, j), vec in L.structure.items():
        if i in pos and j in pos:
            if any(k not in pos for k in vec):
                raise ColorLieError("even basis vectors do not span a subalgebra")
            structure[(pos[i], pos[j])] = {pos[k]: c for k, c in vec.items()}
    basis = [(L.names[i], L.degrees[i]) for i in keep]
    return ColorLieAlgebra(L.gamma, basis, structure, f"{L.name}+" if L.name else "")
