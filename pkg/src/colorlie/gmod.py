"""Finite-dimensional G-graded modules over U(L), graded maps and sigma-twists.

Action matrices act on column vectors: ``actions[x][r][c]`` is the
coefficient of basis vector r in ``x . v_c``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from . import linalg
from .errors import ColorLieError, UnsupportedError
from .grading import Cocycle, GroupElement
from .liealg import ColorLieAlgebra, twist_lie
from .linalg import Matrix, Vector
from .scalars import ONE, ZERO, Scalar, as_scalar
from .validation import ValidationReport


class GradedModule:
    def __init__(self, lie: ColorLieAlgebra, basis: Sequence[Tuple[str, GroupElement]],
                 actions: Sequence[Matrix], name: str = ""):
        self.lie = lie
        self.names = tuple(b[0] for b in basis)
        self.degrees = tuple(b[1] for b in basis)
        d = len(self.names)
        if len(actions) != lie.dim:
            raise ColorLieError(f"need one action matrix per generator ({lie.dim}), got {len(actions)}")
        acts = []
        for x, mat in enumerate(actions):
            if len(mat) != d or any(len(row) != d for row in mat):
                raise ColorLieError(f"action of {lie.names[x]} must be a {d}x{d} matrix")
            acts.append([[as_scalar(v) for v in row] for row in mat])
        self.actions: List[Matrix] = acts
        for g in self.degrees:
            if g.spec != lie.group:
                raise ColorLieError("module degree does not belong to the grading group")
        self.name = name

    @property
    def dim(self) -> int:
        return len(self.names)

    def blocks(self) -> Dict[GroupElement, List[int]]:
        out: Dict[GroupElement, List[int]] = {}
        for i, g in enumerate(self.degrees):
            out.setdefault(g, []).append(i)
        return out

    def act(self, x: int, v: Vector) -> Vector:
        return linalg.matvec(self.actions[x], v)

    def __eq__(self, other):
        if not isinstance(other, GradedModule):
            return NotImplemented
        return (self.lie == other.lie and self.names == other.names
                and self.degrees == other.degrees and self.actions == other.actions)

    def __repr__(self):
        return f"GradedModule({self.name or 'unnamed'}, dim={self.dim})"


def verify_module(M: GradedModule) -> ValidationReport:
    L = M.lie
    report = ValidationReport(f"module {M.name or ''}".strip())
    d = M.dim
    for x in range(L.dim):
        dx = L.degrees[x]
        for r in range(d):
            for c in range(d):
                if not M.actions[x][r][c].is_zero() and M.degrees[r] != dx + M.degrees[c]:
                    report.fail(f"gradedness: {L.names[x]} maps {M.names[c]} (degree {M.degrees[c]}) "
                                f"onto {M.names[r]} (degree {M.degrees[r]})")
    for j in range(L.dim):
        for i in range(L.dim):
            report.checked += 1
            lhs = linalg.sub(linalg.matmul(M.actions[j], M.actions[i], cols=d),
                             linalg.scale(linalg.matmul(M.actions[i], M.actions[j], cols=d),
                                          L.gamma_basis(j, i).to_scalar()))
            rhs = linalg.zeros(d, d)
            for k, c in L.bracket_basis(j, i).items():
                rhs = linalg.add(rhs, linalg.scale(M.actions[k], c))
            if lhs != rhs:
                report.fail(f"relation fails for ({L.names[j]}, {L.names[i]}): "
                            f"rho({L.names[j]})rho({L.names[i]}) - gamma*rho({L.names[i]})rho({L.names[j]}) "
                            f"!= rho(<{L.names[j]},{L.names[i]}>)")
    return report


def trivial_module(L: ColorLieAlgebra, degree: GroupElement | None = None) -> GradedModule:
    deg = degree if degree is not None else L.group.identity()
    return GradedModule(L, [("1", deg)], [[[ZERO]] for _ in range(L.dim)], "trivial")


def adjoint_module(L: ColorLieAlgebra) -> GradedModule:
    n = L.dim
    acts = []
    for x in range(n):
        mat = linalg.zeros(n, n)
        for c in range(n):
            for k, v in L.bracket_basis(x, c).items():
                mat[k][c] = v
        acts.append(mat)
    return GradedModule(L, list(zip(L.names, L.degrees)), acts, "adjoint")


def top_exterior_rep(L: ColorLieAlgebra) -> GradedModule:
    """The one-dimensional module on the top wedge power, ``y`` acting by tr(ad y)."""
    if any(L.odd) or not L.is_honest():
        raise UnsupportedError("top exterior representation needs an ordinary Lie algebra "
                               "(gamma trivial on all basis degrees)")
    n = L.dim
    deg = L.group.identity()
    for g in L.degrees:
        deg = deg + g
    acts = []
    for y in range(n):
        tr = ZERO
        for i in range(n):
            tr = tr + L.bracket_basis(y, i).get(i, ZERO)
        acts.append([[tr]])
    label = "^".join(L.names) if n else "1"
    return GradedModule(L, [(label, deg)], acts, "top")


def direct_sum(M: GradedModule, N: GradedModule) -> GradedModule:
    if M.lie != N.lie:
        raise ColorLieError("modules over different algebras")
    a, b = M.dim, N.dim
    acts = []
    for x in range(M.lie.dim):
        mat = linalg.zeros(a + b, a + b)
        for r in range(a):
            mat[r][:a] = M.actions[x][r]
        for r in range(b):
            mat[a + r][a:] = N.actions[x][r]
        acts.append(mat)
    basis = [(f"{n}_1", g) for n, g in zip(M.names, M.degrees)] + \
            [(f"{n}_2", g) for n, g in zip(N.names, N.degrees)]
    return GradedModule(M.lie, basis, acts, f"{M.name}+{N.name}")


def twist_module(sigma: Cocycle, M: GradedModule, twisted_lie: ColorLieAlgebra | None = None) -> GradedModule:
    """``x . v = sigma(dx, dv) x v``; the result is a module over ``L^sigma``."""
    L = M.lie
    if sigma.spec != L.group:
        raise ColorLieError("cocycle is defined on a different grading group")
    bad = sigma.torsion_violations()
    if bad:
        raise ColorLieError("invalid cocycle: " + "; ".join(bad))
    Ls = twisted_lie if twisted_lie is not None else twist_lie(L, sigma)
    acts = []
    for x in range(L.dim):
        dx = L.degrees[x]
        col_scale = [sigma(dx, g).to_scalar() for g in M.degrees]
        acts.append([[v * col_scale[c] if not v.is_zero() else v for c, v in enumerate(row)]
                     for row in M.actions[x]])
    return GradedModule(Ls, list(zip(M.names, M.degrees)), acts, M.name)


@dataclass
class GradedMap:
    domain: GradedModule
    codomain: GradedModule
    matrix: Matrix  # codomain.dim x domain.dim

    def __post_init__(self):
        self.matrix = [[as_scalar(v) for v in row] for row in self.matrix]
        if len(self.matrix) != self.codomain.dim or any(len(r) != self.domain.dim for r in self.matrix):
            raise ColorLieError("map matrix has the wrong shape")

    def compose(self, other: "GradedMap") -> "GradedMap":
        """``self o other``."""
        return GradedMap(other.domain, self.codomain,
                         linalg.matmul(self.matrix, other.matrix, cols=other.domain.dim))


def verify_map(phi: GradedMap) -> ValidationReport:
    V, W = phi.domain, phi.codomain
    report = ValidationReport("graded map")
    if V.lie != W.lie:
        report.fail("domain and codomain are modules over different algebras")
        return report
    for r in range(W.dim):
        for c in range(V.dim):
            if not phi.matrix[r][c].is_zero() and W.degrees[r] != V.degrees[c]:
                report.fail(f"map is not degree preserving at ({W.names[r]}, {V.names[c]})")
    for x in range(V.lie.dim):
        lhs = linalg.matmul(phi.matrix, V.actions[x], cols=V.dim)
        rhs = linalg.matmul(W.actions[x], phi.matrix, cols=V.dim)
        if lhs != rhs:
            report.fail(f"map does not commute with the action of {V.lie.names[x]}")
    return report


def twist_map(sigma: Cocycle, phi: GradedMap) -> GradedMap:
    """Same linear map between the twisted modules."""
    V = twist_module(sigma, phi.domain)
    W = twist_module(sigma, phi.codomain, V.lie)
    return GradedMap(V, W, [list(r) for r in phi.matrix])


def hom_space(V: GradedModule, W: GradedModule) -> List[GradedMap]:
    """Basis of degree-preserving U-module maps V -> W."""
    if V.lie != W.lie:
        raise ColorLieError("modules over different algebras")
    slots = [(r, c) for r in range(W.dim) for c in range(V.dim) if W.degrees[r] == V.degrees[c]]
    index = {rc: t for t, rc in enumerate(slots)}
    eqs: Matrix = []
    for x in range(V.lie.dim):
        A, B = V.actions[x], W.actions[x]
        # (phi A - B phi)[r][c] = sum_t phi[r][t] A[t][c] - sum_t B[r][t] phi[t][c]
        for r in range(W.dim):
            for c in range(V.dim):
                row = [ZERO] * len(slots)
                for t in range(V.dim):
                    s = index.get((r, t))
                    if s is not None and not A[t][c].is_zero():
                        row[s] = row[s] + A[t][c]
                for t in range(W.dim):
                    s = index.get((t, c))
                    if s is not None and not B[r][t].is_zero():
                        row[s] = row[s] - B[r][t]
                if any(not v.is_zero() for v in row):
                    eqs.append(row)
    sols = linalg.nullspace(eqs, len(slots))
    maps = []
    for sol in sols:
        mat = linalg.zeros(W.dim, V.dim)
        for (r, c), v in zip(slots, sol):
            mat[r][c] = v
        maps.append(GradedMap(V, W, mat))
    return maps


@dataclass
class Submodule:
    """Graded submodule: canonical basis vectors in ambient coordinates plus
    the induced module structure on them."""

    ambient: GradedModule
    basis: Matrix
    pivots: List[int]
    module: GradedModule

    @property
    def dim(self) -> int:
        return len(self.basis)


def _submodule(ambient: GradedModule, vectors_by_block: Dict[GroupElement, Matrix], label: str) -> Submodule:
    basis: Matrix = []
    degrees: List[GroupElement] = []
    for g in sorted(vectors_by_block, key=lambda g: min(i for i, d in enumerate(ambient.degrees) if d == g)):
        red = linalg.canonical_basis(vectors_by_block[g], ambient.dim)
        basis.extend(red)
        degrees.extend([g] * len(red))
    pivots = [next(j for j, v in enumerate(b) if not v.is_zero()) for b in basis]
    acts = []
    for x in range(ambient.lie.dim):
        mat = linalg.zeros(len(basis), len(basis))
        for t, b in enumerate(basis):
            img = ambient.act(x, b)
            coords = [img[p] for p in pivots]
            recon = [ZERO] * ambient.dim
            for cf, bb in zip(coords, basis):
                if not cf.is_zero():
                    recon = [u + cf * v for u, v in zip(recon, bb)]
            if recon != img:
                raise ColorLieError(f"{label} is not stable under {ambient.lie.names[x]}")
            for s, cf in enumerate(coords):
                mat[s][t] = cf
        acts.append(mat)
    names = [f"{label}{t}" for t in range(len(basis))]
    module = GradedModule(ambient.lie, list(zip(names, degrees)), acts, label)
    return Submodule(ambient, basis, pivots, module)


def kernel_image(phi: GradedMap) -> Tuple[Submodule, Submodule]:
    report = verify_map(phi)
    if not report.ok:
        raise ColorLieError("not a graded module map: " + report.violations[0])
    V, W = phi.domain, phi.codomain
    ker: Dict[GroupElement, Matrix] = {}
    img: Dict[GroupElement, Matrix] = {}
    wblocks = W.blocks()
    for g, cols in V.blocks().items():
        rows = wblocks.get(g, [])
        sub = [[phi.matrix[r][c] for c in cols] for r in rows]
        for v in linalg.nullspace(sub, len(cols)):
            full = [ZERO] * V.dim
            for c, x in zip(cols, v):
                full[c] = x
            ker.setdefault(g, []).append(full)
        for c in cols:
            colvec = [phi.matrix[r][c] for r in range(W.dim)]
            if any(not x.is_zero() for x in colvec):
                img.setdefault(g, []).append(colvec)
    return _submodule(V, ker, "k"), _submodule(W, img, "i")


def module_from_json(L: ColorLieAlgebra, data, name: str = "") -> GradedModule:
    from .io import module_from_json as _load

    return _load(L, data, name)
