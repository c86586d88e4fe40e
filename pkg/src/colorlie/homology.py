"""Cochain complexes, Ext dimensions, minimal resolutions and related checks.

Ext(k, M) for finite-dimensional M is computed from the cochains
Hom(wedge^i L, M).  Ext(k, A) for a weight-graded algebra A is computed from
a minimal graded free resolution of k truncated at a maximal weight.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .errors import ColorLieError, UnsupportedError
from .gmod import GradedModule, twist_module, verify_module
from .grading import Cocycle, GroupElement
from .liealg import ColorLieAlgebra, twist_lie
from .linalg import EchelonBasis, Matrix
from .scalars import ONE, ZERO, Scalar
from .uea import AlgebraPresentation, Monomial, _accumulate
from .validation import ValidationReport


def exterior_power_basis(L: ColorLieAlgebra, i: int) -> List[Tuple[Tuple[int, ...], GroupElement]]:
    if not 0 <= i <= L.dim:
        raise ColorLieError(f"exterior degree {i} out of range 0..{L.dim}")
    out = []
    for idx in combinations(range(L.dim), i):
        d = L.group.identity()
        for a in idx:
            d = d + L.degrees[a]
        out.append((idx, d))
    return out


@dataclass
class CochainComplex:
    """``differentials[i]`` maps ``spaces[i]`` to ``spaces[i + 1]`` (rows index the target)."""

    spaces: List[List[GroupElement]]
    differentials: List[Matrix]
    labels: List[List[str]] = field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.spaces)

    def dims(self) -> List[int]:
        return [len(s) for s in self.spaces]

    def verify(self) -> ValidationReport:
        report = ValidationReport("cochain complex")
        for i, d in enumerate(self.differentials):
            src, tgt = self.spaces[i], self.spaces[i + 1]
            for r, row in enumerate(d):
                for c, v in enumerate(row):
                    if not v.is_zero() and tgt[r] != src[c]:
                        report.fail(f"d^{i} is not graded at entry ({r},{c})")
                        break
        for i in range(len(self.differentials) - 1):
            report.checked += 1
            prod = linalg.matmul(self.differentials[i + 1], self.differentials[i],
                                 inner=len(self.spaces[i + 1]), cols=len(self.spaces[i]))
            if not linalg.is_zero_matrix(prod):
                report.fail(f"d^{i + 1} d^{i} != 0")
        return report

    def block_ranks(self, i: int) -> Dict[GroupElement, int]:
        """Rank of d^i restricted to each degree block."""
        if not 0 <= i < len(self.differentials):
            return {}
        src, tgt = self.spaces[i], self.spaces[i + 1]
        out = {}
        for g in sorted(set(src), key=str):
            cols = [c for c, h in enumerate(src) if h == g]
            rows = [r for r, h in enumerate(tgt) if h == g]
            sub = [[self.differentials[i][r][c] for c in cols] for r in rows]
            out[g] = linalg.rank(sub) if rows else 0
        return out


@dataclass
class ExtResult:
    dims: List[int]
    by_degree: Dict[int, Dict[str, int]] = field(default_factory=dict)
    max_weight: Optional[int] = None
    conclusive: bool = True

    def to_json(self):
        out = {"dims": list(self.dims)}
        if self.by_degree:
            out["by_degree"] = {str(i): dict(sorted(v.items())) for i, v in sorted(self.by_degree.items())}
        out["truncation"] = {"max_weight": self.max_weight, "conclusive": self.conclusive}
        return out


def _even_check(L: ColorLieAlgebra):
    if any(L.odd):
        raise UnsupportedError("cochain complexes are only built for algebras without odd generators")


def _sort_sign(L: ColorLieAlgebra, k: int, rest: Tuple[int, ...]):
    """Place ``k`` into the increasing tuple ``rest``; return (tuple, scalar) or None
    when ``k`` repeats.  Uses f(.., x, y, ..) = -gamma(x, y) f(.., y, x, ..)."""
    if k in rest:
        return None
    sign = ONE
    pos = 0
    for r in rest:
        if r < k:
            sign = sign * (-L.gamma_basis(k, r).to_scalar())
            pos += 1
    return rest[:pos] + (k,) + rest[pos:], sign


def color_ce_complex(L: ColorLieAlgebra, M: GradedModule) -> CochainComplex:
    """Cochains Hom(wedge^i L, M) with the gamma-signed Chevalley-Eilenberg differential.

    For an ordinary Lie algebra all gamma factors are 1 and this is the
    classical complex.  Cochain basis element (I, b) sends x_I to m_b.
    """
    _even_check(L)
    if M.lie != L:
        raise ColorLieError("module is over a different algebra")
    rep = verify_module(M)
    if not rep.ok:
        raise ColorLieError("invalid module: " + rep.first)
    n, dm = L.dim, M.dim
    gam = lambda g, h: L.gamma(g, h).to_scalar()  # noqa: E731
    wedge = [exterior_power_basis(L, i) for i in range(n + 1)]
    spaces, labels, index = [], [], []
    for i in range(n + 1):
        degs, labs, idx = [], [], {}
        for I, dI in wedge[i]:
            for b in range(dm):
                idx[(I, b)] = len(degs)
                degs.append(M.degrees[b] - dI)
                labs.append(f"{'^'.join(L.names[a] for a in I) or '1'}->{M.names[b]}")
        spaces.append(degs)
        labels.append(labs)
        index.append(idx)
    diffs = []
    for i in range(n):
        d = linalg.zeros(len(spaces[i + 1]), len(spaces[i]))
        for J, _ in wedge[i + 1]:
            for a in range(dm):
                row = index[i + 1][(J, a)]
                for (I, b), col in index[i].items():
                    fdeg = spaces[i][col]
                    if fdeg != spaces[i + 1][row]:
                        continue
                    val = ZERO
                    # action terms
                    left = L.group.identity()
                    for p, j in enumerate(J):
                        if J[:p] + J[p + 1:] == I:
                            act = M.actions[j][a][b]
                            if not act.is_zero():
                                s = ONE if p % 2 == 0 else -ONE
                                val = val + s * gam(fdeg + left, L.degrees[j]) * act
                        left = left + L.degrees[j]
                    # bracket terms
                    if a == b:
                        for p in range(len(J)):
                            for t in range(p + 1, len(J)):
                                j, k = J[p], J[t]
                                br = L.bracket_basis(j, k)
                                if not br:
                                    continue
                                rest = J[:p] + J[p + 1:t] + J[t + 1:]
                                before_j = L.group.identity()
                                for u in J[:p]:
                                    before_j = before_j + L.degrees[u]
                                before_k = L.group.identity()
                                for u in J[:t]:
                                    if u != j:
                                        before_k = before_k + L.degrees[u]
                                pre = (ONE if (p + t) % 2 == 0 else -ONE) \
                                    * gam(before_j, L.degrees[j]) * gam(before_k, L.degrees[k])
                                for m, c in br.items():
                                    placed = _sort_sign(L, m, rest)
                                    if placed is not None and placed[0] == I:
                                        val = val + pre * c * placed[1]
                    if not val.is_zero():
                        d[row][col] = val
        diffs.append(d)
    C = CochainComplex(spaces, diffs, labels)
    check = C.verify()
    if not check.ok:
        raise ColorLieError("cochain complex is not a complex: " + check.first)
    return C


def ce_complex(L: ColorLieAlgebra, M: GradedModule) -> CochainComplex:
    if any(L.odd) or not L.is_honest():
        raise UnsupportedError("the Chevalley-Eilenberg complex is built for ordinary Lie algebras; "
                               "reach color algebras through a twist (see ext_twist_compare)")
    return color_ce_complex(L, M)


def ext_dims(C: CochainComplex) -> ExtResult:
    dims, by_degree = [], {}
    ranks = [C.block_ranks(i) for i in range(len(C.differentials))]
    for i, space in enumerate(C.spaces):
        per: Dict[str, int] = {}
        for g in sorted(set(space), key=str):
            size = sum(1 for h in space if h == g)
            out_rank = ranks[i].get(g, 0) if i < len(ranks) else 0
            in_rank = ranks[i - 1].get(g, 0) if i >= 1 else 0
            v = size - out_rank - in_rank
            if v:
                per[str(g)] = v
        dims.append(sum(per.values()))
        if per:
            by_degree[i] = per
    return ExtResult(dims, by_degree)


def ext_twist_compare(L: ColorLieAlgebra, sigma: Cocycle, M: GradedModule):
    """Ext over U(L) from the ordinary complex and over U(L^sigma) from the
    gamma-signed complex of the twisted algebra with twisted coefficients."""
    plain = ext_dims(ce_complex(L, M))
    Ls = twist_lie(L, sigma)
    Ms = twist_module(sigma, M, Ls)
    twisted = ext_dims(color_ce_complex(Ls, Ms))
    return plain, twisted, plain.dims == twisted.dims


# -- resolutions over weight-graded algebras ----------------------------------

Vec = Dict[Tuple[int, Monomial], Scalar]


def _require_weight_graded(A: AlgebraPresentation):
    if not A.is_weight_graded():
        raise UnsupportedError("relations are not homogeneous in generator weight; pass the associated graded algebra")


def _left_mul(A: AlgebraPresentation, m: Monomial, v: Vec) -> Vec:
    out: Vec = {}
    for (h, mu), c in v.items():
        for nu, c2 in A._mul_mono(m, mu).items():
            _accumulate(out, (h, nu), c * c2)
    return out


@dataclass
class ResolutionTrace:
    steps: int
    max_weight: int
    gen_weights: List[List[int]]
    differentials: List[List[Vec]]
    verified: bool = True

    def betti(self) -> List[int]:
        return [len(g) for g in self.gen_weights]

    def betti_table(self) -> List[List[int]]:
        return [[sum(1 for d in g if d == w) for w in range(self.max_weight + 1)] for g in self.gen_weights]

    def projective_dimension(self) -> Optional[int]:
        b = self.betti()
        for i, x in enumerate(b):
            if x == 0:
                return i - 1
        return None

    def to_json(self):
        return {"betti": self.betti(), "betti_table": self.betti_table(),
                "truncation": {"steps": self.steps, "max_weight": self.max_weight},
                "verified": self.verified}


def _free_basis(A: AlgebraPresentation, weights: Sequence[int], w: int):
    basis = []
    for g, d in enumerate(weights):
        if d <= w:
            for m in sorted(A.monomials_of_weight(w - d)):
                basis.append((g, m))
    return basis


def minimal_resolution(A: AlgebraPresentation, steps: int, max_weight: int) -> ResolutionTrace:
    """Minimal graded free resolution of k, F_0 .. F_steps, through weight max_weight."""
    _require_weight_graded(A)
    if steps < 0 or max_weight < 0:
        raise ColorLieError("steps and max_weight must be nonnegative")
    gen_weights: List[List[int]] = [[0]]
    diffs: List[List[Vec]] = [[]]
    for i in range(1, steps + 1):
        src_w = gen_weights[i - 1]
        src_d = diffs[i - 1]
        new_w: List[int] = []
        new_d: List[Vec] = []
        kernel_by_weight: Dict[int, List[Vec]] = {}
        for w in range(max_weight + 1):
            basis = _free_basis(A, src_w, w)
            if not basis:
                continue
            pos = {b: t for t, b in enumerate(basis)}
            if i == 1:
                # kernel of the augmentation: everything of positive weight
                kern = [] if w == 0 else [{b: ONE} for b in basis]
            else:
                tgt = _free_basis(A, gen_weights[i - 2], w)
                tpos = {b: t for t, b in enumerate(tgt)}
                mat = linalg.zeros(len(tgt), len(basis))
                for c, (g, m) in enumerate(basis):
                    for key, val in _left_mul(A, m, src_d[g]).items():
                        mat[tpos[key]][c] = val
                kern = [{basis[t]: v for t, v in enumerate(vec) if not v.is_zero()}
                        for vec in linalg.nullspace(mat, len(basis))]
            kernel_by_weight[w] = kern
            ech = EchelonBasis(len(basis))
            for v in kernel_by_weight.get(w - 1, []):
                for x in range(A.n):
                    gen = tuple(1 if t == x else 0 for t in range(A.n))
                    prod = _left_mul(A, gen, v)
                    vec = [ZERO] * len(basis)
                    for key, val in prod.items():
                        vec[pos[key]] = val
                    ech.add(vec)
            for v in kern:
                vec = [ZERO] * len(basis)
                for key, val in v.items():
                    vec[pos[key]] = val
                if ech.add(vec):
                    new_w.append(w)
                    new_d.append(dict(v))
        gen_weights.append(new_w)
        diffs.append(new_d)
    trace = ResolutionTrace(steps, max_weight, gen_weights, diffs)
    trace.verified = verify_resolution(A, trace).ok
    return trace


def verify_resolution(A: AlgebraPresentation, trace: ResolutionTrace) -> ValidationReport:
    report = ValidationReport("resolution")
    for i in range(1, len(trace.differentials)):
        for g, v in enumerate(trace.differentials[i]):
            for (h, m), c in v.items():
                if sum(m) == 0:
                    report.fail(f"step {i} generator {g}: constant coefficient, resolution not minimal")
            if i == 1:
                continue
            img: Vec = {}
            for (h, m), c in v.items():
                for key, val in _left_mul(A, m, trace.differentials[i - 1][h]).items():
                    _accumulate(img, key, c * val)
            report.checked += 1
            if img:
                report.fail(f"d^{i - 1} d^{i} != 0 on generator {g}")
    return report


def grade_of_trivial(A: AlgebraPresentation, max_weight: int, top: Optional[int] = None) -> ExtResult:
    """dim Ext^i_A(k, A) for i = 0..top from Hom_A(F_*, A) in the weight window."""
    _require_weight_graded(A)
    n = A.n if top is None else top
    trace = minimal_resolution(A, n + 1, max_weight)
    W = max_weight
    gw = trace.gen_weights

    def hom_basis(i, w):
        out = []
        if i < 0 or i >= len(gw):
            return out, True
        ok = True
        for h, d in enumerate(gw[i]):
            if d + w < 0:
                continue
            if d + w > W:
                ok = False
                continue
            for m in sorted(A.monomials_of_weight(d + w)):
                out.append((h, m))
        return out, ok

    def delta(i, w, src, tgt):
        # (delta phi)(e_g) = phi(d e_g) = sum c * m * phi(e_h)
        tpos = {b: t for t, b in enumerate(tgt)}
        mat = linalg.zeros(len(tgt), len(src))
        for c, (h, mu) in enumerate(src):
            for g, v in enumerate(trace.differentials[i + 1]):
                for (h2, m), coeff in v.items():
                    if h2 != h:
                        continue
                    for nu, c2 in A._mul_mono(m, mu).items():
                        key = (g, nu)
                        if key in tpos:
                            mat[tpos[key]][c] = mat[tpos[key]][c] + coeff * c2
        return mat

    dims, by_degree = [], {}
    for i in range(n + 1):
        total = 0
        per = {}
        for w in range(-W, W + 1):
            prev, ok0 = hom_basis(i - 1, w)
            cur, ok1 = hom_basis(i, w)
            nxt, ok2 = hom_basis(i + 1, w)
            if not (ok0 and ok1 and ok2) or not cur:
                continue
            r_out = linalg.rank(delta(i, w, cur, nxt)) if nxt else 0
            r_in = linalg.rank(delta(i - 1, w, prev, cur)) if prev else 0
            v = len(cur) - r_out - r_in
            if v:
                per[str(w)] = v
                total += v
        dims.append(total)
        if per:
            by_degree[i] = per
    return ExtResult(dims, by_degree, max_weight, max_weight >= 2 * A.n)


# -- Frobenius pairing and Hilbert series ------------------------------------

def frobenius_check(A: AlgebraPresentation):
    """Gram matrix of (a, b) -> coefficient of the top monomial in a*b."""
    if not all(A.odd):
        raise ColorLieError("the Frobenius pairing is defined for exterior algebras (all generators odd)")
    _require_weight_graded(A)
    basis = [m for w in range(A.n + 1) for m in sorted(A.monomials_of_weight(w), reverse=True)]
    top = (1,) * A.n
    gram = [[A._mul_mono(a, b).get(top, ZERO) for b in basis] for a in basis]
    det = linalg.det(gram)
    return gram, det.as_unit() is not None, basis


def hilbert_series(A: AlgebraPresentation, max_weight: int) -> List[int]:
    return [len(A.monomials_of_weight(w)) for w in range(max_weight + 1)]


def hilbert_closed_form(even_dim: int, odd_dim: int, max_weight: int) -> List[int]:
    """Coefficients of (1+t)^odd_dim / (1-t)^even_dim."""
    out = []
    for w in range(max_weight + 1):
        if even_dim == 0:
            out.append(comb(odd_dim, w))
        else:
            out.append(sum(comb(odd_dim, k) * comb(w - k + even_dim - 1, even_dim - 1)
                           for k in range(min(odd_dim, w) + 1)))
    return out
