"""Finitely generated abelian grading groups and their bilinear characters.

Groups are written additively in coordinates, ``G = Z^r x Z/m_1 x ... x Z/m_s``.
Bicharacters and cocycles are stored by their values on pairs of generators
and extended multiplicatively:

    value(g, h) = prod_{i,j} value(e_i, e_j) ** (g_i * h_j)

Bilinear maps satisfy the 2-cocycle identity automatically, so a
:class:`Cocycle` needs no further axioms beyond torsion compatibility.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Sequence, Tuple

from .errors import ColorLieError, UnsupportedError
from .scalars import UNIT_ONE, UnitMonomial, unit_pow
from .validation import ValidationReport


@dataclass(frozen=True)
class GroupSpec:
    free_rank: int = 0
    torsion_orders: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion_orders", tuple(int(m) for m in self.torsion_orders))
        if self.free_rank < 0:
            raise ColorLieError("free_rank must be nonnegative")
        if any(m < 2 for m in self.torsion_orders):
            raise ColorLieError("torsion orders must be at least 2")

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion_orders)

    def element(self, *coords) -> "GroupElement":
        if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
            coords = tuple(coords[0])
        if len(coords) != self.ngens:
            raise ColorLieError(f"expected {self.ngens} coordinates, got {len(coords)}")
        return GroupElement(self, self._reduce(tuple(int(c) for c in coords)))

    def identity(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.ngens)

    def generator(self, i: int) -> "GroupElement":
        c = [0] * self.ngens
        c[i] = 1
        return self.element(c)

    def _reduce(self, coords: Tuple[int, ...]) -> Tuple[int, ...]:
        if not self.torsion_orders:
            return coords
        r = self.free_rank
        return coords[:r] + tuple(c % m for c, m in zip(coords[r:], self.torsion_orders))

    def random_element(self, rng: random.Random, bound: int = 3) -> "GroupElement":
        free = [rng.randint(-bound, bound) for _ in range(self.free_rank)]
        tors = [rng.randrange(m) for m in self.torsion_orders]
        return GroupElement(self, tuple(free + tors))

    def to_json(self):
        return {"free_rank": self.free_rank, "torsion_orders": list(self.torsion_orders)}


@dataclass(frozen=True)
class GroupElement:
    spec: GroupSpec
    coords: Tuple[int, ...]

    @property
    def free_part(self) -> Tuple[int, ...]:
        return self.coords[: self.spec.free_rank]

    @property
    def torsion_part(self) -> Tuple[int, ...]:
        return self.coords[self.spec.free_rank:]

    def _check(self, other: "GroupElement"):
        if not isinstance(other, GroupElement) or other.spec != self.spec:
            raise ColorLieError("group elements belong to different groups")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(self.spec, self.spec._reduce(tuple(a + b for a, b in zip(self.coords, other.coords))))

    def __neg__(self) -> "GroupElement":
        return GroupElement(self.spec, self.spec._reduce(tuple(-a for a in self.coords)))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def is_identity(self) -> bool:
        return not any(self.coords)

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"GroupElement{self}"


def group_op(g: GroupElement, h: GroupElement) -> GroupElement:
    return g + h


@dataclass(frozen=True)
class _BilinearMap:
    spec: GroupSpec
    gen_matrix: Tuple[Tuple[UnitMonomial, ...], ...]
    _sign_bits: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _exps: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.spec.ngens
        mat = tuple(tuple(UnitMonomial(*v) if not isinstance(v, UnitMonomial) else v for v in row)
                    for row in self.gen_matrix)
        if len(mat) != n or any(len(row) != n for row in mat):
            raise ColorLieError(f"generator matrix must be {n}x{n}")
        object.__setattr__(self, "gen_matrix", mat)
        object.__setattr__(self, "_sign_bits", tuple(tuple(0 if u.sign > 0 else 1 for u in row) for row in mat))
        object.__setattr__(self, "_exps", tuple(tuple(u.exponent for u in row) for row in mat))

    @classmethod
    def trivial(cls, spec: GroupSpec):
        n = spec.ngens
        return cls(spec, tuple(tuple(UNIT_ONE for _ in range(n)) for _ in range(n)))

    @classmethod
    def from_function(cls, spec: GroupSpec, fn):
        """Build from ``fn(i, j) -> UnitMonomial`` on generator indices."""
        n = spec.ngens
        return cls(spec, tuple(tuple(fn(i, j) for j in range(n)) for i in range(n)))

    def __call__(self, g, h) -> UnitMonomial:
        gc = g.coords if isinstance(g, GroupElement) else tuple(g)
        hc = h.coords if isinstance(h, GroupElement) else tuple(h)
        return _evaluate(self._sign_bits, self._exps, gc, hc)

    def transpose(self):
        n = self.spec.ngens
        return type(self)(self.spec, tuple(tuple(self.gen_matrix[j][i] for j in range(n)) for i in range(n)))

    def inverse(self):
        return type(self)(self.spec, tuple(tuple(u.inverse() for u in row) for row in self.gen_matrix))

    def torsion_violations(self) -> List[str]:
        out = []
        r = self.spec.free_rank
        n = self.spec.ngens
        for t, m in enumerate(self.spec.torsion_orders):
            i = r + t
            for j in range(n):
                for a, b in ((i, j), (j, i)):
                    if not unit_pow(self.gen_matrix[a][b], m).is_one():
                        out.append(f"value on (e{a + 1},e{b + 1}) = {self.gen_matrix[a][b]} "
                                   f"is not an {m}-th root of unity")
        return sorted(set(out))

    def matrix_strings(self) -> List[List[str]]:
        return [[str(u) for u in row] for row in self.gen_matrix]

    def to_json(self):
        return {"matrix": self.matrix_strings()}


@lru_cache(maxsize=1 << 16)
def _evaluate(sign_bits, exps, gc, hc) -> UnitMonomial:
    parity = 0
    exponent = 0
    for i, gi in enumerate(gc):
        if not gi:
            continue
        srow, erow = sign_bits[i], exps[i]
        for j, hj in enumerate(hc):
            if hj:
                p = gi * hj
                parity += srow[j] * p
                exponent += erow[j] * p
    return UnitMonomial(-1 if parity % 2 else 1, exponent)


class Bicharacter(_BilinearMap):
    """Skew-symmetric bicharacter, validated by :func:`verify_bicharacter`."""


class Cocycle(_BilinearMap):
    """Multiplicatively bilinear 2-cocycle with values in the units of Q(q)."""


def bichar_eval(gamma: Bicharacter, g: GroupElement, h: GroupElement) -> UnitMonomial:
    return gamma(g, h)


def verify_bicharacter(gamma: Bicharacter) -> ValidationReport:
    report = ValidationReport("bicharacter")
    n = gamma.spec.ngens
    m = gamma.gen_matrix
    for i in range(n):
        d = m[i][i]
        if d.exponent != 0:
            report.fail(f"diagonal value gamma(e{i + 1},e{i + 1}) = {d} is not +1 or -1")
        for j in range(i, n):
            if not (m[i][j] * m[j][i]).is_one():
                report.fail(f"skew-symmetry fails on (e{i + 1},e{j + 1}): "
                            f"{m[i][j]} * {m[j][i]} != 1")
    for msg in gamma.torsion_violations():
        report.fail("torsion: " + msg)
    return report


def parity(gamma: Bicharacter, g: GroupElement) -> int:
    """+1 if gamma(g, g) = 1 (even), -1 if gamma(g, g) = -1 (odd)."""
    v = gamma(g, g)
    if v.exponent != 0:
        raise ColorLieError(f"gamma({g},{g}) = {v} is not +1 or -1; bicharacter invalid")
    return v.sign


def parity_bicharacter(gamma: Bicharacter) -> Bicharacter:
    """The sign bicharacter: -1 exactly on pairs of odd elements."""
    spec = gamma.spec
    odd = [parity(gamma, spec.generator(i)) < 0 for i in range(spec.ngens)]
    return Bicharacter.from_function(spec, lambda i, j: UnitMonomial(-1 if odd[i] and odd[j] else 1, 0))


def gamma_from_cocycle(gamma0: Bicharacter, sigma: Cocycle) -> Bicharacter:
    if gamma0.spec != sigma.spec:
        raise ColorLieError("bicharacter and cocycle live on different groups")
    spec = gamma0.spec
    g0, s = gamma0.gen_matrix, sigma.gen_matrix
    gamma = Bicharacter.from_function(spec, lambda i, j: g0[i][j] * s[i][j] * s[j][i].inverse())
    bad = gamma.torsion_violations()
    if bad:
        raise ColorLieError("twisted bicharacter is incompatible with torsion: " + "; ".join(bad))
    return gamma


def split_bicharacter(gamma: Bicharacter) -> Tuple[Bicharacter, Cocycle]:
    """Write ``gamma = gamma0 * sigma / sigma^T`` with gamma0 the parity sign form.

    Only free abelian groups are handled; sigma is upper triangular on
    generators (1 on and below the diagonal).
    """
    if gamma.spec.torsion_orders:
        raise UnsupportedError("splitting is only implemented for free abelian grading groups")
    report = verify_bicharacter(gamma)
    if not report.ok:
        raise ColorLieError("cannot split an invalid bicharacter: " + report.violations[0])
    gamma0 = parity_bicharacter(gamma)
    g, g0 = gamma.gen_matrix, gamma0.gen_matrix
    sigma = Cocycle.from_function(
        gamma.spec, lambda i, j: g[i][j] * g0[i][j].inverse() if i < j else UNIT_ONE)
    return gamma0, sigma


def random_cocycle(spec: GroupSpec, rng: random.Random, max_exp: int = 2) -> Cocycle:
    """Random cocycle with torsion-compatible generator values."""
    def value(i, j):
        if i >= spec.free_rank or j >= spec.free_rank:
            return UnitMonomial(rng.choice((1, -1)) if _even_torsion(spec, i, j) else 1, 0)
        return UnitMonomial(rng.choice((1, -1)), rng.randint(-max_exp, max_exp))
    return Cocycle.from_function(spec, value)


def _even_torsion(spec: GroupSpec, i: int, j: int) -> bool:
    r = spec.free_rank
    for a in (i, j):
        if a >= r and spec.torsion_orders[a - r] % 2:
            return False
    return True


def bicharacter_from_json(spec: GroupSpec, data) -> Bicharacter:
    return _bilinear_from_json(Bicharacter, spec, data)


def cocycle_from_json(spec: GroupSpec, data) -> Cocycle:
    return _bilinear_from_json(Cocycle, spec, data)


def _bilinear_from_json(cls, spec, data):
    rows = data["matrix"] if isinstance(data, dict) else data
    return cls(spec, tuple(tuple(UnitMonomial.parse(v) for v in row) for row in rows))


def quantum_plane_gamma(n: int = 2, odd: Sequence[bool] | None = None) -> Bicharacter:
    """gamma(e_i, e_j) = q (i < j), q^-1 (i > j), diagonal -1 on odd generators.

    For n = 2 and no odd generators this is ``q^(g1 h2 - g2 h1)``; with both
    generators odd it is ``(-1)^(g1 h1 + g2 h2) q^(g1 h2 - g2 h1)``.
    """
    odd = list(odd) if odd is not None else [False] * n
    spec = GroupSpec(n)

    def value(i, j):
        if i == j:
            return UnitMonomial(-1 if odd[i] else 1, 0)
        return UnitMonomial(1, 1 if i < j else -1)
    return Bicharacter.from_function(spec, value)
