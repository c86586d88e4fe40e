"""Universal enveloping algebras as PBW rewriting systems.

Generators are ordered as the basis of the color Lie algebra.  The rewrite
rules are

    x_a x_b  ->  gamma(x_a, x_b) x_b x_a + <x_a, x_b>      (a > b)
    x_a x_a  ->  1/2 <x_a, x_a>                            (x_a odd)

and normal monomials are exponent vectors with odd exponents at most 1.
Two independent reducers are provided: :meth:`AlgebraPresentation.multiply`
(memoized right multiplication by generators) and :func:`normalize`
(a generic word rewriter with a selectable redex strategy).
"""
from __future__ import annotations

import random
import sys
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .errors import ColorLieError
from .grading import Bicharacter, Cocycle, GroupElement
from .liealg import ColorLieAlgebra
from .scalars import HALF, ONE, ZERO, Scalar, as_scalar
from .validation import ValidationReport

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

Monomial = Tuple[int, ...]
Word = Tuple[int, ...]
Terms = Dict[Monomial, Scalar]


def _accumulate(out: dict, key, c: Scalar):
    v = out.get(key)
    if v is None:
        if not c.is_zero():
            out[key] = c
    else:
        v = v + c
        if v.is_zero():
            del out[key]
        else:
            out[key] = v


class AlgebraPresentation:
    """Generators, gamma table and rewrite rules of U(L) for a color Lie algebra L."""

    def __init__(self, lie: ColorLieAlgebra):
        self.lie = lie
        n = self.n = lie.dim
        self.names = lie.names
        self.odd = lie.odd
        self.gam = [[lie.gamma_basis(a, b).to_scalar() for b in range(n)] for a in range(n)]
        self.rules: Dict[Tuple[int, int], Tuple[Tuple[int, Scalar], ...]] = {}
        self.squares: Dict[int, Tuple[Tuple[int, Scalar], ...]] = {}
        for a in range(n):
            for b in range(a):
                vec = lie.bracket_basis(a, b)
                self.rules[(a, b)] = tuple(sorted(vec.items()))
            if self.odd[a]:
                self.squares[a] = tuple((k, c * HALF) for k, c in sorted(lie.bracket_basis(a, a).items()))
        self._gen_memo: Dict[Tuple[Monomial, int], Terms] = {}
        self._mono_memo: Dict[Tuple[Monomial, Monomial], Terms] = {}
        self.unit_monomial: Monomial = (0,) * n

    # -- basic data -------------------------------------------------------
    def is_weight_graded(self) -> bool:
        """True when every relation is homogeneous for generator weight 1."""
        return all(not r for r in self.rules.values()) and all(not s for s in self.squares.values())

    def monomial_degree(self, m: Monomial) -> GroupElement:
        d = self.lie.group.identity()
        for i, a in enumerate(m):
            for _ in range(a):
                d = d + self.lie.degrees[i]
        return d

    def monomial_str(self, m: Monomial) -> str:
        parts = [self.names[i] if a == 1 else f"{self.names[i]}^{a}" for i, a in enumerate(m) if a]
        return "*".join(parts) if parts else "1"

    def is_normal(self, m: Monomial) -> bool:
        return len(m) == self.n and all(a >= 0 for a in m) and all(a <= 1 for a, o in zip(m, self.odd) if o)

    def one(self) -> "UEAElement":
        return UEAElement(self, {self.unit_monomial: ONE})

    def zero(self) -> "UEAElement":
        return UEAElement(self, {})

    def generator(self, i) -> "UEAElement":
        if isinstance(i, str):
            i = self.lie.index(i)
        m = [0] * self.n
        m[i] = 1
        return UEAElement(self, {tuple(m): ONE})

    def monomial(self, m: Sequence[int], c=ONE) -> "UEAElement":
        m = tuple(m)
        if not self.is_normal(m):
            raise ColorLieError(f"{m} is not a normal PBW monomial")
        return UEAElement(self, {m: as_scalar(c)})

    def monomials_of_weight(self, w: int) -> List[Monomial]:
        """Normal monomials of total degree w, in descending lexicographic order."""
        out: List[Monomial] = []

        def rec(i, left, prefix):
            if i == self.n:
                if left == 0:
                    out.append(tuple(prefix))
                return
            top = min(left, 1) if self.odd[i] else left
            for a in range(top, -1, -1):
                prefix.append(a)
                rec(i + 1, left - a, prefix)
                prefix.pop()
        if w >= 0:
            rec(0, w, [])
        return out

    # -- multiplication ---------------------------------------------------
    def _mul_gen(self, m: Monomial, j: int) -> Terms:
        key = (m, j)
        hit = self._gen_memo.get(key)
        if hit is not None:
            return hit
        last = -1
        for i in range(self.n - 1, -1, -1):
            if m[i]:
                last = i
                break
        if last < j or (last == j and not self.odd[j]):
            mm = list(m)
            mm[j] += 1
            res = {tuple(mm): ONE}
        elif last == j:
            mp = list(m)
            mp[j] -= 1
            mp = tuple(mp)
            res = {}
            for k, c in self.squares[j]:
                for mono, c2 in self._mul_gen(mp, k).items():
                    _accumulate(res, mono, c * c2)
        else:
            mp = list(m)
            mp[last] -= 1
            mp = tuple(mp)
            g = self.gam[last][j]
            res = {}
            for mono, c in self._mul_gen(mp, j).items():
                for mono2, c2 in self._mul_gen(mono, last).items():
                    _accumulate(res, mono2, g * c * c2)
            for k, c in self.rules[(last, j)]:
                for mono, c2 in self._mul_gen(mp, k).items():
                    _accumulate(res, mono, c * c2)
        self._gen_memo[key] = res
        return res

    def _mul_mono(self, m1: Monomial, m2: Monomial) -> Terms:
        key = (m1, m2)
        hit = self._mono_memo.get(key)
        if hit is not None:
            return hit
        cur: Terms = {m1: ONE}
        for i, a in enumerate(m2):
            for _ in range(a):
                nxt: Terms = {}
                for mono, c in cur.items():
                    for mono2, c2 in self._mul_gen(mono, i).items():
                        _accumulate(nxt, mono2, c * c2)
                cur = nxt
        self._mono_memo[key] = cur
        return cur

    def multiply(self, u: "UEAElement", v: "UEAElement") -> "UEAElement":
        u._check(self)
        v._check(self)
        out: Terms = {}
        for mu, cu in u.terms.items():
            for mv, cv in v.terms.items():
                cuv = cu * cv
                for mono, c in self._mul_mono(mu, mv).items():
                    _accumulate(out, mono, cuv * c)
        return UEAElement(self, out)

    # -- word rewriting ---------------------------------------------------
    def redexes(self, w: Word) -> List[int]:
        return [p for p in range(len(w) - 1)
                if w[p] > w[p + 1] or (w[p] == w[p + 1] and self.odd[w[p]])]

    def rewrite_at(self, w: Word, p: int) -> List[Tuple[Word, Scalar]]:
        a, b = w[p], w[p + 1]
        head, tail = w[:p], w[p + 2:]
        if a > b:
            out = [(head + (b, a) + tail, self.gam[a][b])]
            out.extend((head + (k,) + tail, c) for k, c in self.rules[(a, b)])
            return out
        if a == b and self.odd[a]:
            return [(head + (k,) + tail, c) for k, c in self.squares[a]]
        raise ColorLieError(f"no rewrite rule applies at position {p} of {w}")

    def word_to_monomial(self, w: Word) -> Monomial:
        m = [0] * self.n
        for g in w:
            m[g] += 1
        return tuple(m)

    def reduce_words(self, terms: Mapping[Word, Scalar], strategy: str = "leftmost",
                     rng: random.Random | None = None) -> "UEAElement":
        pending: Dict[Word, Scalar] = {}
        for w, c in terms.items():
            _accumulate(pending, tuple(w), as_scalar(c))
        result: Terms = {}
        while pending:
            w, c = pending.popitem()
            red = self.redexes(w)
            if not red:
                _accumulate(result, self.word_to_monomial(w), c)
                continue
            if strategy == "leftmost":
                p = red[0]
            elif strategy == "rightmost":
                p = red[-1]
            elif strategy == "random":
                p = (rng or random).choice(red)
            else:
                raise ColorLieError(f"unknown rewrite strategy {strategy!r}")
            for w2, c2 in self.rewrite_at(w, p):
                _accumulate(pending, w2, c * c2)
        return UEAElement(self, result)

    def associated_graded(self) -> "AlgebraPresentation":
        """gr(U) for the length filtration: same gamma, all brackets dropped."""
        return AlgebraPresentation(self.lie.abelianized())

    def __repr__(self):
        return f"AlgebraPresentation({self.lie.name or 'U(L)'}, generators={','.join(self.names)})"


class UEAElement:
    """Linear combination of normal PBW monomials."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: AlgebraPresentation, terms: Mapping[Monomial, Scalar]):
        self.algebra = algebra
        self.terms: Terms = {m: c for m, c in terms.items() if not c.is_zero()}

    def _check(self, P: AlgebraPresentation):
        if self.algebra is not P:
            raise ColorLieError("element belongs to a different presentation")

    def __add__(self, other):
        if not isinstance(other, UEAElement):
            other = self.algebra.one() * as_scalar(other)
        other._check(self.algebra)
        out = dict(self.terms)
        for m, c in other.terms.items():
            _accumulate(out, m, c)
        return UEAElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return UEAElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, UEAElement):
            return self.algebra.multiply(self, other)
        c = as_scalar(other)
        return UEAElement(self.algebra, {m: v * c for m, v in self.terms.items()})

    def __rmul__(self, other):
        c = as_scalar(other)
        return UEAElement(self.algebra, {m: c * v for m, v in self.terms.items()})

    def __pow__(self, n: int):
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, UEAElement):
            return self.algebra is other.algebra and self.terms == other.terms
        if isinstance(other, (int, Scalar)):
            return self == self.algebra.one() * as_scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, m: Monomial) -> Scalar:
        return self.terms.get(tuple(m), ZERO)

    def degree(self) -> GroupElement | None:
        degs = {self.algebra.monomial_degree(m) for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def filtration_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def homogeneous_components(self) -> Dict[GroupElement, "UEAElement"]:
        parts: Dict[GroupElement, Terms] = {}
        for m, c in self.terms.items():
            parts.setdefault(self.algebra.monomial_degree(m), {})[m] = c
        return {g: UEAElement(self.algebra, t) for g, t in parts.items()}

    def sorted_terms(self) -> List[Tuple[Monomial, Scalar]]:
        return sorted(self.terms.items(), key=lambda mc: (-sum(mc[0]), tuple(-a for a in mc[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for m, c in self.sorted_terms():
            mono = self.algebra.monomial_str(m)
            cs = str(c)
            neg = cs.startswith("-") and (" " not in cs)
            if neg:
                cs = cs[1:]
            if mono == "1":
                piece = cs if " " not in cs else f"({cs})"
            elif cs == "1":
                piece = mono
            else:
                piece = f"{cs} * {mono}" if " " not in cs else f"({cs}) * {mono}"
            if not out:
                out = ("-" if neg else "") + piece
            else:
                out += (" - " if neg else " + ") + piece
        return out

    __repr__ = __str__


def normalize(P: AlgebraPresentation, word: Iterable[Tuple[object, int]], coeff=ONE,
              strategy: str = "leftmost", rng: random.Random | None = None) -> UEAElement:
    """PBW normal form of ``coeff * g_1^p_1 * ... * g_r^p_r`` by word rewriting."""
    flat: List[int] = []
    for g, p in word:
        idx = P.lie.index(g) if isinstance(g, str) else int(g)
        if not 0 <= idx < P.n:
            raise ColorLieError(f"generator index {idx} out of range")
        if p < 0:
            raise ColorLieError("generator powers must be nonnegative")
        flat.extend([idx] * p)
    return P.reduce_words({tuple(flat): as_scalar(coeff)}, strategy, rng)


def multiply(u: UEAElement, v: UEAElement) -> UEAElement:
    return u.algebra.multiply(u, v)


def pbw_consistency_check(P: AlgebraPresentation) -> ValidationReport:
    """Resolve every overlap ``x_k x_j x_i`` (k >= j >= i) both ways."""
    report = ValidationReport(f"PBW confluence ({P.lie.name or 'U(L)'})")
    n = P.n
    for k in range(n):
        for j in range(k + 1):
            for i in range(j + 1):
                w = (k, j, i)
                report.checked += 1
                sides = []
                for p in (0, 1):
                    if p in P.redexes(w):
                        terms: Dict[Word, Scalar] = {}
                        for w2, c in P.rewrite_at(w, p):
                            _accumulate(terms, w2, c)
                    else:
                        terms = {w: ONE}
                    sides.append(P.reduce_words(terms))
                if sides[0] != sides[1]:
                    names = ", ".join(P.names[t] for t in w)
                    report.fail(f"overlap ({names}) is not resolvable: "
                                f"({P.names[k]}{P.names[j]}){P.names[i]} -> {sides[0]}, "
                                f"{P.names[k]}({P.names[j]}{P.names[i]}) -> {sides[1]}")
    return report


def twisted_multiply(sigma, u: UEAElement, v: UEAElement) -> UEAElement:
    """``u * v = sigma(du, dv) u v`` on homogeneous parts.

    ``sigma`` may be any callable on pairs of group elements returning units
    (a :class:`Cocycle` or an arbitrary table for negative controls).
    """
    P = u.algebra
    v._check(P)
    out: Terms = {}
    for mu, cu in u.terms.items():
        du = P.monomial_degree(mu)
        for mv, cv in v.terms.items():
            s = as_scalar(sigma(du, P.monomial_degree(mv)))
            cuv = cu * cv * s
            for mono, c in P._mul_mono(mu, mv).items():
                _accumulate(out, mono, cuv * c)
    return UEAElement(P, out)


def pbw_twist_factor(sigma: Cocycle, P: AlgebraPresentation, m: Monomial) -> Scalar:
    """Scalar c with ``y_1 * y_2 * ... * y_r = c * (y_1 y_2 ... y_r)`` in U^sigma,
    the y_t being the generators of the PBW monomial ``m`` in order."""
    acc = P.lie.group.identity()
    c = ONE
    for i, a in enumerate(m):
        d = P.lie.degrees[i]
        for _ in range(a):
            c = c * sigma(acc, d).to_scalar()
            acc = acc + d
    return c


def twist_iso(sigma: Cocycle, source: AlgebraPresentation, target: AlgebraPresentation,
              u: UEAElement) -> UEAElement:
    """Image of ``u`` in U(L^sigma) (presentation ``source``) inside U(L)^sigma
    (presentation ``target``), sending generators to generators."""
    u._check(source)
    return UEAElement(target, {m: c * pbw_twist_factor(sigma, target, m) for m, c in u.terms.items()})


def gr_project(u: UEAElement, m: int) -> UEAElement:
    """Leading part of ``u`` in ``U^m / U^(m-1)``."""
    top = u.filtration_degree()
    if top > m:
        raise ColorLieError(f"element has filtration degree {top} > {m}")
    return UEAElement(u.algebra, {mono: c for mono, c in u.terms.items() if sum(mono) == m})


def gr_multiply(u: UEAElement, v: UEAElement) -> UEAElement:
    """Product in gr(U) of the leading parts of ``u`` and ``v``."""
    du, dv = u.filtration_degree(), v.filtration_degree()
    lu, lv = gr_project(u, du), gr_project(v, dv)
    return gr_project(lu * lv, du + dv) if du >= 0 and dv >= 0 else u.algebra.zero()


class TensorElement:
    """Element of the gamma-graded tensor product A (x) B."""

    __slots__ = ("left", "right", "terms")

    def __init__(self, left: AlgebraPresentation, right: AlgebraPresentation,
                 terms: Mapping[Tuple[Monomial, Monomial], Scalar]):
        self.left, self.right = left, right
        self.terms = {k: c for k, c in terms.items() if not c.is_zero()}

    @classmethod
    def pure(cls, a: UEAElement, b: UEAElement) -> "TensorElement":
        out: dict = {}
        for ma, ca in a.terms.items():
            for mb, cb in b.terms.items():
                _accumulate(out, (ma, mb), ca * cb)
        return cls(a.algebra, b.algebra, out)

    def degree(self) -> GroupElement | None:
        degs = {self.left.monomial_degree(ma) + self.right.monomial_degree(mb) for ma, mb in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def __add__(self, other: "TensorElement"):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(out, k, c)
        return TensorElement(self.left, self.right, out)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.left is other.left and self.right is other.right and self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (ma, mb), c in sorted(self.terms.items()):
            parts.append(f"({c}) {self.left.monomial_str(ma)} (x) {self.right.monomial_str(mb)}")
        return " + ".join(parts)


def graded_tensor_multiply(x: TensorElement, y: TensorElement, gamma: Bicharacter | None = None) -> TensorElement:
    """``(a (x) b)(a' (x) b') = gamma(b, a') aa' (x) bb'`` extended bilinearly."""
    A, B = x.left, x.right
    if y.left is not A or y.right is not B:
        raise ColorLieError("tensor factors belong to different algebras")
    gamma = gamma or A.lie.gamma
    out: dict = {}
    for (ma, mb), c1 in x.terms.items():
        db = B.monomial_degree(mb)
        for (ma2, mb2), c2 in y.terms.items():
            g = gamma(db, A.monomial_degree(ma2)).to_scalar()
            c = c1 * c2 * g
            prod_a = A._mul_mono(ma, ma2)
            prod_b = B._mul_mono(mb, mb2)
            for pa, ca in prod_a.items():
                for pb, cb in prod_b.items():
                    _accumulate(out, (pa, pb), c * ca * cb)
    return TensorElement(A, B, out)


def random_element(P: AlgebraPresentation, rng: random.Random, max_terms: int = 3, max_len: int = 3,
                   homogeneous: bool = False, coeff_range: int = 3) -> UEAElement:
    """Random element with small integer-times-q-power coefficients."""
    terms: Terms = {}
    target = None
    for _ in range(rng.randint(1, max_terms)):
        if P.n == 0:
            m = P.unit_monomial
        else:
            length = rng.randint(0, max_len)
            m = [0] * P.n
            for _ in range(length):
                i = rng.randrange(P.n)
                if not (P.odd[i] and m[i]):
                    m[i] += 1
            m = tuple(m)
        if homogeneous:
            d = P.monomial_degree(m)
            if target is None:
                target = d
            elif d != target:
                continue
        c = Scalar(rng.choice([i for i in range(-coeff_range, coeff_range + 1) if i])) * Scalar.q(rng.randint(-2, 2))
        _accumulate(terms, m, c)
    if not terms:
        terms = {P.unit_monomial: ONE}
    return UEAElement(P, terms)
