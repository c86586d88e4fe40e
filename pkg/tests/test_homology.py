import random

import pytest

from colorlie import linalg
from colorlie.errors import ColorLieError, UnsupportedError
from colorlie.gmod import adjoint_module, direct_sum, top_exterior_rep, trivial_module
from colorlie.grading import Bicharacter, GroupSpec, UnitMonomial, random_cocycle
from colorlie.homology import (ce_complex, ext_dims, ext_twist_compare, exterior_power_basis, frobenius_check,
                               grade_of_trivial, hilbert_closed_form, hilbert_series, minimal_resolution,
                               verify_resolution)
from colorlie.liealg import builtin_algebra
from colorlie.uea import AlgebraPresentation

from conftest import catalog_algebras

HONEST = ["sl2", "heisenberg", "aff1"]


def honest_algebras():
    return [builtin_algebra(n) for n in HONEST] + [builtin_algebra("abelian", 2), builtin_algebra("abelian", 3)]


def test_exterior_power_basis():
    L = builtin_algebra("sl2")
    assert [len(exterior_power_basis(L, i)) for i in range(4)] == [1, 3, 3, 1]
    assert exterior_power_basis(L, 0) == [((), L.group.identity())]
    Q = builtin_algebra("abelian_plus", 2)
    [(idx, deg)] = exterior_power_basis(Q, 2)
    assert deg == Q.group.element(1, 1)
    with pytest.raises(ColorLieError):
        exterior_power_basis(L, 4)


@pytest.mark.parametrize("L", honest_algebras(), ids=lambda L: L.name)
def test_complexes_square_to_zero(L):
    for M in (trivial_module(L), adjoint_module(L), top_exterior_rep(L)):
        C = ce_complex(L, M)
        report = C.verify()
        assert report.ok, report.violations
        res = ext_dims(C)
        euler_c = sum((-1) ** i * d for i, d in enumerate(C.dims()))
        euler_h = sum((-1) ** i * d for i, d in enumerate(res.dims))
        assert euler_c == euler_h
        assert all(d >= 0 for d in res.dims)


def test_known_cohomology():
    assert ext_dims(ce_complex(builtin_algebra("sl2"), trivial_module(builtin_algebra("sl2")))).dims == [1, 0, 0, 1]
    H = builtin_algebra("heisenberg")
    C = ce_complex(H, trivial_module(H))
    assert C.dims() == [1, 3, 3, 1]
    assert ext_dims(C).dims == [1, 2, 2, 1]
    A = builtin_algebra("abelian", 3)
    C = ce_complex(A, trivial_module(A))
    assert all(linalg.is_zero_matrix(d) for d in C.differentials)
    aff = builtin_algebra("aff1")
    assert ext_dims(ce_complex(aff, top_exterior_rep(aff))).dims == [0, 1, 1]


def test_heisenberg_differential_ranks():
    H = builtin_algebra("heisenberg")
    C = ce_complex(H, trivial_module(H))
    # only z* has a nonzero coboundary (z* -> -x*^y*); dims 1,3,3,1 and
    # cohomology 1,2,2,1 force ranks 0,1,0
    assert [linalg.rank(d) for d in C.differentials] == [0, 1, 0]


@pytest.mark.parametrize("name", ["sl2", "heisenberg"])
def test_poincare_duality(name):
    L = builtin_algebra(name)
    dims = ext_dims(ce_complex(L, trivial_module(L))).dims
    assert dims == dims[::-1]


@pytest.mark.parametrize("L", honest_algebras(), ids=lambda L: L.name)
def test_top_degree_law(L):
    dims = ext_dims(ce_complex(L, top_exterior_rep(L))).dims
    assert dims[L.dim] == 1


@pytest.mark.parametrize("seed", range(12))
def test_twist_invariance_random_cocycles(seed):
    rng = random.Random(seed)
    for L in (builtin_algebra("heisenberg"), builtin_algebra("abelian", 2), builtin_algebra("abelian", 3)):
        sigma = random_cocycle(L.group, rng)
        M = direct_sum(trivial_module(L), adjoint_module(L))
        plain, twisted, equal = ext_twist_compare(L, sigma, M)
        assert equal, (plain.dims, twisted.dims)


def test_twist_compare_trivial_cocycle():
    from colorlie.grading import Cocycle

    H = builtin_algebra("heisenberg")
    plain, twisted, equal = ext_twist_compare(H, Cocycle.trivial(H.group), trivial_module(H))
    assert equal and plain.dims == [1, 2, 2, 1]


def test_ce_rejects_color_and_odd():
    with pytest.raises(UnsupportedError):
        ce_complex(builtin_algebra("abelian_plus", 2), trivial_module(builtin_algebra("abelian_plus", 2)))
    L = builtin_algebra("abelian_minus", 2)
    with pytest.raises(UnsupportedError):
        ce_complex(L, trivial_module(L))


def _res(name, n, steps, w, **kw):
    P = AlgebraPresentation(builtin_algebra(name, n, **kw))
    return P, minimal_resolution(P, steps, w)


def test_resolution_examples():
    P, tr = _res("abelian_plus", 2, 3, 6)
    assert tr.betti() == [1, 2, 1, 0]
    assert tr.betti_table()[2][2] == 1
    P, tr = _res("abelian_minus", 1, 6, 8)
    assert tr.betti() == [1] * 7
    P, tr = _res("abelian_minus", 2, 5, 6)
    assert tr.betti() == [1, 2, 3, 4, 5, 6]
    P, tr = _res("abelian_plus", 3, 4, 6)
    assert tr.betti() == [1, 3, 3, 1, 0]


@pytest.mark.parametrize("L", [L for L in catalog_algebras() if L.is_abelian()], ids=lambda L: L.name)
def test_resolutions_are_minimal_complexes(L):
    P = AlgebraPresentation(L)
    tr = minimal_resolution(P, 4, 5)
    assert verify_resolution(P, tr).ok
    assert tr.verified


def test_resolution_needs_weight_grading():
    with pytest.raises(UnsupportedError):
        minimal_resolution(AlgebraPresentation(builtin_algebra("heisenberg")), 2, 3)
    P = AlgebraPresentation(builtin_algebra("heisenberg")).associated_graded()
    assert minimal_resolution(P, 4, 5).betti() == [1, 3, 3, 1, 0]


def test_grade_examples():
    res = grade_of_trivial(AlgebraPresentation(builtin_algebra("abelian_plus", 2)), 6)
    assert res.dims == [0, 0, 1] and res.conclusive
    assert grade_of_trivial(AlgebraPresentation(builtin_algebra("abelian_plus", 1)), 4).dims == [0, 1]
    ext = grade_of_trivial(AlgebraPresentation(builtin_algebra("abelian_minus", 2)), 4)
    assert ext.dims[0] == 1 and ext.by_degree[0] == {"2": 1}
    small = grade_of_trivial(AlgebraPresentation(builtin_algebra("abelian_plus", 2)), 2)
    assert not small.conclusive


def test_grade_equals_even_dimension():
    for L in [builtin_algebra("abelian_mixed", 2), builtin_algebra("abelian_mixed", 3, odd=2),
              builtin_algebra("abelian_plus", 3)]:
        res = grade_of_trivial(AlgebraPresentation(L), 2 * L.dim)
        first = next(i for i, d in enumerate(res.dims) if d)
        assert first == L.even_dim


def test_frobenius_examples():
    gram, ok, basis = frobenius_check(AlgebraPresentation(builtin_algebra("abelian_minus", 1)))
    assert ok and [[str(v) for v in r] for r in gram] == [["0", "1"], ["1", "0"]]
    gram, ok, _ = frobenius_check(AlgebraPresentation(builtin_algebra("abelian_minus", 2)))
    assert ok
    nonzero = [(r, c) for r in range(4) for c in range(4) if not gram[r][c].is_zero()]
    assert nonzero == [(0, 3), (1, 2), (2, 1), (3, 0)]
    spec = GroupSpec(3)
    gamma = Bicharacter.from_function(spec, lambda i, j: UnitMonomial(-1, 0) if i == j
                                      else UnitMonomial(1, 1 if i < j else -1))
    L3 = builtin_algebra("abelian_minus", 3, gamma=gamma)
    _, ok, basis = frobenius_check(AlgebraPresentation(L3))
    assert ok and len(basis) == 8
    with pytest.raises(ColorLieError):
        frobenius_check(AlgebraPresentation(builtin_algebra("abelian_plus", 2)))


@pytest.mark.parametrize("L", catalog_algebras(), ids=lambda L: L.name)
def test_hilbert_series_closed_form(L):
    P = AlgebraPresentation(L).associated_graded()
    assert hilbert_series(P, 8) == hilbert_closed_form(L.even_dim, L.odd_dim, 8)


def test_hilbert_examples():
    assert hilbert_closed_form(2, 0, 4) == [1, 2, 3, 4, 5]
    assert hilbert_closed_form(0, 2, 4) == [1, 2, 1, 0, 0]
    assert hilbert_closed_form(3, 0, 3) == [1, 3, 6, 10]
