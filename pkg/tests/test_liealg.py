import random

import pytest

from colorlie.errors import ColorLieError
from colorlie.grading import Bicharacter, Cocycle, GroupSpec, UnitMonomial, random_cocycle
from colorlie.liealg import (bracket, builtin_algebra, classical_jacobi_violations, even_part, from_brackets,
                             twist_lie, verify_color_axioms)
from colorlie.scalars import ONE, Scalar

from conftest import catalog_algebras


def broken_algebra():
    spec = GroupSpec(0)
    e = spec.identity()
    basis = [("x", e), ("y", e), ("z", e)]
    return from_brackets(Bicharacter.trivial(spec), basis,
                         [(0, 1, {1: ONE}), (0, 2, {2: ONE}), (1, 2, {0: ONE})], "broken")


@pytest.mark.parametrize("L", catalog_algebras(), ids=lambda L: L.name)
def test_catalog_satisfies_axioms(L):
    report = verify_color_axioms(L)
    assert report.ok, report.violations


@pytest.mark.parametrize("name", ["heisenberg", "sl2", "aff1"])
def test_jacobi_agrees_with_classical_oracle(name):
    L = builtin_algebra(name)
    assert classical_jacobi_violations(L) == []


def test_broken_jacobi_names_triple():
    L = broken_algebra()
    report = verify_color_axioms(L)
    assert not report.ok
    assert "(x, y, z)" in report.first
    assert classical_jacobi_violations(L)


def test_skew_symmetry_failure_reported():
    spec = GroupSpec(0)
    e = spec.identity()
    basis = [("x", e), ("y", e)]
    L = from_brackets(Bicharacter.trivial(spec), basis, [(0, 1, {1: ONE}), (1, 0, {1: ONE})])
    assert not verify_color_axioms(L).ok


def test_gradedness_failure_reported():
    spec = GroupSpec(2)
    basis = [("x", spec.element(1, 0)), ("y", spec.element(0, 1))]
    L = from_brackets(Bicharacter.trivial(spec), basis, [(0, 1, {0: ONE})])
    report = verify_color_axioms(L)
    assert not report.ok


def test_sl2_brackets():
    L = builtin_algebra("sl2")
    e, f, h = (L.basis_element(n) for n in "efh")
    assert bracket(e, f) == h
    assert bracket(h, e) == e * Scalar(2)
    assert bracket(f, e) == h * Scalar(-1)


def test_twist_of_heisenberg():
    H = builtin_algebra("heisenberg")
    sigma = Cocycle.from_function(H.group, lambda i, j: UnitMonomial(1, 1) if (i, j) == (0, 1) else UnitMonomial(1, 0))
    Hs = twist_lie(H, sigma)
    assert verify_color_axioms(Hs).ok
    assert not Hs.is_honest()
    assert Hs.bracket_basis(0, 1) == {2: Scalar.q()}
    assert Hs.bracket_basis(1, 0) == {2: -ONE}
    assert twist_lie(Hs, sigma.inverse()) == H


@pytest.mark.parametrize("seed", range(20))
def test_random_twists_stay_valid(seed):
    rng = random.Random(seed)
    H = builtin_algebra("heisenberg")
    Hs = twist_lie(H, random_cocycle(H.group, rng))
    assert verify_color_axioms(Hs).ok


def test_even_part():
    L = builtin_algebra("abelian_mixed", 3, odd=1)
    Lp = even_part(L)
    assert Lp.dim == 2 and not any(Lp.odd)


def test_catalog_errors():
    with pytest.raises(ColorLieError):
        builtin_algebra("so5")
    with pytest.raises(ColorLieError):
        builtin_algebra("abelian", -1)
