import random

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from colorlie.errors import ColorLieError, UnsupportedError
from colorlie.grading import (Bicharacter, Cocycle, GroupSpec, gamma_from_cocycle, parity,
                              quantum_plane_gamma, random_cocycle, split_bicharacter, verify_bicharacter)
from colorlie.scalars import UnitMonomial

SPECS = [GroupSpec(2), GroupSpec(3), GroupSpec(1, (2,)), GroupSpec(2, (4, 3))]


@st.composite
def spec_and_elements(draw, k=3):
    spec = draw(st.sampled_from(SPECS))
    elems = []
    for _ in range(k):
        free = [draw(st.integers(-4, 4)) for _ in range(spec.free_rank)]
        tors = [draw(st.integers(0, m - 1)) for m in spec.torsion_orders]
        elems.append(spec.element(*(free + tors)))
    return spec, elems


@settings(max_examples=500)
@given(spec_and_elements(), st.integers(0, 10 ** 6))
def test_random_cocycle_identity_and_bilinearity(data, seed):
    spec, (f, g, h) = data
    sigma = random_cocycle(spec, random.Random(seed))
    assert sigma(f, g + h) * sigma(g, h) == sigma(f, g) * sigma(f + g, h)
    assert sigma(f + g, h) == sigma(f, h) * sigma(g, h)
    assert sigma(f, g + h) == sigma(f, g) * sigma(f, h)


@settings(max_examples=500)
@given(spec_and_elements(), st.integers(0, 10 ** 6))
def test_twisted_gamma_is_a_bicharacter(data, seed):
    spec, (f, g, h) = data
    rng = random.Random(seed)
    gamma0 = Bicharacter.trivial(spec)
    gamma = gamma_from_cocycle(gamma0, random_cocycle(spec, rng))
    assert verify_bicharacter(gamma).ok
    assert (gamma(f, g) * gamma(g, f)).is_one()
    assert gamma(f + g, h) == gamma(f, h) * gamma(g, h)
    assert gamma(f, f).exponent == 0


def test_quantum_plane_values():
    gamma = quantum_plane_gamma(2)
    s = gamma.spec
    x, y = s.element(1, 0), s.element(0, 1)
    assert gamma(x, y) == UnitMonomial(1, 1)
    assert gamma(s.element(2, 1), s.element(1, 3)) == UnitMonomial(1, 5)
    assert parity(gamma, x) == 1


def test_exterior_gamma_signs():
    gamma = quantum_plane_gamma(2, [True, True])
    s = gamma.spec
    assert gamma(s.element(1, 0), s.element(1, 0)) == UnitMonomial(-1, 0)
    assert parity(gamma, s.element(1, 1)) == 1
    assert parity(gamma, s.element(0, 1)) == -1


@pytest.mark.parametrize("gamma", [quantum_plane_gamma(2), quantum_plane_gamma(2, [True, True]),
                                   quantum_plane_gamma(3, [False, True, True])])
def test_split_roundtrip(gamma, rng):
    gamma0, sigma = split_bicharacter(gamma)
    back = gamma_from_cocycle(gamma0, sigma)
    for _ in range(100):
        g, h = gamma.spec.random_element(rng), gamma.spec.random_element(rng)
        assert back(g, h) == gamma(g, h)
        assert gamma0(g, h).exponent == 0


def test_split_exterior_gamma():
    gamma0, sigma = split_bicharacter(quantum_plane_gamma(2, [True, True]))
    assert all(u == UnitMonomial(-1, 0) for row in gamma0.gen_matrix for u in row)
    assert sigma.gen_matrix[0][1] == UnitMonomial(-1, 1)


def test_split_torsion_unsupported():
    with pytest.raises(UnsupportedError):
        split_bicharacter(Bicharacter.trivial(GroupSpec(1, (2,))))


def test_invalid_bicharacters_reported():
    spec = GroupSpec(2)
    bad = Bicharacter.from_function(spec, lambda i, j: UnitMonomial(1, 1))
    report = verify_bicharacter(bad)
    assert not report.ok
    assert any("diagonal" in v for v in report.violations)
    torsion = Bicharacter.from_function(GroupSpec(0, (3,)), lambda i, j: UnitMonomial(-1, 0))
    assert not verify_bicharacter(torsion).ok


def test_group_arithmetic():
    spec = GroupSpec(1, (3,))
    g = spec.element(2, 2)
    assert (g + g).coords == (4, 1)
    assert (g - g).is_identity()
    with pytest.raises(ColorLieError):
        GroupSpec(1).element(1) + GroupSpec(2).element(1, 0)


def test_cocycle_inverse():
    spec = GroupSpec(2)
    sigma = Cocycle.from_function(spec, lambda i, j: UnitMonomial(1, i - j))
    inv = sigma.inverse()
    g, h = spec.element(2, -1), spec.element(1, 3)
    assert (sigma(g, h) * inv(g, h)).is_one()
