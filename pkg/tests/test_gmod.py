import random

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from colorlie.errors import ColorLieError, UnsupportedError
from colorlie.gmod import (GradedMap, GradedModule, adjoint_module, direct_sum, hom_space, kernel_image,
                           top_exterior_rep, trivial_module, twist_map, twist_module, verify_map, verify_module)
from colorlie.grading import Cocycle, UnitMonomial, random_cocycle
from colorlie.liealg import builtin_algebra, twist_lie
from colorlie import linalg
from colorlie.scalars import ONE, ZERO, Scalar

from conftest import catalog_algebras


def q_cocycle(spec):
    return Cocycle.from_function(spec, lambda i, j: UnitMonomial(1, 1) if (i, j) == (0, 1) else UnitMonomial(1, 0))


@pytest.mark.parametrize("L", catalog_algebras(), ids=lambda L: L.name)
def test_builders_give_valid_modules(L):
    assert verify_module(trivial_module(L)).ok
    assert verify_module(adjoint_module(L)).ok
    if L.is_honest() and not any(L.odd):
        assert verify_module(top_exterior_rep(L)).ok


def test_quantum_plane_character_is_invalid():
    L = builtin_algebra("abelian_plus", 2)
    M = GradedModule(L, [("v", L.group.identity())], [[[ONE]], [[ONE]]])
    report = verify_module(M)
    assert not report.ok
    assert any("relation" in v or "gradedness" in v for v in report.violations)


def test_top_exterior_actions():
    assert all(a == [[ZERO]] for a in top_exterior_rep(builtin_algebra("sl2")).actions)
    aff = top_exterior_rep(builtin_algebra("aff1"))
    assert aff.actions == [[[ONE]], [[ZERO]]]
    assert all(a == [[ZERO]] for a in top_exterior_rep(builtin_algebra("abelian", 3)).actions)
    with pytest.raises(UnsupportedError):
        top_exterior_rep(builtin_algebra("abelian_minus", 2))


def test_twist_heisenberg_adjoint():
    H = builtin_algebra("heisenberg")
    sigma = q_cocycle(H.group)
    M = twist_module(sigma, adjoint_module(H))
    assert M.lie == twist_lie(H, sigma)
    assert verify_module(M).ok
    # x . y = sigma(dx, dy) z = q z
    assert M.actions[0][2][1] == Scalar.q()
    assert M.actions[1][2][0] == -ONE


@settings(max_examples=100)
@given(st.integers(0, 10 ** 6))
def test_twist_then_inverse_is_identity(seed):
    rng = random.Random(seed)
    H = builtin_algebra("heisenberg")
    sigma = random_cocycle(H.group, rng)
    M = direct_sum(adjoint_module(H), trivial_module(H, H.group.element(1, 0)))
    Ms = twist_module(sigma, M)
    assert verify_module(Ms).ok
    back = twist_module(sigma.inverse(), Ms)
    assert back == M
    assert twist_module(Cocycle.trivial(H.group), M) == M


def _random_map(V, W, rng):
    basis = hom_space(V, W)
    mat = linalg.zeros(W.dim, V.dim)
    for phi in basis:
        c = Scalar(rng.randint(-2, 2)) * Scalar.q(rng.randint(-1, 1))
        mat = linalg.add(mat, linalg.scale(phi.matrix, c))
    return GradedMap(V, W, mat)


def _modules():
    H = builtin_algebra("heisenberg")
    ad = adjoint_module(H)
    k0 = trivial_module(H)
    kz = trivial_module(H, H.group.element(1, 1))
    return H, direct_sum(ad, kz), direct_sum(kz, ad), direct_sum(ad, k0)


def test_hom_space_maps_are_equivariant():
    H, V, W, _ = _modules()
    basis = hom_space(V, W)
    assert len(basis) >= 2
    for phi in basis:
        assert verify_map(phi).ok


@pytest.mark.parametrize("seed", range(100))
def test_kernel_image_unchanged_by_twist(seed):
    rng = random.Random(seed)
    H, V, W, _ = _modules()
    phi = _random_map(V, W, rng)
    sigma = random_cocycle(H.group, rng)
    ker, img = kernel_image(phi)
    phis = twist_map(sigma, phi)
    assert verify_map(phis).ok
    ker_s, img_s = kernel_image(phis)
    assert ker.basis == ker_s.basis and img.basis == img_s.basis
    assert ker.dim + img.dim == V.dim
    assert verify_module(ker.module).ok and verify_module(img.module).ok


def test_twist_is_functorial(rng):
    H, V, W, U = _modules()
    sigma = q_cocycle(H.group)
    phi = _random_map(V, W, rng)
    psi = _random_map(W, V, rng)
    lhs = twist_map(sigma, psi.compose(phi)).matrix
    rhs = twist_map(sigma, psi).compose(twist_map(sigma, phi)).matrix
    assert lhs == rhs


def test_identity_and_zero_maps():
    H, V, _, _ = _modules()
    ident = GradedMap(V, V, linalg.identity(V.dim))
    ker, img = kernel_image(ident)
    assert ker.dim == 0 and img.dim == V.dim
    zero = GradedMap(V, V, linalg.zeros(V.dim, V.dim))
    ker, img = kernel_image(zero)
    assert ker.dim == V.dim and img.dim == 0


def test_non_equivariant_map_rejected():
    H, V, _, _ = _modules()
    mat = linalg.zeros(V.dim, V.dim)
    mat[0][0] = ONE
    with pytest.raises(ColorLieError):
        kernel_image(GradedMap(V, V, mat))


def test_module_shape_errors():
    L = builtin_algebra("aff1")
    with pytest.raises(ColorLieError):
        GradedModule(L, [("v", L.group.identity())], [[[ONE]]])
    with pytest.raises(ColorLieError):
        GradedModule(L, [("v", L.group.identity())], [[[ONE, ONE]], [[ONE]]])
