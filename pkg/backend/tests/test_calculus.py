from __future__ import annotations

import numpy as np
import pytest
from helpers import BATCH_SEEDS, const, random_letters, unit, x_of

from algebra import CoeffAlgebra, CoeffElem
from calculus import (
    UnsupportedInputError,
    cyclic_derivative,
    cyclic_divergence,
    diff_tensor_left,
    diff_tensor_right,
    divergence,
    divergence_left,
    divergence_right,
    flip,
    free_diff,
    grading_op,
    grading_op_left,
    grading_op_right,
    mul_map,
    number_op,
    number_op2,
    number_op_left,
    number_op_right,
    number_total,
    rho,
    sharp,
    sharp12,
    symmetrization,
    theta_op,
    theta_voiculescu,
    xi_op,
    xi_theta,
)
from ncpoly import (
    NCPoly,
    TensorPoly3,
    homogeneous_components,
    random_homogeneous,
    random_poly,
    random_tensor,
    tensor3_of,
    tensor_of,
)

B0 = unit(2, 1, 2)
B1 = unit(2, 2, 1)
B2 = unit(2, 1, 1)
ID = CoeffElem.identity(2)


def mono(algebra: CoeffAlgebra, coeffs: list[CoeffElem], letters: list[int] | None = None) -> NCPoly:
    if letters is None:
        letters = [1] * (len(coeffs) - 1)
    return NCPoly.monomial(algebra, 1, coeffs, letters)


def x_power(algebra: CoeffAlgebra, n: int) -> NCPoly:
    p = NCPoly.one(algebra, 1)
    for _ in range(n):
        p = p * x_of(algebra)
    return p


def test_free_diff_splits_at_each_letter(m2):
    p = mono(m2, [B0, B1, B2])
    expected = tensor_of(const(m2, B0), mono(m2, [B1, B2])) + tensor_of(
        mono(m2, [B0, B1]), const(m2, B2)
    )
    assert free_diff(p, 1) == expected


def test_free_diff_of_letter(scalars, m2):
    for algebra in (scalars, m2):
        one = NCPoly.one(algebra, 1)
        assert free_diff(x_of(algebra), 1) == tensor_of(one, one)


def test_free_diff_other_letter_is_constant(scalars):
    assert free_diff(x_of(scalars, 2, 2), 1).is_zero()


def test_flip_and_mul(scalars, m2):
    x = x_of(scalars)
    one = NCPoly.one(scalars, 1)
    assert flip(tensor_of(x * x, one)) == tensor_of(one, x * x)
    assert mul_map(tensor_of(one, one)) == one
    assert mul_map(tensor_of(x, x)) == x * x
    assert mul_map(tensor_of(const(m2, B0), mono(m2, [B1, B2]))) == mono(m2, [B0 * B1, B2])


def test_sharp(m2):
    one = NCPoly.one(m2, 1)
    q = mono(m2, [B1, B2])
    assert sharp(tensor_of(one, one), q) == q
    assert sharp(tensor_of(const(m2, B0), const(m2, B2)), mono(m2, [B1, ID])) == mono(
        m2, [B0 * B1, B2]
    )
    t = tensor3_of(one, one, one)
    assert sharp12(t, x_of(m2)) == tensor_of(x_of(m2), one)


def test_cyclic_derivative(scalars, m2):
    x = x_of(scalars)
    assert cyclic_derivative(x * x, 1) == x.scale(2)
    b = const(m2, B2)
    xm = x_of(m2)
    assert cyclic_derivative(xm * b * xm, 1) == b * xm + xm * b
    assert cyclic_derivative(b, 1).is_zero()


def test_divergence(scalars, m2):
    x = x_of(scalars)
    one = NCPoly.one(scalars, 1)
    assert divergence(tensor_of(one, one), 1) == x
    assert divergence(tensor_of(x, one), 1) == x * x
    assert divergence(tensor_of(const(m2, B0), const(m2, B1)), 1) == mono(m2, [B0, B1])


def test_cyclic_divergence(scalars, m2):
    x = x_of(scalars)
    assert cyclic_divergence(NCPoly.one(scalars, 1), 1) == x
    assert cyclic_divergence(x, 1) == x * x
    b = const(m2, B2)
    xm = x_of(m2)
    assert cyclic_divergence(b * xm, 1) == b * xm * xm


def test_number_op_counts_letters(rng, m2):
    p = random_poly(rng, m2, 2, 3)
    expected = NCPoly.zero(m2, 2)
    for d, part in homogeneous_components(p, 1).items():
        expected = expected + part.scale(d)
    assert number_op(p, 1) == expected
    assert number_op(const(m2, B0), 1).is_zero()
    assert number_total(p) == number_op(p, 1) + number_op(p, 2)


def test_grading_eigenvalue(scalars):
    p = x_power(scalars, 3)
    assert grading_op(p, 1) == p.scale(4)


@pytest.mark.parametrize(("n", "m"), [(0, 0), (2, 1), (1, 3)])
def test_number_op2_eigenvalue(scalars, n: int, m: int):
    u = tensor_of(x_power(scalars, n), x_power(scalars, m))
    assert number_op2(u, 1) == u.scale(n + m + 1)


def test_tensor_differentials(scalars):
    x = x_of(scalars)
    one = NCPoly.one(scalars, 1)
    u = tensor_of(x, one)
    assert diff_tensor_left(u, 1) == tensor3_of(one, one, one)
    assert diff_tensor_right(u, 1) == TensorPoly3.zero(scalars, 1)


def test_symmetrization(m2):
    p = mono(m2, [B0, B1, B2])
    expected = mono(m2, [B1, B2 * B0, ID]) + mono(m2, [B2 * B0, B1, ID])
    assert symmetrization(p, 1) == expected
    assert symmetrization(const(m2, B0), 1).is_zero()


def test_symmetrization_of_square(scalars):
    x2 = x_power(scalars, 2)
    assert symmetrization(x2, 1) == x2.scale(2)


def test_rotations(m2):
    p = mono(m2, [B0, B1, B2])
    assert rho(p) == mono(m2, [B1, B2, B0])
    bx = mono(m2, [B2, ID])
    xb = mono(m2, [ID, B2])
    assert theta_op(bx) == bx - xb
    assert theta_op(x_power(m2, 3)).is_zero()
    assert xi_op(p) == mono(m2, [ID, B1, B2 * B0])


def test_xi_theta_is_letter_times_theta(rng, m2):
    x = x_of(m2)
    for _ in range(3):
        p = random_poly(rng, m2, 1, 3)
        assert xi_theta(p) == x * theta_op(p)


def test_rotation_needs_single_letter(scalars):
    p = x_of(scalars, 2, 1)
    with pytest.raises(UnsupportedInputError):
        rho(p)
    assert rho(p, 1) == p


def test_theta_voiculescu(scalars):
    assert theta_voiculescu([x_of(scalars)]).is_zero()
    x1, x2 = x_of(scalars, 2, 1), x_of(scalars, 2, 2)
    assert theta_voiculescu([x2, x1]).is_zero()
    assert theta_voiculescu([NCPoly.one(scalars, 2), NCPoly.zero(scalars, 2)]).is_zero()
    assert not theta_voiculescu([x2, NCPoly.zero(scalars, 2)]).is_zero()


def test_theta_voiculescu_rejects_matrix_coefficients(m2):
    with pytest.raises(UnsupportedInputError):
        theta_voiculescu([x_of(m2)])


def test_grading_identity_on_cyclic_gradients(rng, m2):
    for _ in range(3):
        q = cyclic_derivative(random_poly(rng, m2, 1, 3), 1)
        assert cyclic_derivative(cyclic_divergence(q, 1), 1) == grading_op(q, 1)


def test_number_identity_on_free_gradients(rng, m2):
    for _ in range(3):
        xi = free_diff(random_poly(rng, m2, 1, 3), 1)
        assert free_diff(divergence(xi, 1), 1) == number_op2(xi, 1)


def test_coderivation_of_letter_power(scalars):
    x3 = x_power(scalars, 3)
    dp = free_diff(x3, 1)
    assert free_diff(grading_op(x3, 1), 1) == grading_op_left(dp, 1) + grading_op_right(dp, 1)
    assert grading_op_left(tensor_of(x_power(scalars, 2), x_of(scalars)), 1) == tensor_of(
        x_power(scalars, 2), x_of(scalars)
    ).scale(3)


slow_batch = pytest.mark.parametrize("seed", BATCH_SEEDS)


@pytest.mark.slow
@slow_batch
def test_derivation_rule(seed: int, algebra: CoeffAlgebra):
    rng = np.random.default_rng(seed)
    n_vars, i = random_letters(rng)
    p = random_poly(rng, algebra, n_vars, 3)
    q = random_poly(rng, algebra, n_vars, 3)
    expected = free_diff(p, i).right_act(q) + free_diff(q, i).left_act(p)
    assert free_diff(p * q, i) == expected


@pytest.mark.slow
@slow_batch
def test_coassociativity(seed: int, algebra: CoeffAlgebra):
    rng = np.random.default_rng(seed)
    n_vars, i = random_letters(rng)
    dp = free_diff(random_poly(rng, algebra, n_vars, 6), i)
    assert diff_tensor_left(dp, i) == diff_tensor_right(dp, i)


@pytest.mark.slow
@slow_batch
def test_cyclic_product_rule(seed: int, algebra: CoeffAlgebra):
    rng = np.random.default_rng(seed)
    n_vars, i = random_letters(rng)
    p = random_poly(rng, algebra, n_vars, 3)
    q = random_poly(rng, algebra, n_vars, 3)
    expected = sharp(flip(free_diff(p, i)), q) + sharp(flip(free_diff(q, i)), p)
    assert cyclic_derivative(p * q, i) == expected


@pytest.mark.slow
@slow_batch
def test_divergence_product_rule(seed: int, algebra: CoeffAlgebra):
    rng = np.random.default_rng(seed)
    n_vars, i = random_letters(rng)
    u = random_tensor(rng, algebra, n_vars, 2)
    a = random_poly(rng, algebra, n_vars, 2)
    b = random_poly(rng, algebra, n_vars, 2)
    assert divergence(u.left_act(a).right_act(b), i) == a * divergence(u, i) * b


@pytest.mark.slow
@slow_batch
def test_divergence_identity(seed: int, algebra: CoeffAlgebra):
    rng = np.random.default_rng(seed)
    n_vars, i = random_letters(rng)
    u = random_tensor(rng, algebra, n_vars, 3)
    expected = (
        divergence_left(diff_tensor_right(u, i), i)
        + divergence_right(diff_tensor_left(u, i), i)
        + u
    )
    assert free_diff(divergence(u, i), i) == expected


@pytest.mark.slow
@slow_batch
def test_cyclic_divergence_identity(seed: int, algebra: CoeffAlgebra):
    rng = np.random.default_rng(seed)
    n_vars, i = random_letters(rng)
    p = random_poly(rng, algebra, n_vars, 5)
    expected = divergence(flip(free_diff(p, i)), i) + p
    assert cyclic_derivative(cyclic_divergence(p, i), i) == expected


@pytest.mark.slow
@slow_batch
def test_number_op_is_a_derivation(seed: int, algebra: CoeffAlgebra):
    rng = np.random.default_rng(seed)
    n_vars, i = random_letters(rng)
    p = random_poly(rng, algebra, n_vars, 3)
    q = random_poly(rng, algebra, n_vars, 3)
    assert number_op(p * q, i) == number_op(p, i) * q + p * number_op(q, i)


@pytest.mark.slow
@slow_batch
def test_diff_intertwines_number_ops(seed: int, algebra: CoeffAlgebra):
    rng = np.random.default_rng(seed)
    n_vars, i = random_letters(rng)
    p = random_poly(rng, algebra, n_vars, 6)
    dp = free_diff(p, i)
    expected = number_op_left(dp, i) + number_op_right(dp, i) + dp
    assert free_diff(number_op(p, i), i) == expected
    assert number_op2(dp, i) == expected


@pytest.mark.slow
@slow_batch
def test_grading_op_is_a_coderivation(seed: int, algebra: CoeffAlgebra):
    rng = np.random.default_rng(seed)
    n_vars, i = random_letters(rng)
    p = random_poly(rng, algebra, n_vars, 6)
    dp = free_diff(p, i)
    assert free_diff(grading_op(p, i), i) == grading_op_left(dp, i) + grading_op_right(dp, i)


@pytest.mark.slow
@slow_batch
def test_cyclic_derivative_shifts_total_degree(seed: int, algebra: CoeffAlgebra):
    rng = np.random.default_rng(seed)
    n_vars, i = random_letters(rng)
    p = random_poly(rng, algebra, n_vars, 6)
    q = cyclic_derivative(p, i)
    assert cyclic_derivative(number_total(p), i) == number_total(q) + q


@pytest.mark.slow
@slow_batch
def test_theta_kills_cyclic_derivatives(seed: int, algebra: CoeffAlgebra):
    rng = np.random.default_rng(seed)
    n_vars, i = random_letters(rng)
    p = random_poly(rng, algebra, n_vars, 6)
    assert theta_op(cyclic_derivative(p, i), i).is_zero()


@slow_batch
def test_eigenvalues_on_homogeneous_words(seed: int, algebra: CoeffAlgebra):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(0, 7))
    m = int(rng.integers(0, 7))
    p = random_homogeneous(rng, algebra, 1, n)
    q = random_homogeneous(rng, algebra, 1, m)
    assert number_op(p, 1) == p.scale(n)
    assert grading_op(p, 1) == p.scale(n + 1)
    u = tensor_of(p, q)
    assert number_op2(u, 1) == u.scale(n + m + 1)


@slow_batch
def test_number_op_counts_one_letter(seed: int, algebra: CoeffAlgebra):
    rng = np.random.default_rng(seed)
    n_vars, i = random_letters(rng)
    p = random_homogeneous(rng, algebra, n_vars, int(rng.integers(0, 7)))
    for d, part in homogeneous_components(p, i).items():
        assert number_op(part, i) == part.scale(d)
