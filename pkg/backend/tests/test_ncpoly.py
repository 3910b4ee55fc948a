from __future__ import annotations

import pytest
from helpers import const, unit, x_of

from algebra import AlgebraMismatchError, CoeffElem
from ncpoly import (
    CoeffWord,
    MalformedWordError,
    NCPoly,
    TensorPoly,
    Word,
    commutator,
    homogeneous_components,
    normalize,
    random_poly,
    random_tensor,
    tensor_of,
)


def test_word_slots():
    with pytest.raises(MalformedWordError):
        Word((0,), (1,))
    with pytest.raises(MalformedWordError):
        Word((0, 0), (0,))


def test_word_checked_against_algebra(scalars):
    with pytest.raises(MalformedWordError):
        NCPoly.word(scalars, 1, Word((1, 0), (1,)))
    with pytest.raises(MalformedWordError):
        NCPoly.word(scalars, 1, Word((0, 0), (2,)))


def test_cancellation(m2):
    w = CoeffWord((unit(2, 1, 2), unit(2, 2, 1)), (1,))
    assert normalize(m2, 1, [(1, w), (-1, w)]).is_zero()


def test_merge(scalars):
    one = CoeffElem.scalar(1)
    p = normalize(scalars, 1, [(2, CoeffWord((one, one), (1,))), (3, CoeffWord((one, one), (1,)))])
    assert p == x_of(scalars).scale(5)


def test_basis_expansion(m2):
    p = NCPoly.monomial(m2, 1, [unit(2, 1, 1) + unit(2, 2, 2), unit(2, 1, 1)], [1])
    assert p.as_dict == {Word((0, 0), (1,)): 1, Word((3, 0), (1,)): 1}


def test_add_and_scale(m2):
    x = x_of(m2)
    bx = const(m2, unit(2, 1, 1)) * x
    assert x + NCPoly.zero(m2, 1) == x
    assert (x + (-1) * x).is_zero()
    assert len((x + bx).terms) == len(x.terms)
    assert (x + bx).coefficient(Word((0, 0), (1,))) == 2


def test_mul(scalars, m2):
    x = x_of(scalars)
    assert x * x == NCPoly.word(scalars, 1, Word((0, 0, 0), (1, 1)))
    e12 = const(m2, unit(2, 1, 2))
    e21x = NCPoly.monomial(m2, 1, [unit(2, 2, 1), CoeffElem.identity(2)], [1])
    e11x = NCPoly.monomial(m2, 1, [unit(2, 1, 1), CoeffElem.identity(2)], [1])
    assert e12 * e21x == e11x


def test_mul_fuses_coefficients(m2):
    b0, b1, b2 = unit(2, 1, 2), unit(2, 2, 1), unit(2, 1, 1)
    left = NCPoly.monomial(m2, 1, [b0, CoeffElem.identity(2)], [1])
    right = NCPoly.monomial(m2, 1, [b1, b2], [1])
    assert left * right == NCPoly.monomial(m2, 1, [b0, b1, b2], [1, 1])


def test_incompatible_operands(scalars, m2):
    with pytest.raises(AlgebraMismatchError):
        x_of(scalars) + x_of(m2)
    with pytest.raises(AlgebraMismatchError):
        x_of(scalars, 1) * x_of(scalars, 2)


def test_homogeneous_components(scalars, m2):
    x = x_of(scalars)
    parts = homogeneous_components(x * x + x)
    assert parts == {1: x, 2: x * x}
    b = const(m2, unit(2, 1, 2))
    assert homogeneous_components(b) == {0: b}
    assert homogeneous_components(NCPoly.zero(scalars, 1)) == {}
    assert NCPoly.zero(scalars, 1).degree is None


def test_homogeneous_components_recombine(rng, m2):
    p = random_poly(rng, m2, 2, 3)
    total = NCPoly.zero(m2, 2)
    for part in homogeneous_components(p).values():
        total = total + part
    assert total == p


def test_commutator(m2):
    x = x_of(m2)
    b = const(m2, unit(2, 1, 1))
    p = b * x * x
    assert commutator(p, p).is_zero()
    assert commutator(NCPoly.one(m2, 1), p).is_zero()
    assert commutator(x, b * x) == x * b * x - b * x * x


def test_bimodule_actions(m2):
    x = x_of(m2)
    one = NCPoly.one(m2, 1)
    b = const(m2, unit(2, 1, 1))
    assert tensor_of(one, one).left_act(x) == tensor_of(x, one)
    assert tensor_of(one, one).right_act(x) == tensor_of(one, x)
    assert tensor_of(one, b).left_act(x) == tensor_of(x, b)


def test_flip_involution(rng, m2):
    u = random_tensor(rng, m2, 1, 2)
    assert u.flip().flip() == u
    x = x_of(m2)
    one = NCPoly.one(m2, 1)
    sym = tensor_of(x, one) + tensor_of(one, x)
    assert sym.flip() == sym


def test_tensor_zero(scalars):
    assert TensorPoly.zero(scalars, 1).is_zero()
    assert str(TensorPoly.zero(scalars, 1)) == "0"
