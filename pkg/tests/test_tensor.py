"""Place operators, the evaluation map, and the operator-model oracle."""

import random
from fractions import Fraction

import pytest

from heckezonal.scalars import scalar_inverse, scalar_power
from heckezonal.spherical import SphericalParams, matrix_coefficient_scalar
from heckezonal.tensor import (
    PlaceOperator,
    TensorVector,
    apply_operator,
    ev,
    gamma_operator,
    pair,
    t_operator,
)
from heckezonal.weyl import (
    AffinePermutation,
    ExtendedWeylElement,
    all_reduced_words,
    enumerate_by_length,
    generator,
    multiply,
    project_to_finite,
)


def word_operator(word, e):
    op = PlaceOperator.identity(e)
    for idx in word:
        op = op.compose(t_operator(idx, e))
    return op


def test_t_operator_slots():
    v = TensorVector.pure([[1, 0], [0, 1], [2, 3]])
    # t_1 swaps the first two slots of a pure tensor
    swapped = apply_operator(t_operator(1, 3), v)
    assert swapped == TensorVector.pure([[0, 1], [1, 0], [2, 3]])
    # t_0 swaps the outer slots
    outer = apply_operator(t_operator(0, 3), v)
    assert outer == TensorVector.pure([[2, 3], [0, 1], [1, 0]])
    for e in (2, 3, 4):
        for i in range(e):
            t = t_operator(i, e)
            assert t.compose(t) == PlaceOperator.identity(e)
    with pytest.raises(ValueError):
        t_operator(3, 3)


def test_gamma_rotation():
    v = TensorVector.pure([[1, 0], [0, 1], [2, 3]])
    rotated = apply_operator(gamma_operator(3), v)
    # contents move one step right: (a, b, c) -> (c, a, b)
    assert rotated == TensorVector.pure([[2, 3], [1, 0], [0, 1]])
    for e in (2, 3, 4, 5):
        assert gamma_operator(e).power(e) == PlaceOperator.identity(e)


def test_gamma_conjugation_shifts_t_indices():
    # direct composition shows gamma**-1 t_1 gamma = t_0, equivalently
    # conjugation by gamma raises t-indices by one (mod e), mirroring how
    # the rotation group element lowers s-indices
    for e in (3, 4, 5):
        g = gamma_operator(e)
        for i in range(e):
            conj = g.compose(t_operator(i, e)).compose(g.inverse())
            assert conj == t_operator((i + 1) % e, e)
    g = gamma_operator(3)
    assert g.inverse().compose(t_operator(1, 3)).compose(g) == t_operator(0, 3)


def test_composition_matches_application():
    rng = random.Random(3)
    for _ in range(50):
        e = rng.choice([2, 3])
        d = 2
        ops = [t_operator(rng.randrange(e), e) for _ in range(2)] + [gamma_operator(e)]
        rng.shuffle(ops)
        op1, op2 = ops[0], ops[1]
        data = tuple(Fraction(rng.randrange(-3, 4)) for _ in range(d**e))
        v = TensorVector(e, d, data)
        assert apply_operator(op1.compose(op2), v) == apply_operator(
            op1, apply_operator(op2, v)
        )


def test_ev_examples():
    p = SphericalParams.numeric(3, 1, 2)
    assert ev(ExtendedWeylElement.identity(3), p) == PlaceOperator.identity(3)
    # f = 1: scale 1, bare transposition
    op = ev(generator(3, 1), p)
    assert op.perm == (2, 1, 3) and op.scale == 1
    # f = 2: scale q**(-1) per letter
    p2 = SphericalParams.numeric(3, 2, 2)
    op2 = ev(generator(3, 1), p2)
    assert op2.scale == Fraction(1, 4)


def test_ev_reduced_word_independence():
    # exhaustive over all reduced words, e in {3, 4}, length <= 6
    for e in (3, 4):
        p = SphericalParams.numeric(e, 2, 2)
        for layer in enumerate_by_length(e, 6):
            for w0 in layer:
                words = all_reduced_words(w0)
                ops = {word_operator(word, e) for word in words}
                assert len(ops) == 1, (e, w0.window, len(words))


def test_ev_braid_pair_agree():
    # two distinct reduced words of s0 s1 s0 = s1 s0 s1
    e = 3
    p = SphericalParams.numeric(e, 2, 3)
    a = multiply(generator(e, 0), multiply(generator(e, 1), generator(e, 0)))
    b = multiply(generator(e, 1), multiply(generator(e, 0), generator(e, 1)))
    assert a == b
    assert word_operator([0, 1, 0], e) == word_operator([1, 0, 1], e)
    assert ev(a, p) == ev(b, p)


def test_ev_perm_extends_projection_on_w0():
    # on the Coxeter part the slot permutation of the operator equals the
    # residue projection of the group element; the rotation parts differ
    # by inversion (gamma rotates against the projection of pi)
    p = SphericalParams.numeric(3, 1, 2)
    for layer in enumerate_by_length(3, 5):
        for w0 in layer:
            w = ExtendedWeylElement(0, w0)
            assert ev(w, p).perm == project_to_finite(w)
    from heckezonal.weyl import pi_element

    gamma_perm = gamma_operator(3).perm
    assert gamma_perm == project_to_finite(pi_element(3).inverse())


def test_pure_pairing():
    v = TensorVector.pure([[Fraction(1), Fraction(0)]] * 3)
    vt = TensorVector.pure([[Fraction(1), Fraction(1)]] * 3)
    assert pair(v, vt) == 1
    # pure tensors with equal factors are invariant under place permutations
    assert apply_operator(t_operator(1, 3), v) == v
    assert apply_operator(gamma_operator(3), v) == v


def test_cross_model_identity():
    # (-1/q1)**l * scale(ev) equals the closed coefficient form, and the
    # pairing only sees the scale on rotation-invariant pure tensors
    v = TensorVector.pure([[Fraction(1), Fraction(0)]] * 3)
    vt = TensorVector.pure([[Fraction(1), Fraction(1)]] * 3)
    for f in (1, 2):
        for q0 in (2, 3):
            p = SphericalParams.numeric(3, f, q0)
            neg_inv_q1 = -scalar_inverse(p.q1)
            for ell, layer in enumerate(enumerate_by_length(3, 4)):
                for w0 in layer:
                    closed = matrix_coefficient_scalar(w0, 0, p)
                    for k in (0, 1, 2):
                        op = ev(ExtendedWeylElement(k, w0), p)
                        assert scalar_power(neg_inv_q1, ell) * op.scale == closed
                        assert pair(apply_operator(op, v), vt) == op.scale * pair(v, vt)


def test_dimension_cap_and_mismatch():
    with pytest.raises(ValueError):
        TensorVector.pure([[1, 2, 3, 4]] * 7)  # 4**7 > 4096
    v2 = TensorVector.pure([[1, 0]] * 2)
    with pytest.raises(ValueError):
        apply_operator(t_operator(1, 3), v2)
    v3 = TensorVector.pure([[1, 0, 0]] * 2)
    with pytest.raises(ValueError):
        pair(v2, v3)


def test_operator_serialization():
    op = ev(generator(3, 1), SphericalParams.numeric(3, 2, 2))
    assert op.to_json() == {"perm": [2, 1, 3], "scale": "1/4"}
