"""Automorphisms of the free group and the Johnson filtration maps."""

import random

import pytest

from ia3 import autfn, lie
from ia3.words import Word, commutator, magnus_alphabet, x_alphabet

ALPHA = magnus_alphabet(3)
X = x_alphabet(3)


def test_conjugating_generator_images():
    # K_ij conjugates x_i by x_j and fixes the rest
    a = autfn.magnus_gen("K12")
    x1, x2, x3 = (X.gen(i) for i in range(3))
    assert a.images == (x2.inverse() * x1 * x2, x2, x3)
    b = autfn.magnus_gen("K12", sign=-1)
    assert (a * b).is_identity()


def test_triple_generator_images():
    # K_ijl multiplies x_i on the right by the commutator [x_j, x_l]
    a = autfn.magnus_gen("K123")
    x1, x2, x3 = (X.gen(i) for i in range(3))
    assert a.images == (x1 * commutator(x2, x3), x2, x3)


def test_composition_is_left_to_right():
    # (a * b)(w) applies a first; the relator words depend on this order
    a, b = autfn.magnus_gen("K12"), autfn.magnus_gen("K21")
    w = X.gen(0)
    assert (a * b)(w) == b(a(w))
    assert (a * b)(w) != a(b(w))


def random_ia_word(rng, length):
    letters = [(rng.randrange(9), rng.choice((1, -1))) for _ in range(length)]
    return Word(ALPHA, letters)


def test_eval_word_is_a_homomorphism():
    rng = random.Random(577)
    for _ in range(40):
        u, v = random_ia_word(rng, 5), random_ia_word(rng, 5)
        assert autfn.eval_word(u * v) == autfn.eval_word(u) * autfn.eval_word(v)
        assert (autfn.eval_word(u) * autfn.eval_word(u.inverse())).is_identity()


def test_inner_automorphisms():
    assert autfn.verify_iota()
    for i in (1, 2, 3):
        inner = autfn.inner(i)
        assert autfn.eval_word(autfn.iota_word(i)) == inner
        g = X.gen(i - 1)
        for j in range(3):
            assert inner(X.gen(j)) == g.inverse() * X.gen(j) * g
        assert autfn.is_IA(inner)


def test_rho_and_is_IA():
    for name in ALPHA.names:
        a = autfn.magnus_gen(name)
        assert autfn.is_IA(a)
        assert autfn.rho(a) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    e = autfn.e_aut(1, 2)
    assert autfn.rho(e) == ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    assert not autfn.is_IA(e)


def expected_tau1(name):
    """First Johnson image of a conjugating or triple generator, from scratch."""
    comps = [lie.LieVector(X, 2) for _ in range(3)]
    digits = [int(c) for c in name[1:]]
    unit = lambda i: lie.LieVector(X, 1, {i - 1: 1})
    if len(digits) == 2:
        i, j = digits
        comps[i - 1] = lie.bracket(unit(i), unit(j))
    else:
        i, j, l = digits
        comps[i - 1] = lie.bracket(unit(j), unit(l))
    return autfn.JohnsonImage(comps)


@pytest.mark.parametrize("name", ALPHA.names)
def test_tau1_on_generators(name):
    assert autfn.tau(autfn.magnus_gen(name), 1) == expected_tau1(name)


def test_tau1_is_additive():
    rng = random.Random(578)
    for _ in range(25):
        u, v = random_ia_word(rng, 4), random_ia_word(rng, 4)
        a, b = autfn.eval_word(u), autfn.eval_word(v)
        total = autfn.tau(a, 1) + autfn.tau(b, 1)
        assert autfn.tau(a * b, 1) == total


def test_tau1_kills_commutators_and_tau2_picks_up():
    a = autfn.magnus_gen("K12")
    b = autfn.magnus_gen("K13")
    c = autfn.eval_word(commutator(ALPHA.gen("K12"), ALPHA.gen("K13")))
    assert autfn.tau(c, 1).is_zero()
    assert not autfn.tau(c, 2).is_zero()
    assert autfn.is_IA(a * b)


def test_johnson_image_arithmetic():
    v = autfn.tau(autfn.magnus_gen("K12"), 1)
    zero = v - v
    assert zero.is_zero()
    assert (2 * v - v) == v
    assert not (v + v).is_zero()
