"""Torus characters, irreducible decompositions, and the nine-symbol action."""

from fractions import Fraction
from math import comb

import pytest

from ia3 import autfn, glrep, lie
from ia3.words import magnus_alphabet

ALPHA = magnus_alphabet(3)
NAMES = ALPHA.names


def weyl_oracle(lam):
    a, b, c = lam
    return (a - b + 1) * (b - c + 1) * (a - c + 2) // 2


@pytest.mark.parametrize("lam,dim", [
    ((1, 0, 0), 3), ((1, 1, 0), 3), ((1, 1, -1), 6), ((2, 1, -1), 15),
    ((2, 2, -1), 10), ((3, 1, -1), 27), ((3, 2, -2), 35), ((2, 1, 0), 8),
])
def test_weyl_dim(lam, dim):
    assert glrep.weyl_dim(lam) == dim == weyl_oracle(lam)


def test_weyl_dim_rejects_non_dominant():
    with pytest.raises(ValueError):
        glrep.weyl_dim((0, 1, 2))


def test_irr_char_round_trip():
    for lam in [(1, 0, 0), (1, 1, -1), (2, 1, -1), (3, 2, -2), (2, 2, 0), (0, 0, -1)]:
        char = glrep.irr_char(lam)
        assert char.dimension() == weyl_oracle(lam)
        assert char.is_symmetric()
        assert glrep.decompose_char(char) == [(lam, 1)]


def as_dict(dec):
    return {tuple(lam): mult for lam, mult in dec}


MODULE_EXPECTED = {
    "H": {(1, 0, 0): 1},
    "Hdual": {(0, 0, -1): 1},
    "ext2H": {(1, 1, 0): 1},
    "W": {(1, 1, -1): 1, (1, 0, 0): 1},
    "ext2W": {(1, 1, 0): 2, (2, 1, -1): 2},
    "lie2": {(1, 1, 0): 2, (2, 1, -1): 2},
    "ext3W": {(1, 1, 1): 1, (2, 1, 0): 2, (3, 0, 0): 1,
              (2, 2, -1): 3, (3, 1, -1): 1},
    "lie3": {(3, 0, 0): 1, (2, 1, 0): 6, (1, 1, 1): 1,
             (2, 2, -1): 3, (3, 1, -1): 3, (3, 2, -2): 2},
}

MODULE_DIMS = {"W": 9, "ext2W": 36, "ext3W": 84, "lie2": 36, "lie3": 240,
               "H": 3, "Hdual": 3, "ext2H": 3}


@pytest.mark.parametrize("name", glrep.MODULE_NAMES)
def test_module_decompositions(name):
    char = glrep.module_char(name)
    assert char.dimension() == MODULE_DIMS[name]
    dec = glrep.decompose_char(char)
    assert as_dict(dec) == MODULE_EXPECTED[name]
    assert glrep.decomposition_dim(dec) == MODULE_DIMS[name]


def test_module_char_identities():
    # the nine symbols span Hom(H, ext2 H), and degree two is an exterior square
    assert glrep.module_char("W") == glrep.module_char("Hdual") * glrep.module_char("ext2H")
    assert glrep.module_char("lie2") == glrep.module_char("ext2W")
    with pytest.raises(ValueError):
        glrep.module_char("nope")


def test_tensor_pieri():
    dec = glrep.tensor_decompose((1, 0, 0), (1, 1, -1))
    assert as_dict(dec) == {(2, 1, -1): 1, (1, 1, 0): 1}


def test_tensor_of_deeper_pair():
    dec = glrep.tensor_decompose((3, 2, 0), (2, 2, 0))
    assert as_dict(dec) == {(5, 4, 0): 1, (5, 3, 1): 1, (5, 2, 2): 1,
                            (4, 4, 1): 1, (4, 3, 2): 1}


def test_tensor_dimensions_multiply():
    for lam, mu in [((1, 0, 0), (1, 0, 0)), ((2, 1, -1), (1, 1, -1)),
                    ((2, 0, 0), (1, 1, 0))]:
        dec = glrep.tensor_decompose(lam, mu)
        assert glrep.decomposition_dim(dec) == weyl_oracle(lam) * weyl_oracle(mu)


def test_exterior_powers_of_the_adjoint():
    assert as_dict(glrep.ext_decompose((1, 1, -1), 1)) == {(1, 1, -1): 1}
    assert as_dict(glrep.ext_decompose((1, 1, -1), 2)) == {(2, 1, -1): 1}
    assert as_dict(glrep.ext_decompose((1, 1, -1), 3)) == {(3, 0, 0): 1, (2, 2, -1): 1}


def test_exterior_dimension_is_binomial():
    for lam, k in [((1, 0, 0), 2), ((1, 1, -1), 2), ((1, 1, -1), 3)]:
        dec = glrep.ext_decompose(lam, k)
        assert glrep.decomposition_dim(dec) == comb(weyl_oracle(lam), k)


def test_symbol_weights():
    # K_ij sits in weight e_j, the triple K_ijl in e_j + e_l - e_i
    assert glrep.symbol_weight("K12") == (0, 1, 0)
    assert glrep.symbol_weight("K21") == (1, 0, 0)
    assert glrep.symbol_weight("K123") == (-1, 1, 1)
    assert glrep.symbol_weight("K312") == (1, 1, -1)


def op_matrix(p, q):
    cols = []
    for name in NAMES:
        out = glrep.infinitesimal_action(p, q, {name: Fraction(1)})
        cols.append([out.get(m, Fraction(0)) for m in NAMES])
    return [[cols[j][i] for j in range(9)] for i in range(9)]


def mat_comm(a, b):
    n = len(a)
    prod = lambda x, y: [[sum(x[i][k] * y[k][j] for k in range(n))
                          for j in range(n)] for i in range(n)]
    ab, ba = prod(a, b), prod(b, a)
    return [[ab[i][j] - ba[i][j] for j in range(n)] for i in range(n)]


def test_log_operators_commute_like_elementary_matrices():
    # row (p, q) shifts weight by e_q - e_p, so X_{q,p} plays the usual e_{p,q}
    assert mat_comm(op_matrix(2, 1), op_matrix(3, 2)) == op_matrix(3, 1)
    x13 = op_matrix(1, 3)
    assert mat_comm(op_matrix(1, 2), op_matrix(2, 3)) == [
        [-x for x in row] for row in x13]


def test_log_operator_weight_shifts():
    for p in (1, 2, 3):
        for q in (1, 2, 3):
            if p == q:
                continue
            shift = tuple((1 if t == q else 0) - (1 if t == p else 0)
                          for t in (1, 2, 3))
            for name in NAMES:
                out = glrep.infinitesimal_action(p, q, {name: Fraction(1)})
                w_in = glrep.symbol_weight(name)
                for m in out:
                    assert tuple(a - b for a, b in
                                 zip(glrep.symbol_weight(m), w_in)) == shift


def test_raising_rows():
    assert glrep.raising_rows() == ((2, 1), (3, 2))


def test_tau1_equivariance_under_conjugation():
    # the tabulated action realizes s -> E^-1 s E on the automorphism side
    assert glrep.action_side() == "E^-1 s E"
    for p, q in ((2, 1), (1, 3)):
        g = autfn.e_aut(p, q)
        gi = autfn.e_aut(p, q, sign=-1)
        for name in ("K12", "K312", "K23"):
            a = autfn.magnus_gen(name)
            assert (glrep.class_in_W(gi * a * g)
                    == glrep.group_action(p, q, glrep.class_in_W(a)))


def test_derivation_satisfies_leibniz():
    a = lie.LieVector(ALPHA, 1, {ALPHA.index("K12"): Fraction(1)})
    b = lie.LieVector(ALPHA, 1, {ALPHA.index("K23"): Fraction(1)})
    v = lie.bracket(a, b)
    for p, q in ((2, 1), (3, 2), (1, 3)):
        lhs = glrep.derivation_extend(p, q, v)
        rhs = (lie.bracket(glrep.derivation_extend(p, q, a), b)
               + lie.bracket(a, glrep.derivation_extend(p, q, b)))
        assert lhs == rhs


def test_named_vector_highest_weights():
    vectors = glrep.named_vectors()
    expected = {"v1": (1, 1, 0), "v2": (1, 1, 0),
                "v3": (2, 1, -1), "v4": (2, 1, -1)}
    for name, lam in expected.items():
        assert glrep.is_highest_weight(vectors[name]) == lam


def test_iota_classes_are_highest_weight_vectors():
    v = glrep.iota_class(1)
    assert v == {"K21": Fraction(1), "K31": Fraction(1)}
    assert glrep.is_highest_weight(v) == (1, 0, 0)
    assert glrep.torus_weight(v) == (1, 0, 0)
    assert glrep.is_highest_weight({"K312": Fraction(1)}) == (1, 1, -1)


def test_non_highest_weight_vector_detected():
    assert glrep.is_highest_weight({"K12": Fraction(1)}) is None


def test_membership_in_relator_span():
    vectors = glrep.named_vectors()
    expected = {"v1": False, "v2": True, "v3": False, "v4": True}
    for name, value in expected.items():
        assert glrep.membership_in_R_R3(vectors[name]) is value


def test_johnson_vanishing():
    expected = {"v1": False, "v2": True, "v4": True}
    for name, value in expected.items():
        assert glrep.johnson_vanish(glrep.johnson_lift(name)) is value
    sigma = ALPHA.gen("K312")
    omega = ALPHA.gen("K21")
    assert glrep.johnson_vanish([(1, sigma, omega), (-1, sigma, omega)])
